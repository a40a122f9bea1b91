use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use crate::datum::Weight;

/// A word in the generators, stored as index positions.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[u8; 8]>);

impl Word {
    pub fn empty() -> Self {
        Word(SmallVec::new())
    }

    pub fn letter(i: usize) -> Self {
        Word::from_letters(&[i])
    }

    pub fn from_letters(ls: &[usize]) -> Self {
        Word(ls.iter().map(|&i| u8::try_from(i).expect("index fits in u8")).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().map(|&c| c as usize)
    }

    pub fn at(&self, k: usize) -> usize {
        self.0[k] as usize
    }

    pub fn weight(&self, rank: usize) -> Weight {
        let mut c = vec![0i64; rank];
        for l in self.letters() {
            c[l] += 1;
        }
        Weight::from_slice(&c)
    }

    pub fn concat(&self, o: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend_from_slice(&o.0);
        Word(w)
    }

    pub fn push(&self, i: usize) -> Word {
        let mut w = self.0.clone();
        w.push(i as u8);
        Word(w)
    }

    pub fn without(&self, k: usize) -> Word {
        let mut w = self.0.clone();
        w.remove(k);
        Word(w)
    }

    pub fn slice(&self, from: usize, to: usize) -> Word {
        Word(SmallVec::from_slice(&self.0[from..to]))
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    /// All words of the given weight in degree-then-lexicographic order.
    pub fn of_weight(w: &Weight) -> Vec<Word> {
        fn go(left: &mut Vec<i64>, cur: &mut Vec<usize>, out: &mut Vec<Word>) {
            if left.iter().all(|&c| c == 0) {
                out.push(Word::from_letters(cur));
                return;
            }
            for i in 0..left.len() {
                if left[i] > 0 {
                    left[i] -= 1;
                    cur.push(i);
                    go(left, cur, out);
                    cur.pop();
                    left[i] += 1;
                }
            }
        }
        let mut out = Vec::new();
        if w.is_nonnegative() {
            go(&mut w.coeffs().to_vec(), &mut Vec::new(), &mut out);
        }
        out
    }

    /// All words of length at most `n` over `rank` letters, in term order.
    pub fn up_to_length(rank: usize, n: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..n {
            layer = layer.iter().flat_map(|w| (0..rank).map(move |i| w.push(i))).collect();
            out.extend(layer.iter().cloned());
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, o: &Self) -> Ordering {
        self.len().cmp(&o.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders with 1-based positions; `render_with` uses datum labels.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "theta[")?;
        for (k, l) in self.letters().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l + 1)?;
        }
        write!(f, "]")
    }
}
