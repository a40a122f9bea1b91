use std::collections::BTreeMap;
use std::fmt;

use super::word::Word;
use crate::datum::{Unit, Weight};
use crate::scalar::FieldElem;

/// Linear combination of words.
#[derive(Clone, PartialEq, Default)]
pub struct FreeElem {
    terms: BTreeMap<Word, FieldElem>,
}

impl FreeElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::word(Word::empty())
    }

    pub fn word(w: Word) -> Self {
        Self::term(w, FieldElem::one())
    }

    pub fn letter(i: usize) -> Self {
        Self::word(Word::letter(i))
    }

    pub fn term(w: Word, c: FieldElem) -> Self {
        let mut x = Self::zero();
        x.add_term(w, c);
        x
    }

    pub fn from_terms(ts: impl IntoIterator<Item = (Word, FieldElem)>) -> Self {
        let mut x = Self::zero();
        for (w, c) in ts {
            x.add_term(w, c);
        }
        x
    }

    pub fn add_term(&mut self, w: Word, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> FieldElem {
        self.terms.get(w).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn add(&self, o: &FreeElem) -> FreeElem {
        let mut x = self.clone();
        for (w, c) in &o.terms {
            x.add_term(w.clone(), c.clone());
        }
        x
    }

    pub fn neg(&self) -> FreeElem {
        FreeElem {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &FreeElem) -> FreeElem {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &FieldElem) -> FreeElem {
        Self::from_terms(self.terms.iter().map(|(w, x)| (w.clone(), x.mul(c))))
    }

    pub fn scale_unit(&self, u: &Unit) -> FreeElem {
        FreeElem {
            terms: self.terms.iter().map(|(w, x)| (w.clone(), u.scale(x))).collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, o: &FreeElem) -> FreeElem {
        let mut x = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &o.terms {
                x.add_term(a.concat(b), ca.mul(cb));
            }
        }
        x
    }

    /// Homogeneous components, keyed by weight.
    pub fn components(&self, rank: usize) -> BTreeMap<Weight, FreeElem> {
        let mut out: BTreeMap<Weight, FreeElem> = BTreeMap::new();
        for (w, c) in &self.terms {
            out.entry(w.weight(rank))
                .or_default()
                .terms
                .insert(w.clone(), c.clone());
        }
        out
    }

    /// The weight, when the element is nonzero and homogeneous.
    pub fn weight(&self, rank: usize) -> Option<Weight> {
        let mut ws = self.terms.keys().map(|w| w.weight(rank));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }

    /// Applies a linear map given on words.
    pub fn map_words(&self, f: impl Fn(&Word) -> FreeElem) -> FreeElem {
        let mut x = Self::zero();
        for (w, c) in &self.terms {
            for (w2, c2) in f(w).terms {
                x.add_term(w2, c2.mul(c));
            }
        }
        x
    }
}

impl fmt::Display for FreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            if c.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "({c})*{w}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for FreeElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Linear combination of pairs of words, an element of the tensor square.
#[derive(Clone, PartialEq, Default)]
pub struct Tensor2Elem {
    terms: BTreeMap<(Word, Word), FieldElem>,
}

impl Tensor2Elem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::term(Word::empty(), Word::empty(), FieldElem::one())
    }

    pub fn term(a: Word, b: Word, c: FieldElem) -> Self {
        let mut x = Self::zero();
        x.add_term(a, b, c);
        x
    }

    /// `x ⊗ y`.
    pub fn tensor(x: &FreeElem, y: &FreeElem) -> Self {
        let mut t = Self::zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                t.add_term(a.clone(), b.clone(), ca.mul(cb));
            }
        }
        t
    }

    pub fn add_term(&mut self, a: Word, b: Word, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((a, b)) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let s = e.get().add(&c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, o: &Tensor2Elem) -> Tensor2Elem {
        let mut x = self.clone();
        for ((a, b), c) in &o.terms {
            x.add_term(a.clone(), b.clone(), c.clone());
        }
        x
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(Word, Word), &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &Word, b: &Word) -> FieldElem {
        self.terms
            .get(&(a.clone(), b.clone()))
            .cloned()
            .unwrap_or_else(FieldElem::zero)
    }
}

impl fmt::Display for Tensor2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, ((a, b), c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{a}⊗{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tensor2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
