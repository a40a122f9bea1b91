use std::fmt;
use std::ops::{Add, Index, Sub};

use smallvec::SmallVec;

use crate::{Error, Result};

/// Element of ℤ[I], stored as a coefficient vector in index order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(SmallVec<[i64; 4]>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(SmallVec::from_elem(0, rank))
    }

    pub fn unit(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i] = 1;
        w
    }

    pub fn from_slice(c: &[i64]) -> Self {
        Weight(SmallVec::from_slice(c))
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    /// Sum of the coefficients.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|c| c * k).collect())
    }

    pub fn add_unit(&self, i: usize, k: i64) -> Weight {
        let mut w = self.clone();
        w.0[i] += k;
        w
    }

    /// All weights in ℕ[I] of the given height, in lexicographically
    /// decreasing coefficient order.
    pub fn of_height(rank: usize, height: i64) -> Vec<Weight> {
        fn go(rank: usize, left: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
            if cur.len() + 1 == rank {
                cur.push(left);
                out.push(Weight::from_slice(cur));
                cur.pop();
                return;
            }
            for c in (0..=left).rev() {
                cur.push(c);
                go(rank, left - c, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if rank > 0 {
            go(rank, height, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl Index<usize> for Weight {
    type Output = i64;
    fn index(&self, i: usize) -> &i64 {
        &self.0[i]
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, o: &Weight) -> Weight {
        Weight(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A Cartan datum `(I, ·)`, optionally with a parity function.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    labels: Vec<String>,
    dot: Vec<Vec<i64>>,
    parity: Option<Vec<u8>>,
}

impl CartanDatum {
    pub fn new(labels: Vec<String>, dot: Vec<Vec<i64>>, parity: Option<Vec<u8>>) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::config("empty index set"));
        }
        for (k, l) in labels.iter().enumerate() {
            if labels[..k].contains(l) {
                return Err(Error::config(format!("index {l} declared twice")));
            }
        }
        if dot.len() != n || dot.iter().any(|r| r.len() != n) {
            return Err(Error::config("dot matrix must be square over the index set"));
        }
        for i in 0..n {
            for j in 0..n {
                if dot[i][j] != dot[j][i] {
                    return Err(Error::config(format!(
                        "dot matrix is not symmetric at ({}, {})",
                        labels[i], labels[j]
                    )));
                }
            }
            if dot[i][i] <= 0 || dot[i][i] % 2 != 0 {
                return Err(Error::config(format!(
                    "{}·{} must be a positive even integer",
                    labels[i], labels[i]
                )));
            }
        }
        for i in 0..n {
            for j in 0..n {
                if i != j && (2 * dot[i][j] % dot[i][i] != 0 || dot[i][j] > 0) {
                    return Err(Error::config(format!(
                        "a_{}{} = 2({}·{})/({}·{}) must be a non-positive integer",
                        labels[i], labels[j], labels[i], labels[j], labels[i], labels[i]
                    )));
                }
            }
        }
        if let Some(p) = &parity {
            if p.len() != n || p.iter().any(|&x| x > 1) {
                return Err(Error::config("parity must assign 0 or 1 to every index"));
            }
            for i in 0..n {
                let d = dot[i][i] / 2;
                if (d % 2 == 1) != (p[i] == 1) {
                    return Err(Error::config(format!(
                        "super datum is not bar-consistent at {}: d = {d}, parity {}",
                        labels[i], p[i]
                    )));
                }
            }
        }
        Ok(CartanDatum { labels, dot, parity })
    }

    /// Builds a datum with labels `1..=n`.
    pub fn from_matrix(dot: Vec<Vec<i64>>, parity: Option<Vec<u8>>) -> Result<Self> {
        let labels = (1..=dot.len()).map(|k| k.to_string()).collect();
        Self::new(labels, dot, parity)
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn dot(&self, i: usize, j: usize) -> i64 {
        self.dot[i][j]
    }

    pub fn dot_matrix(&self) -> &[Vec<i64>] {
        &self.dot
    }

    /// `ν·τ` extended bilinearly.
    pub fn dot_w(&self, nu: &Weight, tau: &Weight) -> i64 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if nu[i] == 0 {
                continue;
            }
            for j in 0..n {
                s += nu[i] * tau[j] * self.dot[i][j];
            }
        }
        s
    }

    pub fn d(&self, i: usize) -> i64 {
        self.dot[i][i] / 2
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        2 * self.dot[i][j] / self.dot[i][i]
    }

    pub fn parity(&self) -> Option<&[u8]> {
        self.parity.as_deref()
    }

    pub fn parity_of(&self, i: usize) -> u8 {
        self.parity.as_ref().map_or(0, |p| p[i])
    }

    /// `𝒫(ν) = Σ ν_i 𝒫(i)`.
    pub fn parity_w(&self, nu: &Weight) -> i64 {
        (0..self.rank()).map(|i| nu[i] * self.parity_of(i) as i64).sum()
    }

    pub fn unit(&self, i: usize) -> Weight {
        Weight::unit(self.rank(), i)
    }

    pub fn zero_weight(&self) -> Weight {
        Weight::zero(self.rank())
    }
}
