use super::cartan::Weight;
use super::unit::Unit;

/// Multiplicative bilinear form given by its values on `I × I`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct FormTable {
    entries: Vec<Vec<Unit>>,
}

impl FormTable {
    pub fn new(entries: Vec<Vec<Unit>>) -> Self {
        let n = entries.len();
        assert!(entries.iter().all(|r| r.len() == n), "form table must be square");
        FormTable { entries }
    }

    pub fn from_fn(rank: usize, f: impl Fn(usize, usize) -> Unit) -> Self {
        FormTable::new((0..rank).map(|i| (0..rank).map(|j| f(i, j)).collect()).collect())
    }

    pub fn trivial(rank: usize) -> Self {
        Self::from_fn(rank, |_, _| Unit::one())
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &Unit {
        &self.entries[i][j]
    }

    /// Bimultiplicative extension to `ℤ[I] × ℤ[I]`.
    pub fn eval(&self, nu: &Weight, tau: &Weight) -> Unit {
        let mut out = Unit::one();
        for i in 0..self.rank() {
            if nu[i] == 0 {
                continue;
            }
            for j in 0..self.rank() {
                let e = nu[i] * tau[j];
                if e != 0 {
                    out = out.mul(&self.entries[i][j].pow(e));
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> FormTable {
        Self::from_fn(self.rank(), |i, j| self.entries[j][i].clone())
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.iter().flatten().all(Unit::is_one)
    }
}
