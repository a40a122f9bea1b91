use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::datum::Unit;
use crate::scalar::FieldElem;

/// Finite linear combination over an ordered key set, zero coefficients
/// dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Lin<K: Ord> {
    terms: BTreeMap<K, FieldElem>,
}

impl<K: Ord> Default for Lin<K> {
    fn default() -> Self {
        Lin { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Lin<K> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn term(k: K, c: FieldElem) -> Self {
        let mut x = Self::zero();
        x.add_term(k, c);
        x
    }

    pub fn add_term(&mut self, k: K, c: FieldElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
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

    pub fn add_unit_term(&mut self, k: K, u: &Unit, c: &FieldElem) {
        self.add_term(k, u.scale(c));
    }

    pub fn add_assign(&mut self, o: &Lin<K>) {
        for (k, c) in &o.terms {
            self.add_term(k.clone(), c.clone());
        }
    }

    pub fn add(&self, o: &Lin<K>) -> Lin<K> {
        let mut x = self.clone();
        x.add_assign(o);
        x
    }

    pub fn sub(&self, o: &Lin<K>) -> Lin<K> {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Lin<K> {
        self.map_coeffs(|c| c.neg())
    }

    pub fn scale(&self, s: &FieldElem) -> Lin<K> {
        self.map_coeffs(|c| c.mul(s))
    }

    pub fn scale_unit(&self, u: &Unit) -> Lin<K> {
        self.map_coeffs(|c| u.scale(c))
    }

    fn map_coeffs(&self, f: impl Fn(&FieldElem) -> FieldElem) -> Lin<K> {
        let mut x = Self::zero();
        for (k, c) in &self.terms {
            x.add_term(k.clone(), f(c));
        }
        x
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

    pub fn terms(&self) -> impl Iterator<Item = (&K, &FieldElem)> {
        self.terms.iter()
    }

    pub fn coeff(&self, k: &K) -> FieldElem {
        self.terms.get(k).cloned().unwrap_or_else(FieldElem::zero)
    }

    /// Applies a linear map given on keys.
    pub fn map<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Lin<L>) -> Lin<L> {
        let mut out = Lin::zero();
        for (k, c) in &self.terms {
            for (l, d) in f(k).terms {
                out.add_term(l, d.mul(c));
            }
        }
        out
    }

    /// Like [`Lin::map`] for fallible maps.
    pub fn try_map<L: Ord + Clone, E>(&self, mut f: impl FnMut(&K) -> Result<Lin<L>, E>) -> Result<Lin<L>, E> {
        let mut out = Lin::zero();
        for (k, c) in &self.terms {
            for (l, d) in f(k)?.terms {
                out.add_term(l, d.mul(c));
            }
        }
        Ok(out)
    }

    /// Every coefficient run through [`FieldElem::simplify`].
    pub fn simplified(&self) -> Lin<K> {
        self.map_coeffs(FieldElem::simplify)
    }
}

impl<K: Ord + Clone> FromIterator<(K, FieldElem)> for Lin<K> {
    fn from_iter<T: IntoIterator<Item = (K, FieldElem)>>(iter: T) -> Self {
        let mut x = Self::zero();
        for (k, c) in iter {
            x.add_term(k, c);
        }
        x
    }
}
