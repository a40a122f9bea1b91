//! Oracles shared by the integration tests.

use std::collections::BTreeSet;

use fbeta::datum::{CartanDatum, Weight};

/// Positive roots of a finite-type datum, closed under simple reflections.
pub fn positive_roots(d: &CartanDatum) -> Vec<Weight> {
    let n = d.rank();
    let mut roots: BTreeSet<Weight> = (0..n).map(|i| Weight::unit(n, i)).collect();
    loop {
        let mut fresh = Vec::new();
        for b in &roots {
            for i in 0..n {
                let pair: i64 = (0..n).map(|j| b.coeffs()[j] * d.a(i, j)).sum();
                let r = b.add_unit(i, -pair);
                if r.is_nonnegative() && !r.is_zero() && !roots.contains(&r) {
                    fresh.push(r);
                }
            }
        }
        if fresh.is_empty() {
            return roots.into_iter().collect();
        }
        roots.extend(fresh);
    }
}

/// Number of multisets of positive roots summing to `nu`.
pub fn kostant(roots: &[Weight], nu: &Weight) -> usize {
    fn go(roots: &[Weight], k: usize, left: &Weight) -> usize {
        if left.is_zero() {
            return 1;
        }
        if k == roots.len() {
            return 0;
        }
        let mut total = 0;
        let mut rest = left.clone();
        while rest.is_nonnegative() {
            total += go(roots, k + 1, &rest);
            rest = &rest - &roots[k];
        }
        total
    }
    go(roots, 0, nu)
}
