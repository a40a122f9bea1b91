//! Shared plumbing for the exhaustive certificates.

use crate::datum::Weight;
use crate::report::Report;

/// Every pair `(k, j)` of torus exponents in `{-1, 0, 1}^I`.
pub(crate) fn full_dressings(rank: usize) -> Vec<(Weight, Weight)> {
    let mut vs = vec![Vec::new()];
    for _ in 0..rank {
        vs = vs
            .into_iter()
            .flat_map(|v: Vec<i64>| (-1..=1).map(move |e| [v.clone(), vec![e]].concat()))
            .collect();
    }
    let ws: Vec<Weight> = vs.iter().map(|v| Weight::from_slice(v)).collect();
    ws.iter()
        .flat_map(|k| ws.iter().map(move |j| (k.clone(), j.clone())))
        .collect()
}

/// The identity and each single torus generator to the power `±1`.
pub(crate) fn single_dressings(rank: usize) -> Vec<(Weight, Weight)> {
    let z = Weight::zero(rank);
    let mut out = vec![(z.clone(), z.clone())];
    for i in 0..rank {
        for e in [-1, 1] {
            let u = Weight::unit(rank, i).scale(e);
            out.push((u.clone(), z.clone()));
            out.push((z.clone(), u));
        }
    }
    out
}

/// Folds per-case outcomes into one report line.
pub(crate) struct Tally {
    id: &'static str,
    scope: String,
    cases: usize,
    failures: Vec<String>,
}

impl Tally {
    pub(crate) fn new(id: &'static str, scope: impl Into<String>) -> Self {
        Tally {
            id,
            scope: scope.into(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    pub(crate) fn absorb(&mut self, outcomes: Vec<Option<String>>) {
        self.cases += outcomes.len();
        self.failures.extend(outcomes.into_iter().flatten());
    }

    pub(crate) fn push_to(self, rep: &mut Report) {
        let detail = match self.failures.first() {
            None => format!("{}: {} cases", self.scope, self.cases),
            Some(f) => format!(
                "{}: {} of {} cases fail, first {f}",
                self.scope,
                self.failures.len(),
                self.cases
            ),
        };
        rep.push(self.id, self.failures.is_empty(), detail);
    }
}

pub(crate) fn outcome(ok: bool, what: impl FnOnce() -> String) -> Option<String> {
    (!ok).then(what)
}
