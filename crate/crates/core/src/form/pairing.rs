use std::collections::HashMap;
use std::sync::RwLock;

use crate::datum::{AlgebraInstance, Weight};
use crate::freealg::{coproduct_r, r_right_word, FreeElem, Word};
use crate::scalar::{FieldElem, LaurentPoly};

/// `∏_i (1 - v_i^{-2})^{-ν_i}`, the value of the form on `θ_ν`-words up to
/// the normalized factor.
pub fn weight_scale(nu: &Weight, inst: &AlgebraInstance) -> FieldElem {
    let mut out = FieldElem::one();
    for (i, &k) in nu.coeffs().iter().enumerate() {
        if k == 0 {
            continue;
        }
        let base = FieldElem::one().sub(&inst.vi_pow(i, -2).to_field());
        let f = base.pow(-k).expect("1 - v_i^-2 is invertible");
        out = out.mul(&f);
    }
    out
}

/// The form on words with the generator factors stripped off.
///
/// Peeling the last letter of the left argument gives
/// `N(yθ_i, x) = α(|y|, i) N(y, r_i(x))` with `N(1, 1) = 1`, so every value is
/// a Laurent polynomial. Values are memoized per word pair.
pub struct NormalizedPairing<'a> {
    inst: &'a AlgebraInstance,
    memo: RwLock<HashMap<(Word, Word), LaurentPoly>>,
}

impl<'a> NormalizedPairing<'a> {
    pub fn new(inst: &'a AlgebraInstance) -> Self {
        NormalizedPairing {
            inst,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn instance(&self) -> &'a AlgebraInstance {
        self.inst
    }

    pub fn words(&self, a: &Word, b: &Word) -> LaurentPoly {
        if a.len() != b.len() {
            return LaurentPoly::zero();
        }
        if a.is_empty() {
            return LaurentPoly::one();
        }
        let n = self.inst.rank();
        if a.weight(n) != b.weight(n) {
            return LaurentPoly::zero();
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = self.memo.read().expect("memo lock").get(&key) {
            return v.clone();
        }
        let last = a.len() - 1;
        let i = a.at(last);
        let head = a.slice(0, last);
        let mut acc = LaurentPoly::zero();
        for (b2, u) in r_right_word(i, b, self.inst) {
            let inner = self.words(&head, &b2);
            if !inner.is_zero() {
                acc = acc.add(&inner.mul_term(u.mono(), u.coef()));
            }
        }
        if !acc.is_zero() {
            let al = self.inst.alpha(&head.weight(n), &Weight::unit(n, i));
            acc = acc.mul_term(al.mono(), al.coef());
        }
        self.memo.write().expect("memo lock").insert(key, acc.clone());
        acc
    }

    /// The form itself on arbitrary elements.
    pub fn pair(&self, x: &FreeElem, y: &FreeElem) -> FieldElem {
        let n = self.inst.rank();
        let mut per_weight: HashMap<Weight, FieldElem> = HashMap::new();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                let nv = self.words(a, b);
                if nv.is_zero() {
                    continue;
                }
                let e = per_weight.entry(a.weight(n)).or_default();
                *e = e.add(&ca.mul(cb).mul_poly(&nv));
            }
        }
        let mut out = FieldElem::zero();
        for (w, s) in per_weight {
            out = out.add(&s.mul(&weight_scale(&w, self.inst)));
        }
        out
    }
}

/// The form by peeling last letters; zero across distinct weights.
pub fn pair(x: &FreeElem, y: &FreeElem, inst: &AlgebraInstance) -> FieldElem {
    NormalizedPairing::new(inst).pair(x, y)
}

/// The same form computed independently: split the right argument in half
/// and use `(x, y'y'') = (r(x), y'⊗y'')` with the α-twisted tensor form.
pub fn pair_oracle(x: &FreeElem, y: &FreeElem, inst: &AlgebraInstance) -> FieldElem {
    let mut memo = HashMap::new();
    let mut out = FieldElem::zero();
    for (a, ca) in x.terms() {
        for (b, cb) in y.terms() {
            let v = oracle_words(a, b, inst, &mut memo);
            if !v.is_zero() {
                out = out.add(&ca.mul(cb).mul(&v));
            }
        }
    }
    out
}

fn oracle_words(a: &Word, b: &Word, inst: &AlgebraInstance, memo: &mut HashMap<(Word, Word), FieldElem>) -> FieldElem {
    let n = inst.rank();
    if a.len() != b.len() || a.weight(n) != b.weight(n) {
        return FieldElem::zero();
    }
    match b.len() {
        0 => return FieldElem::one(),
        1 => return weight_scale(&b.weight(n), inst),
        _ => {}
    }
    let key = (a.clone(), b.clone());
    if let Some(v) = memo.get(&key) {
        return v.clone();
    }
    let m = b.len() / 2;
    let (b1, b2) = (b.slice(0, m), b.slice(m, b.len()));
    let (w1, w2) = (b1.weight(n), b2.weight(n));
    let r = coproduct_r(&FreeElem::word(a.clone()), inst);
    let mut acc = FieldElem::zero();
    for ((x1, x2), c) in r.terms() {
        if x1.weight(n) != w1 || x2.weight(n) != w2 {
            continue;
        }
        let p1 = oracle_words(x1, &b1, inst, memo);
        if p1.is_zero() {
            continue;
        }
        let p2 = oracle_words(x2, &b2, inst, memo);
        let tw = inst.alpha(&w1, &w2);
        acc = acc.add(&tw.scale(&c.mul(&p1).mul(&p2)));
    }
    memo.insert(key, acc.clone());
    acc
}
