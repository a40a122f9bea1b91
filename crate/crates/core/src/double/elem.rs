//! Elements of `𝐔_{β,ξ}` in PBW order `E-word · torus · F-word`, and the
//! multiplication that rewrites products back into that order.

use std::collections::HashMap;
use std::fmt;
use std::path::PathBuf;
use std::sync::{Arc, RwLock};

use super::half::{render_sum, render_torus, render_word, HalfHatElem, Side};
use super::lin::Lin;
use super::ops::Pairings;
use super::Chars;
use crate::datum::{AlgebraInstance, Unit, Weight};
use crate::form::Form;
use crate::freealg::{FreeElem, Word};
use crate::scalar::FieldElem;
use crate::{Error, Result};

/// `K_k J_j K'_kp J'_jp`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Torus {
    pub k: Weight,
    pub j: Weight,
    pub kp: Weight,
    pub jp: Weight,
}

impl Torus {
    pub fn one(rank: usize) -> Self {
        let z = Weight::zero(rank);
        Torus {
            k: z.clone(),
            j: z.clone(),
            kp: z.clone(),
            jp: z,
        }
    }

    pub fn rank(&self) -> usize {
        self.k.rank()
    }

    pub fn mul(&self, o: &Torus) -> Torus {
        Torus {
            k: &self.k + &o.k,
            j: &self.j + &o.j,
            kp: &self.kp + &o.kp,
            jp: &self.jp + &o.jp,
        }
    }

    pub fn inv(&self) -> Torus {
        Torus {
            k: self.k.scale(-1),
            j: self.j.scale(-1),
            kp: self.kp.scale(-1),
            jp: self.jp.scale(-1),
        }
    }

    pub fn is_one(&self) -> bool {
        self.k.is_zero() && self.j.is_zero() && self.kp.is_zero() && self.jp.is_zero()
    }

    /// Exponents in the order `K, J, K', J'`, one block of `rank` each.
    pub fn exponents(&self) -> Vec<i64> {
        [&self.k, &self.j, &self.kp, &self.jp]
            .iter()
            .flat_map(|w| w.coeffs().iter().copied())
            .collect()
    }

    pub fn from_exponents(rank: usize, e: &[i64]) -> Torus {
        let block = |b: usize| Weight::from_slice(&e[b * rank..(b + 1) * rank]);
        Torus {
            k: block(0),
            j: block(1),
            kp: block(2),
            jp: block(3),
        }
    }
}

/// `E_e · T · F_f`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubleMono {
    pub e: Word,
    pub t: Torus,
    pub f: Word,
}

impl DoubleMono {
    pub fn one(rank: usize) -> Self {
        DoubleMono {
            e: Word::empty(),
            t: Torus::one(rank),
            f: Word::empty(),
        }
    }

    pub fn rank(&self) -> usize {
        self.t.rank()
    }

    pub fn is_torus(&self) -> bool {
        self.e.is_empty() && self.f.is_empty()
    }
}

fn render_mono(f: &mut fmt::Formatter<'_>, m: &DoubleMono) -> fmt::Result {
    let mut first = true;
    render_word(f, "E", &m.e, &mut first)?;
    render_torus(f, "K", &m.t.k, &mut first)?;
    render_torus(f, "J", &m.t.j, &mut first)?;
    render_torus(f, "K'", &m.t.kp, &mut first)?;
    render_torus(f, "J'", &m.t.jp, &mut first)?;
    render_word(f, "F", &m.f, &mut first)?;
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

impl fmt::Display for DoubleMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_mono(f, self)
    }
}

/// An element of the double as a combination of PBW monomials.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DoubleElem {
    pub terms: Lin<DoubleMono>,
}

impl DoubleElem {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one(rank: usize) -> Self {
        Self::mono(DoubleMono::one(rank))
    }

    pub fn mono(m: DoubleMono) -> Self {
        DoubleElem {
            terms: Lin::term(m, FieldElem::one()),
        }
    }

    pub fn e(i: usize, rank: usize) -> Self {
        Self::e_word(Word::letter(i), rank)
    }

    pub fn f(i: usize, rank: usize) -> Self {
        Self::f_word(Word::letter(i), rank)
    }

    pub fn e_word(w: Word, rank: usize) -> Self {
        Self::mono(DoubleMono {
            e: w,
            ..DoubleMono::one(rank)
        })
    }

    pub fn f_word(w: Word, rank: usize) -> Self {
        Self::mono(DoubleMono {
            f: w,
            ..DoubleMono::one(rank)
        })
    }

    pub fn torus(t: Torus) -> Self {
        Self::mono(DoubleMono {
            e: Word::empty(),
            t,
            f: Word::empty(),
        })
    }

    /// The plus half sits inside the double unchanged: `x K J` is already
    /// in PBW order.
    pub fn from_plus(x: &HalfHatElem) -> Self {
        DoubleElem {
            terms: x
                .terms
                .terms()
                .map(|(m, c)| {
                    let mut t = Torus::one(m.rank());
                    t.k = m.k.clone();
                    t.j = m.j.clone();
                    (
                        DoubleMono {
                            e: m.word.clone(),
                            t,
                            f: Word::empty(),
                        },
                        c.clone(),
                    )
                })
                .collect(),
        }
    }

    pub fn add(&self, o: &DoubleElem) -> DoubleElem {
        DoubleElem {
            terms: self.terms.add(&o.terms),
        }
    }

    pub fn sub(&self, o: &DoubleElem) -> DoubleElem {
        DoubleElem {
            terms: self.terms.sub(&o.terms),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> DoubleElem {
        DoubleElem {
            terms: self.terms.scale(c),
        }
    }

    pub fn scale_unit(&self, u: &Unit) -> DoubleElem {
        DoubleElem {
            terms: self.terms.scale_unit(u),
        }
    }

    pub fn neg(&self) -> DoubleElem {
        DoubleElem {
            terms: self.terms.neg(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    pub fn counit(&self) -> FieldElem {
        let mut s = FieldElem::zero();
        for (m, c) in self.terms.terms() {
            if m.is_torus() {
                s = s.add(c);
            }
        }
        s
    }
}

impl fmt::Display for DoubleElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        render_sum(f, &self.terms, render_mono)
    }
}

type Memo<K, V> = RwLock<HashMap<K, Arc<V>>>;

fn memo_get<K: std::hash::Hash + Eq, V>(m: &Memo<K, V>, k: &K) -> Option<Arc<V>> {
    m.read().expect("double memo").get(k).cloned()
}

fn memo_put<K: std::hash::Hash + Eq, V>(m: &Memo<K, V>, k: K, v: V) -> Arc<V> {
    let v = Arc::new(v);
    m.write().expect("double memo").insert(k, v.clone());
    v
}

/// The double of one instance: its pairing, the forms that cut the halves
/// down to `𝔣_β`, and memo tables for straightening.
pub struct Double<'a> {
    inst: &'a AlgebraInstance,
    pub pairings: Pairings,
    form: Form<'a>,
    straight: Memo<(Word, Word), Lin<DoubleMono>>,
    reduced: Memo<Word, FreeElem>,
}

impl<'a> Double<'a> {
    pub fn new(inst: &'a AlgebraInstance) -> Result<Self> {
        Ok(Double {
            inst,
            pairings: Pairings::new(inst)?,
            form: Form::new(inst),
            straight: RwLock::new(HashMap::new()),
            reduced: RwLock::new(HashMap::new()),
        })
    }

    pub fn with_height_bound(mut self, bound: i64) -> Self {
        self.form = self.form.with_height_bound(bound);
        self
    }

    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.form = self.form.with_cache_dir(dir);
        self
    }

    pub fn instance(&self) -> &'a AlgebraInstance {
        self.inst
    }

    pub fn chars(&self) -> &Chars {
        &self.pairings.chars
    }

    pub fn rank(&self) -> usize {
        self.inst.rank()
    }

    /// The scalar `χ` with `T E_μ = χ E_μ T` and `F_μ T = χ T F_μ`.
    pub fn chi(&self, t: &Torus, mu: &Weight) -> Unit {
        let c = self.chars();
        c.bracket(&t.k, mu)
            .mul(&c.xi(mu, &t.j))
            .mul(&c.bracket(mu, &t.kp).inv())
            .mul(&c.xi(&t.kp, mu))
    }

    /// The minus half inside the double: `y K' J'` becomes `K' J' y` up to
    /// the commutation scalar of the minus smash product.
    pub fn from_minus(&self, y: &HalfHatElem) -> DoubleElem {
        let c = self.chars();
        DoubleElem {
            terms: y
                .terms
                .terms()
                .map(|(m, co)| {
                    let s = c.torus_past(Side::Minus, &m.k, &m.j, &m.weight()).inv();
                    let mut t = Torus::one(m.rank());
                    t.kp = m.k.clone();
                    t.jp = m.j.clone();
                    (
                        DoubleMono {
                            e: Word::empty(),
                            t,
                            f: m.word.clone(),
                        },
                        s.scale(co),
                    )
                })
                .collect(),
        }
    }

    /// `F_j E_w` in PBW order. The correction at a letter `w_m = j`, with
    /// `w = p j s`, is
    /// `ξ(j,|p|)ξ(j,j)(v_j^{-1}-v_j)^{-1} E_p E_s (χ K_jJ'_j − χ J_jK'_j)`.
    fn straighten_letter(&self, j: usize, w: &Word) -> Lin<DoubleMono> {
        let c = self.chars();
        let n = self.rank();
        let uj = c.unit(j);
        let mut out = Lin::zero();
        out.add_unit_term(
            DoubleMono {
                e: w.clone(),
                t: Torus::one(n),
                f: Word::letter(j),
            },
            &c.xi(&uj, &w.weight(n)),
            &FieldElem::one(),
        );
        let base = c.inv_gap(j).clone();
        for m in (0..w.len()).filter(|&m| w.at(m) == j) {
            let (p, s) = (w.slice(0, m), w.slice(m + 1, w.len()));
            let e = p.concat(&s);
            let front = c.xi(&uj, &p.weight(n)).mul(&c.xi(&uj, &uj));
            let mut kj = Torus::one(n);
            kj.k = uj.clone();
            kj.jp = uj.clone();
            let mut jk = Torus::one(n);
            jk.j = uj.clone();
            jk.kp = uj.clone();
            let sw = s.weight(n);
            let a = front.mul(&self.chi(&kj, &sw));
            let b = front.mul(&self.chi(&jk, &sw)).neg();
            out.add_unit_term(
                DoubleMono {
                    e: e.clone(),
                    t: kj,
                    f: Word::empty(),
                },
                &a,
                &base,
            );
            out.add_unit_term(
                DoubleMono {
                    e,
                    t: jk,
                    f: Word::empty(),
                },
                &b,
                &base,
            );
        }
        out
    }

    /// `F_u E_w` in PBW order, words not yet reduced.
    fn straighten(&self, u: &Word, w: &Word) -> Arc<Lin<DoubleMono>> {
        let n = self.rank();
        if u.is_empty() || w.is_empty() {
            return Arc::new(Lin::term(
                DoubleMono {
                    e: w.clone(),
                    t: Torus::one(n),
                    f: u.clone(),
                },
                FieldElem::one(),
            ));
        }
        let key = (u.clone(), w.clone());
        if let Some(v) = memo_get(&self.straight, &key) {
            return v;
        }
        let (head, j) = (u.slice(0, u.len() - 1), u.at(u.len() - 1));
        let mut out = Lin::zero();
        for (m, c) in self.straighten_letter(j, w).terms() {
            let inner = self.straighten(&head, &m.e);
            for (m2, c2) in inner.terms() {
                let s = self.chi(&m.t, &m2.f.weight(n));
                out.add_term(
                    DoubleMono {
                        e: m2.e.clone(),
                        t: m2.t.mul(&m.t),
                        f: m2.f.concat(&m.f),
                    },
                    s.scale(&c.mul(c2)),
                );
            }
        }
        memo_put(&self.straight, key, out.simplified())
    }

    /// Product of two PBW monomials, words not yet reduced.
    fn mono_mul_raw(&self, a: &DoubleMono, b: &DoubleMono) -> Lin<DoubleMono> {
        let n = self.rank();
        let mut out = Lin::zero();
        for (m, c) in self.straighten(&a.f, &b.e).terms() {
            let s = self.chi(&a.t, &m.e.weight(n)).mul(&self.chi(&b.t, &m.f.weight(n)));
            out.add_term(
                DoubleMono {
                    e: a.e.concat(&m.e),
                    t: a.t.mul(&m.t).mul(&b.t),
                    f: m.f.concat(&b.f),
                },
                s.scale(c),
            );
        }
        out
    }

    /// A word reduced onto the quotient basis of `𝔣_β`.
    pub(crate) fn reduce_word(&self, w: &Word) -> Result<Arc<FreeElem>> {
        if w.len() < 2 {
            return Ok(Arc::new(FreeElem::word(w.clone())));
        }
        if let Some(v) = memo_get(&self.reduced, w) {
            return Ok(v);
        }
        let block = self.form.gram(&w.weight(self.rank()))?;
        Ok(memo_put(&self.reduced, w.clone(), block.reduce_word(w)))
    }

    /// Reduces E-words through `ι⁺` and F-words through the anti-isomorphism
    /// `ι⁻`, so both parts lie in quotient bases.
    pub fn reduce(&self, x: &Lin<DoubleMono>) -> Result<DoubleElem> {
        let terms = x.try_map(|m| -> Result<Lin<DoubleMono>> {
            let es = self.reduce_word(&m.e)?;
            let fs = self.reduce_word(&m.f.reversed())?;
            let mut out = Lin::zero();
            for (e, ce) in es.terms() {
                for (f, cf) in fs.terms() {
                    out.add_term(
                        DoubleMono {
                            e: e.clone(),
                            t: m.t.clone(),
                            f: f.reversed(),
                        },
                        ce.mul(cf),
                    );
                }
            }
            Ok(out)
        })?;
        Ok(DoubleElem {
            terms: terms.simplified(),
        })
    }

    /// The product in `𝐔_{β,ξ}`, rewritten to PBW order with reduced words.
    pub fn mul(&self, a: &DoubleElem, b: &DoubleElem) -> Result<DoubleElem> {
        let mut out = Lin::zero();
        for (x, cx) in a.terms.terms() {
            for (y, cy) in b.terms.terms() {
                let c = cx.mul(cy);
                for (m, d) in self.mono_mul_raw(x, y).terms() {
                    out.add_term(m.clone(), d.mul(&c));
                }
            }
        }
        self.reduce(&out)
    }

    /// Left-to-right product of a list of factors.
    pub fn product(&self, xs: &[DoubleElem]) -> Result<DoubleElem> {
        let mut acc = DoubleElem::one(self.rank());
        for x in xs {
            acc = self.mul(&acc, x)?;
        }
        Ok(acc)
    }

    /// `(1⊗y)(x⊗1) = Σ φ(x₁, S₋(y₁)) x₂ y₂ φ(x₃, y₃)` over `Δ₊²(x)` and
    /// `Δ₋²(y)`; an independent route to the cross relations.
    pub fn mul_via_pairing(&self, y: &HalfHatElem, x: &HalfHatElem) -> Result<DoubleElem> {
        if y.side != Side::Minus || x.side != Side::Plus {
            return Err(Error::invalid("expected a minus element times a plus element"));
        }
        let c = self.chars();
        let pr = &self.pairings;
        let (dx, dy) = (c.delta2(x), c.delta2(y));
        let mut out = Lin::zero();
        for (ys, cy) in dy.terms() {
            let sy1 = c.antipode(&HalfHatElem::mono(Side::Minus, ys[0].clone()), false);
            for (xs, cx) in dx.terms() {
                let outer = pr.phi_tensor(&xs[2..3], &ys[2..3])?;
                if outer.is_zero() {
                    continue;
                }
                let inner = pr.phi(&HalfHatElem::mono(Side::Plus, xs[0].clone()), &sy1)?;
                if inner.is_zero() {
                    continue;
                }
                let (x2, y2) = (&xs[1], &ys[1]);
                let s = c.torus_past(Side::Minus, &y2.k, &y2.j, &y2.weight()).inv();
                out.add_term(
                    DoubleMono {
                        e: x2.word.clone(),
                        t: Torus {
                            k: x2.k.clone(),
                            j: x2.j.clone(),
                            kp: y2.k.clone(),
                            jp: y2.j.clone(),
                        },
                        f: y2.word.clone(),
                    },
                    s.scale(&inner.mul(&outer).mul(&cx.mul(cy))),
                );
            }
        }
        self.reduce(&out)
    }
}

pub fn double_mul(a: &DoubleElem, b: &DoubleElem, inst: &AlgebraInstance) -> Result<DoubleElem> {
    Double::new(inst)?.mul(a, b)
}

pub fn double_mul_via_pairing(y: &HalfHatElem, x: &HalfHatElem, inst: &AlgebraInstance) -> Result<DoubleElem> {
    Double::new(inst)?.mul_via_pairing(y, x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn torus_k_jp(i: usize, n: usize) -> Torus {
        let mut t = Torus::one(n);
        t.k = Weight::unit(n, i);
        t.jp = Weight::unit(n, i);
        t
    }

    fn torus_j_kp(i: usize, n: usize) -> Torus {
        let mut t = Torus::one(n);
        t.j = Weight::unit(n, i);
        t.kp = Weight::unit(n, i);
        t
    }

    #[test]
    fn f_past_e_matches_the_cross_relation() {
        for name in catalog::double_instances() {
            let inst = catalog::load(name).unwrap();
            let d = Double::new(&inst).unwrap();
            let c = d.chars();
            let n = inst.rank();
            for i in 0..n {
                for j in 0..n {
                    let got = d.mul(&DoubleElem::f(j, n), &DoubleElem::e(i, n)).unwrap();
                    let xji = c.xi(&c.unit(j), &c.unit(i));
                    let mut want = DoubleElem::mono(DoubleMono {
                        e: Word::letter(i),
                        t: Torus::one(n),
                        f: Word::letter(j),
                    })
                    .scale_unit(&xji);
                    if i == j {
                        let corr = DoubleElem::torus(torus_k_jp(i, n))
                            .sub(&DoubleElem::torus(torus_j_kp(i, n)))
                            .scale(&xji.scale(c.inv_gap(i)));
                        want = want.add(&corr);
                    }
                    assert_eq!(got, want, "{name} F{j} E{i}");
                }
            }
        }
    }

    #[test]
    fn pairing_route_agrees_on_generators() {
        let inst = catalog::load("a2-two-parameter").unwrap();
        let d = Double::new(&inst).unwrap();
        let n = inst.rank();
        for i in 0..n {
            for j in 0..n {
                let y = HalfHatElem::generator(Side::Minus, j, n);
                let x = HalfHatElem::generator(Side::Plus, i, n);
                let a = d.mul(&d.from_minus(&y), &DoubleElem::from_plus(&x)).unwrap();
                assert_eq!(a, d.mul_via_pairing(&y, &x).unwrap());
            }
        }
    }

    #[test]
    fn torus_commutes_past_generators() {
        let inst = catalog::load("b2-super").unwrap();
        let d = Double::new(&inst).unwrap();
        let c = d.chars();
        let n = inst.rank();
        let (u0, u1) = (c.unit(0), c.unit(1));
        let mut t = Torus::one(n);
        t.kp = u0.clone();
        let lhs = d.mul(&DoubleElem::torus(t.clone()), &DoubleElem::e(1, n)).unwrap();
        let want = c.bracket(&u1, &u0).inv().mul(&c.xi(&u0, &u1));
        let rhs = d
            .mul(&DoubleElem::e(1, n), &DoubleElem::torus(t))
            .unwrap()
            .scale_unit(&want);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn serre_relation_vanishes_in_the_double() {
        let inst = catalog::load("a2-multi-parameter").unwrap();
        let d = Double::new(&inst).unwrap();
        let dij = crate::freealg::serre_element(0, 1, &inst).unwrap();
        let x = DoubleElem {
            terms: dij
                .terms()
                .map(|(w, c)| {
                    (
                        DoubleMono {
                            e: w.clone(),
                            ..DoubleMono::one(2)
                        },
                        c.clone(),
                    )
                })
                .collect(),
        };
        assert!(d.reduce(&x.terms).unwrap().is_zero());
        let fx = d.mul(&DoubleElem::f(0, 2), &x).unwrap();
        assert!(fx.is_zero(), "{fx}");
    }
}
