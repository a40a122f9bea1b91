//! The Hopf structure of the double and the checks that certify it.

use rayon::prelude::*;

use super::check::{outcome, single_dressings, Tally};
use super::elem::{Double, DoubleElem, DoubleMono, Torus};
use super::half::{HalfHatElem, HalfMono, Side};
use super::lin::Lin;
use crate::datum::Weight;
use crate::freealg::{FreeElem, Word};
use crate::report::Report;
use crate::scalar::FieldElem;
use crate::Result;

/// Tensor powers of the double: keys are lists of PBW monomials.
pub type DoubleTensor = Lin<Vec<DoubleMono>>;

/// The generators `E_i, F_i` and `K_i^{±1}, J_i^{±1}, K'_i^{±1}, J'_i^{±1}`.
pub fn generators(rank: usize) -> Vec<DoubleElem> {
    let mut out = Vec::new();
    for i in 0..rank {
        out.push(DoubleElem::e(i, rank));
    }
    for b in 0..4 {
        for i in 0..rank {
            for s in [1, -1] {
                let mut e = vec![0; 4 * rank];
                e[b * rank + i] = s;
                out.push(DoubleElem::torus(Torus::from_exponents(rank, &e)));
            }
        }
    }
    for i in 0..rank {
        out.push(DoubleElem::f(i, rank));
    }
    out
}

fn pure_torus(rank: usize, k: Option<usize>, j: Option<usize>, kp: Option<usize>, jp: Option<usize>, s: i64) -> Torus {
    let w = |i: Option<usize>| i.map_or(Weight::zero(rank), |i| Weight::unit(rank, i).scale(s));
    Torus {
        k: w(k),
        j: w(j),
        kp: w(kp),
        jp: w(jp),
    }
}

impl Double<'_> {
    pub fn tensor_mul(&self, a: &DoubleTensor, b: &DoubleTensor) -> Result<DoubleTensor> {
        let mut out = Lin::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let mut acc: Lin<Vec<DoubleMono>> = Lin::term(Vec::new(), ca.mul(cb));
                for (x, y) in ka.iter().zip(kb) {
                    let p = self.mul(&DoubleElem::mono(x.clone()), &DoubleElem::mono(y.clone()))?;
                    let mut next = Lin::zero();
                    for (key, c) in acc.terms() {
                        for (m, d) in p.terms.terms() {
                            let mut k2 = key.clone();
                            k2.push(m.clone());
                            next.add_term(k2, c.mul(d));
                        }
                    }
                    acc = next;
                }
                out.add_assign(&acc);
            }
        }
        Ok(out)
    }

    fn delta_letter(&self, side: Side, i: usize) -> DoubleTensor {
        let n = self.rank();
        let one = FieldElem::one();
        let tm = |t: Torus| DoubleMono {
            t,
            ..DoubleMono::one(n)
        };
        let mut out = Lin::zero();
        match side {
            Side::Plus => {
                let e = DoubleMono {
                    e: Word::letter(i),
                    ..DoubleMono::one(n)
                };
                out.add_term(
                    vec![e.clone(), tm(pure_torus(n, None, Some(i), None, None, 1))],
                    one.clone(),
                );
                out.add_term(vec![tm(pure_torus(n, Some(i), None, None, None, 1)), e], one);
            }
            Side::Minus => {
                let f = DoubleMono {
                    f: Word::letter(i),
                    ..DoubleMono::one(n)
                };
                out.add_term(
                    vec![tm(pure_torus(n, None, None, None, Some(i), 1)), f.clone()],
                    one.clone(),
                );
                out.add_term(vec![f, tm(pure_torus(n, None, None, Some(i), None, 1))], one);
            }
        }
        out
    }

    /// `Δ` on a PBW monomial as the product of the generator coproducts.
    fn delta_mono(&self, m: &DoubleMono) -> Result<DoubleTensor> {
        let n = self.rank();
        let t = DoubleMono {
            t: m.t.clone(),
            ..DoubleMono::one(n)
        };
        let mut acc = Lin::term(vec![t.clone(), t], FieldElem::one());
        for i in m.e.letters().rev() {
            acc = self.tensor_mul(&self.delta_letter(Side::Plus, i), &acc)?;
        }
        for i in m.f.letters() {
            acc = self.tensor_mul(&acc, &self.delta_letter(Side::Minus, i))?;
        }
        Ok(acc)
    }

    pub fn delta(&self, x: &DoubleElem) -> Result<DoubleTensor> {
        x.terms.try_map(|m| self.delta_mono(m))
    }

    /// `Δ` applied to the tensor factor at `slot`.
    pub fn delta_at(&self, t: &DoubleTensor, slot: usize) -> Result<DoubleTensor> {
        t.try_map(|key| -> Result<DoubleTensor> {
            let d = self.delta_mono(&key[slot])?;
            Ok(d.terms()
                .map(|(mid, c)| {
                    let mut k = key[..slot].to_vec();
                    k.extend(mid.iter().cloned());
                    k.extend(key[slot + 1..].iter().cloned());
                    (k, c.clone())
                })
                .collect())
        })
    }

    fn antipode_letter(&self, side: Side, i: usize) -> Result<DoubleElem> {
        let n = self.rank();
        let (before, g, after) = match side {
            Side::Plus => (
                pure_torus(n, Some(i), None, None, None, -1),
                DoubleElem::e(i, n),
                pure_torus(n, None, Some(i), None, None, -1),
            ),
            Side::Minus => (
                pure_torus(n, None, None, None, Some(i), -1),
                DoubleElem::f(i, n),
                pure_torus(n, None, None, Some(i), None, -1),
            ),
        };
        Ok(self
            .product(&[DoubleElem::torus(before), g, DoubleElem::torus(after)])?
            .neg())
    }

    /// `S` on a PBW monomial: the reversed product of generator antipodes.
    fn antipode_mono(&self, m: &DoubleMono) -> Result<DoubleElem> {
        let mut factors = Vec::new();
        for i in m.f.letters().rev() {
            factors.push(self.antipode_letter(Side::Minus, i)?);
        }
        factors.push(DoubleElem::torus(m.t.inv()));
        for i in m.e.letters().rev() {
            factors.push(self.antipode_letter(Side::Plus, i)?);
        }
        self.product(&factors)
    }

    pub fn antipode(&self, x: &DoubleElem) -> Result<DoubleElem> {
        Ok(DoubleElem {
            terms: x
                .terms
                .try_map(|m| Ok::<_, crate::Error>(self.antipode_mono(m)?.terms))?,
        })
    }

    pub fn counit(&self, x: &DoubleElem) -> FieldElem {
        x.counit()
    }

    /// `m ∘ (S⊗id) ∘ Δ` when `left`, else `m ∘ (id⊗S) ∘ Δ`.
    fn convolve(&self, x: &DoubleElem, left: bool) -> Result<DoubleElem> {
        let mut out = DoubleElem::zero();
        for (key, c) in self.delta(x)?.terms() {
            let (a, b) = (DoubleElem::mono(key[0].clone()), DoubleElem::mono(key[1].clone()));
            let p = if left {
                self.mul(&self.antipode(&a)?, &b)?
            } else {
                self.mul(&a, &self.antipode(&b)?)?
            };
            out = out.add(&p.scale(c));
        }
        Ok(out)
    }

    /// Collapses the factor at `slot` with the counit.
    fn counit_at(&self, t: &DoubleTensor, slot: usize) -> DoubleElem {
        let mut out = Lin::zero();
        for (key, c) in t.terms() {
            if key[slot].is_torus() {
                out.add_term(key[1 - slot].clone(), c.clone());
            }
        }
        DoubleElem { terms: out }
    }
}

/// Elements the Hopf axioms are checked on: every generator and every product
/// of two generators taken in PBW order (E, then torus, then F).
fn hopf_sample(d: &Double<'_>) -> Result<Vec<(String, DoubleElem)>> {
    let gens = generators(d.rank());
    let mut out: Vec<(String, DoubleElem)> = gens.iter().map(|g| (g.to_string(), g.clone())).collect();
    for (a, ga) in gens.iter().enumerate() {
        for gb in &gens[a..] {
            let p = d.mul(ga, gb)?;
            out.push((format!("{ga} · {gb}"), p));
        }
    }
    Ok(out)
}

/// Certifies the double: the cross relation `F_jE_i` against its closed
/// form, straightening against the pairing formula on all pairs of words of
/// length at most `length_bound` (with single-generator torus dressings),
/// associativity on generator triples, that radical elements up to height 3
/// stay zero when multiplied by words of the other half, and the Hopf axioms
/// on generators and their pairwise products.
pub fn verify_double(d: &Double<'_>, length_bound: usize) -> Result<Report> {
    let n = d.rank();
    let c = d.chars();
    let mut rep = Report::new();

    let mut t = Tally::new("double.cross-relation", "all i, j");
    for i in 0..n {
        for j in 0..n {
            let got = d.mul(&DoubleElem::f(j, n), &DoubleElem::e(i, n))?;
            let xji = c.xi(&c.unit(j), &c.unit(i));
            let mut want = DoubleElem::mono(DoubleMono {
                e: Word::letter(i),
                t: Torus::one(n),
                f: Word::letter(j),
            })
            .scale_unit(&xji);
            if i == j {
                let kj = pure_torus(n, Some(i), None, None, Some(i), 1);
                let jk = pure_torus(n, None, Some(i), Some(i), None, 1);
                want = want.add(
                    &DoubleElem::torus(kj)
                        .sub(&DoubleElem::torus(jk))
                        .scale(&xji.scale(c.inv_gap(i))),
                );
            }
            t.absorb(vec![outcome(got == want, || {
                format!("F[{}] E[{}] = {got}", j + 1, i + 1)
            })]);
        }
    }
    t.push_to(&mut rep);

    let words = Word::up_to_length(n, length_bound);
    let dressings = single_dressings(n);
    let halves = |side: Side| -> Vec<HalfHatElem> {
        words
            .iter()
            .flat_map(|w| {
                dressings.iter().map(move |(k, j)| {
                    HalfHatElem::mono(
                        side,
                        HalfMono {
                            word: w.clone(),
                            k: k.clone(),
                            j: j.clone(),
                        },
                    )
                })
            })
            .collect()
    };
    let (xs, ys) = (halves(Side::Plus), halves(Side::Minus));
    let mut t = Tally::new("double.oracle", format!("word length ≤ {length_bound}"));
    t.absorb(
        ys.par_iter()
            .map(|y| -> Result<Vec<Option<String>>> {
                let yd = d.from_minus(y);
                xs.iter()
                    .map(|x| {
                        let a = d.mul(&yd, &DoubleElem::from_plus(x))?;
                        let b = d.mul_via_pairing(y, x)?;
                        Ok(outcome(a == b, || format!("y = {y}, x = {x}")))
                    })
                    .collect()
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect(),
    );
    t.push_to(&mut rep);

    let gens = generators(n);
    let mut t = Tally::new("pbw.confluence", "generator triples");
    t.absorb(
        gens.par_iter()
            .map(|a| -> Result<Vec<Option<String>>> {
                let mut out = Vec::new();
                for b in &gens {
                    let ab = d.mul(a, b)?;
                    for cc in &gens {
                        let l = d.mul(&ab, cc)?;
                        let r = d.mul(a, &d.mul(b, cc)?)?;
                        out.push(outcome(l == r, || format!("({a})({b})({cc})")));
                    }
                }
                Ok(out)
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect(),
    );
    t.push_to(&mut rep);

    let mut t = Tally::new("pbw.radical-ideal", "height ≤ 3");
    let others = Word::up_to_length(n, 3);
    for h in 2..=3 {
        for nu in Weight::of_height(n, h) {
            for w in Word::of_weight(&nu) {
                let r = FreeElem::word(w.clone()).sub(&*d.reduce_word(&w)?);
                if r.is_zero() {
                    continue;
                }
                let rp = DoubleElem {
                    terms: r
                        .terms()
                        .map(|(w, c)| {
                            (
                                DoubleMono {
                                    e: w.clone(),
                                    ..DoubleMono::one(n)
                                },
                                c.clone(),
                            )
                        })
                        .collect(),
                };
                let rm = DoubleElem {
                    terms: r
                        .terms()
                        .map(|(w, c)| {
                            (
                                DoubleMono {
                                    f: w.reversed(),
                                    ..DoubleMono::one(n)
                                },
                                c.clone(),
                            )
                        })
                        .collect(),
                };
                for u in &others {
                    let a = d.mul(&DoubleElem::f_word(u.clone(), n), &rp)?;
                    t.absorb(vec![outcome(a.is_zero(), || {
                        format!(
                            "{} times the radical element from E-word {w}",
                            DoubleElem::f_word(u.clone(), n)
                        )
                    })]);
                    let b = d.mul(&rm, &DoubleElem::e_word(u.clone(), n))?;
                    t.absorb(vec![outcome(b.is_zero(), || {
                        format!(
                            "radical element from F-word {w} times {}",
                            DoubleElem::e_word(u.clone(), n)
                        )
                    })]);
                }
            }
        }
    }
    t.push_to(&mut rep);

    let sample = hopf_sample(d)?;
    let scope = "generators and products of two";
    let mut coassoc = Tally::new("hopf.coassociativity", scope);
    let mut counit = Tally::new("hopf.counit", scope);
    let mut antipode = Tally::new("hopf.antipode", scope);
    let results: Vec<[Option<String>; 3]> = sample
        .par_iter()
        .map(|(label, x)| -> Result<[Option<String>; 3]> {
            let dx = d.delta(x)?;
            let a = outcome(d.delta_at(&dx, 0)? == d.delta_at(&dx, 1)?, || label.clone());
            let b = outcome(d.counit_at(&dx, 0) == *x && d.counit_at(&dx, 1) == *x, || label.clone());
            let e = DoubleElem::one(n).scale(&x.counit());
            let ok = d.convolve(x, true)? == e && d.convolve(x, false)? == e;
            Ok([a, b, outcome(ok, || label.clone())])
        })
        .collect::<Result<_>>()?;
    for [a, b, s] in results {
        coassoc.absorb(vec![a]);
        counit.absorb(vec![b]);
        antipode.absorb(vec![s]);
    }
    coassoc.push_to(&mut rep);
    counit.push_to(&mut rep);
    antipode.push_to(&mut rep);

    // Δ, ε and S respect products of generators: Δ(ab) = Δ(a)Δ(b), S(ab) = S(b)S(a).
    let mut dh = Tally::new("hopf.delta-multiplicative", "generator pairs");
    let mut sh = Tally::new("hopf.antipode-anti-multiplicative", "generator pairs");
    let mut eh = Tally::new("hopf.counit-multiplicative", "generator pairs");
    for a in &gens {
        let (da, sa) = (d.delta(a)?, d.antipode(a)?);
        for b in &gens {
            let ab = d.mul(a, b)?;
            let ok = d.delta(&ab)? == d.tensor_mul(&da, &d.delta(b)?)?;
            dh.absorb(vec![outcome(ok, || format!("({a})({b})"))]);
            let ok = d.antipode(&ab)? == d.mul(&d.antipode(b)?, &sa)?;
            sh.absorb(vec![outcome(ok, || format!("({a})({b})"))]);
            let ok = ab.counit() == a.counit().mul(&b.counit());
            eh.absorb(vec![outcome(ok, || format!("({a})({b})"))]);
        }
    }
    dh.push_to(&mut rep);
    sh.push_to(&mut rep);
    eh.push_to(&mut rep);
    Ok(rep)
}
