//! Exhaustive low-degree certificate that `φ` is a skew-Hopf pairing and is
//! compatible with the Serre relations.

use rayon::prelude::*;

use super::check::{full_dressings, outcome, single_dressings, Tally};
use super::half::{HalfHatElem, HalfMono, Side};
use super::ops::Pairings;
use crate::datum::{AlgebraInstance, Weight};
use crate::freealg::{r_left, r_right, serre_element, FreeElem, Word};
use crate::report::Report;
use crate::scalar::FieldElem;
use crate::{Error, Result};

/// Longest generator words the pairing checks accept.
pub const MAX_LENGTH: usize = 4;

/// `θ_w ↦ E_w`.
pub fn iota_plus(x: &FreeElem, rank: usize) -> HalfHatElem {
    HalfHatElem {
        side: Side::Plus,
        terms: x
            .terms()
            .map(|(w, c)| (HalfMono::word(w.clone(), rank), c.clone()))
            .collect(),
    }
}

/// The anti-isomorphism `θ_w ↦ F_{reversed w}`.
pub fn iota_minus(x: &FreeElem, rank: usize) -> HalfHatElem {
    HalfHatElem {
        side: Side::Minus,
        terms: x
            .terms()
            .map(|(w, c)| (HalfMono::word(w.reversed(), rank), c.clone()))
            .collect(),
    }
}

fn dressed(words: &[Word], dressings: &[(Weight, Weight)]) -> Vec<HalfMono> {
    words
        .iter()
        .flat_map(|w| {
            dressings.iter().map(move |(k, j)| HalfMono {
                word: w.clone(),
                k: k.clone(),
                j: j.clone(),
            })
        })
        .collect()
}

fn plus(m: &HalfMono) -> HalfHatElem {
    HalfHatElem::mono(Side::Plus, m.clone())
}

fn minus(m: &HalfMono) -> HalfHatElem {
    HalfHatElem::mono(Side::Minus, m.clone())
}

fn render(m: &HalfMono, side: Side) -> String {
    HalfHatElem::mono(side, m.clone()).to_string()
}

/// Checks the skew-Hopf axioms (a)–(d) on generator words of length at most
/// `length_bound`, the refinement identity `φ = 𝒢(|x|)φ'`, the coproduct
/// compatibility of `ρ⁻`, the intertwiners `𝒮_l ι⁺ = ι⁺ ₗr` and
/// `ᵢ𝒮 ι⁻(x) = ξ(|x|,i) ι⁻ rᵢ(x)`, and that the Serre elements pair to zero.
///
/// Torus dressings: axioms (a) and (d) use every exponent vector in
/// `{-1,0,1}` on both tori of a half; axioms (b) and (c), which involve
/// three factors, use the identity and each single torus generator to the
/// power `±1` on every factor.
pub fn verify_skew_hopf(inst: &AlgebraInstance, length_bound: usize) -> Result<Report> {
    if length_bound > MAX_LENGTH {
        return Err(Error::ResourceLimit(format!(
            "pairing checks accept words of length at most {MAX_LENGTH}, got {length_bound}"
        )));
    }
    let pr = Pairings::new(inst)?;
    let ch = &pr.chars;
    let n = inst.rank();
    let words = Word::up_to_length(n, length_bound);
    let full = dressed(&words, &full_dressings(n));
    let single = dressed(&words, &single_dressings(n));
    let one = HalfMono::word(Word::empty(), n);
    let mut rep = Report::new();

    // (a)
    let mut t = Tally::new("skew.unit", format!("length ≤ {length_bound}"));
    t.absorb(
        full.par_iter()
            .map(|m| -> Result<Option<String>> {
                let a = pr.phi(&plus(&one), &minus(m))? == minus(m).counit();
                let b = pr.phi(&plus(m), &minus(&one))? == plus(m).counit();
                Ok(outcome(a && b, || render(m, Side::Minus)))
            })
            .collect::<Result<_>>()?,
    );
    t.push_to(&mut rep);

    // (b) φ(x, y'y'') = φ(Δ₊(x), y'⊗y'')
    for len in 1..=length_bound {
        let mut t = Tally::new("skew.coproduct", format!("length {len}"));
        let xs: Vec<&HalfMono> = single.iter().filter(|m| m.word.len() == len).collect();
        t.absorb(
            xs.par_iter()
                .map(|x| -> Result<Vec<Option<String>>> {
                    let dx = ch.delta(&plus(x));
                    let mut out = Vec::new();
                    for y1 in single.iter().filter(|m| m.word.len() <= len) {
                        let rest = &x.weight() - &y1.weight();
                        if !rest.is_nonnegative() {
                            continue;
                        }
                        for y2 in single.iter().filter(|m| m.weight() == rest) {
                            let lhs = pr.phi(&plus(x), &ch.half_mul(&minus(y1), &minus(y2))?)?;
                            let mut rhs = FieldElem::zero();
                            for (key, c) in dx.terms() {
                                let v = pr.phi_tensor(key, &[y1.clone(), y2.clone()])?;
                                rhs = rhs.add(&v.mul(c));
                            }
                            out.push(outcome(lhs == rhs, || {
                                format!(
                                    "x = {}, y' = {}, y'' = {}",
                                    render(x, Side::Plus),
                                    render(y1, Side::Minus),
                                    render(y2, Side::Minus)
                                )
                            }));
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
    }

    // (c) φ(x'x'', y) = φ(x'⊗x'', Δ₋^op(y))
    for len in 1..=length_bound {
        let mut t = Tally::new("skew.op-coproduct", format!("length {len}"));
        let ys: Vec<&HalfMono> = single.iter().filter(|m| m.word.len() == len).collect();
        t.absorb(
            ys.par_iter()
                .map(|y| -> Result<Vec<Option<String>>> {
                    let dy = ch.delta(&minus(y));
                    let mut out = Vec::new();
                    for x1 in single.iter().filter(|m| m.word.len() <= len) {
                        let rest = &y.weight() - &x1.weight();
                        if !rest.is_nonnegative() {
                            continue;
                        }
                        for x2 in single.iter().filter(|m| m.weight() == rest) {
                            let lhs = pr.phi(&ch.half_mul(&plus(x1), &plus(x2))?, &minus(y))?;
                            let mut rhs = FieldElem::zero();
                            for (key, c) in dy.terms() {
                                let v = pr.phi_tensor(&[x1.clone(), x2.clone()], &[key[1].clone(), key[0].clone()])?;
                                rhs = rhs.add(&v.mul(c));
                            }
                            out.push(outcome(lhs == rhs, || {
                                format!(
                                    "x' = {}, x'' = {}, y = {}",
                                    render(x1, Side::Plus),
                                    render(x2, Side::Plus),
                                    render(y, Side::Minus)
                                )
                            }));
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
    }

    // (d) φ(S₊(x), y) = φ(x, S₋⁻¹(y))
    for len in 0..=length_bound {
        let mut t = Tally::new("skew.antipode", format!("length {len}"));
        let xs: Vec<&HalfMono> = full.iter().filter(|m| m.word.len() == len).collect();
        let ys: Vec<(HalfMono, HalfHatElem)> = full
            .iter()
            .filter(|m| m.word.len() == len)
            .map(|m| (m.clone(), ch.antipode(&minus(m), true)))
            .collect();
        t.absorb(
            xs.par_iter()
                .map(|x| -> Result<Vec<Option<String>>> {
                    let sx = ch.antipode(&plus(x), false);
                    let mut out = Vec::new();
                    for (y, sy) in ys.iter().filter(|(y, _)| y.weight() == x.weight()) {
                        let ok = pr.phi(&sx, &minus(y))? == pr.phi(&plus(x), sy)?;
                        out.push(outcome(ok, || {
                            format!("x = {}, y = {}", render(x, Side::Plus), render(y, Side::Minus))
                        }));
                    }
                    Ok(out)
                })
                .collect::<Result<Vec<_>>>()?
                .into_iter()
                .flatten()
                .collect(),
        );
        t.push_to(&mut rep);
    }

    // φ = 𝒢(|x|) φ' on undressed words.
    let mut t = Tally::new("skew.refinement", format!("length ≤ {length_bound}"));
    for x in words.iter().filter(|w| !w.is_empty()) {
        let g = inst.g_refine(&x.weight(n))?;
        let xe = HalfHatElem::word(Side::Plus, x.clone(), n);
        let mut out = Vec::new();
        for y in words.iter().filter(|w| w.weight(n) == x.weight(n)) {
            let ye = HalfHatElem::word(Side::Minus, y.clone(), n);
            let ok = pr.phi(&xe, &ye)? == g.scale(&pr.phi_prime(&xe, &ye)?);
            out.push(outcome(ok, || format!("x = {xe}, y = {ye}")));
        }
        t.absorb(out);
    }
    t.push_to(&mut rep);

    // ρ⁻(y)(x'x'') = Σ ρ⁻(y₂)(x') ρ⁻(y₁)(x'') over Δ₋(y) = Σ y₁⊗y₂.
    let mut t = Tally::new("skew.rho-minus-coproduct", format!("length ≤ {length_bound}"));
    for y in words.iter().filter(|w| !w.is_empty()) {
        let ym = HalfMono::word(y.clone(), n);
        let dy = ch.delta(&minus(&ym));
        let mut out = Vec::new();
        for x1 in &words {
            for x2 in words.iter().filter(|w| w.len() + x1.len() <= length_bound) {
                let (a, b) = (
                    HalfHatElem::word(Side::Plus, x1.clone(), n),
                    HalfHatElem::word(Side::Plus, x2.clone(), n),
                );
                let lhs = ch.rho_minus(&minus(&ym), &ch.half_mul(&a, &b)?)?;
                let mut rhs = HalfHatElem::zero(Side::Plus);
                for (key, c) in dy.terms() {
                    let l = ch.rho_minus(&minus(&key[1]), &a)?;
                    let r = ch.rho_minus(&minus(&key[0]), &b)?;
                    rhs = rhs.add(&ch.half_mul(&l, &r)?.scale(c));
                }
                out.push(outcome(lhs == rhs, || {
                    format!("y = {}, x' = {a}, x'' = {b}", minus(&ym))
                }));
            }
        }
        t.absorb(out);
    }
    t.push_to(&mut rep);

    // Intertwiners with the derivations of the half algebra.
    let mut tp = Tally::new("skew.intertwine-plus", format!("length ≤ {length_bound}"));
    let mut tm = Tally::new("skew.intertwine-minus", format!("length ≤ {length_bound}"));
    for x in &words {
        let fx = FreeElem::word(x.clone());
        for l in 0..n {
            let lhs = ch.op_sj(l, &iota_plus(&fx, n));
            let rhs = iota_plus(&r_left(l, &fx, inst), n);
            tp.absorb(vec![outcome(lhs == rhs, || {
                format!("l = {}, x = {x}", inst.datum.label(l))
            })]);
            let lhs = ch.op_js(l, &iota_minus(&fx, n));
            let rhs = iota_minus(&r_right(l, &fx, inst), n).scale_unit(&ch.xi(&x.weight(n), &ch.unit(l)));
            tm.absorb(vec![outcome(lhs == rhs, || {
                format!("i = {}, x = {x}", inst.datum.label(l))
            })]);
        }
    }
    tp.push_to(&mut rep);
    tm.push_to(&mut rep);

    // The Serre elements lie in the radical of φ on both sides.
    for i in 0..n {
        for j in (0..n).filter(|&j| j != i) {
            let d = serre_element(i, j, inst)?;
            let (dp, dm) = (iota_plus(&d, n), iota_minus(&d, n));
            let nu = d.weight(n).expect("Serre elements are homogeneous");
            let mut t = Tally::new("skew.serre-radical", inst.pair_label(i, j));
            for w in Word::of_weight(&nu) {
                let (e, f) = (
                    HalfHatElem::word(Side::Plus, w.clone(), n),
                    HalfHatElem::word(Side::Minus, w.clone(), n),
                );
                let ok = pr.phi(&dp, &f)?.is_zero();
                t.absorb(vec![outcome(ok, || format!("φ(ι⁺D, {f}) ≠ 0"))]);
                let ok = pr.phi(&e, &dm)?.is_zero();
                t.absorb(vec![outcome(ok, || format!("φ({e}, ι⁻D) ≠ 0"))]);
            }
            t.push_to(&mut rep);
        }
    }
    Ok(rep)
}

/// `𝒢(ν₁)𝒢(ν₂)ξ(ν₂,ν₁) = 𝒢(ν₁+ν₂)` for all nonzero `ν₁, ν₂` of height at
/// most `height`, and agreement with the preset's closed form when it has
/// one.
pub fn verify_g_cocycle(inst: &AlgebraInstance, height: i64) -> Result<Report> {
    let n = inst.rank();
    let weights: Vec<Weight> = (1..=height).flat_map(|h| Weight::of_height(n, h)).collect();
    let mut rep = Report::new();
    let mut t = Tally::new("pairing.g-cocycle", format!("height ≤ {height}"));
    for a in &weights {
        for b in &weights {
            let lhs = inst.g_refine(a)?.mul(&inst.g_refine(b)?).mul(&inst.xi(b, a)?);
            let ok = lhs == inst.g_refine(&(a + b))?;
            t.absorb(vec![outcome(ok, || format!("ν₁ = {a}, ν₂ = {b}"))]);
        }
    }
    t.push_to(&mut rep);
    if let Some(p) = crate::datum::preset(&inst.label) {
        let mut t = Tally::new(
            "pairing.g-closed-form",
            format!("{} preset, height ≤ {height}", p.name()),
        );
        for a in &weights {
            let ok = p.g_closed_form(inst, a).as_ref() == Some(&inst.g_refine(a)?);
            t.absorb(vec![outcome(ok, || format!("ν = {a}"))]);
        }
        t.push_to(&mut rep);
    }
    Ok(rep)
}
