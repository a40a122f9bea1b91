//! The star product `x ∗ y = γ(|x|,|y|) xy` and a finite certificate that
//! `θ_i ↦ θ_i` identifies `(𝔣_β, ∗)` with the undeformed algebra.

use std::collections::BTreeMap;

use crate::datum::{AlgebraInstance, CartanDatum, FormTable, Unit, Weight};
use crate::form::Form;
use crate::freealg::{serre_element, vi_binom, vi_factorial, FreeElem, Word};
use crate::report::Report;
use crate::scalar::FieldElem;
use crate::{Error, Result};

/// Same datum, every form table trivial.
pub fn reference_instance(datum: &CartanDatum) -> AlgebraInstance {
    AlgebraInstance::reference(datum)
}

/// `γ(|x|,|y|) xy`, taken componentwise on non-homogeneous inputs.
pub fn star_mul(x: &FreeElem, y: &FreeElem, inst: &AlgebraInstance) -> Result<FreeElem> {
    let gamma = inst.gamma_table()?;
    let n = inst.rank();
    let mut out = FreeElem::zero();
    for (nx, cx) in x.components(n) {
        for (ny, cy) in y.components(n) {
            out = out.add(&cx.mul(&cy).scale_unit(&gamma.eval(&nx, &ny)));
        }
    }
    Ok(out)
}

/// `∏_{a<b} γ(w_a, w_b)`: the star product of the letters of `w` is this
/// factor times `w`.
pub fn star_factor(w: &Word, gamma: &FormTable) -> Unit {
    let ls: Vec<usize> = w.letters().collect();
    let mut u = Unit::one();
    for a in 0..ls.len() {
        for b in a + 1..ls.len() {
            u = u.mul(gamma.get(ls[a], ls[b]));
        }
    }
    u
}

/// Images of the star monomials under `θ_i ↦ θ_i`: `w ↦ star_factor(w)⁻¹ w`.
pub fn to_reference(x: &FreeElem, gamma: &FormTable) -> FreeElem {
    let mut out = FreeElem::zero();
    for (w, c) in x.terms() {
        out.add_term(w.clone(), star_factor(w, gamma).inv().scale(c));
    }
    out
}

/// Products of quotient-basis words, expanded in a chosen basis of the
/// target weight.
#[derive(Clone, Debug, Default)]
pub struct StructureConstants {
    pub entries: BTreeMap<(Word, Word), Vec<FieldElem>>,
}

/// Solves `cols · x = rhs` for a square system over the field; `None` when
/// no invertible pivot is available.
fn solve(cols: &[Vec<FieldElem>], rhs: &[FieldElem]) -> Option<Vec<FieldElem>> {
    let n = cols.len();
    // Augmented rows: row r = (cols[0][r], ..., cols[n-1][r] | rhs[r]).
    let mut a: Vec<Vec<FieldElem>> = (0..n)
        .map(|r| (0..n).map(|c| cols[c][r].clone()).chain([rhs[r].clone()]).collect())
        .collect();
    for c in 0..n {
        let (p, inv) = (c..n).find_map(|p| a[p][c].inv().ok().map(|i| (p, i)))?;
        a.swap(c, p);
        let row: Vec<FieldElem> = a[c].iter().map(|x| x.mul(&inv).simplify()).collect();
        a[c] = row;
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let new: Vec<FieldElem> = (0..=n).map(|k| a[r][k].sub(&f.mul(&a[c][k])).simplify()).collect();
                a[r] = new;
            }
        }
    }
    Some(a.into_iter().map(|r| r[n].clone()).collect())
}

fn coords(x: &FreeElem, basis: &[Word]) -> Vec<FieldElem> {
    basis.iter().map(|b| x.coeff(b)).collect()
}

/// Checks `(𝔣_β, ∗) ≅ 𝐟 ⊗ 𝔽` degree by degree up to `height_bound`:
/// equal graded dimensions, equal structure constants in the reference's
/// quotient basis, and that the γ-rescaled Serre elements vanish and map to
/// the undeformed ones.
pub fn verify_twist_iso(inst: &AlgebraInstance, height_bound: i64) -> Result<Report> {
    let gamma = inst.gamma_table()?.clone();
    let n = inst.rank();
    let reference = reference_instance(&inst.datum);
    let form = Form::new(inst).with_height_bound(height_bound);
    let rform = Form::new(&reference).with_height_bound(height_bound);
    let mut rep = Report::new();

    let mut weights = Vec::new();
    for h in 1..=height_bound {
        weights.extend(Weight::of_height(n, h));
    }
    let mut same_dims = BTreeMap::new();
    for nu in &weights {
        let (d, dr) = (form.graded_dim(nu)?, rform.graded_dim(nu)?);
        rep.push("twist.dim", d == dr, format!("{nu}: {d} vs reference {dr}"));
        same_dims.insert(nu.clone(), d == dr);
    }

    // Instance coordinates of a star monomial over the star images of the
    // reference basis.
    let star_coords = |u: &Word, basis: &[Word]| -> Result<Option<Vec<FieldElem>>> {
        let g = form.gram(&u.weight(n))?;
        let q = &g.quotient_basis;
        let target = g.reduce_word(u).scale_unit(&star_factor(u, &gamma));
        let cols: Vec<Vec<FieldElem>> = basis
            .iter()
            .map(|b| coords(&g.reduce_word(b).scale_unit(&star_factor(b, &gamma)), q))
            .collect();
        Ok(solve(&cols, &coords(&target, q)))
    };

    for nu1 in &weights {
        for nu2 in &weights {
            let nu = nu1 + nu2;
            if nu.height() > height_bound || !same_dims[&nu] || !same_dims[nu1] || !same_dims[nu2] {
                continue;
            }
            let rb = rform.gram(&nu)?.quotient_basis.clone();
            let (b1, b2) = (rform.gram(nu1)?, rform.gram(nu2)?);
            let mut bad = Vec::new();
            for w1 in &b1.quotient_basis {
                for w2 in &b2.quotient_basis {
                    let u = w1.concat(w2);
                    let want = coords(&rform.normal_form(&FreeElem::word(u.clone()))?, &rb);
                    match star_coords(&u, &rb)? {
                        Some(got) if got == want => {}
                        Some(got) => {
                            let k = (0..rb.len()).find(|&k| got[k] != want[k]).unwrap_or(0);
                            bad.push(format!("{w1}*{w2} at {}: {} vs {}", rb[k], got[k], want[k]));
                        }
                        None => bad.push(format!("{w1}*{w2}: reference basis is dependent")),
                    }
                }
            }
            let detail = if bad.is_empty() {
                format!("{nu1} x {nu2}")
            } else {
                format!("{nu1} x {nu2}: {}", bad.join("; "))
            };
            rep.push("twist.structure", bad.is_empty(), detail);
        }
    }

    for i in 0..n {
        for j in 0..n {
            if i == j {
                continue;
            }
            let m = (1 - inst.datum.a(i, j)) as u32;
            if m as i64 + 1 > height_bound {
                continue;
            }
            let d_star = twisted_serre(i, j, inst)?;
            let vanishes = form.normal_form(&d_star)?.is_zero();
            let image = to_reference(&d_star, &gamma);
            let expect = serre_element(i, j, &reference)?.scale(&vi_factorial(i, m, inst));
            let maps = image == expect;
            rep.push(
                "twist.serre",
                vanishes && maps,
                format!(
                    "{}: {} in the radical, {} to the reference relation",
                    inst.pair_label(i, j),
                    if vanishes { "lies" } else { "does not lie" },
                    if maps { "maps" } else { "does not map" }
                ),
            );
        }
    }
    Ok(rep)
}

/// `D'_ij = Σ_{k+k'=1-a_ij} (-1)^k [1-a_ij, k]_{v_i} θ_i^{∗k} ∗ θ_j ∗ θ_i^{∗k'}`.
pub fn twisted_serre(i: usize, j: usize, inst: &AlgebraInstance) -> Result<FreeElem> {
    if i == j {
        return Err(Error::invalid("the Serre element needs two distinct indices"));
    }
    let m = (1 - inst.datum.a(i, j)) as u32;
    let star_pow = |k: u32| -> Result<FreeElem> {
        let mut acc = FreeElem::one();
        for _ in 0..k {
            acc = star_mul(&acc, &FreeElem::letter(i), inst)?;
        }
        Ok(acc)
    };
    let mut out = FreeElem::zero();
    for k in 0..=m {
        let t = star_mul(
            &star_mul(&star_pow(k)?, &FreeElem::letter(j), inst)?,
            &star_pow(m - k)?,
            inst,
        )?;
        let mut c = vi_binom(i, m, k, inst);
        if k % 2 == 1 {
            c = c.neg();
        }
        out = out.add(&t.scale(&c));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn star_of_generators() {
        let inst = catalog::load("a2-two-parameter").unwrap();
        let g = inst.gamma_table().unwrap().get(0, 1).clone();
        let got = star_mul(&FreeElem::letter(0), &FreeElem::letter(1), &inst).unwrap();
        assert_eq!(got, FreeElem::word(Word::from_letters(&[0, 1])).scale_unit(&g));
    }

    #[test]
    fn trivial_gamma_is_the_free_product() {
        let inst = reference_instance(&catalog::load("b2-super").unwrap().datum);
        let x = FreeElem::word(Word::from_letters(&[0, 1]));
        let y = FreeElem::word(Word::from_letters(&[1, 1, 0]));
        assert_eq!(star_mul(&x, &y, &inst).unwrap(), x.mul(&y));
    }

    #[test]
    fn missing_gamma_is_a_config_error() {
        let mut inst = catalog::load("a2-two-parameter").unwrap();
        inst.gamma = None;
        let e = star_mul(&FreeElem::letter(0), &FreeElem::letter(1), &inst).unwrap_err();
        assert!(matches!(e, Error::Config(_)));
    }

    #[test]
    fn solve_inverts_a_small_system() {
        let v = FieldElem::param(crate::scalar::Param::free("v"));
        let one = FieldElem::one();
        let cols = vec![vec![v.clone(), one.clone()], vec![one.clone(), v.clone()]];
        let x = solve(&cols, &[one.clone(), FieldElem::zero()]).unwrap();
        // v x0 + x1 = 1, x0 + v x1 = 0
        assert_eq!(v.mul(&x[0]).add(&x[1]), one);
        assert!(x[0].add(&v.mul(&x[1])).is_zero());
    }
}
