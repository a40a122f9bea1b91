//! Fraction-free elimination of Gram blocks.
//!
//! Entries live in a Laurent polynomial ring that may contain torsion
//! parameters and hence zero divisors. The ring splits into a product of
//! domains (one per sign pattern of the torsion parameters); each factor is
//! eliminated separately with Bareiss-style Gauss–Jordan steps and the
//! results are glued back with the splitting idempotents.

use std::collections::BTreeMap;

use crate::scalar::{DomainPoly, FieldElem, LaurentPoly, Param, Split};
use crate::{Error, Result};

/// Echelon data of a matrix: pivot columns in increasing order, and for each
/// non-pivot column `f` the coefficients `c_p` with
/// `col_f = Σ_p c_p col_{pivot p}` on the column space.
#[derive(Clone, Debug)]
pub struct ColumnRelations {
    pub pivots: Vec<usize>,
    pub relations: BTreeMap<usize, Vec<FieldElem>>,
}

struct SplitEchelon {
    pivots: Vec<usize>,
    rows: Vec<Vec<DomainPoly>>,
}

fn echelon(mut a: Vec<Vec<DomainPoly>>) -> SplitEchelon {
    let nrows = a.len();
    let ncols = a.first().map_or(0, |r| r.len());
    let mut prev = DomainPoly::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&p| !a[p][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let piv = a[r][c].clone();
        for i in 0..nrows {
            if i == r {
                continue;
            }
            let f = a[i][c].clone();
            let raw: Vec<DomainPoly> = (0..ncols)
                .map(|k| {
                    let x = piv.mul(&a[i][k]);
                    if f.is_zero() || a[r][k].is_zero() {
                        x
                    } else {
                        x.sub(&f.mul(&a[r][k]))
                    }
                })
                .collect();
            // The quotient is exact in exact arithmetic; keep the undivided
            // row if it ever is not, which is still a valid row operation.
            let divided: Option<Vec<DomainPoly>> = raw.iter().map(|x| x.div_exact(&prev)).collect();
            a[i] = divided.unwrap_or(raw);
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    a.truncate(r);
    SplitEchelon { pivots, rows: a }
}

/// Column relations of a square or rectangular matrix over the parameter ring.
pub fn column_relations(m: &[Vec<LaurentPoly>], params: &[Param]) -> Result<ColumnRelations> {
    let ncols = m.first().map_or(0, |r| r.len());
    let splits = Split::enumerate(params);
    let mut per_split = Vec::with_capacity(splits.len());
    for s in &splits {
        let a: Vec<Vec<DomainPoly>> = m
            .iter()
            .map(|row| row.iter().map(|x| DomainPoly::from_laurent(x, s)).collect())
            .collect();
        per_split.push(echelon(a));
    }
    let pivots = per_split[0].pivots.clone();
    if per_split.iter().any(|e| e.pivots != pivots) {
        return Err(Error::invalid(
            "the torsion factors of the ground ring select different quotient bases",
        ));
    }
    let idem: Vec<LaurentPoly> = splits.iter().map(|s| s.idempotent()).collect();
    let single = splits.len() == 1;
    let mut relations = BTreeMap::new();
    for f in (0..ncols).filter(|f| !pivots.contains(f)) {
        let mut coeffs = Vec::with_capacity(pivots.len());
        for (p, &cp) in pivots.iter().enumerate() {
            let mut num = LaurentPoly::zero();
            let mut den = LaurentPoly::zero();
            for (k, (e, s)) in per_split.iter().zip(&splits).enumerate() {
                let n = e.rows[p][f].to_laurent(s);
                let d = e.rows[p][cp].to_laurent(s);
                if single {
                    num = n;
                    den = d;
                } else {
                    num = num.add(&idem[k].mul(&n));
                    den = den.add(&idem[k].mul(&d));
                }
            }
            let q = FieldElem::new(num, den)?;
            coeffs.push(if single { q.simplify() } else { q });
        }
        relations.insert(f, coeffs);
    }
    Ok(ColumnRelations { pivots, relations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Monomial;
    use num_bigint::BigInt;
    use num_rational::{BigRational, Rational64};

    fn lp(terms: &[(i64, i64)], v: Param) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(c, e)| {
            (
                Monomial::from_pairs([(v, Rational64::from(e))]).0,
                BigRational::from_integer(BigInt::from(c)),
            )
        }))
    }

    #[test]
    fn rank_one_block_has_one_relation() {
        let v = Param::free("v");
        let a = lp(&[(1, 1), (1, 0)], v);
        let b = lp(&[(2, 2)], v);
        // Second column is b/a times the first.
        let m = vec![vec![a.clone(), b.clone()], vec![a.mul(&a), a.mul(&b)]];
        let rel = column_relations(&m, &[v]).unwrap();
        assert_eq!(rel.pivots, vec![0]);
        let c = &rel.relations[&1][0];
        let expect = FieldElem::new(b, a).unwrap();
        assert_eq!(c, &expect);
    }

    #[test]
    fn torsion_factors_glue_back() {
        let h = Param::torsion("h", 1);
        let one = LaurentPoly::one();
        let hp = LaurentPoly::var(h);
        // Column 1 = h · column 0 in both factors.
        let m = vec![vec![one.clone(), hp.clone()], vec![hp.clone(), one.clone()]];
        let rel = column_relations(&m, &[h]).unwrap();
        assert_eq!(rel.pivots, vec![0]);
        assert_eq!(rel.relations[&1][0], FieldElem::param(h));
    }
}
