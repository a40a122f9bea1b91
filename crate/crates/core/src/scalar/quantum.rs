use num_rational::BigRational;
use num_traits::One;

use super::field::FieldElem;
use super::monomial::Monomial;
use super::poly::LaurentPoly;
use crate::{Error, Result};

fn check_nondegenerate(c: &Monomial) -> Result<()> {
    let (sq, neg) = c.mul(c);
    if sq.is_one() && !neg {
        return Err(Error::DegenerateQuantumParameter(c.to_string()));
    }
    Ok(())
}

/// Balanced quantum integer `[n]_c = c^(n-1) + c^(n-3) + ... + c^(1-n)`.
pub fn quantum_int_poly(n: u32, c: &Monomial) -> Result<LaurentPoly> {
    check_nondegenerate(c)?;
    let terms = (0..n as i64).map(|k| {
        let (m, neg) = c.pow(n as i64 - 1 - 2 * k);
        (m, if neg { -BigRational::one() } else { BigRational::one() })
    });
    Ok(LaurentPoly::from_terms(terms))
}

pub fn quantum_int(n: u32, c: &Monomial) -> Result<FieldElem> {
    quantum_int_poly(n, c).map(FieldElem::from_poly)
}

pub fn quantum_factorial_poly(n: u32, c: &Monomial) -> Result<LaurentPoly> {
    check_nondegenerate(c)?;
    let mut acc = LaurentPoly::one();
    for k in 1..=n {
        acc = acc.mul(&quantum_int_poly(k, c)?);
    }
    Ok(acc)
}

pub fn quantum_factorial(n: u32, c: &Monomial) -> Result<FieldElem> {
    quantum_factorial_poly(n, c).map(FieldElem::from_poly)
}

/// Balanced quantum binomial, computed with the recursion
/// `[n, k] = c^k [n-1, k] + c^(k-n) [n-1, k-1]`, so the result is a Laurent
/// polynomial.
pub fn quantum_binom_poly(n: u32, k: u32, c: &Monomial) -> Result<LaurentPoly> {
    check_nondegenerate(c)?;
    if k > n {
        return Err(Error::invalid(format!("binomial [{n}, {k}] with k > n")));
    }
    // Pascal triangle row by row.
    let mut row = vec![LaurentPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let left = if j < m {
                let (cm, neg) = c.pow(j as i64);
                row[j as usize].mul_term(&cm, &sign(neg))
            } else {
                LaurentPoly::zero()
            };
            let right = if j > 0 {
                let (cm, neg) = c.pow(j as i64 - m as i64);
                row[j as usize - 1].mul_term(&cm, &sign(neg))
            } else {
                LaurentPoly::zero()
            };
            next.push(left.add(&right));
        }
        row = next;
    }
    Ok(row.swap_remove(k as usize))
}

pub fn quantum_binom(n: u32, k: u32, c: &Monomial) -> Result<FieldElem> {
    quantum_binom_poly(n, k, c).map(FieldElem::from_poly)
}

fn sign(neg: bool) -> BigRational {
    if neg {
        -BigRational::one()
    } else {
        BigRational::one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Param;
    use num_rational::Rational64;

    fn v() -> Monomial {
        Monomial::var(Param::free("v"))
    }

    fn vp(e: i64) -> FieldElem {
        FieldElem::param_pow(Param::free("v"), Rational64::from(e))
    }

    #[test]
    fn small_quantum_integers() {
        assert_eq!(quantum_int(2, &v()).unwrap(), vp(1).add(&vp(-1)));
        assert!(quantum_int(0, &v()).unwrap().is_zero());
        assert_eq!(quantum_int(1, &v()).unwrap(), FieldElem::one());
    }

    #[test]
    fn binomial_matches_factorial_quotient() {
        // Oracle: [3]! / ([1]! [2]!) with field division.
        let f = |n| quantum_factorial(n, &v()).unwrap();
        let oracle = f(3).div(&f(1).mul(&f(2))).unwrap();
        let b = quantum_binom(3, 1, &v()).unwrap();
        assert_eq!(b, oracle);
        assert_eq!(b, vp(2).add(&FieldElem::one()).add(&vp(-2)));
        assert!(b.denom().is_one());
    }

    #[test]
    fn degenerate_parameters_are_rejected() {
        let h = Monomial::var(Param::torsion("h", 1));
        assert!(matches!(quantum_int(2, &h), Err(Error::DegenerateQuantumParameter(_))));
        assert!(quantum_int(2, &Monomial::one()).is_err());
        // i is not its own inverse.
        let i = Monomial::var(Param::torsion("i", -1));
        assert!(quantum_int(2, &i).unwrap().is_zero());
    }

    #[test]
    fn binomial_out_of_range() {
        assert!(quantum_binom(2, 3, &v()).is_err());
    }
}
