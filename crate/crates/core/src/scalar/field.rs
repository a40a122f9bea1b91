use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};

use super::domain::{DomainPoly, Split};
use super::monomial::Monomial;
use super::param::Param;
use super::poly::LaurentPoly;
use crate::{Error, Result};

/// Element of the ground field: a quotient of Laurent polynomials.
///
/// Kept unreduced apart from two normalizations of the denominator: its
/// monomial content is moved into the numerator and its leading coefficient
/// is made `1`. Equality is decided by cross-multiplication.
#[derive(Clone)]
pub struct FieldElem {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl FieldElem {
    pub fn zero() -> Self {
        FieldElem {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_rational(c: BigRational) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        FieldElem {
            num,
            den: LaurentPoly::one(),
        }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(LaurentPoly::monomial(m))
    }

    pub fn param(p: Param) -> Self {
        Self::from_poly(LaurentPoly::var(p))
    }

    /// `p^e`.
    pub fn param_pow(p: Param, e: Rational64) -> Self {
        Self::from_poly(LaurentPoly::var_pow(p, e))
    }

    /// `num / den`; fails when `den` is zero or a zero divisor.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if is_zero_divisor(&den) {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        if den.is_one() {
            return FieldElem { num, den };
        }
        let (mut num, mut den) = (num, den);
        let content = den.monomial_content();
        if !content.is_one() {
            let (ci, neg) = content.inv();
            let c = if neg { -BigRational::one() } else { BigRational::one() };
            num = num.mul_term(&ci, &c);
            den = den.mul_term(&ci, &c);
        }
        let lc = den.leading().expect("nonzero denominator").1.clone();
        if !lc.is_one() {
            let inv = lc.recip();
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        FieldElem { num, den }
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &FieldElem::one()
    }

    /// The value as a Laurent polynomial when the denominator is `1`.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn add(&self, o: &FieldElem) -> FieldElem {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            let num = self.num.add(&o.num);
            if num.is_zero() {
                return Self::zero();
            }
            return FieldElem {
                num,
                den: self.den.clone(),
            };
        }
        let num = self.num.mul(&o.den).add(&o.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&o.den))
    }

    pub fn neg(&self) -> FieldElem {
        FieldElem {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &FieldElem) -> FieldElem {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &FieldElem) -> FieldElem {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if o.den.is_one() && self.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        Self::normalized(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    /// Multiplies by the unit `c·m`.
    pub fn mul_term(&self, m: &Monomial, c: &BigRational) -> FieldElem {
        if self.is_zero() {
            return Self::zero();
        }
        FieldElem {
            num: self.num.mul_term(m, c),
            den: self.den.clone(),
        }
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> FieldElem {
        Self::normalized(self.num.mul(p), self.den.clone())
    }

    pub fn scale(&self, c: &BigRational) -> FieldElem {
        if c.is_zero() {
            return Self::zero();
        }
        FieldElem {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
    }

    pub fn inv(&self) -> Result<FieldElem> {
        if is_zero_divisor(&self.num) {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, o: &FieldElem) -> Result<FieldElem> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn pow(&self, k: i64) -> Result<FieldElem> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs() as u32;
        Ok(Self::normalized(base.num.pow(k), base.den.pow(k)))
    }

    /// Cancels the denominator when it divides the numerator exactly.
    pub fn simplify(&self) -> FieldElem {
        if self.den.is_one() || self.num.is_zero() {
            return self.clone();
        }
        let mut params = self.num.params();
        params.extend(self.den.params());
        let splits = Split::enumerate(&params);
        if splits.len() != 1 {
            return self.clone();
        }
        let s = &splits[0];
        let n = DomainPoly::from_laurent(&self.num, s);
        let d = DomainPoly::from_laurent(&self.den, s);
        match n.div_exact(&d) {
            Some(q) => Self::from_poly(q.to_laurent(s)),
            None => self.clone(),
        }
    }

    pub fn params(&self) -> Vec<Param> {
        let mut ps = self.num.params();
        ps.extend(self.den.params());
        ps.sort();
        ps.dedup();
        ps
    }
}

/// True when `p` vanishes in some factor of the torsion splitting.
pub fn is_zero_divisor(p: &LaurentPoly) -> bool {
    if p.is_zero() {
        return true;
    }
    if !p.has_torsion() {
        return false;
    }
    Split::enumerate(&p.params())
        .iter()
        .any(|s| DomainPoly::from_laurent(p, s).is_zero())
}

impl PartialEq for FieldElem {
    fn eq(&self, o: &Self) -> bool {
        if self.den == o.den {
            return self.num == o.num;
        }
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl Eq for FieldElem {}

impl Default for FieldElem {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<'a> Add<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        FieldElem::add(self, o)
    }
}

impl<'a> Sub<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        FieldElem::sub(self, o)
    }
}

impl<'a> Mul<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        FieldElem::mul(self, o)
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v() -> FieldElem {
        FieldElem::param(Param::free("v"))
    }

    #[test]
    fn common_denominator_sum() {
        let x = v().add(&v().inv().unwrap());
        let v2 = FieldElem::param_pow(Param::free("v"), Rational64::from(2));
        let expected = v2.add(&FieldElem::one()).div(&v()).unwrap();
        assert_eq!(x, expected);
        assert_eq!(x.to_string(), "v + v^-1");
    }

    #[test]
    fn imaginary_unit_squares_to_minus_one() {
        let i = FieldElem::param(Param::torsion("i", -1));
        assert_eq!(i.mul(&i), FieldElem::from_int(-1));
    }

    #[test]
    fn cross_multiplication_identity() {
        let one = FieldElem::one();
        let num = v().mul(&v()).sub(&one);
        let lhs = num.div(&v().add(&one)).unwrap();
        assert!(lhs.sub(&v().sub(&one)).is_zero());
    }

    #[test]
    fn inverting_zero_fails() {
        assert_eq!(FieldElem::zero().inv().unwrap_err(), Error::DivisionByZero);
        let h = FieldElem::param(Param::torsion("h", 1));
        let zd = FieldElem::one().add(&h);
        assert_eq!(zd.inv().unwrap_err(), Error::DivisionByZero);
        let i = FieldElem::param(Param::torsion("i", -1));
        assert!(FieldElem::one().add(&i).inv().is_ok());
    }

    #[test]
    fn denominators_are_monic_and_content_free() {
        let t = FieldElem::param(Param::free("t"));
        let den = v().scale(&BigRational::from_integer(3.into())).mul(&t).add(&v());
        let x = FieldElem::one().div(&den).unwrap();
        let (lm, lc) = x.denom().leading().unwrap();
        assert!(lc.is_one());
        assert!(x.denom().monomial_content().is_one());
        assert!(!lm.is_one() || x.denom().len() == 1);
    }

    #[test]
    fn simplify_cancels_exact_quotients() {
        let one = FieldElem::one();
        let x = v().mul(&v()).sub(&one).div(&v().sub(&one)).unwrap();
        let s = x.simplify();
        assert!(s.denom().is_one());
        assert_eq!(s, v().add(&one));
    }
}
