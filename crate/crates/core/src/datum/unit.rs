use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Signed, Zero};

use crate::scalar::{FieldElem, LaurentPoly, Monomial, Param};

/// Invertible monomial value: a nonzero rational times a monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Unit {
    coef: BigRational,
    mono: Monomial,
}

impl Unit {
    pub fn one() -> Self {
        Unit {
            coef: BigRational::one(),
            mono: Monomial::one(),
        }
    }

    pub fn new(coef: BigRational, mono: Monomial) -> Self {
        assert!(!coef.is_zero(), "a unit needs a nonzero coefficient");
        Unit { coef, mono }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(BigRational::from_integer(n.into()), Monomial::one())
    }

    pub fn param_pow(p: Param, e: Rational64) -> Self {
        let (m, neg) = Monomial::from_pairs([(p, e)]);
        Unit::one().with_sign(neg).mul(&Unit::new(BigRational::one(), m))
    }

    pub fn param_int(p: Param, e: i64) -> Self {
        Self::param_pow(p, Rational64::from_integer(e))
    }

    /// Reads a single-term field element back as a unit.
    pub fn from_field(x: &FieldElem) -> Option<Self> {
        let (m, c) = x.as_poly()?.as_term()?;
        Some(Unit::new(c.clone(), m.clone()))
    }

    pub fn coef(&self) -> &BigRational {
        &self.coef
    }

    pub fn mono(&self) -> &Monomial {
        &self.mono
    }

    pub fn is_one(&self) -> bool {
        self.coef.is_one() && self.mono.is_one()
    }

    fn with_sign(mut self, neg: bool) -> Self {
        if neg {
            self.coef = -self.coef;
        }
        self
    }

    pub fn neg(&self) -> Unit {
        self.clone().with_sign(true)
    }

    pub fn mul(&self, o: &Unit) -> Unit {
        let (m, neg) = self.mono.mul(&o.mono);
        Unit {
            coef: &self.coef * &o.coef,
            mono: m,
        }
        .with_sign(neg)
    }

    pub fn inv(&self) -> Unit {
        self.pow(-1)
    }

    pub fn div(&self, o: &Unit) -> Unit {
        self.mul(&o.inv())
    }

    pub fn pow(&self, k: i64) -> Unit {
        if k == 0 {
            return Unit::one();
        }
        let (m, neg) = self.mono.pow(k);
        let c = self.coef.pow(k.unsigned_abs() as i32);
        let c = if k < 0 { c.recip() } else { c };
        Unit { coef: c, mono: m }.with_sign(neg)
    }

    /// `self^k` for rational `k`. Defined when the coefficient's root is
    /// rational (up to sign, which needs `imag`, a square root of `-1`) and no
    /// torsion exponent becomes fractional. Takes the branch whose
    /// coefficient is positive, or `imag` times a positive rational.
    pub fn pow_rational(&self, k: Rational64, imag: Option<Param>) -> Option<Unit> {
        if k.is_integer() {
            return Some(self.pow(k.to_integer()));
        }
        let (mono, neg_m) = self.mono.pow_rational(k)?;
        let (n, d) = (*k.numer(), *k.denom());
        let mut c = self.coef.clone();
        let mut extra = Unit::one();
        if c.is_negative() {
            if d != 2 {
                return None;
            }
            c = -c;
            extra = Unit::param_int(imag?, n);
        }
        let root = |x: &BigInt| -> Option<BigInt> {
            let r = x.nth_root(d as u32);
            (r.pow(d as u32) == *x).then_some(r)
        };
        let r = BigRational::new(root(c.numer())?, root(c.denom())?);
        let r = if n < 0 { r.recip() } else { r };
        let r = r.pow(n.unsigned_abs() as i32);
        Some(Unit { coef: r, mono }.with_sign(neg_m).mul(&extra))
    }

    /// `x · self`.
    pub fn scale(&self, x: &FieldElem) -> FieldElem {
        x.mul_term(&self.mono, &self.coef)
    }

    pub fn to_field(&self) -> FieldElem {
        FieldElem::from_poly(self.to_poly())
    }

    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::term(self.mono.clone(), self.coef.clone())
    }
}

impl fmt::Display for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for Unit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
