//! Exact division and elimination support.
//!
//! Laurent polynomials with order-two torsion units do not form a domain
//! (`(1 + h)(1 - h) = 0` when `h^2 = 1`). The ring splits as a product of
//! domains, one per assignment of signs to the torsion parameters; in each
//! factor the torsion units become `±1` or `±i` and coefficients live in
//! `Q(i)`. Division and elimination run factor by factor and results are
//! recombined with the matching idempotents.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::monomial::Monomial;
use super::param::Param;
use super::poly::LaurentPoly;

/// Element of `Q(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn zero() -> Self {
        Gauss {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn real(re: BigRational) -> Self {
        Gauss {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn i() -> Self {
        Gauss {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Gauss) -> Gauss {
        Gauss {
            re: &self.re + &o.re,
            im: &self.im + &o.im,
        }
    }

    pub fn sub(&self, o: &Gauss) -> Gauss {
        Gauss {
            re: &self.re - &o.re,
            im: &self.im - &o.im,
        }
    }

    pub fn neg(&self) -> Gauss {
        Gauss {
            re: -&self.re,
            im: -&self.im,
        }
    }

    pub fn mul(&self, o: &Gauss) -> Gauss {
        if self.im.is_zero() && o.im.is_zero() {
            return Gauss::real(&self.re * &o.re);
        }
        Gauss {
            re: &self.re * &o.re - &self.im * &o.im,
            im: &self.re * &o.im + &self.im * &o.re,
        }
    }

    pub fn inv(&self) -> Gauss {
        if self.im.is_zero() {
            return Gauss::real(self.re.recip());
        }
        let n = &self.re * &self.re + &self.im * &self.im;
        Gauss {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }
}

/// One factor of the torsion splitting: a sign for every torsion parameter
/// except the representative imaginary unit, which stays symbolic as `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Split {
    pub signs: Vec<(Param, i8)>,
    pub imaginary: Option<Param>,
}

impl Split {
    /// All sign assignments for the torsion parameters among `params`.
    pub fn enumerate(params: &[Param]) -> Vec<Split> {
        let mut tors: Vec<Param> = params.iter().copied().filter(|p| p.is_torsion()).collect();
        tors.sort();
        tors.dedup();
        let imaginary = tors.iter().copied().find(|p| p.torsion_square() == Some(-1));
        let signed: Vec<Param> = tors.into_iter().filter(|p| Some(*p) != imaginary).collect();
        let n = signed.len();
        (0..(1usize << n))
            .map(|mask| Split {
                signs: signed
                    .iter()
                    .enumerate()
                    .map(|(k, p)| (*p, if mask >> k & 1 == 1 { -1 } else { 1 }))
                    .collect(),
                imaginary,
            })
            .collect()
    }

    fn sign_of(&self, p: Param) -> i8 {
        self.signs.iter().find(|(q, _)| *q == p).map(|(_, s)| *s).unwrap_or(1)
    }

    /// Image of a torsion monomial in `Q(i)`.
    fn eval_torsion(&self, tors: &Monomial) -> Gauss {
        let mut g = Gauss::real(BigRational::one());
        for (p, _) in tors.iter() {
            let s = BigRational::from_integer(BigInt::from(self.sign_of(p)));
            if Some(p) == self.imaginary {
                g = g.mul(&Gauss::i());
            } else if p.torsion_square() == Some(-1) {
                g = g.mul(&Gauss {
                    re: BigRational::zero(),
                    im: s,
                });
            } else {
                g = g.mul(&Gauss::real(s));
            }
        }
        g
    }

    /// Idempotent of the full ring projecting onto this factor.
    pub fn idempotent(&self) -> LaurentPoly {
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let mut e = LaurentPoly::one();
        for &(p, s) in &self.signs {
            let sign = BigRational::from_integer(BigInt::from(s));
            let factor = if p.torsion_square() == Some(-1) {
                // p = s * rep on this factor: (1 - s * p * rep) / 2
                let rep = self
                    .imaginary
                    .expect("a second imaginary unit implies a representative");
                let m = Monomial::var(p).mul(&Monomial::var(rep));
                LaurentPoly::one().sub(&LaurentPoly::term(m.0, if m.1 { -sign } else { sign }))
            } else {
                LaurentPoly::one().add(&LaurentPoly::term(Monomial::var(p), sign))
            };
            e = e.mul(&factor.scale(&half));
        }
        e
    }
}

/// Laurent polynomial over `Q(i)` in free parameters only.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DomainPoly {
    terms: Vec<(Monomial, Gauss)>,
}

impl DomainPoly {
    pub fn zero() -> Self {
        DomainPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        DomainPoly {
            terms: vec![(Monomial::one(), Gauss::real(BigRational::one()))],
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn from_map(acc: HashMap<Monomial, Gauss>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        DomainPoly { terms }
    }

    pub fn from_laurent(p: &LaurentPoly, split: &Split) -> Self {
        let mut acc: HashMap<Monomial, Gauss> = HashMap::new();
        for (m, c) in p.terms() {
            let (free, tors) = m.split_torsion();
            let g = split.eval_torsion(&tors).mul(&Gauss::real(c.clone()));
            let e = acc.entry(free).or_insert_with(Gauss::zero);
            *e = e.add(&g);
        }
        Self::from_map(acc)
    }

    pub fn to_laurent(&self, split: &Split) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() * 2);
        for (m, c) in &self.terms {
            if !c.re.is_zero() {
                out.push((m.clone(), c.re.clone()));
            }
            if !c.im.is_zero() {
                let rep = split
                    .imaginary
                    .expect("imaginary coefficient without an imaginary unit");
                out.push((m.mul(&Monomial::var(rep)).0, c.im.clone()));
            }
        }
        LaurentPoly::from_terms(out)
    }

    pub fn add(&self, other: &DomainPoly) -> DomainPoly {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &DomainPoly) -> DomainPoly {
        self.merge(other, true)
    }

    fn merge(&self, other: &DomainPoly, negate: bool) -> DomainPoly {
        let (a, b) = (&self.terms, &other.terms);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let nb = |c: &Gauss| if negate { c.neg() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((b[j].0.clone(), nb(&b[j].1)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        a[i].1.sub(&b[j].1)
                    } else {
                        a[i].1.add(&b[j].1)
                    };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), nb(c))));
        DomainPoly { terms: out }
    }

    fn mul_term(&self, m: &Monomial, c: &Gauss) -> DomainPoly {
        if c.is_zero() {
            return DomainPoly::zero();
        }
        DomainPoly {
            terms: self.terms.iter().map(|(x, k)| (x.mul(m).0, k.mul(c))).collect(),
        }
    }

    pub fn mul(&self, other: &DomainPoly) -> DomainPoly {
        if self.is_zero() || other.is_zero() {
            return DomainPoly::zero();
        }
        if other.terms.len() == 1 {
            return self.mul_term(&other.terms[0].0, &other.terms[0].1);
        }
        if self.terms.len() == 1 {
            return other.mul_term(&self.terms[0].0, &self.terms[0].1);
        }
        let mut acc: HashMap<Monomial, Gauss> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb).0;
                let c = ca.mul(cb);
                match acc.get_mut(&m) {
                    Some(x) => *x = x.add(&c),
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        Self::from_map(acc)
    }

    /// Exact quotient `self / d`, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &DomainPoly) -> Option<DomainPoly> {
        assert!(!d.is_zero(), "exact division by zero");
        if self.is_zero() {
            return Some(DomainPoly::zero());
        }
        let (lm, lc) = &d.terms[0];
        let lc_inv = lc.inv();
        let lm_inv = lm.inv().0;
        if d.terms.len() == 1 {
            return Some(self.mul_term(&lm_inv, &lc_inv));
        }
        // Quotient monomials lie between lt(self)/lt(d) and tt(self)/tt(d).
        let floor = self.terms.last().unwrap().0.mul(&d.terms.last().unwrap().0.inv().0).0;
        let mut r = self.clone();
        let mut q = Vec::new();
        let limit = 4 * (self.terms.len() + 1) * (d.terms.len() + 1) + 64;
        while !r.is_zero() {
            if q.len() > limit {
                return None;
            }
            let (rm, rc) = &r.terms[0];
            let qm = rm.mul(&lm_inv).0;
            if qm < floor {
                return None;
            }
            let qc = rc.mul(&lc_inv);
            r = r.sub(&d.mul_term(&qm, &qc));
            q.push((qm, qc));
        }
        Some(DomainPoly { terms: q })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::Rational64;

    fn poly(terms: &[(i64, &[(Param, i64)])]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|(c, ms)| {
            let (m, neg) = Monomial::from_pairs(ms.iter().map(|(p, e)| (*p, Rational64::from(*e))));
            let c = BigRational::from_integer(BigInt::from(*c));
            (m, if neg { -c } else { c })
        }))
    }

    #[test]
    fn exact_division_recovers_factor() {
        let v = Param::free("v");
        let t = Param::free("t");
        let a = poly(&[(1, &[(v, 2)]), (-1, &[(t, -1)])]);
        let b = poly(&[(3, &[(v, 1), (t, 1)]), (1, &[]), (2, &[(v, -3)])]);
        let split = &Split::enumerate(&[])[0];
        let da = DomainPoly::from_laurent(&a, split);
        let db = DomainPoly::from_laurent(&b, split);
        let prod = da.mul(&db);
        assert_eq!(prod.div_exact(&da).unwrap(), db);
        assert_eq!(prod.div_exact(&db).unwrap(), da);
        let c = poly(&[(1, &[(v, 1)]), (1, &[])]);
        assert!(DomainPoly::from_laurent(&c, split).div_exact(&da).is_none());
    }

    #[test]
    fn splitting_separates_zero_divisors() {
        let h = Param::torsion("h", 1);
        let one_plus_h = poly(&[(1, &[]), (1, &[(h, 1)])]);
        let splits = Split::enumerate(&[h]);
        assert_eq!(splits.len(), 2);
        let zeros = splits
            .iter()
            .filter(|s| DomainPoly::from_laurent(&one_plus_h, s).is_zero())
            .count();
        assert_eq!(zeros, 1);
        let sum = splits
            .iter()
            .fold(LaurentPoly::zero(), |acc, s| acc.add(&s.idempotent()));
        assert!(sum.is_one());
    }

    #[test]
    fn imaginary_units_map_into_gaussian_rationals() {
        let i = Param::torsion("i", -1);
        let j = Param::torsion("j", -1);
        let splits = Split::enumerate(&[i, j]);
        assert_eq!(splits.len(), 2);
        for s in &splits {
            let e = s.idempotent();
            // e is idempotent in the full ring.
            assert_eq!(e.mul(&e), e);
            let p = poly(&[(1, &[(j, 1)]), (2, &[(i, 1)])]);
            let d = DomainPoly::from_laurent(&p, s);
            let back = d.to_laurent(s);
            assert_eq!(back.mul(&e), p.mul(&e));
        }
    }
}
