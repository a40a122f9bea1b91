use std::cmp::Ordering;
use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::param::Param;

/// Product of parameters raised to rational exponents.
///
/// Entries are sorted by parameter and never carry a zero exponent. Torsion
/// parameters only ever appear with exponent `1`; the sign produced by
/// reducing `x^2` is returned separately by the arithmetic methods.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(Param, Rational64); 4]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(p: Param) -> Self {
        Monomial::from_pairs([(p, Rational64::one())]).0
    }

    /// Builds a monomial from arbitrary `(param, exponent)` pairs. The second
    /// component is `true` when torsion reduction produced a factor `-1`.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (Param, Rational64)>) -> (Self, bool) {
        let mut acc = Monomial::one();
        let mut neg = false;
        for (p, e) in pairs {
            let (m, n) = Monomial::pow_param(p, e);
            let (prod, n2) = acc.mul(&m);
            acc = prod;
            neg ^= n ^ n2;
        }
        (acc, neg)
    }

    fn pow_param(p: Param, e: Rational64) -> (Self, bool) {
        if e.is_zero() {
            return (Monomial::one(), false);
        }
        match p.torsion_square() {
            None => {
                let mut v = SmallVec::new();
                v.push((p, e));
                (Monomial(v), false)
            }
            Some(square) => {
                assert!(e.is_integer(), "torsion parameter {p} with fractional exponent");
                let k = e.to_integer();
                let r = k.rem_euclid(2);
                let q = (k - r) / 2;
                let neg = square == -1 && q.rem_euclid(2) == 1;
                let mut v = SmallVec::new();
                if r == 1 {
                    v.push((p, Rational64::one()));
                }
                (Monomial(v), neg)
            }
        }
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Param, Rational64)> + '_ {
        self.0.iter().copied()
    }

    pub fn exponent(&self, p: Param) -> Rational64 {
        self.0
            .iter()
            .find(|(q, _)| *q == p)
            .map(|(_, e)| *e)
            .unwrap_or_else(Rational64::zero)
    }

    pub fn has_torsion(&self) -> bool {
        self.0.iter().any(|(p, _)| p.is_torsion())
    }

    /// Splits into the free part and the torsion part.
    pub fn split_torsion(&self) -> (Monomial, Monomial) {
        let mut free = SmallVec::new();
        let mut tors = SmallVec::new();
        for &(p, e) in &self.0 {
            if p.is_torsion() {
                tors.push((p, e));
            } else {
                free.push((p, e));
            }
        }
        (Monomial(free), Monomial(tors))
    }

    pub fn mul(&self, other: &Monomial) -> (Monomial, bool) {
        let mut out: SmallVec<[(Param, Rational64); 4]> = SmallVec::new();
        let mut neg = false;
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                Ordering::Equal => {
                    let p = a[i].0;
                    match p.torsion_square() {
                        Some(square) => {
                            // x * x = square
                            if square == -1 {
                                neg = !neg;
                            }
                        }
                        None => {
                            let e = a[i].1 + b[j].1;
                            if !e.is_zero() {
                                out.push((p, e));
                            }
                        }
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        (Monomial(out), neg)
    }

    pub fn inv(&self) -> (Monomial, bool) {
        self.pow(-1)
    }

    pub fn pow(&self, k: i64) -> (Monomial, bool) {
        self.pow_rational(Rational64::from_integer(k))
            .expect("integer powers are always defined")
    }

    /// Raises to a rational power. Fails when a torsion exponent would become
    /// fractional.
    pub fn pow_rational(&self, k: Rational64) -> Option<(Monomial, bool)> {
        let mut pairs = Vec::with_capacity(self.0.len());
        for &(p, e) in &self.0 {
            let ne = e * k;
            if p.is_torsion() && !ne.is_integer() {
                return None;
            }
            pairs.push((p, ne));
        }
        Some(Monomial::from_pairs(pairs))
    }

    /// Largest exponent denominator among the free parameters.
    pub fn max_denom(&self) -> i64 {
        self.0.iter().map(|(_, e)| *e.denom()).max().unwrap_or(1)
    }

    /// Componentwise minimum over free parameters (absent counts as zero).
    /// Torsion parameters are kept only when present in both.
    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = SmallVec::new();
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                _ => Ordering::Greater,
            };
            match ord {
                Ordering::Less => {
                    if !a[i].0.is_torsion() && a[i].1.is_negative() {
                        out.push(a[i]);
                    }
                    i += 1;
                }
                Ordering::Greater => {
                    if !b[j].0.is_torsion() && b[j].1.is_negative() {
                        out.push(b[j]);
                    }
                    j += 1;
                }
                Ordering::Equal => {
                    let e = a[i].1.min(b[j].1);
                    if !e.is_zero() {
                        out.push((a[i].0, e));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Monomial(out)
    }
}

impl Ord for Monomial {
    /// Lexicographic on exponent vectors, parameters taken in ascending order.
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let zero = Rational64::zero();
        loop {
            let (p, x, y) = match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(l), None) => (l.0, l.1, zero),
                (None, Some(r)) => (r.0, zero, r.1),
                (Some(l), Some(r)) => match l.0.cmp(&r.0) {
                    Ordering::Less => (l.0, l.1, zero),
                    Ordering::Greater => (r.0, zero, r.1),
                    Ordering::Equal => (l.0, l.1, r.1),
                },
            };
            match x.cmp(&y) {
                Ordering::Equal => {}
                ord => return ord,
            }
            if a.get(i).map(|l| l.0) == Some(p) {
                i += 1;
            }
            if b.get(j).map(|r| r.0) == Some(p) {
                j += 1;
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub(crate) fn fmt_exponent(e: &Rational64) -> String {
    if e.is_integer() {
        e.numer().to_string()
    } else {
        format!("{}/{}", e.numer(), e.denom())
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (p, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e.is_one() {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{}", fmt_exponent(e))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn torsion_minus_one_squares_to_sign() {
        let i = Param::torsion("i", -1);
        let m = Monomial::var(i);
        let (sq, neg) = m.mul(&m);
        assert!(sq.is_one());
        assert!(neg);
        let (inv, neg) = m.inv();
        assert_eq!(inv, m);
        assert!(neg);
    }

    #[test]
    fn torsion_plus_one_is_an_involution() {
        let h = Param::torsion("h", 1);
        let m = Monomial::var(h);
        assert_eq!(m.mul(&m), (Monomial::one(), false));
        assert_eq!(m.pow(-3), (m.clone(), false));
    }

    #[test]
    fn order_is_lexicographic_and_multiplicative() {
        let v = Param::free("v");
        let t = Param::free("t");
        let a = Monomial::from_pairs([(t, r(1, 1))]).0;
        let b = Monomial::from_pairs([(v, r(5, 1))]).0;
        // t < v by name, so t decides first.
        assert!(a > b);
        let c = Monomial::from_pairs([(v, r(-1, 2))]).0;
        assert!(a.mul(&c).0 > b.mul(&c).0);
    }

    #[test]
    fn gcd_takes_minimum_with_absent_as_zero() {
        let v = Param::free("v");
        let t = Param::free("t");
        let a = Monomial::from_pairs([(v, r(-2, 1)), (t, r(3, 1))]).0;
        let b = Monomial::from_pairs([(v, r(1, 1))]).0;
        let g = a.gcd(&b);
        assert_eq!(g, Monomial::from_pairs([(v, r(-2, 1))]).0);
    }
}
