//! The smash products `'𝔣⁺ ⋊ 𝔥` and `'𝔣⁻ ⋊ 𝔥'` with their Hopf structures.
//!
//! Elements are stored in word-then-torus order: a monomial `x K_k J_j` on the
//! plus side, `y K'_k J'_j` on the minus side.

use std::fmt;

use super::chars::Chars;
use super::lin::Lin;
use crate::datum::{AlgebraInstance, Unit, Weight};
use crate::freealg::Word;
use crate::scalar::FieldElem;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    fn letter(self) -> &'static str {
        match self {
            Side::Plus => "E",
            Side::Minus => "F",
        }
    }

    fn torus_names(self) -> (&'static str, &'static str) {
        match self {
            Side::Plus => ("K", "J"),
            Side::Minus => ("K'", "J'"),
        }
    }
}

/// `word · K_k J_j` (plus) or `word · K'_k J'_j` (minus).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfMono {
    pub word: Word,
    pub k: Weight,
    pub j: Weight,
}

impl HalfMono {
    pub fn word(word: Word, rank: usize) -> Self {
        HalfMono {
            word,
            k: Weight::zero(rank),
            j: Weight::zero(rank),
        }
    }

    pub fn torus(k: Weight, j: Weight) -> Self {
        HalfMono {
            word: Word::empty(),
            k,
            j,
        }
    }

    pub fn rank(&self) -> usize {
        self.k.rank()
    }

    /// Degree of the word part; the torus has degree zero.
    pub fn weight(&self) -> Weight {
        self.word.weight(self.rank())
    }

    pub fn is_torus(&self) -> bool {
        self.word.is_empty()
    }
}

pub(crate) fn render_torus(f: &mut fmt::Formatter<'_>, name: &str, w: &Weight, first: &mut bool) -> fmt::Result {
    for (i, &e) in w.coeffs().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !*first {
            write!(f, " ")?;
        }
        *first = false;
        write!(f, "{name}[{}]", i + 1)?;
        if e != 1 {
            write!(f, "^{e}")?;
        }
    }
    Ok(())
}

pub(crate) fn render_word(f: &mut fmt::Formatter<'_>, name: &str, w: &Word, first: &mut bool) -> fmt::Result {
    for l in w.letters() {
        if !*first {
            write!(f, " ")?;
        }
        *first = false;
        write!(f, "{name}[{}]", l + 1)?;
    }
    Ok(())
}

pub(crate) fn render_sum<K: Ord + Clone>(
    f: &mut fmt::Formatter<'_>,
    x: &Lin<K>,
    mut mono: impl FnMut(&mut fmt::Formatter<'_>, &K) -> fmt::Result,
) -> fmt::Result {
    if x.is_zero() {
        return write!(f, "0");
    }
    for (n, (k, c)) in x.terms().enumerate() {
        if n > 0 {
            write!(f, " + ")?;
        }
        write!(f, "({c})*")?;
        mono(f, k)?;
    }
    Ok(())
}

/// An element of one of the two smash products.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfHatElem {
    pub side: Side,
    pub terms: Lin<HalfMono>,
}

impl HalfHatElem {
    pub fn zero(side: Side) -> Self {
        HalfHatElem {
            side,
            terms: Lin::zero(),
        }
    }

    pub fn mono(side: Side, m: HalfMono) -> Self {
        HalfHatElem {
            side,
            terms: Lin::term(m, FieldElem::one()),
        }
    }

    pub fn one(side: Side, rank: usize) -> Self {
        Self::word(side, Word::empty(), rank)
    }

    pub fn word(side: Side, w: Word, rank: usize) -> Self {
        Self::mono(side, HalfMono::word(w, rank))
    }

    /// `E_i` on the plus side, `F_i` on the minus side.
    pub fn generator(side: Side, i: usize, rank: usize) -> Self {
        Self::word(side, Word::letter(i), rank)
    }

    pub fn torus(side: Side, k: Weight, j: Weight) -> Self {
        Self::mono(side, HalfMono::torus(k, j))
    }

    pub fn add(&self, o: &HalfHatElem) -> HalfHatElem {
        HalfHatElem {
            side: self.side,
            terms: self.terms.add(&o.terms),
        }
    }

    pub fn sub(&self, o: &HalfHatElem) -> HalfHatElem {
        HalfHatElem {
            side: self.side,
            terms: self.terms.sub(&o.terms),
        }
    }

    pub fn scale(&self, c: &FieldElem) -> HalfHatElem {
        HalfHatElem {
            side: self.side,
            terms: self.terms.scale(c),
        }
    }

    pub fn scale_unit(&self, u: &Unit) -> HalfHatElem {
        HalfHatElem {
            side: self.side,
            terms: self.terms.scale_unit(u),
        }
    }

    pub fn neg(&self) -> HalfHatElem {
        self.scale_unit(&Unit::from_int(-1))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The counit: sum of the coefficients of pure torus monomials.
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

impl fmt::Display for HalfHatElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (kn, jn) = self.side.torus_names();
        render_sum(f, &self.terms, |f, m| {
            let mut first = true;
            render_word(f, self.side.letter(), &m.word, &mut first)?;
            render_torus(f, kn, &m.k, &mut first)?;
            render_torus(f, jn, &m.j, &mut first)?;
            if first {
                write!(f, "1")?;
            }
            Ok(())
        })
    }
}

/// Tensor powers of one half: keys are lists of monomials.
pub type HalfTensor = Lin<Vec<HalfMono>>;

impl Chars {
    /// The scalar `c` with `T y = c y T` for the torus monomial `T = (k, j)`
    /// of `side` and a word `y` of degree `mu`.
    pub fn torus_past(&self, side: Side, k: &Weight, j: &Weight, mu: &Weight) -> Unit {
        match side {
            Side::Plus => self.bracket(k, mu).mul(&self.xi(mu, j)),
            Side::Minus => self.bracket(mu, k).mul(&self.xi(k, mu).inv()),
        }
    }

    pub(crate) fn mono_mul(&self, side: Side, a: &HalfMono, b: &HalfMono) -> (Unit, HalfMono) {
        let c = self.torus_past(side, &a.k, &a.j, &b.weight());
        let m = HalfMono {
            word: a.word.concat(&b.word),
            k: &a.k + &b.k,
            j: &a.j + &b.j,
        };
        (c, m)
    }

    pub(crate) fn half_mul(&self, a: &HalfHatElem, b: &HalfHatElem) -> Result<HalfHatElem> {
        if a.side != b.side {
            return Err(Error::invalid("cannot multiply elements of different halves"));
        }
        let mut out = Lin::zero();
        for (ma, ca) in a.terms.terms() {
            for (mb, cb) in b.terms.terms() {
                let (u, m) = self.mono_mul(a.side, ma, mb);
                out.add_term(m, u.scale(&ca.mul(cb)));
            }
        }
        Ok(HalfHatElem {
            side: a.side,
            terms: out,
        })
    }

    fn mul_unchecked(&self, a: &HalfHatElem, b: &HalfHatElem) -> HalfHatElem {
        self.half_mul(a, b).expect("same side")
    }

    pub(crate) fn tensor_mul(&self, side: Side, a: &HalfTensor, b: &HalfTensor) -> HalfTensor {
        let mut out = Lin::zero();
        for (ka, ca) in a.terms() {
            for (kb, cb) in b.terms() {
                let mut u = Unit::one();
                let mut key = Vec::with_capacity(ka.len());
                for (x, y) in ka.iter().zip(kb) {
                    let (c, m) = self.mono_mul(side, x, y);
                    u = u.mul(&c);
                    key.push(m);
                }
                out.add_term(key, u.scale(&ca.mul(cb)));
            }
        }
        out
    }

    /// `Δ₊(E_i) = E_i⊗J_i + K_i⊗E_i`, `Δ₋(F_i) = J'_i⊗F_i + F_i⊗K'_i`.
    fn delta_generator(&self, side: Side, i: usize) -> HalfTensor {
        let n = self.rank();
        let (e, z) = (HalfMono::word(Word::letter(i), n), self.zero());
        let (k, j) = (
            HalfMono::torus(self.unit(i), z.clone()),
            HalfMono::torus(z, self.unit(i)),
        );
        let mut out = Lin::zero();
        match side {
            Side::Plus => {
                out.add_term(vec![e.clone(), j], FieldElem::one());
                out.add_term(vec![k, e], FieldElem::one());
            }
            Side::Minus => {
                out.add_term(vec![j, e.clone()], FieldElem::one());
                out.add_term(vec![e, k], FieldElem::one());
            }
        }
        out
    }

    fn delta_mono(&self, side: Side, m: &HalfMono) -> HalfTensor {
        let t = HalfMono::torus(m.k.clone(), m.j.clone());
        let mut acc = Lin::term(vec![HalfMono::word(Word::empty(), self.rank()); 2], FieldElem::one());
        for l in m.word.letters() {
            acc = self.tensor_mul(side, &acc, &self.delta_generator(side, l));
        }
        self.tensor_mul(side, &acc, &Lin::term(vec![t.clone(), t], FieldElem::one()))
    }

    pub(crate) fn delta(&self, x: &HalfHatElem) -> HalfTensor {
        x.terms.map(|m| self.delta_mono(x.side, m))
    }

    /// `(Δ ⊗ id) ∘ Δ`.
    pub(crate) fn delta2(&self, x: &HalfHatElem) -> HalfTensor {
        self.delta(x).map(|key| {
            let first = self.delta_mono(x.side, &key[0]);
            first.map(|k| {
                let mut v = k.clone();
                v.extend(key[1..].iter().cloned());
                Lin::term(v, FieldElem::one())
            })
        })
    }

    /// The torus pair `(T1, T2)` with `S(gen) = −T1⁻¹ gen T2⁻¹`.
    fn antipode_torus(&self, side: Side, i: usize) -> (HalfMono, HalfMono) {
        let (u, z) = (self.unit(i), self.zero());
        let k = HalfMono::torus(u.scale(-1), z.clone());
        let j = HalfMono::torus(z, u.scale(-1));
        match side {
            Side::Plus => (k, j),
            Side::Minus => (j, k),
        }
    }

    fn antipode_generator(&self, side: Side, i: usize, inverse: bool) -> HalfHatElem {
        let (t1, t2) = self.antipode_torus(side, i);
        let (l, r) = if inverse { (t2, t1) } else { (t1, t2) };
        let g = HalfHatElem::generator(side, i, self.rank());
        let x = self.mul_unchecked(&HalfHatElem::mono(side, l), &g);
        self.mul_unchecked(&x, &HalfHatElem::mono(side, r)).neg()
    }

    fn antipode_mono(&self, side: Side, m: &HalfMono, inverse: bool) -> HalfHatElem {
        let mut acc = HalfHatElem::torus(side, m.k.scale(-1), m.j.scale(-1));
        for l in m.word.letters().rev() {
            acc = self.mul_unchecked(&acc, &self.antipode_generator(side, l, inverse));
        }
        acc
    }

    pub(crate) fn antipode(&self, x: &HalfHatElem, inverse: bool) -> HalfHatElem {
        HalfHatElem {
            side: x.side,
            terms: x.terms.map(|m| self.antipode_mono(x.side, m, inverse).terms),
        }
    }

    /// Multiplies the factors of a tensor in order.
    #[cfg(test)]
    pub(crate) fn multiply_out(&self, side: Side, t: &HalfTensor) -> HalfHatElem {
        let mut out = HalfHatElem::zero(side);
        for (key, c) in t.terms() {
            let mut acc = HalfHatElem::one(side, self.rank());
            for m in key {
                acc = self.mul_unchecked(&acc, &HalfHatElem::mono(side, m.clone()));
            }
            out = out.add(&acc.scale(c));
        }
        out
    }
}

pub fn half_mul(a: &HalfHatElem, b: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    Chars::new(inst)?.half_mul(a, b)
}

pub fn delta(x: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfTensor> {
    Ok(Chars::new(inst)?.delta(x))
}

pub fn delta2(x: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfTensor> {
    Ok(Chars::new(inst)?.delta2(x))
}

pub fn antipode(x: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    Ok(Chars::new(inst)?.antipode(x, false))
}

/// The inverse antipode: `S₋⁻¹(F_i) = −K'_i⁻¹F_iJ'_i⁻¹`, and on the plus side
/// `S₊⁻¹(E_i) = −J_i⁻¹E_iK_i⁻¹`.
pub fn antipode_inv(x: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    Ok(Chars::new(inst)?.antipode(x, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    fn setup() -> (AlgebraInstance, Chars) {
        let inst = catalog::load("b2-super").unwrap();
        let ch = Chars::new(&inst).unwrap();
        (inst, ch)
    }

    #[test]
    fn torus_moves_right_of_words() {
        let (_, ch) = setup();
        let (u0, u1, z) = (ch.unit(0), ch.unit(1), ch.zero());
        let k = HalfHatElem::torus(Side::Plus, u0.clone(), z.clone());
        let e = HalfHatElem::generator(Side::Plus, 1, 2);
        let got = ch.half_mul(&k, &e).unwrap();
        let want = ch.half_mul(&e, &k).unwrap().scale_unit(&ch.bracket(&u0, &u1));
        assert_eq!(got, want);
        let jp = HalfHatElem::torus(Side::Minus, z.clone(), u0);
        let f = HalfHatElem::generator(Side::Minus, 1, 2);
        assert_eq!(ch.half_mul(&jp, &f).unwrap(), ch.half_mul(&f, &jp).unwrap());
        assert!(ch.half_mul(&k, &f).is_err());
    }

    #[test]
    fn second_coproduct_of_a_generator() {
        let (_, ch) = setup();
        let z = ch.zero();
        let e = HalfMono::word(Word::letter(0), 2);
        let k = HalfMono::torus(ch.unit(0), z.clone());
        let j = HalfMono::torus(z, ch.unit(0));
        let got = ch.delta2(&HalfHatElem::generator(Side::Plus, 0, 2));
        let want: HalfTensor = [
            (vec![e.clone(), j.clone(), j.clone()], FieldElem::one()),
            (vec![k.clone(), e.clone(), j], FieldElem::one()),
            (vec![k.clone(), k, e], FieldElem::one()),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, want);
    }

    #[test]
    fn antipode_convolution_on_generators() {
        let (_, ch) = setup();
        for side in [Side::Plus, Side::Minus] {
            for i in 0..2 {
                let g = HalfHatElem::generator(side, i, 2);
                let conv: HalfTensor = ch.delta(&g).map(|key| {
                    let s = ch.antipode(&HalfHatElem::mono(side, key[0].clone()), false);
                    s.terms
                        .map(|m| Lin::term(vec![m.clone(), key[1].clone()], FieldElem::one()))
                });
                assert!(ch.multiply_out(side, &conv).is_zero());
            }
        }
    }

    #[test]
    fn inverse_antipode_inverts() {
        let (_, ch) = setup();
        for side in [Side::Plus, Side::Minus] {
            let x = HalfHatElem::word(side, Word::from_letters(&[0, 1, 0]), 2);
            let x = ch
                .half_mul(&x, &HalfHatElem::torus(side, ch.unit(1), ch.unit(0)))
                .unwrap();
            assert_eq!(ch.antipode(&ch.antipode(&x, true), false), x);
            assert_eq!(ch.antipode(&ch.antipode(&x, false), true), x);
        }
    }

    #[test]
    fn counit_sees_only_the_torus() {
        let (_, ch) = setup();
        assert!(HalfHatElem::generator(Side::Plus, 0, 2).counit().is_zero());
        assert!(HalfHatElem::torus(Side::Plus, ch.unit(0).scale(-1), ch.zero())
            .counit()
            .is_one());
    }
}
