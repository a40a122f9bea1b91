use super::elem::{FreeElem, Tensor2Elem};
use super::word::Word;
use crate::datum::{AlgebraInstance, Unit};
use crate::scalar::{quantum_binom, quantum_factorial, FieldElem, Monomial};
use crate::{Error, Result};

/// Product in the twisted tensor square:
/// `(x₁⊗x₂)(y₁⊗y₂) = v^{-|y₁|·|x₂|} β(|x₂|,|y₁|) x₁y₁ ⊗ x₂y₂`.
pub fn tensor_mul(a: &Tensor2Elem, b: &Tensor2Elem, inst: &AlgebraInstance) -> Tensor2Elem {
    let n = inst.rank();
    let mut out = Tensor2Elem::zero();
    for ((x1, x2), cx) in a.terms() {
        let w2 = x2.weight(n);
        for ((y1, y2), cy) in b.terms() {
            let tw = inst.tensor_twist(&w2, &y1.weight(n));
            out.add_term(x1.concat(y1), x2.concat(y2), tw.scale(&cx.mul(cy)));
        }
    }
    out
}

/// The algebra map `r` with `r(θ_i) = θ_i⊗1 + 1⊗θ_i`, expanded letter by
/// letter through the twisted product.
pub fn coproduct_r(x: &FreeElem, inst: &AlgebraInstance) -> Tensor2Elem {
    let mut out = Tensor2Elem::zero();
    for (w, c) in x.terms() {
        let mut acc = Tensor2Elem::term(Word::empty(), Word::empty(), c.clone());
        for l in w.letters() {
            let mut g = Tensor2Elem::term(Word::letter(l), Word::empty(), FieldElem::one());
            g.add_term(Word::empty(), Word::letter(l), FieldElem::one());
            acc = tensor_mul(&acc, &g, inst);
        }
        out = out.add(&acc);
    }
    out
}

/// `v^{-i·j} β(i,j)` between single letters.
fn letter_twist(inst: &AlgebraInstance, i: usize, j: usize) -> Unit {
    inst.v_pow(-inst.datum.dot(i, j)).mul(inst.beta.get(i, j))
}

/// `r_i(word)`: each occurrence of `i` is removed and weighted by
/// `v^{-i·|y|}β(i,|y|)` for the suffix `y` after it.
pub fn r_right_word(i: usize, w: &Word, inst: &AlgebraInstance) -> Vec<(Word, Unit)> {
    let mut out = Vec::new();
    let mut acc = Unit::one();
    for k in (0..w.len()).rev() {
        let a = w.at(k);
        if a == i {
            out.push((w.without(k), acc.clone()));
        }
        acc = acc.mul(&letter_twist(inst, i, a));
    }
    out
}

/// `ᵢr(word)`: each occurrence of `i` is removed and weighted by
/// `v^{-i·|x|}β(|x|,i)` for the prefix `x` before it.
pub fn r_left_word(i: usize, w: &Word, inst: &AlgebraInstance) -> Vec<(Word, Unit)> {
    let mut out = Vec::new();
    let mut acc = Unit::one();
    for k in 0..w.len() {
        let a = w.at(k);
        if a == i {
            out.push((w.without(k), acc.clone()));
        }
        acc = acc.mul(&letter_twist(inst, a, i));
    }
    out
}

fn apply(x: &FreeElem, f: impl Fn(&Word) -> Vec<(Word, Unit)>) -> FreeElem {
    let mut out = FreeElem::zero();
    for (w, c) in x.terms() {
        for (w2, u) in f(w) {
            out.add_term(w2, u.scale(c));
        }
    }
    out
}

pub fn r_right(i: usize, x: &FreeElem, inst: &AlgebraInstance) -> FreeElem {
    apply(x, |w| r_right_word(i, w, inst))
}

pub fn r_left(i: usize, x: &FreeElem, inst: &AlgebraInstance) -> FreeElem {
    apply(x, |w| r_left_word(i, w, inst))
}

/// `[n]_{v_i}!` as a field element.
pub fn vi_factorial(i: usize, n: u32, inst: &AlgebraInstance) -> FieldElem {
    let c = vi_monomial(i, inst);
    quantum_factorial(n, &c).expect("v_i is not degenerate")
}

/// `[n choose k]_{v_i}`.
pub fn vi_binom(i: usize, n: u32, k: u32, inst: &AlgebraInstance) -> FieldElem {
    let c = vi_monomial(i, inst);
    quantum_binom(n, k, &c).expect("v_i is not degenerate")
}

fn vi_monomial(i: usize, inst: &AlgebraInstance) -> Monomial {
    inst.vi_pow(i, 1).mono().clone()
}

/// `θ_i^{(n)} = θ_i^n / [n]_{v_i}!`.
pub fn divided_power(i: usize, n: u32, inst: &AlgebraInstance) -> FreeElem {
    let w = Word::from_letters(&vec![i; n as usize]);
    let c = vi_factorial(i, n, inst)
        .inv()
        .expect("quantum factorials are invertible");
    FreeElem::term(w, c)
}

/// `D_ij = Σ_{k+k'=1-a_ij} (-1)^k β(i,j)^{-k} θ_i^{(k)} θ_j θ_i^{(k')}`.
pub fn serre_element(i: usize, j: usize, inst: &AlgebraInstance) -> Result<FreeElem> {
    if i == j {
        return Err(Error::invalid("the Serre element needs two distinct indices"));
    }
    let m = (1 - inst.datum.a(i, j)) as u32;
    let bij = inst.beta.get(i, j).inv();
    let tj = FreeElem::letter(j);
    let mut out = FreeElem::zero();
    for k in 0..=m {
        let coef = bij.pow(k as i64).mul(&Unit::from_int(if k % 2 == 0 { 1 } else { -1 }));
        let t = divided_power(i, k, inst).mul(&tj).mul(&divided_power(i, m - k, inst));
        out = out.add(&t.scale_unit(&coef));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn r_of_two_letters() {
        let inst = catalog::load("a2-two-parameter").unwrap();
        let x = FreeElem::word(Word::from_letters(&[0, 1]));
        let r = coproduct_r(&x, &inst);
        let tw = letter_twist(&inst, 0, 1).to_field();
        let e = Word::empty;
        assert!(r.coeff(&Word::from_letters(&[0, 1]), &e()).is_one());
        assert!(r.coeff(&Word::letter(0), &Word::letter(1)).is_one());
        assert_eq!(r.coeff(&Word::letter(1), &Word::letter(0)), tw);
        assert!(r.coeff(&e(), &Word::from_letters(&[0, 1])).is_one());
        assert_eq!(r.terms().count(), 4);
    }

    #[test]
    fn derivations_on_short_words() {
        let inst = catalog::load("b2-multi-super-I").unwrap();
        for j in 0..2 {
            let x = FreeElem::word(Word::from_letters(&[j, 0]));
            let y = r_right(0, &x, &inst);
            let expect = if j == 0 {
                // r_1(θ_1θ_1) = v^{-1·1}β(1,1) θ_1 + θ_1
                FreeElem::letter(0)
                    .scale_unit(&letter_twist(&inst, 0, 0))
                    .add(&FreeElem::letter(0))
            } else {
                FreeElem::letter(j)
            };
            assert_eq!(y, expect);
        }
        let x = FreeElem::word(Word::from_letters(&[0, 1]));
        assert_eq!(r_left(0, &x, &inst), FreeElem::letter(1));
    }
}
