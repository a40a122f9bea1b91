//! The operators through which the halves act on each other, and the two
//! pairings they define.
//!
//! On the minus side: `ⱼ𝒮`, `𝒦_ν`, `𝒥_ν`, assembled into the
//! anti-homomorphism `ρ⁺` and `φ(x,y) = ε₋(ρ⁺(x)y)`. On the plus side: `𝒮ⱼ`,
//! `𝒦'_ν`, `𝒥'_ν`, giving `ρ⁻` and `φ'(x,y) = ε₊(ρ⁻(y)x)`.

use std::collections::HashMap;
use std::sync::RwLock;

use super::chars::Chars;
use super::half::{HalfHatElem, HalfMono, Side};
use super::lin::Lin;
use crate::datum::{AlgebraInstance, Unit, Weight};
use crate::scalar::FieldElem;
use crate::{Error, Result};

fn expect_side(x: &HalfHatElem, side: Side) -> Result<()> {
    if x.side == side {
        Ok(())
    } else {
        Err(Error::invalid(format!("expected an element of the {side:?} half")))
    }
}

fn diagonal(x: &HalfHatElem, f: impl Fn(&HalfMono) -> Unit) -> HalfHatElem {
    HalfHatElem {
        side: x.side,
        terms: x.terms.map(|m| Lin::term(m.clone(), f(m).to_field())),
    }
}

/// Sum over the positions of letter `j` in the word of `m`, each deleted
/// occurrence weighted by `f(prefix degree, suffix degree)`.
fn derive(m: &HalfMono, j: usize, f: impl Fn(&Weight, &Weight) -> Unit) -> Lin<HalfMono> {
    let n = m.rank();
    let mut out = Lin::zero();
    for p in 0..m.word.len() {
        if m.word.at(p) != j {
            continue;
        }
        let pre = m.word.slice(0, p).weight(n);
        let suf = m.word.slice(p + 1, m.word.len()).weight(n);
        let w = HalfMono {
            word: m.word.without(p),
            k: m.k.clone(),
            j: m.j.clone(),
        };
        out.add_term(w, f(&pre, &suf).to_field());
    }
    out
}

impl Chars {
    /// `𝒦_ν(y K'_a J'_b) = ⟨ν,a⟩⟨ν,|y|⟩ y K'_a J'_b`.
    pub fn op_k(&self, nu: &Weight, y: &HalfHatElem) -> HalfHatElem {
        diagonal(y, |m| self.bracket(nu, &m.k).mul(&self.bracket(nu, &m.weight())))
    }

    /// `𝒥_ν(y K'_a J'_b) = ξ(a,ν)ξ(|y|,ν) y K'_a J'_b`.
    pub fn op_j(&self, nu: &Weight, y: &HalfHatElem) -> HalfHatElem {
        diagonal(y, |m| self.xi(&m.k, nu).mul(&self.xi(&m.weight(), nu)))
    }

    /// `ⱼ𝒮`: zero on the torus, `ⱼ𝒮(F_i) = δ_ij ξ(i,j)`, and
    /// `ⱼ𝒮(xy) = ⱼ𝒮(x)𝒥_j(y) + 𝒦_j(x)ⱼ𝒮(y)`. On a monomial `u K'_a J'_b`
    /// the torus contributes `𝒥_j(K'_a J'_b) = ξ(a,j)`.
    pub fn op_js(&self, j: usize, y: &HalfHatElem) -> HalfHatElem {
        let uj = self.unit(j);
        let xjj = self.xi(&uj, &uj);
        HalfHatElem {
            side: y.side,
            terms: y.terms.map(|m| {
                let t = self.xi(&m.k, &uj);
                derive(m, j, |pre, suf| {
                    self.bracket(&uj, pre).mul(&xjj).mul(&self.xi(suf, &uj)).mul(&t)
                })
            }),
        }
    }

    /// `𝒦'_ν(x K_a J_b) = ⟨a,ν⟩⟨|x|,ν⟩ξ(ν,|x|)⁻¹ξ(ν,b) x K_a J_b`.
    pub fn op_kp(&self, nu: &Weight, x: &HalfHatElem) -> HalfHatElem {
        diagonal(x, |m| {
            let w = m.weight();
            self.bracket(&m.k, nu)
                .mul(&self.bracket(&w, nu))
                .mul(&self.xi(nu, &w).inv())
                .mul(&self.xi(nu, &m.j))
        })
    }

    /// `𝒥'_ν` is the identity.
    pub fn op_jp(&self, _nu: &Weight, x: &HalfHatElem) -> HalfHatElem {
        x.clone()
    }

    /// `𝒮ⱼ`: zero on the torus, `𝒮ⱼ(E_i) = δ_ij`, and
    /// `𝒮ⱼ(xy) = 𝒮ⱼ(x)y + 𝒦'_j(x)𝒮ⱼ(y)`; the torus on the right passes
    /// through unchanged.
    pub fn op_sj(&self, j: usize, x: &HalfHatElem) -> HalfHatElem {
        let uj = self.unit(j);
        HalfHatElem {
            side: x.side,
            terms: x
                .terms
                .map(|m| derive(m, j, |pre, _| self.bracket(pre, &uj).mul(&self.xi(&uj, pre).inv()))),
        }
    }

    /// `ρ⁺(x)(y)`: `E_j ↦ (v_j⁻¹ − v_j)⁻¹ ⱼ𝒮`, `K_ν ↦ 𝒦_ν`, `J_ν ↦ 𝒥_ν`,
    /// extended anti-multiplicatively, so the first letter of a word acts
    /// first and the torus last.
    pub fn rho_plus(&self, x: &HalfHatElem, y: &HalfHatElem) -> Result<HalfHatElem> {
        expect_side(x, Side::Plus)?;
        expect_side(y, Side::Minus)?;
        let mut out = HalfHatElem::zero(Side::Minus);
        for (m, c) in x.terms.terms() {
            let mut acc = y.clone();
            for l in m.word.letters() {
                acc = self.op_js(l, &acc).scale(self.inv_gap(l));
                if acc.is_zero() {
                    break;
                }
            }
            acc = self.op_j(&m.j, &self.op_k(&m.k, &acc));
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }

    /// `ρ⁻(y)(x)`: `F_j ↦ 𝒢(j)(v_j⁻¹ − v_j)⁻¹ 𝒮ⱼ`, `K'_ν ↦ 𝒦'_ν`,
    /// `J'_ν ↦ 𝒥'_ν`, extended anti-multiplicatively.
    pub fn rho_minus(&self, y: &HalfHatElem, x: &HalfHatElem) -> Result<HalfHatElem> {
        expect_side(y, Side::Minus)?;
        expect_side(x, Side::Plus)?;
        let mut out = HalfHatElem::zero(Side::Plus);
        for (m, c) in y.terms.terms() {
            let mut acc = x.clone();
            for l in m.word.letters() {
                acc = self.op_sj(l, &acc).scale(&self.g(l).scale(self.inv_gap(l)));
                if acc.is_zero() {
                    break;
                }
            }
            acc = self.op_jp(&m.j, &self.op_kp(&m.k, &acc));
            out = out.add(&acc.scale(c));
        }
        Ok(out)
    }

    pub fn phi(&self, x: &HalfHatElem, y: &HalfHatElem) -> Result<FieldElem> {
        Ok(self.rho_plus(x, y)?.counit())
    }

    pub fn phi_prime(&self, x: &HalfHatElem, y: &HalfHatElem) -> Result<FieldElem> {
        Ok(self.rho_minus(y, x)?.counit())
    }
}

/// `φ` and `φ'` on monomials, memoized; graded orthogonality is used to skip
/// pairs of different degree.
pub struct Pairings {
    pub chars: Chars,
    phi: RwLock<HashMap<(HalfMono, HalfMono), FieldElem>>,
    phi_prime: RwLock<HashMap<(HalfMono, HalfMono), FieldElem>>,
}

impl Pairings {
    pub fn new(inst: &AlgebraInstance) -> Result<Self> {
        Ok(Self::from_chars(Chars::new(inst)?))
    }

    pub fn from_chars(chars: Chars) -> Self {
        Pairings {
            chars,
            phi: RwLock::new(HashMap::new()),
            phi_prime: RwLock::new(HashMap::new()),
        }
    }

    fn cached(
        &self,
        table: &RwLock<HashMap<(HalfMono, HalfMono), FieldElem>>,
        a: &HalfMono,
        b: &HalfMono,
        f: impl Fn(&HalfHatElem, &HalfHatElem) -> Result<FieldElem>,
    ) -> Result<FieldElem> {
        if a.weight() != b.weight() {
            return Ok(FieldElem::zero());
        }
        let key = (a.clone(), b.clone());
        if let Some(v) = table.read().expect("pairing memo").get(&key) {
            return Ok(v.clone());
        }
        let v = f(
            &HalfHatElem::mono(Side::Plus, a.clone()),
            &HalfHatElem::mono(Side::Minus, b.clone()),
        )?
        .simplify();
        table.write().expect("pairing memo").insert(key, v.clone());
        Ok(v)
    }

    fn bilinear(
        &self,
        x: &HalfHatElem,
        y: &HalfHatElem,
        mono: impl Fn(&HalfMono, &HalfMono) -> Result<FieldElem>,
    ) -> Result<FieldElem> {
        expect_side(x, Side::Plus)?;
        expect_side(y, Side::Minus)?;
        let mut s = FieldElem::zero();
        for (a, ca) in x.terms.terms() {
            for (b, cb) in y.terms.terms() {
                let v = mono(a, b)?;
                if !v.is_zero() {
                    s = s.add(&v.mul(&ca.mul(cb)));
                }
            }
        }
        Ok(s)
    }

    pub fn phi(&self, x: &HalfHatElem, y: &HalfHatElem) -> Result<FieldElem> {
        self.bilinear(x, y, |a, b| self.cached(&self.phi, a, b, |x, y| self.chars.phi(x, y)))
    }

    pub fn phi_prime(&self, x: &HalfHatElem, y: &HalfHatElem) -> Result<FieldElem> {
        self.bilinear(x, y, |a, b| {
            self.cached(&self.phi_prime, a, b, |x, y| self.chars.phi_prime(x, y))
        })
    }

    /// `φ` on a tensor factor-wise: `φ(x'⊗x'', y'⊗y'') = φ(x',y')φ(x'',y'')`.
    pub fn phi_tensor(&self, xs: &[HalfMono], ys: &[HalfMono]) -> Result<FieldElem> {
        let mut s = FieldElem::one();
        for (a, b) in xs.iter().zip(ys) {
            let v = self.phi(
                &HalfHatElem::mono(Side::Plus, a.clone()),
                &HalfHatElem::mono(Side::Minus, b.clone()),
            )?;
            if v.is_zero() {
                return Ok(v);
            }
            s = s.mul(&v);
        }
        Ok(s)
    }
}

pub fn op_js(j: usize, y: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    expect_side(y, Side::Minus)?;
    Ok(Chars::new(inst)?.op_js(j, y))
}

pub fn op_k(nu: &Weight, y: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    expect_side(y, Side::Minus)?;
    Ok(Chars::new(inst)?.op_k(nu, y))
}

pub fn op_j(nu: &Weight, y: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    expect_side(y, Side::Minus)?;
    Ok(Chars::new(inst)?.op_j(nu, y))
}

pub fn op_sj(j: usize, x: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    expect_side(x, Side::Plus)?;
    Ok(Chars::new(inst)?.op_sj(j, x))
}

pub fn op_kp(nu: &Weight, x: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    expect_side(x, Side::Plus)?;
    Ok(Chars::new(inst)?.op_kp(nu, x))
}

pub fn op_jp(nu: &Weight, x: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    expect_side(x, Side::Plus)?;
    Ok(Chars::new(inst)?.op_jp(nu, x))
}

pub fn rho_plus(x: &HalfHatElem, y: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    Chars::new(inst)?.rho_plus(x, y)
}

pub fn rho_minus(y: &HalfHatElem, x: &HalfHatElem, inst: &AlgebraInstance) -> Result<HalfHatElem> {
    Chars::new(inst)?.rho_minus(y, x)
}

pub fn phi(x: &HalfHatElem, y: &HalfHatElem, inst: &AlgebraInstance) -> Result<FieldElem> {
    Chars::new(inst)?.phi(x, y)
}

pub fn phi_prime(x: &HalfHatElem, y: &HalfHatElem, inst: &AlgebraInstance) -> Result<FieldElem> {
    Chars::new(inst)?.phi_prime(x, y)
}
