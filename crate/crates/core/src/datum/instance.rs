use std::fmt::Write as _;
use std::sync::Arc;

use num_rational::Rational64;
use sha2::{Digest, Sha256};

use super::cartan::{CartanDatum, Weight};
use super::preset::PresetInput;
use super::table::FormTable;
use super::unit::Unit;
use crate::report::Report;
use crate::scalar::{Param, ParamKind, ParamTable};
use crate::{Error, Result};

/// A Cartan datum together with the form tables defining the deformation.
#[derive(Clone, Debug)]
pub struct AlgebraInstance {
    pub label: String,
    pub datum: CartanDatum,
    pub params: ParamTable,
    pub beta: FormTable,
    pub alpha: FormTable,
    pub gamma: Option<FormTable>,
    pub xi: Option<FormTable>,
    /// Preset inputs the tables were built from, if any.
    pub inputs: Option<Arc<PresetInput>>,
    v: Param,
}

/// The parameter table every instance starts from: the quantum parameter
/// `v` and nothing else.
pub fn base_params() -> ParamTable {
    let mut t = ParamTable::new();
    t.declare("v", ParamKind::Free).expect("fresh table");
    t
}

impl AlgebraInstance {
    pub fn new(
        label: impl Into<String>,
        datum: CartanDatum,
        params: ParamTable,
        beta: FormTable,
        alpha: FormTable,
        gamma: Option<FormTable>,
        xi: Option<FormTable>,
    ) -> Result<Self> {
        let n = datum.rank();
        let v = params
            .get("v")
            .filter(|p| !p.is_torsion())
            .ok_or_else(|| Error::config("the quantum parameter v must be declared free"))?;
        for (name, t) in [
            ("beta", Some(&beta)),
            ("alpha", Some(&alpha)),
            ("gamma", gamma.as_ref()),
            ("xi", xi.as_ref()),
        ] {
            if let Some(t) = t {
                if t.rank() != n {
                    return Err(Error::config(format!("{name} table has the wrong size")));
                }
            }
        }
        Ok(AlgebraInstance {
            label: label.into(),
            datum,
            params,
            beta,
            alpha,
            gamma,
            xi,
            inputs: None,
            v,
        })
    }

    /// The undeformed instance on `datum`: β, α and γ are identically one,
    /// and ξ is trivial too.
    pub fn reference(datum: &CartanDatum) -> Self {
        let n = datum.rank();
        Self::new(
            "reference",
            datum.clone(),
            base_params(),
            FormTable::trivial(n),
            FormTable::trivial(n),
            Some(FormTable::trivial(n)),
            Some(FormTable::trivial(n)),
        )
        .expect("reference instance is well formed")
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn v(&self) -> Param {
        self.v
    }

    /// The declared square root of `-1`, if any.
    pub fn imag(&self) -> Option<Param> {
        self.params.iter().find(|p| p.torsion_square() == Some(-1))
    }

    pub fn v_pow(&self, k: i64) -> Unit {
        Unit::param_int(self.v, k)
    }

    pub fn v_pow_rational(&self, k: Rational64) -> Unit {
        Unit::param_pow(self.v, k)
    }

    /// `v_i^k = v^{d_i k}`.
    pub fn vi_pow(&self, i: usize, k: i64) -> Unit {
        self.v_pow(self.datum.d(i) * k)
    }

    pub fn beta(&self, nu: &Weight, tau: &Weight) -> Unit {
        self.beta.eval(nu, tau)
    }

    pub fn alpha(&self, nu: &Weight, tau: &Weight) -> Unit {
        self.alpha.eval(nu, tau)
    }

    pub fn gamma_table(&self) -> Result<&FormTable> {
        self.gamma
            .as_ref()
            .ok_or_else(|| Error::config(format!("instance {} has no gamma table", self.label)))
    }

    pub fn xi_table(&self) -> Result<&FormTable> {
        self.xi
            .as_ref()
            .ok_or_else(|| Error::config(format!("instance {} has no xi table", self.label)))
    }

    pub fn xi(&self, nu: &Weight, tau: &Weight) -> Result<Unit> {
        Ok(self.xi_table()?.eval(nu, tau))
    }

    /// Twist of the tensor square: `v^{-|y₁|·|x₂|} β(|x₂|, |y₁|)`.
    pub fn tensor_twist(&self, x2: &Weight, y1: &Weight) -> Unit {
        self.v_pow(-self.datum.dot_w(y1, x2)).mul(&self.beta(x2, y1))
    }

    /// `⟨ν, τ⟩ = v^{-ν·τ} β(ν, τ) ξ(τ, ν)`.
    pub fn bracket(&self, nu: &Weight, tau: &Weight) -> Result<Unit> {
        Ok(self
            .v_pow(-self.datum.dot_w(nu, tau))
            .mul(&self.beta(nu, tau))
            .mul(&self.xi(tau, nu)?))
    }

    /// Chosen square roots `ξ(i,i)^{1/2}`.
    pub fn xi_half_roots(&self) -> Result<Vec<Unit>> {
        let xi = self.xi_table()?;
        (0..self.rank())
            .map(|i| {
                xi.get(i, i)
                    .pow_rational(Rational64::new(1, 2), self.imag())
                    .ok_or_else(|| {
                        Error::config(format!(
                            "xi({0},{0}) = {1} has no square root in the field",
                            self.datum.label(i),
                            xi.get(i, i)
                        ))
                    })
            })
            .collect()
    }

    /// Quadratic refinement `𝒢(ν) = ∏ ξ(i,i)^{ν_i²/2} ∏_{i<j} ξ(i,j)^{ν_iν_j}`.
    pub fn g_refine(&self, nu: &Weight) -> Result<Unit> {
        let roots = self.xi_half_roots()?;
        let xi = self.xi_table()?;
        let mut out = Unit::one();
        for i in 0..self.rank() {
            out = out.mul(&roots[i].pow(nu[i] * nu[i]));
            for j in i + 1..self.rank() {
                out = out.mul(&xi.get(i, j).pow(nu[i] * nu[j]));
            }
        }
        Ok(out)
    }

    /// γ with `γ(i,j) = 1` for `i ≤ j` and `γ(i,j) = β(j,i)` for `i > j`.
    pub fn canonical_gamma(&self) -> FormTable {
        FormTable::from_fn(self.rank(), |i, j| {
            if i <= j {
                Unit::one()
            } else {
                self.beta.get(j, i).clone()
            }
        })
    }

    pub fn with_gamma(&self, gamma: FormTable) -> Self {
        AlgebraInstance {
            gamma: Some(gamma),
            ..self.clone()
        }
    }

    pub fn with_inputs(self, inputs: Arc<PresetInput>) -> Self {
        AlgebraInstance {
            inputs: Some(inputs),
            ..self
        }
    }

    pub fn pair_label(&self, i: usize, j: usize) -> String {
        format!("({},{})", self.datum.label(i), self.datum.label(j))
    }

    /// Checks every constraint the form tables must satisfy.
    pub fn validate(&self) -> Report {
        let n = self.rank();
        let mut rep = Report::new();
        let mut run = |id: &str,
                       what: &str,
                       pairs: &mut dyn Iterator<Item = (usize, usize)>,
                       ok: &dyn Fn(usize, usize) -> bool| {
            let bad: Vec<String> = pairs
                .filter(|&(i, j)| !ok(i, j))
                .map(|(i, j)| self.pair_label(i, j))
                .collect();
            let detail = if bad.is_empty() {
                format!("{what} holds")
            } else {
                format!("{what} fails at {}", bad.join(" "))
            };
            rep.push(id, bad.is_empty(), detail);
        };
        let all = || (0..n).flat_map(move |i| (0..n).map(move |j| (i, j)));
        let b = |i, j| self.beta.get(i, j).clone();
        let a = |i, j| self.alpha.get(i, j).clone();
        run(
            "validate.beta-diagonal",
            "β(i,i) = 1",
            &mut (0..n).map(|i| (i, i)),
            &|i, j| b(i, j).is_one(),
        );
        run("validate.beta-skew", "β(i,j)β(j,i) = 1", &mut all(), &|i, j| {
            b(i, j).mul(&b(j, i)).is_one()
        });
        run(
            "validate.alpha-compat",
            "β(i,j)α(j,i) = β(j,i)α(i,j)",
            &mut all(),
            &|i, j| b(i, j).mul(&a(j, i)) == b(j, i).mul(&a(i, j)),
        );
        if let Some(g) = &self.gamma {
            run(
                "validate.gamma-twist",
                "γ(i,j) = γ(j,i)β(j,i)",
                &mut all(),
                &|i, j| *g.get(i, j) == g.get(j, i).mul(&b(j, i)),
            );
        }
        if let Some(x) = &self.xi {
            run("validate.xi-symmetric", "ξ(i,j) = ξ(j,i)", &mut all(), &|i, j| {
                x.get(i, j) == x.get(j, i)
            });
            let imag = self.imag();
            run(
                "validate.xi-half-root",
                "ξ(i,i)^1/2 lies in the field",
                &mut (0..n).map(|i| (i, i)),
                &|i, _| x.get(i, i).pow_rational(Rational64::new(1, 2), imag).is_some(),
            );
        }
        rep
    }

    /// Canonical text of the datum and tables; equal instances render equally.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "labels {:?}", self.datum.labels());
        let _ = writeln!(s, "dot {:?}", self.datum.dot_matrix());
        let _ = writeln!(s, "parity {:?}", self.datum.parity());
        for p in self.params.iter() {
            let _ = writeln!(s, "param {} {:?}", p.name(), p.kind());
        }
        let _ = writeln!(s, "denominator {}", self.params.denom_bound);
        let tables = [
            ("beta", Some(&self.beta)),
            ("alpha", Some(&self.alpha)),
            ("gamma", self.gamma.as_ref()),
            ("xi", self.xi.as_ref()),
        ];
        for (name, t) in tables {
            if let Some(t) = t {
                for i in 0..self.rank() {
                    for j in 0..self.rank() {
                        let _ = writeln!(s, "{name} {i} {j} {}", t.get(i, j));
                    }
                }
            }
        }
        s
    }

    /// Hex SHA-256 of the canonical text; used as a cache key.
    pub fn content_hash(&self) -> String {
        hex::encode(Sha256::digest(self.canonical_text().as_bytes()))
    }
}
