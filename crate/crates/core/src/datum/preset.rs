//! Named specializations of the form tables, selected at runtime by name.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::Rational64;
use num_traits::One;

use super::cartan::{CartanDatum, Weight};
use super::instance::AlgebraInstance;
use super::table::FormTable;
use super::unit::Unit;
use crate::scalar::{Monomial, Param, ParamKind, ParamTable};
use crate::{Error, Result};

/// Raw inputs of a preset: the datum, declared parameters and named tables.
#[derive(Clone, Debug)]
pub struct PresetInput {
    pub datum: CartanDatum,
    pub params: ParamTable,
    /// Integer matrices such as `omega`.
    pub int_tables: HashMap<String, Vec<Vec<Option<i64>>>>,
    /// Matrices of units such as `q` or `s`.
    pub tables: HashMap<String, Vec<Vec<Option<Unit>>>>,
    /// Vectors of units such as `p`.
    pub vectors: HashMap<String, Vec<Option<Unit>>>,
    /// `printed`, `alternate` or `canonical`.
    pub gamma_variant: String,
}

impl PresetInput {
    pub fn new(datum: CartanDatum, params: ParamTable) -> Self {
        PresetInput {
            datum,
            params,
            int_tables: HashMap::new(),
            tables: HashMap::new(),
            vectors: HashMap::new(),
            gamma_variant: "printed".into(),
        }
    }

    fn rank(&self) -> usize {
        self.datum.rank()
    }

    pub fn set_int(&mut self, name: &str, i: usize, j: usize, x: i64) {
        let n = self.rank();
        self.int_tables
            .entry(name.into())
            .or_insert_with(|| vec![vec![None; n]; n])[i][j] = Some(x);
    }

    pub fn set_entry(&mut self, name: &str, i: usize, j: usize, x: Unit) {
        let n = self.rank();
        self.tables.entry(name.into()).or_insert_with(|| vec![vec![None; n]; n])[i][j] = Some(x);
    }

    pub fn set_component(&mut self, name: &str, i: usize, x: Unit) {
        let n = self.rank();
        self.vectors.entry(name.into()).or_insert_with(|| vec![None; n])[i] = Some(x);
    }

    pub fn int_table(&self, name: &str) -> Result<Vec<Vec<i64>>> {
        let t = self
            .int_tables
            .get(name)
            .ok_or_else(|| Error::config(format!("missing table {name}")))?;
        self.complete(name, t)
    }

    pub fn table(&self, name: &str) -> Result<Vec<Vec<Unit>>> {
        let t = self
            .tables
            .get(name)
            .ok_or_else(|| Error::config(format!("missing table {name}")))?;
        self.complete(name, t)
    }

    pub fn vector(&self, name: &str) -> Result<Vec<Unit>> {
        let t = self
            .vectors
            .get(name)
            .ok_or_else(|| Error::config(format!("missing vector {name}")))?;
        t.iter()
            .enumerate()
            .map(|(i, x)| {
                x.clone()
                    .ok_or_else(|| Error::config(format!("missing entry {name} {}", self.datum.label(i))))
            })
            .collect()
    }

    fn complete<T: Clone>(&self, name: &str, t: &[Vec<Option<T>>]) -> Result<Vec<Vec<T>>> {
        t.iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, x)| {
                        x.clone().ok_or_else(|| {
                            Error::config(format!(
                                "missing entry {name} {} {}",
                                self.datum.label(i),
                                self.datum.label(j)
                            ))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    fn v(&self) -> Param {
        self.params.get("v").expect("v is always declared")
    }

    fn vi(&self, i: usize, k: i64) -> Unit {
        Unit::param_int(self.v(), self.datum.d(i) * k)
    }

    fn vpow(&self, k: i64) -> Unit {
        Unit::param_int(self.v(), k)
    }

    fn imag(&self) -> Option<Param> {
        self.params.iter().find(|p| p.torsion_square() == Some(-1))
    }

    fn sqrt(&self, u: &Unit, what: &str) -> Result<Unit> {
        u.pow_rational(Rational64::new(1, 2), self.imag())
            .ok_or_else(|| Error::config(format!("{what} = {u} has no square root in the field")))
    }

    fn check_all(&self, equation: &str, ok: impl Fn(usize, usize) -> bool) -> Result<()> {
        let n = self.rank();
        for i in 0..n {
            for j in 0..n {
                if !ok(i, j) {
                    return Err(Error::config(format!(
                        "side condition {equation} fails at ({},{})",
                        self.datum.label(i),
                        self.datum.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    fn require_parity(&self, preset: &str) -> Result<()> {
        if self.datum.parity().is_none() {
            return Err(Error::config(format!("preset {preset} needs a parity for every index")));
        }
        Ok(())
    }
}

/// Literal product `∏ u_k^{e_k}` taken over all factors at once, so that
/// fractional exponents only need to become integral in the total.
pub fn product_of_powers(factors: &[(Unit, Rational64)], imag: Option<Param>) -> Option<Unit> {
    let mut exps: BTreeMap<Param, Rational64> = BTreeMap::new();
    let mut coef = Unit::one();
    for (u, e) in factors {
        for (p, x) in u.mono().iter() {
            *exps.entry(p).or_default() += x * e;
        }
        coef = coef.mul(&Unit::new(u.coef().clone(), Monomial::one()).pow_rational(*e, imag)?);
    }
    let mut out = coef;
    for (p, e) in exps {
        if p.is_torsion() && !e.is_integer() {
            return None;
        }
        out = out.mul(&Unit::param_pow(p, e));
    }
    Some(out)
}

/// A specialization of the form tables.
pub trait Preset: Send + Sync {
    fn name(&self) -> &'static str;

    fn summary(&self) -> &'static str;

    /// Declares the parameters the preset fixes itself.
    fn declare_params(&self, _params: &mut ParamTable) -> Result<()> {
        Ok(())
    }

    /// The printed γ variants besides the canonical one.
    fn gamma_variants(&self) -> &'static [&'static str] {
        &["printed"]
    }

    /// Builds β, α, ξ and the requested γ; ξ is `None` when the inputs do not
    /// admit the double.
    fn tables(&self, input: &PresetInput) -> Result<Tables>;

    /// 𝒢 in the closed form stated for this specialization.
    fn g_closed_form(&self, inst: &AlgebraInstance, nu: &Weight) -> Option<Unit>;

    fn build(&self, input: &PresetInput) -> Result<AlgebraInstance> {
        let mut input = input.clone();
        self.declare_params(&mut input.params)?;
        let t = self.tables(&input)?;
        let inst = AlgebraInstance::new(
            self.name(),
            input.datum.clone(),
            input.params.clone(),
            t.beta,
            t.alpha,
            t.gamma,
            t.xi,
        )?;
        let inst = if input.gamma_variant == "canonical" {
            let g = inst.canonical_gamma();
            inst.with_gamma(g)
        } else {
            inst
        };
        let inst = inst.with_inputs(Arc::new(input));
        let rep = inst.validate();
        if let Some(c) = rep.failures().next() {
            return Err(Error::config(format!("preset {}: {}", self.name(), c.detail)));
        }
        Ok(inst)
    }
}

pub struct Tables {
    pub beta: FormTable,
    pub alpha: FormTable,
    pub gamma: Option<FormTable>,
    pub xi: Option<FormTable>,
}

fn gamma_variant<'a>(input: &'a PresetInput, allowed: &[&str]) -> Result<&'a str> {
    let g = input.gamma_variant.as_str();
    if g == "canonical" || allowed.contains(&g) {
        Ok(g)
    } else {
        Err(Error::config(format!("unknown gamma variant {g}")))
    }
}

fn declare_or_check(params: &mut ParamTable, name: &str, kind: ParamKind) -> Result<Param> {
    match params.get(name) {
        Some(p) if p.kind() == kind => Ok(p),
        Some(p) => Err(Error::config(format!(
            "parameter {name} must be {kind:?}, found {:?}",
            p.kind()
        ))),
        None => params.declare(name, kind),
    }
}

fn symmetric(t: &[Vec<Unit>]) -> bool {
    (0..t.len()).all(|i| (0..t.len()).all(|j| t[i][j] == t[j][i]))
}

pub struct TwoParameter;

impl Preset for TwoParameter {
    fn name(&self) -> &'static str {
        "two-parameter"
    }

    fn summary(&self) -> &'static str {
        "β(i,j) = t^(Ω_ji − Ω_ij) from an integer matrix Ω"
    }

    fn declare_params(&self, params: &mut ParamTable) -> Result<()> {
        declare_or_check(params, "t", ParamKind::Free).map(|_| ())
    }

    fn gamma_variants(&self) -> &'static [&'static str] {
        &["printed", "alternate"]
    }

    fn tables(&self, input: &PresetInput) -> Result<Tables> {
        let d = &input.datum;
        let n = d.rank();
        let om = input.int_table("omega")?;
        let t = input.params.get("t").expect("declared");
        let cond = |what: &str, i: usize, j: usize| {
            Err(Error::config(format!(
                "omega condition {what} fails at ({},{})",
                d.label(i),
                d.label(j)
            )))
        };
        let mut g = BigInt::from(0);
        for i in 0..n {
            if om[i][i] <= 0 {
                return cond("Ω_ii > 0", i, i);
            }
            g = g.gcd(&BigInt::from(om[i][i]));
            for j in 0..n {
                if d.dot(i, j) != om[i][j] + om[j][i] {
                    return cond("i·j = Ω_ij + Ω_ji", i, j);
                }
                if i != j {
                    if om[i][j] > 0 {
                        return cond("Ω_ij ≤ 0", i, j);
                    }
                    let s = om[i][j] + om[j][i];
                    if s % om[i][i] != 0 || s > 0 {
                        return cond("(Ω_ij + Ω_ji)/Ω_ii ∈ ℤ≤0", i, j);
                    }
                }
            }
        }
        if !g.is_one() {
            return Err(Error::config("omega condition gcd(Ω_ii) = 1 fails"));
        }
        let tp = |e: i64| Unit::param_int(t, e);
        let delta = |i: usize, j: usize| (i == j) as i64;
        let beta = FormTable::from_fn(n, |i, j| tp(om[j][i] - om[i][j]));
        let alpha = FormTable::from_fn(n, |i, j| tp(2 * (2 * delta(i, j) * om[i][i] - om[i][j])));
        let gamma = match gamma_variant(input, self.gamma_variants())? {
            "printed" => Some(FormTable::from_fn(n, |i, j| tp(om[i][j] - 2 * delta(i, j) * om[i][i]))),
            "alternate" => Some(FormTable::from_fn(n, |i, j| input.vpow(d.dot(i, j)).mul(&tp(om[i][j])))),
            _ => None,
        };
        Ok(Tables {
            beta,
            alpha,
            gamma,
            xi: Some(FormTable::trivial(n)),
        })
    }

    fn g_closed_form(&self, _inst: &AlgebraInstance, _nu: &Weight) -> Option<Unit> {
        Some(Unit::one())
    }
}

pub struct Super;

impl Preset for Super {
    fn name(&self) -> &'static str {
        "super"
    }

    fn summary(&self) -> &'static str {
        "β(i,j) = t^(i·j + 2p(i)p(j)) with t a square root of −1"
    }

    fn declare_params(&self, params: &mut ParamTable) -> Result<()> {
        declare_or_check(params, "t", ParamKind::Torsion { square: -1 }).map(|_| ())
    }

    fn gamma_variants(&self) -> &'static [&'static str] {
        &["printed", "alternate"]
    }

    fn tables(&self, input: &PresetInput) -> Result<Tables> {
        input.require_parity(self.name())?;
        let d = &input.datum;
        let n = d.rank();
        let t = input.params.get("t").expect("declared");
        let tp = |e: i64| Unit::param_int(t, e);
        let pp = |i: usize, j: usize| (d.parity_of(i) * d.parity_of(j)) as i64;
        let beta = FormTable::from_fn(n, |i, j| tp(d.dot(i, j) + 2 * pp(i, j)));
        let gamma = match gamma_variant(input, self.gamma_variants())? {
            "printed" => Some(FormTable::from_fn(n, |i, j| match j.cmp(&i) {
                std::cmp::Ordering::Less => tp(d.dot(i, j)),
                std::cmp::Ordering::Equal => tp(d.d(i)),
                std::cmp::Ordering::Greater => tp(2 * pp(i, j)),
            })),
            "alternate" => Some(FormTable::from_fn(n, |i, j| match j.cmp(&i) {
                std::cmp::Ordering::Less => tp(2 * d.dot(i, j)),
                std::cmp::Ordering::Equal => tp(d.d(i)),
                std::cmp::Ordering::Greater => tp(d.dot(i, j) + 2 * pp(i, j)),
            })),
            _ => None,
        };
        Ok(Tables {
            beta,
            alpha: FormTable::trivial(n),
            gamma,
            xi: Some(FormTable::from_fn(n, |i, j| tp(2 * pp(i, j)))),
        })
    }

    fn g_closed_form(&self, inst: &AlgebraInstance, nu: &Weight) -> Option<Unit> {
        let t = inst.params.get("t")?;
        let p = inst.datum.parity_w(nu);
        Some(Unit::param_int(t, p * p))
    }
}

pub struct MultiParameter;

impl Preset for MultiParameter {
    fn name(&self) -> &'static str {
        "multi-parameter"
    }

    fn summary(&self) -> &'static str {
        "β(i,j) = v^(i·j) q_ij from a table q with q_ij q_ji = q_ii^a_ij and q_ii = v_i^-2"
    }

    fn tables(&self, input: &PresetInput) -> Result<Tables> {
        let d = &input.datum;
        let n = d.rank();
        let q = input.table("q")?;
        input.check_all("q_ii = v_i^-2", |i, j| i != j || q[i][i] == input.vi(i, -2))?;
        input.check_all("q_ij q_ji = q_ii^a_ij", |i, j| {
            q[i][j].mul(&q[j][i]) == q[i][i].pow(d.a(i, j))
        })?;
        let beta = FormTable::from_fn(n, |i, j| input.vpow(d.dot(i, j)).mul(&q[i][j]));
        let alpha = FormTable::from_fn(n, |i, j| q[i][j].clone());
        let gamma = match gamma_variant(input, self.gamma_variants())? {
            "printed" => {
                let mut rows = Vec::with_capacity(n);
                for i in 0..n {
                    let mut row = Vec::with_capacity(n);
                    for j in 0..n {
                        let root = input.sqrt(&q[j][i], &format!("q {} {}", d.label(j), d.label(i)))?;
                        row.push(if i == j { q[i][i].mul(&root) } else { root });
                    }
                    rows.push(row);
                }
                Some(FormTable::new(rows))
            }
            _ => None,
        };
        Ok(Tables {
            beta,
            alpha,
            gamma,
            xi: Some(FormTable::trivial(n)),
        })
    }

    fn g_closed_form(&self, _inst: &AlgebraInstance, _nu: &Weight) -> Option<Unit> {
        Some(Unit::one())
    }
}

/// `∏_{i,j} s_ij^{-ν_iν_j/2}` for a symmetric table `s = ξ^{-1}`.
fn half_product_closed_form(inst: &AlgebraInstance, nu: &Weight) -> Option<Unit> {
    let xi = inst.xi.as_ref()?;
    let n = inst.rank();
    let mut factors = Vec::new();
    for i in 0..n {
        for j in 0..n {
            factors.push((xi.get(i, j).inv(), Rational64::new(-nu[i] * nu[j], 2)));
        }
    }
    product_of_powers(&factors, inst.imag())
}

pub struct MultiSuperOne;

impl Preset for MultiSuperOne {
    fn name(&self) -> &'static str {
        "multi-super-I"
    }

    fn summary(&self) -> &'static str {
        "β(i,j) = s_ji^-1 p_ji v_i^-a_ij from tables s, p and a vector p_i = v_i h_i"
    }

    fn tables(&self, input: &PresetInput) -> Result<Tables> {
        input.require_parity(self.name())?;
        let d = &input.datum;
        let n = d.rank();
        let s = input.table("s")?;
        let p = input.table("p")?;
        let pv = input.vector("p")?;
        let h: Vec<Unit> = (0..n).map(|i| pv[i].mul(&input.vi(i, -1))).collect();
        input.check_all("p_i = v_i h_i with h_i^2 = 1", |i, _| h[i].pow(2).is_one())?;
        input.check_all("p_ij^2 = p_i^(2a_ij)", |i, j| {
            p[i][j].pow(2) == pv[i].pow(2 * d.a(i, j))
        })?;
        input.check_all("p_ij p_ji / (s_ij s_ji) = p_i^(2a_ij)", |i, j| {
            p[i][j].mul(&p[j][i]).div(&s[i][j].mul(&s[j][i])) == pv[i].pow(2 * d.a(i, j))
        })?;
        input.check_all("p_ii / s_ii = p_i^2", |i, _| p[i][i].div(&s[i][i]) == pv[i].pow(2))?;
        let beta = FormTable::from_fn(n, |i, j| s[j][i].inv().mul(&p[j][i]).mul(&input.vi(i, -d.a(i, j))));
        let alpha = FormTable::from_fn(n, |i, j| s[i][j].div(&p[i][j]));
        let gamma = match gamma_variant(input, self.gamma_variants())? {
            "printed" => Some(FormTable::from_fn(n, |i, j| match j.cmp(&i) {
                std::cmp::Ordering::Less => s[i][j].inv().mul(&h[i].pow(d.a(i, j))).mul(&s[j][i]),
                std::cmp::Ordering::Equal => s[i][i].clone(),
                std::cmp::Ordering::Greater => p[i][j].mul(&pv[j].pow(-d.a(j, i))).div(&s[j][i]),
            })),
            _ => None,
        };
        let xi = symmetric(&s).then(|| FormTable::from_fn(n, |i, j| s[i][j].inv()));
        Ok(Tables { beta, alpha, gamma, xi })
    }

    fn g_closed_form(&self, inst: &AlgebraInstance, nu: &Weight) -> Option<Unit> {
        half_product_closed_form(inst, nu)
    }
}

pub struct MultiSuperTwo;

impl Preset for MultiSuperTwo {
    fn name(&self) -> &'static str {
        "multi-super-II"
    }

    fn summary(&self) -> &'static str {
        "β(i,j) = s_ij p_i^(a_ij/2) from a table s and a vector p_i = v_i^2"
    }

    fn tables(&self, input: &PresetInput) -> Result<Tables> {
        input.require_parity(self.name())?;
        let d = &input.datum;
        let n = d.rank();
        let s = input.table("s")?;
        let pv = input.vector("p")?;
        input.check_all("p_i = v_i^2", |i, _| pv[i] == input.vi(i, 2))?;
        input.check_all("s_ij s_ji = p_i^-a_ij", |i, j| {
            s[i][j].mul(&s[j][i]) == pv[i].pow(-d.a(i, j))
        })?;
        input.check_all("s_ii = p_i^-1", |i, _| s[i][i] == pv[i].inv())?;
        let mut half = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                let e = Rational64::new(d.a(i, j), 2);
                row.push(
                    pv[i]
                        .pow_rational(e, input.imag())
                        .ok_or_else(|| Error::config(format!("p {}^(a/2) is not in the field", d.label(i))))?,
                );
            }
            half.push(row);
        }
        let beta = FormTable::from_fn(n, |i, j| s[i][j].mul(&half[i][j]));
        let alpha = FormTable::from_fn(n, |i, j| s[i][j].clone());
        let gamma = match gamma_variant(input, self.gamma_variants())? {
            "printed" => Some(FormTable::from_fn(n, |i, j| match j.cmp(&i) {
                std::cmp::Ordering::Less => s[j][i].clone(),
                std::cmp::Ordering::Equal => s[i][i].pow(3),
                std::cmp::Ordering::Greater => half[i][j].inv(),
            })),
            _ => None,
        };
        let xi = symmetric(&s).then(|| FormTable::from_fn(n, |i, j| s[i][j].inv()));
        Ok(Tables { beta, alpha, gamma, xi })
    }

    fn g_closed_form(&self, inst: &AlgebraInstance, nu: &Weight) -> Option<Unit> {
        half_product_closed_form(inst, nu)
    }
}

static REGISTRY: [&dyn Preset; 5] = [&TwoParameter, &Super, &MultiParameter, &MultiSuperOne, &MultiSuperTwo];

/// Every registered preset, in a fixed order.
pub fn presets() -> &'static [&'static dyn Preset] {
    &REGISTRY
}

pub fn preset(name: &str) -> Option<&'static dyn Preset> {
    REGISTRY.iter().copied().find(|p| p.name() == name)
}
