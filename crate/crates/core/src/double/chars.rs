use crate::datum::{AlgebraInstance, FormTable, Unit, Weight};
use crate::scalar::{FieldElem, LaurentPoly};
use crate::Result;

/// The scalar data of the double, tabulated once per instance: the bracket
/// `⟨ν,τ⟩ = v^{-ν·τ}β(ν,τ)ξ(τ,ν)`, ξ itself, the refinement 𝒢 on simple
/// roots and the factors `(v_i^{-1} − v_i)^{-1}`.
#[derive(Clone, Debug)]
pub struct Chars {
    rank: usize,
    labels: Vec<String>,
    bracket: FormTable,
    xi: FormTable,
    g: Vec<Unit>,
    inv_gap: Vec<FieldElem>,
}

impl Chars {
    pub fn new(inst: &AlgebraInstance) -> Result<Self> {
        let n = inst.rank();
        let d = &inst.datum;
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let mut row = Vec::with_capacity(n);
            for j in 0..n {
                row.push(inst.bracket(&d.unit(i), &d.unit(j))?);
            }
            rows.push(row);
        }
        let g = (0..n).map(|i| inst.g_refine(&d.unit(i))).collect::<Result<_>>()?;
        let inv_gap = (0..n)
            .map(|i| {
                let gap = inst.vi_pow(i, -1).to_poly().sub(&inst.vi_pow(i, 1).to_poly());
                FieldElem::new(LaurentPoly::one(), gap)
            })
            .collect::<Result<_>>()?;
        Ok(Chars {
            rank: n,
            labels: d.labels().to_vec(),
            bracket: FormTable::new(rows),
            xi: inst.xi_table()?.clone(),
            g,
            inv_gap,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn bracket(&self, nu: &Weight, tau: &Weight) -> Unit {
        self.bracket.eval(nu, tau)
    }

    pub fn xi(&self, nu: &Weight, tau: &Weight) -> Unit {
        self.xi.eval(nu, tau)
    }

    /// `𝒢(i) = ξ(i,i)^{1/2}`, the chosen root.
    pub fn g(&self, i: usize) -> &Unit {
        &self.g[i]
    }

    /// `(v_i^{-1} − v_i)^{-1}`.
    pub fn inv_gap(&self, i: usize) -> &FieldElem {
        &self.inv_gap[i]
    }

    pub fn unit(&self, i: usize) -> Weight {
        Weight::unit(self.rank, i)
    }

    pub fn zero(&self) -> Weight {
        Weight::zero(self.rank)
    }
}
