use std::collections::{BTreeMap, HashMap};
use std::path::PathBuf;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use super::cache;
use super::elim::column_relations;
use super::pairing::{weight_scale, NormalizedPairing};
use crate::datum::{AlgebraInstance, Weight};
use crate::freealg::{serre_element, FreeElem, Word};
use crate::scalar::{FieldElem, LaurentPoly, Param};
use crate::{Error, Result};

/// The form restricted to one weight space, with its radical and a basis of
/// the quotient.
#[derive(Clone, Debug)]
pub struct GramBlock {
    pub weight: Weight,
    /// Every word of the weight, in term order.
    pub basis: Vec<Word>,
    /// `matrix[r][c] = (basis[r], basis[c])`.
    pub matrix: Vec<Vec<FieldElem>>,
    /// One radical vector per non-quotient word `w`: `w` minus its expansion.
    pub kernel_basis: Vec<FreeElem>,
    /// Earliest words whose Gram rows are independent.
    pub quotient_basis: Vec<Word>,
    expansions: BTreeMap<Word, FreeElem>,
}

impl GramBlock {
    pub(crate) fn from_parts(
        weight: Weight,
        basis: Vec<Word>,
        matrix: Vec<Vec<FieldElem>>,
        quotient_basis: Vec<Word>,
        expansions: BTreeMap<Word, FreeElem>,
    ) -> Self {
        let kernel_basis = basis
            .iter()
            .filter_map(|w| expansions.get(w).map(|e| FreeElem::word(w.clone()).sub(e)))
            .collect();
        GramBlock {
            weight,
            basis,
            matrix,
            kernel_basis,
            quotient_basis,
            expansions,
        }
    }

    pub fn dim(&self) -> usize {
        self.quotient_basis.len()
    }

    pub fn is_quotient_word(&self, w: &Word) -> bool {
        !self.expansions.contains_key(w)
    }

    /// Representative of `w` supported on the quotient basis.
    pub fn reduce_word(&self, w: &Word) -> FreeElem {
        self.expansions
            .get(w)
            .cloned()
            .unwrap_or_else(|| FreeElem::word(w.clone()))
    }

    /// Reduces an element all of whose words have this block's weight.
    pub fn reduce(&self, x: &FreeElem) -> FreeElem {
        let mut out = FreeElem::zero();
        for (w, c) in x.terms() {
            match self.expansions.get(w) {
                Some(e) => out = out.add(&e.scale(c)),
                None => out.add_term(w.clone(), c.clone()),
            }
        }
        out
    }
}

/// Pairings of one element against every word of its weight.
#[derive(Clone, Debug)]
pub struct RadicalCertificate {
    pub element: FreeElem,
    pub weight: Weight,
    pub pairings: Vec<(Word, FieldElem)>,
}

impl RadicalCertificate {
    pub fn holds(&self) -> bool {
        self.pairings.iter().all(|(_, p)| p.is_zero())
    }
}

/// Default height bound for Gram blocks: 6 up to rank 2, 4 above.
pub fn default_height_bound(rank: usize) -> i64 {
    if rank <= 2 {
        6
    } else {
        4
    }
}

/// The bilinear form of one instance, with Gram blocks computed on demand and
/// kept for reuse.
pub struct Form<'a> {
    pairing: NormalizedPairing<'a>,
    height_bound: i64,
    cache_dir: Option<PathBuf>,
    blocks: Mutex<HashMap<Weight, Arc<GramBlock>>>,
}

impl<'a> Form<'a> {
    pub fn new(inst: &'a AlgebraInstance) -> Self {
        Form {
            pairing: NormalizedPairing::new(inst),
            height_bound: default_height_bound(inst.rank()),
            cache_dir: None,
            blocks: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_height_bound(mut self, bound: i64) -> Self {
        self.height_bound = bound;
        self
    }

    /// Stores and reuses Gram blocks under `dir`.
    pub fn with_cache_dir(mut self, dir: impl Into<PathBuf>) -> Self {
        self.cache_dir = Some(dir.into());
        self
    }

    pub fn instance(&self) -> &'a AlgebraInstance {
        self.pairing.instance()
    }

    pub fn height_bound(&self) -> i64 {
        self.height_bound
    }

    pub fn pair(&self, x: &FreeElem, y: &FreeElem) -> FieldElem {
        self.pairing.pair(x, y)
    }

    pub fn gram(&self, weight: &Weight) -> Result<Arc<GramBlock>> {
        let inst = self.instance();
        if weight.rank() != inst.rank() || !weight.is_nonnegative() {
            return Err(Error::invalid(format!(
                "{weight} is not a weight of rank {}",
                inst.rank()
            )));
        }
        if weight.height() > self.height_bound {
            return Err(Error::ResourceLimit(format!(
                "weight {weight} has height {} above the bound {}",
                weight.height(),
                self.height_bound
            )));
        }
        if let Some(b) = self.blocks.lock().expect("block lock").get(weight) {
            return Ok(b.clone());
        }
        let block = match self.cache_dir.as_ref().and_then(|d| cache::load(d, inst, weight)) {
            Some(b) => b,
            None => {
                let b = self.compute(weight)?;
                if let Some(d) = &self.cache_dir {
                    cache::store(d, inst, &b)?;
                }
                b
            }
        };
        let block = Arc::new(block);
        self.blocks
            .lock()
            .expect("block lock")
            .insert(weight.clone(), block.clone());
        Ok(block)
    }

    fn compute(&self, weight: &Weight) -> Result<GramBlock> {
        let inst = self.instance();
        let basis = Word::of_weight(weight);
        let normalized: Vec<Vec<LaurentPoly>> = basis
            .par_iter()
            .map(|a| basis.iter().map(|b| self.pairing.words(a, b)).collect())
            .collect();
        let params: Vec<Param> = inst.params.iter().collect();
        let rel = column_relations(&normalized, &params)?;
        let scale = weight_scale(weight, inst);
        let matrix = normalized
            .iter()
            .map(|row| row.iter().map(|x| scale.mul_poly(x)).collect())
            .collect();
        let quotient_basis: Vec<Word> = rel.pivots.iter().map(|&p| basis[p].clone()).collect();
        let expansions = rel
            .relations
            .into_iter()
            .map(|(f, coeffs)| {
                let e = FreeElem::from_terms(quotient_basis.iter().cloned().zip(coeffs));
                (basis[f].clone(), e)
            })
            .collect();
        Ok(GramBlock::from_parts(
            weight.clone(),
            basis,
            matrix,
            quotient_basis,
            expansions,
        ))
    }

    pub fn graded_dim(&self, weight: &Weight) -> Result<usize> {
        Ok(self.gram(weight)?.dim())
    }

    /// Reduces each homogeneous component onto its quotient basis; zero
    /// exactly on the radical.
    pub fn normal_form(&self, x: &FreeElem) -> Result<FreeElem> {
        let mut out = FreeElem::zero();
        for (w, comp) in x.components(self.instance().rank()) {
            out = out.add(&self.gram(&w)?.reduce(&comp));
        }
        Ok(out)
    }

    /// Pairs a homogeneous element against every word of its weight.
    pub fn radical_certificate(&self, x: &FreeElem) -> Result<RadicalCertificate> {
        let n = self.instance().rank();
        let weight = x
            .weight(n)
            .ok_or_else(|| Error::invalid("radical membership needs a homogeneous element"))?;
        let pairings = Word::of_weight(&weight)
            .into_iter()
            .map(|w| {
                let p = self.pair(x, &FreeElem::word(w.clone()));
                (w, p)
            })
            .collect();
        Ok(RadicalCertificate {
            element: x.clone(),
            weight,
            pairings,
        })
    }

    /// Certifies that the Serre element `D_ij` pairs to zero with every word
    /// of its weight.
    pub fn serre_in_radical(&self, i: usize, j: usize) -> Result<RadicalCertificate> {
        self.radical_certificate(&serre_element(i, j, self.instance())?)
    }
}

pub fn gram(weight: &Weight, inst: &AlgebraInstance) -> Result<GramBlock> {
    Ok(Form::new(inst).gram(weight)?.as_ref().clone())
}

pub fn graded_dim(weight: &Weight, inst: &AlgebraInstance) -> Result<usize> {
    Form::new(inst).graded_dim(weight)
}

pub fn normal_form(x: &FreeElem, inst: &AlgebraInstance) -> Result<FreeElem> {
    Form::new(inst).normal_form(x)
}

pub fn serre_in_radical(i: usize, j: usize, inst: &AlgebraInstance) -> Result<RadicalCertificate> {
    Form::new(inst).serre_in_radical(i, j)
}
