//! On-disk store for Gram blocks.
//!
//! One file per (instance, weight), named by a SHA-256 of the instance's
//! content hash and the weight. The format is line-oriented text:
//!
//! ```text
//! fbeta-gram 1
//! instance <content hash>
//! weight <c_1> ... <c_n>
//! word <l_1> ... <l_k>          one line per basis word, 0-based letters
//! entry <r> <c> <value>         Gram matrix entries, zeros omitted
//! quotient <index> ...          quotient basis as basis indices
//! kernel <index>                starts the radical vector of a non-quotient word
//! coef <index> <value>          one coefficient of that vector
//! end
//! ```
//!
//! Values use the field element grammar. Files that fail to parse or belong
//! to another instance are ignored and recomputed.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

use super::gram::GramBlock;
use crate::datum::{AlgebraInstance, Weight};
use crate::freealg::{FreeElem, Word};
use crate::scalar::{parse_field_elem, FieldElem};
use crate::{Error, Result};

const HEADER: &str = "fbeta-gram 1";

pub fn path_for(dir: &Path, inst: &AlgebraInstance, weight: &Weight) -> PathBuf {
    let mut h = Sha256::new();
    h.update(inst.content_hash().as_bytes());
    h.update(weight.to_string().as_bytes());
    dir.join(format!("{}.gram", hex::encode(h.finalize())))
}

fn join<T: ToString>(xs: impl IntoIterator<Item = T>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn render(inst: &AlgebraInstance, b: &GramBlock) -> String {
    let index: BTreeMap<&Word, usize> = b.basis.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut s = String::new();
    let _ = writeln!(s, "{HEADER}");
    let _ = writeln!(s, "instance {}", inst.content_hash());
    let _ = writeln!(s, "weight {}", join(b.weight.coeffs()));
    for w in &b.basis {
        let _ = writeln!(s, "word {}", join(w.letters()));
    }
    for (r, row) in b.matrix.iter().enumerate() {
        for (c, x) in row.iter().enumerate() {
            if !x.is_zero() {
                let _ = writeln!(s, "entry {r} {c} {x}");
            }
        }
    }
    let _ = writeln!(s, "quotient {}", join(b.quotient_basis.iter().map(|w| index[w])));
    for k in &b.kernel_basis {
        let lead = k.terms().find(|(w, _)| !b.is_quotient_word(w)).map(|(w, _)| w);
        let Some(lead) = lead else { continue };
        let _ = writeln!(s, "kernel {}", index[lead]);
        for (w, c) in k.terms() {
            let _ = writeln!(s, "coef {} {c}", index[w]);
        }
    }
    let _ = writeln!(s, "end");
    s
}

/// Writes the block atomically: a temporary file in the same directory is
/// renamed into place.
pub fn store(dir: &Path, inst: &AlgebraInstance, b: &GramBlock) -> Result<()> {
    let io = |e: std::io::Error| Error::invalid(format!("cache directory {}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io)?;
    let path = path_for(dir, inst, &b.weight);
    let tmp = path.with_extension(format!("tmp{}", std::process::id()));
    fs::write(&tmp, render(inst, b)).map_err(io)?;
    fs::rename(&tmp, &path).map_err(io)
}

pub fn load(dir: &Path, inst: &AlgebraInstance, weight: &Weight) -> Option<GramBlock> {
    let text = fs::read_to_string(path_for(dir, inst, weight)).ok()?;
    parse(&text, inst, weight)
}

fn ints(rest: &str) -> Option<Vec<i64>> {
    rest.split_whitespace().map(|t| t.parse().ok()).collect()
}

pub fn parse(text: &str, inst: &AlgebraInstance, weight: &Weight) -> Option<GramBlock> {
    let mut lines = text.lines();
    if lines.next()? != HEADER {
        return None;
    }
    let value = |s: &str| -> Option<FieldElem> { parse_field_elem(s, &inst.params).ok() };
    let mut basis = Vec::new();
    let mut entries = Vec::new();
    let mut quotient = Vec::new();
    let mut kernels: Vec<(usize, Vec<(usize, FieldElem)>)> = Vec::new();
    let mut done = false;
    for line in lines {
        let (kw, rest) = line.split_once(' ').unwrap_or((line, ""));
        match kw {
            "instance" if rest == inst.content_hash() => {}
            "weight" if ints(rest)? == weight.coeffs() => {}
            "word" => {
                let ls: Vec<usize> = ints(rest)?.into_iter().map(|x| x as usize).collect();
                basis.push(Word::from_letters(&ls));
            }
            "entry" => {
                let mut it = rest.splitn(3, ' ');
                let r: usize = it.next()?.parse().ok()?;
                let c: usize = it.next()?.parse().ok()?;
                entries.push((r, c, value(it.next()?)?));
            }
            "quotient" => quotient = ints(rest)?.into_iter().map(|x| x as usize).collect(),
            "kernel" => kernels.push((rest.parse().ok()?, Vec::new())),
            "coef" => {
                let (p, v) = rest.split_once(' ')?;
                kernels.last_mut()?.1.push((p.parse().ok()?, value(v)?));
            }
            "end" => done = true,
            _ => return None,
        }
    }
    if !done || basis != Word::of_weight(weight) {
        return None;
    }
    let n = basis.len();
    let mut matrix = vec![vec![FieldElem::zero(); n]; n];
    for (r, c, x) in entries {
        *matrix.get_mut(r)?.get_mut(c)? = x;
    }
    let quotient_basis: Vec<Word> = quotient.iter().map(|&k| basis.get(k).cloned()).collect::<Option<_>>()?;
    let mut expansions = BTreeMap::new();
    for (f, coeffs) in kernels {
        let lead = basis.get(f)?.clone();
        let mut k = FreeElem::zero();
        for (p, c) in coeffs {
            k.add_term(basis.get(p)?.clone(), c);
        }
        expansions.insert(lead.clone(), FreeElem::word(lead).sub(&k));
    }
    if quotient_basis.len() + expansions.len() != n {
        return None;
    }
    Some(GramBlock::from_parts(
        weight.clone(),
        basis,
        matrix,
        quotient_basis,
        expansions,
    ))
}
