//! Line-oriented text format describing an instance.
//!
//! ```text
//! # comments start with '#'
//! preset two-parameter          # or: preset custom (the default)
//! index 1 2                     # index labels, in order
//! dot 1 1 = 2                   # i·j; setting (i,j) also sets (j,i)
//! dot 1 2 = -1
//! dot 2 2 = 2
//! parity 1 = 1                  # super data only
//! denominator 4                 # bound on exponent denominators
//! param s free                  # or: param h torsion +1 / torsion -1
//! gamma-variant printed         # printed | alternate | canonical
//! omega 1 2 = -1                # integer tables
//! q 1 2 = q12                   # unit tables: <name> <i> <j> = <expr>
//! p 1 = v*h1                    # unit vectors: <name> <i> = <expr>
//! ```
//!
//! The parameter `v` is always declared. Presets declare the parameters
//! they fix (for instance `t`) as soon as the `preset` line is read. A
//! custom instance reads its forms from the tables `beta`, `alpha` and
//! optionally `gamma` and `xi`.

use super::cartan::CartanDatum;
use super::instance::{base_params, AlgebraInstance};
use super::preset::{preset, PresetInput};
use super::table::FormTable;
use super::unit::Unit;
use crate::scalar::{parse_field_elem, ParamKind, ParamTable};
use crate::{Error, Result};

/// A parsed configuration, ready to build its instance.
#[derive(Clone, Debug)]
pub struct InstanceConfig {
    pub preset: Option<String>,
    pub input: PresetInput,
}

enum Value {
    Int(i64),
    Unit(Unit),
}

struct Entry {
    name: String,
    idx: Vec<String>,
    value: Value,
    line: usize,
}

fn err(line: usize, column: usize, msg: impl Into<String>) -> Error {
    Error::parse(line, column, msg)
}

impl InstanceConfig {
    pub fn parse(src: &str) -> Result<Self> {
        let mut preset_name: Option<String> = None;
        let mut labels: Option<Vec<String>> = None;
        let mut params = base_params();
        let mut dot: Vec<(String, String, i64, usize)> = Vec::new();
        let mut parity: Vec<(String, u8, usize)> = Vec::new();
        let mut gamma_variant = "printed".to_string();
        let mut entries: Vec<Entry> = Vec::new();

        for (ln, raw) in src.lines().enumerate() {
            let line = ln + 1;
            let text = raw.split('#').next().unwrap_or("");
            if text.trim().is_empty() {
                continue;
            }
            let col_of = |s: &str| s.as_ptr() as usize - raw.as_ptr() as usize + 1;
            let (head, rhs) = match text.find('=') {
                Some(k) => (&text[..k], Some(&text[k + 1..])),
                None => (text, None),
            };
            let words: Vec<&str> = head.split_whitespace().collect();
            let key = words[0];
            let key_col = col_of(head.trim_start());
            let need_rhs = || rhs.ok_or_else(|| err(line, key_col, format!("{key} needs '= value'")));
            let int_rhs = |r: &str| -> Result<i64> {
                r.trim()
                    .parse()
                    .map_err(|_| err(line, col_of(r), format!("expected an integer, found {:?}", r.trim())))
            };
            match key {
                "preset" => {
                    let name = words.get(1).ok_or_else(|| err(line, key_col, "preset needs a name"))?;
                    if *name != "custom" {
                        let p =
                            preset(name).ok_or_else(|| err(line, col_of(name), format!("unknown preset {name}")))?;
                        p.declare_params(&mut params)?;
                        preset_name = Some(name.to_string());
                    }
                }
                "index" => {
                    if words.len() < 2 {
                        return Err(err(line, key_col, "index needs at least one label"));
                    }
                    labels = Some(words[1..].iter().map(|s| s.to_string()).collect());
                }
                "denominator" => {
                    let d: i64 = words
                        .get(1)
                        .and_then(|s| s.parse().ok())
                        .filter(|d| *d > 0)
                        .ok_or_else(|| err(line, key_col, "denominator needs a positive integer"))?;
                    params.denom_bound = d;
                }
                "param" => {
                    let (Some(name), Some(kind)) = (words.get(1), words.get(2)) else {
                        return Err(err(line, key_col, "param needs a name and a kind"));
                    };
                    let kind = match (*kind, words.get(3).copied()) {
                        ("free", None) => ParamKind::Free,
                        ("torsion", Some("+1" | "1")) => ParamKind::Torsion { square: 1 },
                        ("torsion", Some("-1")) => ParamKind::Torsion { square: -1 },
                        ("torsion", _) => {
                            return Err(err(line, col_of(kind), "only torsion +1 and torsion -1 are supported"))
                        }
                        _ => return Err(err(line, col_of(kind), format!("unknown parameter kind {kind}"))),
                    };
                    params
                        .declare(name, kind)
                        .map_err(|e| err(line, col_of(name), e.to_string()))?;
                }
                "gamma-variant" => {
                    let g = words
                        .get(1)
                        .ok_or_else(|| err(line, key_col, "gamma-variant needs a value"))?;
                    gamma_variant = g.to_string();
                }
                "dot" => {
                    if words.len() != 3 {
                        return Err(err(line, key_col, "dot needs two index labels"));
                    }
                    let r = need_rhs()?;
                    dot.push((words[1].into(), words[2].into(), int_rhs(r)?, line));
                }
                "parity" => {
                    if words.len() != 2 {
                        return Err(err(line, key_col, "parity needs one index label"));
                    }
                    let r = need_rhs()?;
                    let p = int_rhs(r)?;
                    if !(0..=1).contains(&p) {
                        return Err(err(line, col_of(r), "parity must be 0 or 1"));
                    }
                    parity.push((words[1].into(), p as u8, line));
                }
                _ => {
                    if words.len() < 2 || words.len() > 3 {
                        return Err(err(line, key_col, format!("unknown directive {key}")));
                    }
                    let r = need_rhs()?;
                    let value = if key == "omega" {
                        Value::Int(int_rhs(r)?)
                    } else {
                        let x = parse_field_elem(r, &params).map_err(|e| match e {
                            Error::Parse { column, message, .. } => err(line, col_of(r) + column - 1, message),
                            other => other,
                        })?;
                        Value::Unit(
                            Unit::from_field(&x)
                                .ok_or_else(|| err(line, col_of(r), format!("{} is not a single-term unit", x)))?,
                        )
                    };
                    entries.push(Entry {
                        name: key.into(),
                        idx: words[1..].iter().map(|s| s.to_string()).collect(),
                        value,
                        line,
                    });
                }
            }
        }

        let labels = labels.ok_or_else(|| err(1, 1, "missing index line"))?;
        let n = labels.len();
        let pos = |l: &str, line: usize| {
            labels
                .iter()
                .position(|x| x == l)
                .ok_or_else(|| err(line, 1, format!("unknown index {l}")))
        };
        let mut dm = vec![vec![None; n]; n];
        for (a, b, x, line) in &dot {
            let (i, j) = (pos(a, *line)?, pos(b, *line)?);
            for (r, c) in [(i, j), (j, i)] {
                if let Some(old) = dm[r][c] {
                    if old != *x {
                        return Err(err(*line, 1, format!("conflicting dot entries for {a} {b}")));
                    }
                }
                dm[r][c] = Some(*x);
            }
        }
        let mut dmat = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                dmat[i][j] = dm[i][j].ok_or_else(|| err(1, 1, format!("missing dot {} {}", labels[i], labels[j])))?;
            }
        }
        let par = if parity.is_empty() {
            None
        } else {
            let mut p = vec![None; n];
            for (l, x, line) in &parity {
                p[pos(l, *line)?] = Some(*x);
            }
            Some(
                p.into_iter()
                    .enumerate()
                    .map(|(i, x)| x.ok_or_else(|| err(1, 1, format!("missing parity {}", labels[i]))))
                    .collect::<Result<Vec<u8>>>()?,
            )
        };
        let datum = CartanDatum::new(labels.clone(), dmat, par)?;
        let mut input = PresetInput::new(datum, params);
        input.gamma_variant = gamma_variant;
        for e in entries {
            let ix: Vec<usize> = e.idx.iter().map(|l| pos(l, e.line)).collect::<Result<_>>()?;
            match (e.value, ix.as_slice()) {
                (Value::Int(x), [i, j]) => input.set_int(&e.name, *i, *j, x),
                (Value::Unit(u), [i, j]) => input.set_entry(&e.name, *i, *j, u),
                (Value::Unit(u), [i]) => input.set_component(&e.name, *i, u),
                _ => return Err(err(e.line, 1, format!("{} needs two index labels", e.name))),
            }
        }
        Ok(InstanceConfig {
            preset: preset_name,
            input,
        })
    }

    pub fn from_file(path: &std::path::Path) -> Result<Self> {
        let src =
            std::fs::read_to_string(path).map_err(|e| Error::config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&src)
    }

    pub fn params(&self) -> &ParamTable {
        &self.input.params
    }

    pub fn build(&self) -> Result<AlgebraInstance> {
        match &self.preset {
            Some(name) => preset(name).expect("checked at parse time").build(&self.input),
            None => {
                let get = |name: &str| -> Result<Option<FormTable>> {
                    if self.input.tables.contains_key(name) {
                        Ok(Some(FormTable::new(self.input.table(name)?)))
                    } else {
                        Ok(None)
                    }
                };
                let beta = get("beta")?.ok_or_else(|| Error::config("custom instance needs a beta table"))?;
                let alpha = get("alpha")?.ok_or_else(|| Error::config("custom instance needs an alpha table"))?;
                let gamma = match self.input.gamma_variant.as_str() {
                    "canonical" => None,
                    _ => get("gamma")?,
                };
                let inst = AlgebraInstance::new(
                    "custom",
                    self.input.datum.clone(),
                    self.input.params.clone(),
                    beta,
                    alpha,
                    gamma,
                    get("xi")?,
                )?;
                Ok(if inst.gamma.is_none() && self.input.gamma_variant == "canonical" {
                    let g = inst.canonical_gamma();
                    inst.with_gamma(g)
                } else {
                    inst
                })
            }
        }
    }
}
