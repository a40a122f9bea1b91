use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{OnceLock, RwLock};

/// Kind of a parameter of the ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ParamKind {
    /// Transcendental parameter, any rational exponent within the denominator bound.
    Free,
    /// Order-two unit `x` with `x^2 = square`, where `square` is `1` or `-1`.
    Torsion { square: i8 },
}

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct ParamSpec {
    pub name: String,
    pub kind: ParamKind,
}

/// Interned handle to a [`ParamSpec`]. Copyable; ordered by name then kind.
#[derive(Clone, Copy)]
pub struct Param(&'static ParamSpec);

fn interner() -> &'static RwLock<HashMap<(String, ParamKind), &'static ParamSpec>> {
    static TABLE: OnceLock<RwLock<HashMap<(String, ParamKind), &'static ParamSpec>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(HashMap::new()))
}

impl Param {
    pub fn intern(name: &str, kind: ParamKind) -> Param {
        let key = (name.to_string(), kind);
        if let Some(p) = interner().read().unwrap().get(&key) {
            return Param(p);
        }
        let mut table = interner().write().unwrap();
        let spec = table.entry(key).or_insert_with(|| {
            Box::leak(Box::new(ParamSpec {
                name: name.to_string(),
                kind,
            }))
        });
        Param(spec)
    }

    pub fn free(name: &str) -> Param {
        Param::intern(name, ParamKind::Free)
    }

    /// Order-two unit squaring to `square` (`1` or `-1`).
    pub fn torsion(name: &str, square: i8) -> Param {
        assert!(square == 1 || square == -1, "torsion square must be 1 or -1");
        Param::intern(name, ParamKind::Torsion { square })
    }

    pub fn name(&self) -> &'static str {
        &self.0.name
    }

    pub fn kind(&self) -> ParamKind {
        self.0.kind
    }

    pub fn is_torsion(&self) -> bool {
        matches!(self.0.kind, ParamKind::Torsion { .. })
    }

    /// `Some(s)` with `x^2 = s` for torsion parameters.
    pub fn torsion_square(&self) -> Option<i8> {
        match self.0.kind {
            ParamKind::Torsion { square } => Some(square),
            ParamKind::Free => None,
        }
    }

    pub fn spec(&self) -> &'static ParamSpec {
        self.0
    }
}

impl PartialEq for Param {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.0, other.0)
    }
}

impl Eq for Param {}

impl Hash for Param {
    fn hash<H: Hasher>(&self, state: &mut H) {
        // Interned: the address identifies the parameter within a process.
        (self.0 as *const ParamSpec as usize).hash(state);
    }
}

impl Ord for Param {
    fn cmp(&self, other: &Self) -> Ordering {
        if std::ptr::eq(self.0, other.0) {
            return Ordering::Equal;
        }
        self.0.name.cmp(&other.0.name).then(self.0.kind.cmp(&other.0.kind))
    }
}

impl PartialOrd for Param {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0.name)
    }
}

impl fmt::Display for Param {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.name)
    }
}

/// Parameter declarations of one instance, keyed by name.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParamTable {
    params: Vec<Param>,
    /// Bound on the denominator of free-parameter exponents.
    pub denom_bound: i64,
}

impl ParamTable {
    pub fn new() -> Self {
        ParamTable {
            params: Vec::new(),
            denom_bound: 4,
        }
    }

    /// Declares a parameter. Redeclaring a name with the same kind is a no-op.
    pub fn declare(&mut self, name: &str, kind: ParamKind) -> crate::Result<Param> {
        if let ParamKind::Torsion { square } = kind {
            if square != 1 && square != -1 {
                return Err(crate::Error::config(format!(
                    "torsion parameter {name}: only order 2 with square 1 or -1 is supported"
                )));
            }
        }
        if let Some(p) = self.get(name) {
            if p.kind() != kind {
                return Err(crate::Error::config(format!(
                    "parameter {name} declared twice with different kinds"
                )));
            }
            return Ok(p);
        }
        let p = Param::intern(name, kind);
        self.params.push(p);
        Ok(p)
    }

    pub fn get(&self, name: &str) -> Option<Param> {
        self.params.iter().copied().find(|p| p.name() == name)
    }

    pub fn iter(&self) -> impl Iterator<Item = Param> + '_ {
        self.params.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.params.len()
    }

    pub fn is_empty(&self) -> bool {
        self.params.is_empty()
    }
}
