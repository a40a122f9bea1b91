//! The instance configurations shipped in `instances/`, embedded at build time.

use crate::datum::{AlgebraInstance, InstanceConfig};
use crate::{Error, Result};

static BUILTIN: &[(&str, &str)] = &[
    (
        "a2-custom-invalid",
        include_str!("../../../instances/a2-custom-invalid.cfg"),
    ),
    (
        "a2-multi-parameter",
        include_str!("../../../instances/a2-multi-parameter.cfg"),
    ),
    (
        "a2-multi-super-I",
        include_str!("../../../instances/a2-multi-super-I.cfg"),
    ),
    (
        "a2-multi-super-II",
        include_str!("../../../instances/a2-multi-super-II.cfg"),
    ),
    (
        "a2-multi-super-II-double",
        include_str!("../../../instances/a2-multi-super-II-double.cfg"),
    ),
    ("a2-super", include_str!("../../../instances/a2-super.cfg")),
    (
        "a2-two-parameter",
        include_str!("../../../instances/a2-two-parameter.cfg"),
    ),
    (
        "b2-multi-parameter",
        include_str!("../../../instances/b2-multi-parameter.cfg"),
    ),
    (
        "b2-multi-super-I",
        include_str!("../../../instances/b2-multi-super-I.cfg"),
    ),
    (
        "b2-multi-super-I-double",
        include_str!("../../../instances/b2-multi-super-I-double.cfg"),
    ),
    (
        "b2-multi-super-II",
        include_str!("../../../instances/b2-multi-super-II.cfg"),
    ),
    (
        "b2-multi-super-II-double",
        include_str!("../../../instances/b2-multi-super-II-double.cfg"),
    ),
    ("b2-super", include_str!("../../../instances/b2-super.cfg")),
    (
        "b2-two-parameter",
        include_str!("../../../instances/b2-two-parameter.cfg"),
    ),
];

/// Names of the shipped configurations, sorted.
pub fn names() -> impl Iterator<Item = &'static str> {
    BUILTIN.iter().map(|(n, _)| *n)
}

pub fn source(name: &str) -> Option<&'static str> {
    BUILTIN.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn config(name: &str) -> Result<InstanceConfig> {
    let src = source(name).ok_or_else(|| Error::config(format!("no built-in instance {name}")))?;
    InstanceConfig::parse(src)
}

pub fn load(name: &str) -> Result<AlgebraInstance> {
    config(name)?.build()
}

/// Loads a shipped configuration with a different γ variant.
pub fn load_with_gamma(name: &str, variant: &str) -> Result<AlgebraInstance> {
    let mut c = config(name)?;
    c.input.gamma_variant = variant.to_string();
    c.build()
}

/// The configurations used for the half algebra: every preset on A2 and B2.
pub fn half_instances() -> Vec<&'static str> {
    names()
        .filter(|n| !n.ends_with("-double") && !n.contains("custom"))
        .collect()
}

/// One configuration per preset admitting the double.
pub fn double_instances() -> Vec<&'static str> {
    vec![
        "a2-two-parameter",
        "b2-super",
        "a2-multi-parameter",
        "b2-multi-super-I-double",
        "a2-multi-super-II-double",
    ]
}
