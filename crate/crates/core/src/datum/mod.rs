//! Cartan data, multiplicative form tables and the named specializations.

mod cartan;
mod config;
mod instance;
mod preset;
mod table;
mod unit;

pub use cartan::{CartanDatum, Weight};
pub use config::InstanceConfig;
pub use instance::{base_params, AlgebraInstance};
pub use preset::{preset, presets, product_of_powers, Preset, PresetInput, Tables};
pub use table::FormTable;
pub use unit::Unit;
