//! Deformed half quantum algebras, their bilinear forms and Drinfeld doubles,
//! computed exactly over a field of multi-parameter rational functions.

#![allow(clippy::needless_range_loop)]

pub mod catalog;
pub mod datum;
pub mod double;
pub mod error;
pub mod form;
pub mod freealg;
pub mod report;
pub mod scalar;
pub mod twist;

pub use error::{Error, Result};
