//! The bilinear form on the free algebra, its Gram blocks and radical, and
//! normal forms in the quotient algebra.

pub mod cache;
mod elim;
mod gram;
mod pairing;

pub use elim::{column_relations, ColumnRelations};
pub use gram::{
    default_height_bound, graded_dim, gram, normal_form, serre_in_radical, Form, GramBlock, RadicalCertificate,
};
pub use pairing::{pair, pair_oracle, weight_scale, NormalizedPairing};
