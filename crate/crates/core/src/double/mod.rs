//! The Drinfeld double `𝐔_{β,ξ}` of the deformed algebra: the two
//! smash-product halves, the skew-Hopf pairing between them, the double in
//! PBW normal form with its Hopf structure, and the specializations.

mod chars;
mod check;
mod elem;
mod half;
mod hopf;
mod lin;
mod ops;
mod skew;
mod special;

pub use chars::Chars;
pub use elem::{double_mul, double_mul_via_pairing, Double, DoubleElem, DoubleMono, Torus};
pub use half::{antipode, antipode_inv, delta, delta2, half_mul, HalfHatElem, HalfMono, HalfTensor, Side};
pub use hopf::{generators, verify_double, DoubleTensor};
pub use lin::Lin;
pub use ops::{op_j, op_jp, op_js, op_k, op_kp, op_sj, phi, phi_prime, rho_minus, rho_plus, Pairings};
pub use skew::{iota_minus, iota_plus, verify_g_cocycle, verify_skew_hopf, MAX_LENGTH};
pub use special::{apply_torus_quotient, specialized_presentation, RelationReport, TorusQuotient};
