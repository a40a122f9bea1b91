//! The free algebra on the generators θ_i, its twisted tensor square, the
//! coproduct r and the twisted derivations r_i and ᵢr.

mod elem;
mod ops;
mod word;

pub use elem::{FreeElem, Tensor2Elem};
pub use ops::{
    coproduct_r, divided_power, r_left, r_left_word, r_right, r_right_word, serre_element, tensor_mul, vi_binom,
    vi_factorial,
};
pub use word::Word;
