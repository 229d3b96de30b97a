//! Exact rationals and fraction-free linear algebra over them.

mod linalg;
mod rat;

pub use linalg::{
    normalize_bigint_vector, normalize_integer_vector, nullspace, rank, to_i64_vec, EchelonBuilder,
    RatMatrix,
};
pub use rat::{ParseRatError, Rat};
