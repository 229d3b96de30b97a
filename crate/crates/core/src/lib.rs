//! Exact computations in the trace algebra of generic traceless 3x3 matrices.

pub mod catalog;
pub mod characters;
pub mod error;
pub mod exactnum;
pub mod genmat;
pub mod glaction;
pub mod hilbert;
pub mod mpoly;
pub mod numcheck;
pub mod partitions;
pub mod relfinder;

pub use error::{Error, Result};
