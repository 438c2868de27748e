//! Generalized Dedekind, Hardy and Hurwitz-zeta sums.

pub mod dft;
pub mod error;
pub mod exact;
pub mod harness;
pub mod hp;
pub mod sums;
pub mod trig;
pub mod zeta;

pub use error::{Error, Result};
