//! Exact E-polynomials and intersection cohomology of rank-two character
//! varieties and Higgs moduli spaces.

pub mod algebra;
pub mod dt;
pub mod error;
pub mod golden;
pub mod invariants;
pub mod moduli;
pub mod output;
pub mod strata;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use invariants::{InvariantResult, Kind};
pub use moduli::{Group, ModuliSpec, Side};
