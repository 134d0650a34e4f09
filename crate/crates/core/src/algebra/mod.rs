//! Exact coefficient arithmetic, multivariate Laurent polynomials in the
//! symbols `u, v, t, q`, and truncated power series.

mod fraction;
mod laurent;
mod monomial;
mod rational;
mod series;
pub mod shorthand;

pub use fraction::CommonDenominator;
pub use laurent::LaurentPoly;
pub use monomial::{Monomial, Var};
pub use rational::{format_rational, parse_rational, Rational};
pub use series::TruncatedSeries;
