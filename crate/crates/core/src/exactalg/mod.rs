//! Sparse multivariate integer polynomials and truncated series in `z`.
//!
//! Variables come from one fixed universe ordered `q < t < r < u < x_1 < x_2 < ...`.
//! A [`Poly`] stores only nonzero terms, keyed by trimmed exponent vectors, so two
//! polynomials are equal exactly when their term maps are equal.

mod monomial;
mod parse;
mod poly;
mod series;

pub use monomial::{Monomial, Var};
pub use poly::{Bindings, Poly};
pub use series::{Convolution, ZSeries};
