//! Exact exterior calculus on ℝ^m with polynomial coefficients, Chern–Weil
//! forms, Chern–Simons transgressions, and the smooth K-theory built on the
//! total Chern class, together with a parser, renderer and verification suites.

pub mod cap;
pub mod chern_weil;
pub mod cli;
pub mod coeff;
pub mod document;
pub mod error;
pub mod form;
pub mod ktheory;
pub mod lambda;
pub mod matrix;
pub mod parse;
pub mod render;
pub mod scalar;
pub mod transgression;
pub mod verify;

pub use error::{Error, Result};
