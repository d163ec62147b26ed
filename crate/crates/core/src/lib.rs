//! Exact computations for one-dimensional topological theories with defects.
//!
//! A theory is given by a pair of rational series: one evaluating decorated
//! intervals (words) and one evaluating decorated circles (cyclic words).
//! From it the crate builds the state spaces, the algebra of the `+-` sign
//! sequence with its decomposition into a matrix ideal and a symmetric
//! Frobenius ideal `K`, and evaluates the thin-surface and open-closed
//! theories attached to symmetric Frobenius algebras.
//!
//! Everything is exact: scalars live in ℚ or a prime field `F_p`.

#![allow(clippy::needless_range_loop)]

pub mod diagrams;
pub mod error;
pub mod exactla;
pub mod frobenius;
pub mod onevar;
pub mod openclosed;
pub mod series;
pub mod universal;

pub use error::{Error, Result};
pub use exactla::{Field, Matrix, Polynomial, Scalar};
