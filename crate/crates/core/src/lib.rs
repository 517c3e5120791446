//! Discrete spectrum of a hydrogen atom in a strong magnetic field.
//!
//! In a field with `lambda = ln(a / a_H) >> 1` the electron motion splits
//! into Landau orbits across the field and a one-dimensional Coulomb
//! problem along it. Each Landau level carries a longitudinal series: a
//! deep even singlet, then near-degenerate odd/even doublets.
//!
//! * [`field`] converts between gauss, `gamma = H / H0` and `lambda`.
//! * [`specfun`] holds digamma and the Kummer series.
//! * [`longitudinal`] solves the 1D eigenproblem.
//! * [`spectrum`] builds the Landau ladder and regime checks.
//! * [`correspondence`] maps zero-field `(n, l, m)` to strong-field labels.
//! * [`oracle`] re-derives longitudinal levels by direct shooting.
//! * [`cli`] is the command-line front end.

// Input guards are written `!(x > 0.0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod correspondence;
pub mod error;
pub mod field;
pub mod format;
pub mod longitudinal;
pub mod oracle;
pub mod specfun;
pub mod spectrum;

pub use error::{Error, Result};
pub use field::FieldParams;
pub use longitudinal::{LongitudinalLevel, Parity};
pub use specfun::SeriesControl;
pub use spectrum::{LandauLabel, SpectrumLine};
