//! Magnetic field parametrizations.
//!
//! The field enters every formula only through the dimensionless strength
//! `gamma = H / H0`, where `H0 = m_e^2 e^3 c / hbar^3` is the field at which
//! the magnetic length `a_H = sqrt(hbar c / (e H))` equals the Bohr radius.
//! Since `a / a_H = sqrt(gamma)`, the logarithmic parameter is
//! `lambda = ln(a / a_H) = ln(gamma) / 2`.
//!
//! Internally everything is in Hartree atomic units (hbar = m_e = e = 1).
//! In those units the cyclotron quantum `hbar e H / (m_e c)` is exactly
//! `gamma` hartree.

use crate::error::{Error, Result};

/// Atomic unit of magnetic field in gauss, `H0 = m_e^2 e^3 c / hbar^3`.
///
/// CODATA 2018, gaussian-cgs:
///   m_e  = 9.1093837015e-28 g
///   e    = 1.602176634e-19 C * 2.99792458e9 statC/C = 4.80320471257026e-10 statC
///   c    = 2.99792458e10 cm/s
///   hbar = 1.054571817e-27 erg s
/// Evaluated at 30 digits: 2350517569.315188016459...
pub const H0_GAUSS: f64 = 2_350_517_569.315_188;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FieldParams {
    /// Field strength in units of `H0_GAUSS`.
    pub gamma: f64,
    /// `ln(a / a_H) = ln(gamma) / 2`.
    pub lambda: f64,
    /// Magnetic length `a_H` in Bohr radii.
    pub a_h_bohr: f64,
    /// Field in gauss, when the input was physical.
    pub h_gauss: Option<f64>,
}

impl FieldParams {
    /// Field from the logarithmic parameter. Only the strong-field side
    /// (`lambda > 0`) is accepted here.
    pub fn from_lambda(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() || lambda <= 0.0 {
            return Err(Error::invalid(format!(
                "lambda must be positive and finite, got {lambda}"
            )));
        }
        Ok(Self {
            gamma: (2.0 * lambda).exp(),
            lambda,
            a_h_bohr: (-lambda).exp(),
            h_gauss: None,
        })
    }

    /// Field from the dimensionless strength. `lambda` may come out
    /// negative; regime checks belong to the caller.
    pub fn from_gamma(gamma: f64) -> Result<Self> {
        if !gamma.is_finite() || gamma <= 0.0 {
            return Err(Error::invalid(format!(
                "gamma must be positive and finite, got {gamma}"
            )));
        }
        let lambda = 0.5 * gamma.ln();
        Ok(Self {
            gamma,
            lambda,
            a_h_bohr: (-lambda).exp(),
            h_gauss: None,
        })
    }

    pub fn from_gauss(h: f64) -> Result<Self> {
        if !h.is_finite() || h <= 0.0 {
            return Err(Error::invalid(format!(
                "field in gauss must be positive and finite, got {h}"
            )));
        }
        let mut params = Self::from_gamma(h / H0_GAUSS)?;
        params.h_gauss = Some(h);
        Ok(params)
    }
}
