//! Landau ladder with a longitudinal Coulomb series below each rung.
//!
//! In atomic units the cyclotron quantum `hbar e H / (m_e c)` equals
//! `gamma` hartree (`hbar = m_e = e = 1` and `H = gamma * m_e^2 e^3 c / hbar^3`),
//! so a Landau level sits at `gamma (N + 1/2)` hartree with
//! `N = n_rho + (m + |m|) / 2`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::FieldParams;
use crate::longitudinal::{solve_even_nu, solve_odd_nu, LongitudinalLevel, Parity};

/// Transverse quantum numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LandauLabel {
    pub n_rho: u32,
    pub m: i32,
    pub n_landau: u32,
}

impl LandauLabel {
    pub fn new(n_rho: u32, m: i32) -> Self {
        let n_landau = n_rho + m.max(0) as u32;
        Self { n_rho, m, n_landau }
    }
}

/// `N = n_rho + (m + |m|) / 2`.
pub fn landau_index(n_rho: i64, m: i64) -> Result<u32> {
    if n_rho < 0 {
        return Err(Error::invalid(format!(
            "n_rho must be non-negative, got {n_rho}"
        )));
    }
    let n = n_rho + (m + m.abs()) / 2;
    u32::try_from(n).map_err(|_| Error::invalid(format!("Landau index {n} out of range")))
}

pub fn landau_energy(params: &FieldParams, n_landau: u32) -> f64 {
    params.gamma * (n_landau as f64 + 0.5)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Marginal,
    Invalid,
}

impl Validity {
    pub fn as_str(self) -> &'static str {
        match self {
            Validity::Valid => "valid",
            Validity::Marginal => "marginal",
            Validity::Invalid => "invalid",
        }
    }
}

impl fmt::Display for Validity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Verdict {
    pub validity: Validity,
    pub reason: String,
}

/// Cut points for the strong-field regime checks. These are choices, not
/// derived quantities: both conditions are only stated as `>>`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ValidityThresholds {
    /// Below this lambda the logarithmic approximation is refused.
    pub invalid_below: f64,
    /// Below this lambda results are flagged marginal.
    pub marginal_below: f64,
    /// Required margin of `lambda - ln N` (semiclassical orbit radius
    /// `a_H sqrt(N)` must stay well inside the Bohr radius).
    pub log_margin: f64,
}

impl Default for ValidityThresholds {
    fn default() -> Self {
        Self {
            invalid_below: 1.0,
            marginal_below: 3.0,
            log_margin: 2.0,
        }
    }
}

pub fn validity_check(params: &FieldParams, n_landau: u32) -> Verdict {
    validity_check_with(params, n_landau, &ValidityThresholds::default())
}

pub fn validity_check_with(
    params: &FieldParams,
    n_landau: u32,
    thresholds: &ValidityThresholds,
) -> Verdict {
    let lambda = params.lambda;
    let margin = lambda - (n_landau.max(1) as f64).ln();
    let (validity, reason) = if !(lambda >= thresholds.invalid_below) {
        (
            Validity::Invalid,
            format!(
                "lambda = {lambda:.4} < {}: field too weak for the logarithmic approximation",
                thresholds.invalid_below
            ),
        )
    } else if lambda < thresholds.marginal_below {
        (
            Validity::Marginal,
            format!(
                "lambda = {lambda:.4} < {}: logarithmic accuracy is poor",
                thresholds.marginal_below
            ),
        )
    } else if margin < thresholds.log_margin {
        (
            Validity::Marginal,
            format!(
                "lambda - ln N = {margin:.4} < {}: Landau orbit approaches the Bohr radius",
                thresholds.log_margin
            ),
        )
    } else {
        (
            Validity::Valid,
            format!("lambda = {lambda:.4}, lambda - ln N = {margin:.4}"),
        )
    };
    Verdict { validity, reason }
}

/// One three-dimensional level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectrumLine {
    pub landau: LandauLabel,
    pub longitudinal: LongitudinalLevel,
    pub e_landau_hartree: f64,
    pub e_total_hartree: f64,
}

/// Longitudinal ladder below one Landau level: the even singlet k = 0,
/// then the doublets (odd n, even n) for n = 1..=k_max.
pub fn longitudinal_ladder(lambda: f64, k_max: u32, tol: f64) -> Result<Vec<LongitudinalLevel>> {
    let mut levels = Vec::with_capacity(1 + 2 * k_max as usize);
    levels.push(solve_even_nu(0, lambda, tol)?);
    for n in 1..=k_max {
        levels.push(solve_odd_nu(n)?);
        levels.push(solve_even_nu(n, lambda, tol)?);
    }
    Ok(levels)
}

fn line_order(a: &SpectrumLine, b: &SpectrumLine) -> Ordering {
    a.e_total_hartree
        .total_cmp(&b.e_total_hartree)
        .then(a.longitudinal.parity.cmp(&b.longitudinal.parity))
        .then(b.landau.m.cmp(&a.landau.m))
        .then(a.landau.n_rho.cmp(&b.landau.n_rho))
        .then(a.longitudinal.k.cmp(&b.longitudinal.k))
}

/// Every label gets the same longitudinal ladder (it depends on the field
/// only); lines come back sorted by total energy.
pub fn assemble(
    params: &FieldParams,
    labels: &[LandauLabel],
    k_max: u32,
    tol: f64,
) -> Result<Vec<SpectrumLine>> {
    assemble_with(params, labels, k_max, tol, &ValidityThresholds::default())
}

pub fn assemble_with(
    params: &FieldParams,
    labels: &[LandauLabel],
    k_max: u32,
    tol: f64,
    thresholds: &ValidityThresholds,
) -> Result<Vec<SpectrumLine>> {
    let attach = |label: &LandauLabel, source: Error| Error::Label {
        n_rho: label.n_rho,
        m: label.m,
        source: Box::new(source),
    };

    for label in labels {
        if label.n_landau != LandauLabel::new(label.n_rho, label.m).n_landau {
            return Err(attach(
                label,
                Error::invalid("n_landau inconsistent with (n_rho, m)"),
            ));
        }
        let verdict = validity_check_with(params, label.n_landau, thresholds);
        if verdict.validity == Validity::Invalid {
            let source = Error::Regime {
                lambda: params.lambda,
                min: thresholds.invalid_below,
            };
            return Err(attach(label, source));
        }
    }
    let Some(first) = labels.first() else {
        return Ok(Vec::new());
    };
    let ladder = longitudinal_ladder(params.lambda, k_max, tol).map_err(|e| attach(first, e))?;

    let mut lines: Vec<SpectrumLine> = labels
        .iter()
        .flat_map(|label| {
            let e_landau = landau_energy(params, label.n_landau);
            ladder.iter().map(move |level| SpectrumLine {
                landau: *label,
                longitudinal: *level,
                e_landau_hartree: e_landau,
                e_total_hartree: e_landau + level.energy_hartree,
            })
        })
        .collect();
    lines.sort_by(line_order);
    Ok(lines)
}

/// Gap inside the n-th doublet, `E(even n) - E(odd n)`.
pub fn doublet_gap(lambda: f64, n: u32, tol: f64) -> Result<f64> {
    let odd = solve_odd_nu(n)?;
    let even = solve_even_nu(n, lambda, tol)?;
    Ok(even.energy_hartree - odd.energy_hartree)
}

impl SpectrumLine {
    /// The line lies below its Landau level. For very strong fields the
    /// longitudinal energy can drop below the resolution of
    /// `e_landau_hartree` (gamma ~ 1e16 and up), in which case the total
    /// rounds onto the Landau level itself; it never rounds above it.
    pub fn is_bound(&self) -> bool {
        self.longitudinal.energy_hartree < 0.0 && self.e_total_hartree <= self.e_landau_hartree
    }

    pub fn parity(&self) -> Parity {
        self.longitudinal.parity
    }
}
