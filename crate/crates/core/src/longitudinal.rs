//! One-dimensional Coulomb motion along the field axis.
//!
//! In the scaled variable `z = 2 z_phys / nu` (z_phys in Bohr radii) the
//! longitudinal equation reads `u'' + (-1/4 + nu/z) u = 0`, and the energy
//! is `E = -1 / (2 nu^2)` hartree.
//!
//! Odd states vanish at the origin and are ordinary hydrogen s-wave
//! solutions with integer `nu`. Even states carry a logarithmic term; with
//! the derivative condition regularized at the magnetic length they obey
//!
//! ```text
//! lambda = 1/(2 nu) + psi(1 - nu)
//! ```
//!
//! which has exactly one root in every interval `(k, k+1)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::specfun::{self, digamma, kummer_f, SeriesControl};

/// Distance of the bisection bracket endpoints from the integers.
pub const BRACKET_INSET: f64 = 1e-8;

/// Below this lambda the eigenvalue condition for even states is refused.
pub const MIN_SOLVER_LAMBDA: f64 = 1.0;

/// Upper end of the domain on which `u_plus` is evaluated.
pub const U_PLUS_Z_MAX: f64 = 100.0;

/// Beyond this point the even solution is continued with the asymptotic
/// (Tricomi) form; the power series loses about `z / ln 10` digits to
/// cancellation.
const U_PLUS_MATCH_Z: f64 = 20.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Odd => "odd",
            Parity::Even => "even",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A bound state of the longitudinal Coulomb problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LongitudinalLevel {
    pub parity: Parity,
    /// For odd levels the principal number n >= 1; for even levels the
    /// branch k >= 0 with the root in (k, k+1).
    pub k: u32,
    pub nu: f64,
    pub energy_hartree: f64,
}

pub fn nu_to_energy(nu: f64) -> Result<f64> {
    if !nu.is_finite() || nu <= 0.0 {
        return Err(Error::invalid(format!("nu must be positive, got {nu}")));
    }
    Ok(-0.5 / (nu * nu))
}

pub fn energy_to_nu(e: f64) -> Result<f64> {
    if !e.is_finite() || e >= 0.0 {
        return Err(Error::invalid(format!(
            "energy must be negative (bound state), got {e}"
        )));
    }
    Ok(1.0 / (-2.0 * e).sqrt())
}

/// Odd solution `exp(-z/2) z F(1-n, 2; z)`, continued as an odd function.
pub fn u_minus(n: u32, z: f64, ctrl: SeriesControl) -> Result<f64> {
    if n == 0 {
        return Err(Error::invalid("odd levels start at n = 1"));
    }
    let r = z.abs();
    let value = (-0.5 * r).exp() * r * kummer_f(1.0 - n as f64, 2.0, r, ctrl)?;
    Ok(if z < 0.0 { -value } else { value })
}

/// Even solution for `0 < z <= 100`:
///
/// `exp(-z/2) {1 - nu z [ln z F(1-nu, 2; z) + sum_k c_k z^k]}`
///
/// with `c_k` from [`specfun::even_series_coefficient`]. Past z = 20 the
/// value is carried forward with the decaying asymptotic form
/// `exp(-z/2) z^nu sum_s (1-nu)_s (-nu)_s / s! (-z)^-s`, normalized to the
/// series at the matching point.
pub fn u_plus(nu: f64, z: f64, ctrl: SeriesControl) -> Result<f64> {
    if !nu.is_finite() || nu <= 0.0 {
        return Err(Error::invalid(format!("nu must be positive, got {nu}")));
    }
    specfun::check_even_nu(nu)?;
    if !(z > 0.0 && z <= U_PLUS_Z_MAX) {
        return Err(Error::invalid(format!(
            "u_plus is evaluated on 0 < z <= {U_PLUS_Z_MAX}, got {z}"
        )));
    }
    if z <= U_PLUS_MATCH_Z {
        return u_plus_series(nu, z, ctrl);
    }
    match (tricomi_tail(nu, z), tricomi_tail(nu, U_PLUS_MATCH_Z)) {
        (Some(tail), Some(tail_match)) if tail_match != 0.0 => {
            let at_match = u_plus_series(nu, U_PLUS_MATCH_Z, ctrl)?;
            let decay = (-0.5 * (z - U_PLUS_MATCH_Z)).exp() * (z / U_PLUS_MATCH_Z).powf(nu);
            Ok(at_match * decay * tail / tail_match)
        }
        // asymptotic form unusable for this nu; fall back to the series
        _ => u_plus_series(nu, z, ctrl),
    }
}

fn u_plus_series(nu: f64, z: f64, ctrl: SeriesControl) -> Result<f64> {
    let bracket = specfun::even_bracket(nu, z, ctrl)?;
    Ok((-0.5 * z).exp() * (1.0 - nu * z * bracket))
}

/// `sum_s (1-nu)_s (-nu)_s / s! (-1/z)^s`, truncated at its smallest term.
/// `None` when the smallest term is too large for the sum to be trusted.
fn tricomi_tail(nu: f64, z: f64) -> Option<f64> {
    let (a, c) = (1.0 - nu, -nu);
    let mut term = 1.0_f64;
    let mut sum = 1.0;
    for s in 0..200 {
        let sf = s as f64;
        let next = term * (a + sf) * (c + sf) / ((sf + 1.0) * -z);
        if next.abs() >= term.abs() && term != 0.0 {
            break;
        }
        term = next;
        sum += term;
        if term == 0.0 || term.abs() < 1e-17 * sum.abs() {
            return Some(sum);
        }
    }
    (term.abs() < 1e-9 * sum.abs()).then_some(sum)
}

/// `1/(2 nu) + psi(1 - nu) - lambda`; decreasing on each `(k, k+1)`.
pub fn eigen_equation_residual(nu: f64, lambda: f64) -> Result<f64> {
    if !nu.is_finite() || nu <= 0.0 {
        return Err(Error::invalid(format!("nu must be positive, got {nu}")));
    }
    specfun::check_even_nu(nu)?;
    Ok(0.5 / nu + digamma(1.0 - nu)? - lambda)
}

/// Leading-log roots: `1/(2 lambda)` for k = 0 and `k + 1/lambda` above.
/// Only meaningful for `lambda >> 1`.
pub fn asymptotic_nu(k: u32, lambda: f64) -> f64 {
    debug_assert!(lambda > 0.0);
    if k == 0 {
        0.5 / lambda
    } else {
        k as f64 + 1.0 / lambda
    }
}

/// Even level on branch `k` by bisection of the eigenvalue condition.
pub fn solve_even_nu(k: u32, lambda: f64, tol: f64) -> Result<LongitudinalLevel> {
    if !lambda.is_finite() {
        return Err(Error::invalid(format!(
            "lambda must be finite, got {lambda}"
        )));
    }
    if lambda < MIN_SOLVER_LAMBDA {
        return Err(Error::Regime {
            lambda,
            min: MIN_SOLVER_LAMBDA,
        });
    }
    if !(tol >= 1e-13) {
        return Err(Error::invalid(format!(
            "tol must be at least 1e-13, got {tol}"
        )));
    }

    let kf = k as f64;
    let mut lo = kf + BRACKET_INSET;
    let mut hi = kf + 1.0 - BRACKET_INSET;
    let f_lo = eigen_equation_residual(lo, lambda)?;
    let f_hi = eigen_equation_residual(hi, lambda)?;
    if !(f_lo > 0.0 && f_hi < 0.0) {
        return Err(Error::Solver(format!(
            "no sign change on ({lo}, {hi}) for lambda = {lambda}: f = ({f_lo}, {f_hi})"
        )));
    }

    while hi - lo > 2.0 * tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if eigen_equation_residual(mid, lambda)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let nu = 0.5 * (lo + hi);
    Ok(LongitudinalLevel {
        parity: Parity::Even,
        k,
        nu,
        energy_hartree: nu_to_energy(nu)?,
    })
}

pub fn solve_odd_nu(n: u32) -> Result<LongitudinalLevel> {
    if n < 1 {
        return Err(Error::invalid("odd levels start at n = 1"));
    }
    let nu = n as f64;
    Ok(LongitudinalLevel {
        parity: Parity::Odd,
        k: n,
        nu,
        energy_hartree: nu_to_energy(nu)?,
    })
}

/// Full-axis wavefunction of a level, in the scaled variable.
pub fn wavefunction(level: &LongitudinalLevel, z: f64, ctrl: SeriesControl) -> Result<f64> {
    match level.parity {
        Parity::Odd => u_minus(level.k, z, ctrl),
        Parity::Even => u_plus(level.nu, z.abs(), ctrl),
    }
}

/// Real-axis zeros of the full-axis wavefunction on `(-z_max, z_max)`.
///
/// Sign changes are located on a uniform grid over `(0, z_max]`, each one
/// confirmed by bisection, and mirrored; an odd state adds its zero at the
/// origin.
pub fn count_nodes(
    level: &LongitudinalLevel,
    z_max: f64,
    samples: usize,
    ctrl: SeriesControl,
) -> Result<usize> {
    let needed = 4.0 * level.nu * (level.k as f64 + 2.0);
    if !(z_max >= needed) {
        return Err(Error::invalid(format!(
            "z_max = {z_max} does not cover the allowed region (need >= {needed})"
        )));
    }
    if samples < 2000 {
        return Err(Error::invalid(format!(
            "need at least 2000 samples, got {samples}"
        )));
    }
    let z_max = z_max.min(U_PLUS_Z_MAX);

    let eval = |z: f64| wavefunction(level, z, ctrl);
    let step = z_max / samples as f64;
    let mut crossings = 0;
    let mut prev: Option<(f64, f64)> = None;
    for i in 1..=samples {
        let z = step * i as f64;
        let v = eval(z)?;
        if v == 0.0 {
            continue;
        }
        if let Some((zp, vp)) = prev {
            if vp.signum() != v.signum() {
                confirm_crossing(&eval, zp, vp, z, v)?;
                crossings += 1;
            }
        }
        prev = Some((z, v));
    }

    Ok(match level.parity {
        Parity::Odd => 2 * crossings + 1,
        Parity::Even => 2 * crossings,
    })
}

const CROSSING_FLOOR: f64 = 1e-12;

fn confirm_crossing<F>(eval: &F, mut a: f64, mut fa: f64, mut b: f64, fb: f64) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if fa.abs().max(fb.abs()) < CROSSING_FLOOR {
        return Err(Error::DegenerateSampling { z: 0.5 * (a + b) });
    }
    for _ in 0..60 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = eval(mid)?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(0.5 * (a + b))
}
