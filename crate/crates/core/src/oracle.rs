//! Shooting-method cross-check of the longitudinal spectrum.
//!
//! Solves `-u''/2 - u/z = E u` (atomic units, z in Bohr) directly, with
//! no special functions: the decaying solution is integrated inward from
//! `z_far` with fixed-step RK4 and the energy is bisected until the inner
//! boundary condition holds.
//!
//! * even states: `u'(z_cut) = 0`, the derivative condition applied at the
//!   magnetic length;
//! * odd states: `u(0) = 0`, tested by extrapolating the inward solution to
//!   the origin along the regular Frobenius solution.

use std::thread;

use crate::error::{Error, Result};
use crate::longitudinal::{
    eigen_equation_residual, energy_to_nu, nu_to_energy, solve_even_nu, LongitudinalLevel, Parity,
};

/// Largest lambda the oracle accepts; beyond it the cutoff is so small that
/// the fixed-step integration becomes impractical.
pub const MAX_ORACLE_LAMBDA: f64 = 12.0;

/// Agreement band for `|lambda_effective(nu_ode) - lambda|` (even states).
pub const EVEN_LAMBDA_BAND: f64 = 1.5;

/// Agreement band for `|nu_ode - n|` (odd states).
pub const ODD_NU_BAND: f64 = 1e-4;

/// Scan points across the energy bracket before bisection.
const SCAN_POINTS: usize = 32;

const RESCALE_ABOVE: f64 = 1e100;

/// Below this distance the mesh keeps a fixed ratio `h / z`; above it the
/// step is uniform.
const GRADED_BELOW_BOHR: f64 = 0.02;

/// Terms kept in the regular Frobenius series at the cutoff.
const FROBENIUS_TERMS: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ShootingConfig {
    pub z_cut_bohr: f64,
    pub z_far_bohr: f64,
    /// Step at the cutoff. The mesh grows in proportion to `z` up to
    /// 0.02 Bohr (or `z_cut`, if larger) and is uniform beyond.
    pub step_bohr: f64,
    pub e_tol: f64,
}

impl ShootingConfig {
    pub fn new(z_cut_bohr: f64, z_far_bohr: f64, step_bohr: f64, e_tol: f64) -> Result<Self> {
        let cfg = Self {
            z_cut_bohr,
            z_far_bohr,
            step_bohr,
            e_tol,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Defaults for a cutoff and the largest `nu` that will be probed:
    /// step `min(z_cut/20, 1e-3)`, `z_far = 40 nu_max`.
    pub fn for_cutoff(z_cut_bohr: f64, nu_max: f64) -> Result<Self> {
        Self::new(
            z_cut_bohr,
            40.0 * nu_max,
            (z_cut_bohr / 20.0).min(1e-3),
            1e-12,
        )
    }

    /// Cutoff at the magnetic length, `z_cut = exp(-lambda)` Bohr, sized for
    /// the bracket that [`ode_eigenvalue`] scans for this level.
    pub fn for_level(lambda: f64, parity: Parity, k: u32) -> Result<Self> {
        if !(lambda > 0.0 && lambda <= MAX_ORACLE_LAMBDA) {
            return Err(Error::Config(format!(
                "lambda = {lambda} outside the oracle range (0, {MAX_ORACLE_LAMBDA}]"
            )));
        }
        let z_cut = (-lambda).exp();
        let seed = seed_nu(parity, k, lambda)?;
        Self::for_cutoff(z_cut, scan_bracket(parity, k, seed).1)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.z_cut_bohr > 0.0 && self.z_cut_bohr < 1.0) {
            return Err(Error::Config(format!(
                "z_cut must lie in (0, 1) Bohr, got {}",
                self.z_cut_bohr
            )));
        }
        if !(self.step_bohr > 0.0 && self.step_bohr <= self.z_cut_bohr / 10.0) {
            return Err(Error::Config(format!(
                "step {} must be positive and at most z_cut/10 = {}",
                self.step_bohr,
                self.z_cut_bohr / 10.0
            )));
        }
        if !(self.z_far_bohr > self.z_cut_bohr && self.z_far_bohr.is_finite()) {
            return Err(Error::Config("z_far must exceed z_cut".into()));
        }
        if !(self.e_tol > 0.0) {
            return Err(Error::Config("e_tol must be positive".into()));
        }
        Ok(())
    }

    /// Implied logarithmic parameter `-ln z_cut`.
    pub fn lambda(&self) -> f64 {
        -self.z_cut_bohr.ln()
    }
}

/// Inward solution at the cutoff. `u` and `du` share an arbitrary positive
/// scale; only their signs and ratio carry information.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InwardSolution {
    pub u_at_cut: f64,
    pub du_at_cut: f64,
    /// Sign changes of `u` on `(z_cut, z_far)`.
    pub node_count: usize,
}

#[inline]
fn rhs(e: f64, z: f64, u: f64) -> f64 {
    -2.0 * (e + 1.0 / z) * u
}

/// RK4 from `z_far` down to `z_cut`, seeded with `exp(-kz) z^(1/k)`,
/// `k = sqrt(-2e)`.
pub fn integrate_inward(e: f64, cfg: &ShootingConfig) -> Result<InwardSolution> {
    cfg.validate()?;
    if !(e < 0.0 && e.is_finite()) {
        return Err(Error::invalid(format!("energy must be negative, got {e}")));
    }
    let kappa = (-2.0 * e).sqrt();
    let ratio = cfg.step_bohr / cfg.z_cut_bohr;
    let graded_below = GRADED_BELOW_BOHR.max(cfg.z_cut_bohr);

    let mut z = cfg.z_far_bohr;
    let mut u = 1.0_f64;
    let mut du = -kappa + 1.0 / (kappa * z);
    let mut nodes = 0;

    while z > cfg.z_cut_bohr {
        let width = ratio * z.min(graded_below);
        let (h, z1) = if z - width <= cfg.z_cut_bohr * (1.0 + 0.5 * ratio) {
            (cfg.z_cut_bohr - z, cfg.z_cut_bohr)
        } else {
            (-width, z - width)
        };
        let (k1u, k1v) = (du, rhs(e, z, u));
        let zh = z + 0.5 * h;
        let (k2u, k2v) = (du + 0.5 * h * k1v, rhs(e, zh, u + 0.5 * h * k1u));
        let (k3u, k3v) = (du + 0.5 * h * k2v, rhs(e, zh, u + 0.5 * h * k2u));
        let (k4u, k4v) = (du + h * k3v, rhs(e, z1, u + h * k3u));
        let u_next = u + h / 6.0 * (k1u + 2.0 * k2u + 2.0 * k3u + k4u);
        du += h / 6.0 * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
        if u_next != 0.0 && u != 0.0 && u_next.signum() != u.signum() {
            nodes += 1;
        }
        u = u_next;
        z = z1;

        let size = u.abs().max(du.abs());
        if size > RESCALE_ABOVE {
            u /= size;
            du /= size;
        }
        if !u.is_finite() || !du.is_finite() {
            return Err(Error::Solver(format!("integration diverged at z = {z}")));
        }
    }

    Ok(InwardSolution {
        u_at_cut: u,
        du_at_cut: du,
        node_count: nodes,
    })
}

/// Regular solution `r = z + a_2 z^2 + ...` near the origin and its
/// derivative, from `j(j-1) a_j = -2 a_{j-1} - 2 e a_{j-2}`.
fn regular_solution(e: f64, z: f64) -> (f64, f64) {
    let (mut a_prev2, mut a_prev) = (0.0, 1.0);
    let (mut r, mut dr) = (z, 1.0);
    let mut zp = z;
    for j in 2..FROBENIUS_TERMS {
        let jf = j as f64;
        let a = -2.0 * (a_prev + e * a_prev2) / (jf * (jf - 1.0));
        dr += jf * a * zp;
        zp *= z;
        r += a * zp;
        a_prev2 = a_prev;
        a_prev = a;
    }
    (r, dr)
}

fn matching_value(parity: Parity, e: f64, cfg: &ShootingConfig) -> Result<(f64, usize)> {
    let sol = integrate_inward(e, cfg)?;
    let m = match parity {
        Parity::Even => sol.du_at_cut,
        Parity::Odd => {
            // Wronskian with the regular solution: zero iff the inward
            // solution extrapolates to u(0) = 0
            let (r, dr) = regular_solution(e, cfg.z_cut_bohr);
            sol.u_at_cut * dr - sol.du_at_cut * r
        }
    };
    Ok((m, sol.node_count))
}

fn seed_nu(parity: Parity, k: u32, lambda: f64) -> Result<f64> {
    match parity {
        Parity::Odd if k == 0 => Err(Error::invalid("odd levels start at k = 1")),
        Parity::Odd => Ok(k as f64),
        Parity::Even => Ok(solve_even_nu(k, lambda, 1e-12)?.nu),
    }
}

/// Range of `nu` scanned for a level. Odd: the analytic value +-50%.
/// Even: from half the analytic root up to `max(1.5 nu, k + 1)`; the
/// shooting root sits well above the analytic one for k = 0.
fn scan_bracket(parity: Parity, k: u32, seed: f64) -> (f64, f64) {
    match parity {
        Parity::Odd => (0.5 * seed, 1.5 * seed),
        Parity::Even => (0.5 * seed, (1.5 * seed).max(k as f64 + 1.0)),
    }
}

fn target_nodes(parity: Parity, k: u32) -> usize {
    match parity {
        Parity::Even => k as usize,
        Parity::Odd => k as usize - 1,
    }
}

/// Eigenvalue of the regularized problem by shooting.
///
/// The scan bracket in `nu` is swept, sign changes of the matching function
/// are bisected in energy (nearest to the analytic prediction first) and the
/// first root whose inward solution has the expected node count is returned.
pub fn ode_eigenvalue(parity: Parity, k: u32, cfg: &ShootingConfig) -> Result<LongitudinalLevel> {
    cfg.validate()?;
    let lambda = cfg.lambda();
    let seed = seed_nu(parity, k, lambda)?;
    let (nu_lo, nu_hi) = scan_bracket(parity, k, seed);
    if cfg.z_far_bohr < 40.0 * nu_hi {
        return Err(Error::Config(format!(
            "z_far = {} Bohr does not cover the tail of nu = {nu_hi} (need >= {})",
            cfg.z_far_bohr,
            40.0 * nu_hi
        )));
    }
    let target = target_nodes(parity, k);

    let grid: Vec<f64> = (0..=SCAN_POINTS)
        .map(|i| nu_lo + (nu_hi - nu_lo) * i as f64 / SCAN_POINTS as f64)
        .collect();
    let values = scan(parity, &grid, cfg)?;

    let mut brackets: Vec<(f64, f64)> = grid
        .windows(2)
        .zip(values.windows(2))
        .filter(|(_, m)| m[0].signum() != m[1].signum())
        .map(|(nu, _)| (nu[0], nu[1]))
        .collect();
    if brackets.is_empty() {
        return Err(Error::Bracket(format!(
            "nu in [{nu_lo}, {nu_hi}] ({parity} k = {k})"
        )));
    }
    let distance = |b: &(f64, f64)| (0.5 * (b.0 + b.1) - seed).abs();
    brackets.sort_by(|a, b| distance(a).total_cmp(&distance(b)));

    let mut found = None;
    for (a, b) in brackets {
        let (e, nodes) = bisect_energy(parity, nu_to_energy(a)?, nu_to_energy(b)?, cfg)?;
        if nodes == target {
            return Ok(LongitudinalLevel {
                parity,
                k,
                nu: energy_to_nu(e)?,
                energy_hartree: e,
            });
        }
        found.get_or_insert(nodes);
    }
    Err(Error::Ordering {
        expected: target,
        found: found.unwrap_or(0),
    })
}

fn scan(parity: Parity, grid: &[f64], cfg: &ShootingConfig) -> Result<Vec<f64>> {
    let workers = thread::available_parallelism()
        .map_or(1, |n| n.get())
        .min(grid.len());
    let chunk = grid.len().div_ceil(workers);
    thread::scope(|s| {
        let handles: Vec<_> = grid
            .chunks(chunk)
            .map(|part| {
                s.spawn(move || {
                    part.iter()
                        .map(|&nu| Ok(matching_value(parity, nu_to_energy(nu)?, cfg)?.0))
                        .collect::<Result<Vec<f64>>>()
                })
            })
            .collect();
        let mut out = Vec::with_capacity(grid.len());
        for h in handles {
            out.extend(h.join().expect("scan worker panicked")?);
        }
        Ok(out)
    })
}

fn bisect_energy(parity: Parity, e_a: f64, e_b: f64, cfg: &ShootingConfig) -> Result<(f64, usize)> {
    let (mut lo, mut hi) = if e_a < e_b { (e_a, e_b) } else { (e_b, e_a) };
    let (m_lo, _) = matching_value(parity, lo, cfg)?;
    let s_lo = m_lo.signum();
    for _ in 0..200 {
        if hi - lo <= cfg.e_tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let (m, _) = matching_value(parity, mid, cfg)?;
        if m.signum() == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let e = 0.5 * (lo + hi);
    let (_, nodes) = matching_value(parity, e, cfg)?;
    Ok((e, nodes))
}

/// The lambda the analytic eigenvalue condition assigns to `nu`:
/// `1/(2 nu) + psi(1 - nu)`.
pub fn lambda_effective(nu: f64) -> Result<f64> {
    eigen_equation_residual(nu, 0.0)
}

/// Side-by-side analytic and shooting results for one level.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleComparison {
    pub parity: Parity,
    pub k: u32,
    pub lambda: f64,
    pub nu_analytic: f64,
    pub nu_ode: f64,
    /// `None` for odd states, where `nu` is an integer pole.
    pub lambda_effective: Option<f64>,
    /// `|lambda_eff - lambda|` for even states, `|nu_ode - n|` for odd.
    pub discrepancy: f64,
    pub band: f64,
}

impl OracleComparison {
    pub fn agrees(&self) -> bool {
        self.discrepancy <= self.band
    }
}

/// Runs the shooting oracle at `z_cut = exp(-lambda)` and compares it with
/// the analytic level.
pub fn compare(lambda: f64, parity: Parity, k: u32) -> Result<OracleComparison> {
    let cfg = ShootingConfig::for_level(lambda, parity, k)?;
    let nu_analytic = seed_nu(parity, k, lambda)?;
    let ode = ode_eigenvalue(parity, k, &cfg)?;
    Ok(match parity {
        Parity::Even => {
            let lam_eff = lambda_effective(ode.nu)?;
            OracleComparison {
                parity,
                k,
                lambda,
                nu_analytic,
                nu_ode: ode.nu,
                lambda_effective: Some(lam_eff),
                discrepancy: (lam_eff - lambda).abs(),
                band: EVEN_LAMBDA_BAND,
            }
        }
        Parity::Odd => OracleComparison {
            parity,
            k,
            lambda,
            nu_analytic,
            nu_ode: ode.nu,
            lambda_effective: None,
            discrepancy: (ode.nu - nu_analytic).abs(),
            band: ODD_NU_BAND,
        },
    })
}
