//! Special functions: digamma, Kummer's confluent hypergeometric series,
//! and the coefficients of the logarithmic (even-parity) Coulomb solution.
//!
//! No general gamma function is provided. Every gamma ratio that appears
//! is a Pochhammer product evaluated term by term.

use crate::error::{Error, Result};

/// Arguments closer than this to a non-positive integer are treated as poles.
pub const POLE_THRESHOLD: f64 = 1e-9;

/// Truncation policy for the power series in this module.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesControl {
    pub rel_tol: f64,
    pub max_terms: usize,
}

impl SeriesControl {
    pub fn new(rel_tol: f64, max_terms: usize) -> Result<Self> {
        if !(rel_tol > 0.0 && rel_tol <= 1e-6) {
            return Err(Error::invalid(format!(
                "rel_tol must lie in (0, 1e-6], got {rel_tol}"
            )));
        }
        if max_terms < 50 {
            return Err(Error::invalid(format!(
                "max_terms must be at least 50, got {max_terms}"
            )));
        }
        Ok(Self { rel_tol, max_terms })
    }
}

impl Default for SeriesControl {
    fn default() -> Self {
        Self {
            rel_tol: 1e-14,
            max_terms: 400,
        }
    }
}

/// Distance-based pole test for arguments of digamma-like functions.
pub fn is_nonpositive_integer(x: f64) -> bool {
    x < 0.5 && (x - x.round()).abs() <= POLE_THRESHOLD
}

/// `B_{2k} / (2k)` for k = 1..7.
const ASYMPTOTIC_COEFFS: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// Shift point for the asymptotic expansion. The first omitted term,
/// `B_16 / (16 x^16)`, is below 5e-17 here.
const ASYMPTOTIC_FROM: f64 = 10.0;

/// Digamma function `psi(x) = Gamma'(x) / Gamma(x)`.
///
/// The argument is raised with `psi(x) = psi(x + 1) - 1/x` until it
/// exceeds 10, then the Bernoulli asymptotic series is summed. Negative
/// arguments go through the same recurrence.
pub fn digamma(x: f64) -> Result<f64> {
    if !x.is_finite() {
        return Err(Error::invalid(format!("digamma of non-finite {x}")));
    }
    if is_nonpositive_integer(x) {
        return Err(Error::Pole {
            arg: x,
            threshold: POLE_THRESHOLD,
        });
    }

    let mut x = x;
    let mut shift = 0.0;
    while x < ASYMPTOTIC_FROM {
        shift -= 1.0 / x;
        x += 1.0;
    }

    let inv2 = 1.0 / (x * x);
    let mut tail = 0.0;
    for &c in ASYMPTOTIC_COEFFS.iter().rev() {
        tail = (tail + c) * inv2;
    }
    Ok(shift + x.ln() - 0.5 / x - tail)
}

/// Kummer's function `F(a, b; z) = sum_k (a)_k / (b)_k z^k / k!`.
///
/// A non-positive integer `a` gives a polynomial, which is summed exactly.
pub fn kummer_f(a: f64, b: f64, z: f64, ctrl: SeriesControl) -> Result<f64> {
    if !(a.is_finite() && b.is_finite() && z.is_finite()) {
        return Err(Error::invalid("kummer_f arguments must be finite"));
    }
    if is_nonpositive_integer(b) {
        return Err(Error::invalid(format!(
            "b = {b} is a non-positive integer; F(a, b; z) is undefined"
        )));
    }

    let terminating = a <= 0.0 && a == a.round();
    if terminating {
        let degree = (-a) as usize;
        let mut term = 1.0;
        let mut sum = 1.0;
        for k in 0..degree {
            let kf = k as f64;
            term *= (a + kf) / (b + kf) * z / (kf + 1.0);
            sum += term;
        }
        return Ok(sum);
    }

    let mut term = 1.0;
    let mut sum = 1.0;
    // terms can dip near a ≈ -n before growing again; only stop once the
    // ratio |(a+k) z / ((b+k)(k+1))| has settled below one
    let settle = a.abs() + b.abs() + z.abs();
    for k in 0..ctrl.max_terms {
        let kf = k as f64;
        term *= (a + kf) / (b + kf) * z / (kf + 1.0);
        sum += term;
        if term == 0.0 || (term.abs() <= ctrl.rel_tol * sum.abs() && kf > settle) {
            return Ok(sum);
        }
    }
    Err(Error::Truncation {
        partial_sum: sum,
        terms: ctrl.max_terms,
    })
}

/// The k-th coefficient of the digamma sum inside the even solution,
///
/// `(1-nu)_k [psi(1-nu+k) - psi(k+2) - psi(k+1)] / (k! (k+1)!)`,
///
/// with the gamma ratio `Gamma(1-nu+k)/Gamma(1-nu)` taken as the
/// Pochhammer product `(1-nu)_k`.
pub fn even_series_coefficient(nu: f64, k: usize) -> Result<f64> {
    check_even_nu(nu)?;
    let weight = (0..k).fold(1.0, |acc, j| {
        let jf = j as f64;
        acc * (1.0 - nu + jf) / ((jf + 1.0) * (jf + 2.0))
    });
    let kf = k as f64;
    Ok(weight * (digamma(1.0 - nu + kf)? - digamma(kf + 2.0)? - digamma(kf + 1.0)?))
}

/// Rejects positive-integer `nu`, where the coefficients have poles.
pub(crate) fn check_even_nu(nu: f64) -> Result<()> {
    if !nu.is_finite() {
        return Err(Error::invalid(format!("nu must be finite, got {nu}")));
    }
    if nu > 0.5 && (nu - nu.round()).abs() <= POLE_THRESHOLD {
        return Err(Error::Pole {
            arg: 1.0 - nu,
            threshold: POLE_THRESHOLD,
        });
    }
    Ok(())
}

/// Both series of the even solution summed together:
/// `ln(z) F(1-nu, 2; z) + sum_k c_k z^k`.
///
/// Each step updates the Pochhammer weight `(1-nu)_k / (k! (k+1)!)` once
/// and uses it for both the Kummer term and the digamma coefficient.
pub(crate) fn even_bracket(nu: f64, z: f64, ctrl: SeriesControl) -> Result<f64> {
    check_even_nu(nu)?;
    let a = 1.0 - nu;
    let ln_z = z.ln();
    let mut weight = 1.0;
    let mut power = 1.0;
    let mut sum = 0.0;
    let settle = a.abs() + 2.0 + z.abs();
    for k in 0..ctrl.max_terms {
        let kf = k as f64;
        if k > 0 {
            weight *= (a + kf - 1.0) / (kf * (kf + 1.0));
            power *= z;
        }
        let coeff = digamma(a + kf)? - digamma(kf + 2.0)? - digamma(kf + 1.0)?;
        let scale = weight * power;
        sum += scale * (ln_z + coeff);
        let size = scale.abs() * (ln_z.abs() + coeff.abs());
        if k > 0 && (scale == 0.0 || (size <= ctrl.rel_tol * sum.abs() && kf > settle)) {
            return Ok(sum);
        }
    }
    Err(Error::Truncation {
        partial_sum: sum,
        terms: ctrl.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

    #[test]
    fn digamma_known_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-15);
        assert!((digamma(0.5).unwrap() + 1.963_510_026_021_423_5).abs() < 1e-14);
        let p = digamma(0.5).unwrap();
        assert!((digamma(-0.5).unwrap() - (p + 2.0)).abs() < 1e-14);
    }

    #[test]
    fn digamma_poles() {
        for x in [0.0, -1.0, -2.0, -7.0, -3.0 + 1e-10, -1e-12] {
            assert!(matches!(digamma(x), Err(Error::Pole { .. })), "x = {x}");
        }
        assert!(digamma(-3.0 + 1e-8).is_ok());
        assert!(digamma(f64::INFINITY).is_err());
    }

    #[test]
    fn digamma_large_argument() {
        // psi(x) ~ ln x - 1/(2x) - 1/(12 x^2) at x = 100
        let x = 100.0_f64;
        let approx = x.ln() - 0.5 / x - 1.0 / (12.0 * x * x) + 1.0 / (120.0 * x.powi(4));
        assert!((digamma(x).unwrap() - approx).abs() < 1e-12);
        assert!(digamma(-99.5).unwrap().is_finite());
    }

    #[test]
    fn kummer_examples() {
        let c = SeriesControl::default();
        assert_eq!(kummer_f(0.0, 2.0, 7.3, c).unwrap(), 1.0);
        assert!((kummer_f(-1.0, 2.0, 1.0, c).unwrap() - 0.5).abs() < 1e-15);
        assert!((kummer_f(-2.0, 2.0, 3.0, c).unwrap() + 0.5).abs() < 1e-14);
        assert!((kummer_f(1.0, 1.0, 1.0, c).unwrap() - std::f64::consts::E).abs() < 1e-14);
        assert!((kummer_f(0.7, 1.3, 0.0, c).unwrap() - 1.0) == 0.0);
    }

    #[test]
    fn kummer_errors() {
        let c = SeriesControl::default();
        assert!(kummer_f(0.5, 0.0, 1.0, c).is_err());
        assert!(kummer_f(0.5, -2.0, 1.0, c).is_err());
        let tight = SeriesControl::new(1e-14, 50).unwrap();
        match kummer_f(0.5, 2.0, 90.0, tight) {
            Err(Error::Truncation { partial_sum, terms }) => {
                assert_eq!(terms, 50);
                assert!(partial_sum > 0.0);
            }
            other => panic!("expected truncation, got {other:?}"),
        }
    }

    #[test]
    fn series_control_bounds() {
        assert!(SeriesControl::new(0.0, 100).is_err());
        assert!(SeriesControl::new(1e-5, 100).is_err());
        assert!(SeriesControl::new(1e-10, 49).is_err());
        assert!(SeriesControl::new(1e-6, 50).is_ok());
    }

    #[test]
    fn even_coefficient_examples() {
        let c0 = even_series_coefficient(0.025, 0).unwrap();
        let expect = digamma(0.975).unwrap() - digamma(2.0).unwrap() - digamma(1.0).unwrap();
        assert!((c0 - expect).abs() < 1e-15);

        let c1 = even_series_coefficient(0.5, 1).unwrap();
        let expect =
            0.5 * (digamma(1.5).unwrap() - digamma(3.0).unwrap() - digamma(2.0).unwrap()) / 2.0;
        assert!(
            (c1 - expect).abs() < 1e-14 * expect.abs(),
            "{c1:e} vs {expect:e}"
        );

        assert!(matches!(
            even_series_coefficient(2.0, 3),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            even_series_coefficient(1.0, 0),
            Err(Error::Pole { .. })
        ));
    }
}
