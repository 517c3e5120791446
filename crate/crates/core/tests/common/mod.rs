//! Reference implementations used only by the test suites. Nothing here
//! calls into the library's special functions.
#![allow(dead_code)]

/// Neumaier-compensated running sum.
#[derive(Default, Clone, Copy)]
pub struct CompensatedSum {
    sum: f64,
    carry: f64,
}

impl CompensatedSum {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.carry += (self.sum - t) + x;
        } else {
            self.carry += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.carry
    }
}

const HARMONIC_TERMS: usize = 100_000;

/// Euler's constant as `H_N - ln N` with its Euler-Maclaurin corrections.
pub fn euler_gamma() -> f64 {
    let n = HARMONIC_TERMS as f64;
    let mut s = CompensatedSum::default();
    for i in (1..=HARMONIC_TERMS).rev() {
        s.add(1.0 / i as f64);
    }
    s.add(-n.ln());
    s.add(-0.5 / n);
    s.add(1.0 / (12.0 * n * n));
    s.add(-1.0 / (120.0 * n.powi(4)));
    s.value()
}

/// `psi(x) = -gamma + sum_{n>=0} (x-1)/((n+1)(n+x))` for non-pole `x`,
/// with the tail past `N` terms taken from its Euler-Maclaurin form.
pub fn digamma_series(x: f64) -> f64 {
    let n_terms = HARMONIC_TERMS;
    let mut s = CompensatedSum::default();
    for i in (0..n_terms).rev() {
        let n = i as f64;
        s.add((x - 1.0) / ((n + 1.0) * (n + x)));
    }
    let big = n_terms as f64;
    let (a, b) = (big + x, big + 1.0);
    let tail =
        ((x - 1.0) / b).ln_1p() - 0.5 / a + 0.5 / b - 1.0 / (12.0 * a * a) + 1.0 / (12.0 * b * b);
    s.add(tail);
    s.add(-euler_gamma());
    s.value()
}

/// `psi'(x) = sum_{n>=0} 1/(n+x)^2`.
pub fn trigamma_series(x: f64) -> f64 {
    let n_terms = HARMONIC_TERMS;
    let mut s = CompensatedSum::default();
    for i in (0..n_terms).rev() {
        let t = i as f64 + x;
        s.add(1.0 / (t * t));
    }
    let a = n_terms as f64 + x;
    s.add(1.0 / a + 0.5 / (a * a) + 1.0 / (6.0 * a * a * a));
    s.value()
}

/// Second derivative by centered differences.
pub fn second_difference<F: Fn(f64) -> f64>(f: F, z: f64, h: f64) -> f64 {
    (f(z + h) - 2.0 * f(z) + f(z - h)) / (h * h)
}
