//! Physicists' Hermite polynomials and the normalized Hermite functions
//! (harmonic-oscillator eigenfunctions).

use std::f64::consts::PI;

/// Physicists' Hermite polynomial `H_n(x)` by the three-term recurrence
/// `H_{k+1} = 2x H_k - 2k H_{k-1}`.
///
/// Overflows for large `n x^2`; use [`eval_hermite_fn`] when the Gaussian
/// weight is wanted anyway.
pub fn eval_hermite(n: u32, x: f64) -> f64 {
    let mut prev = 1.0;
    if n == 0 {
        return prev;
    }
    let mut cur = 2.0 * x;
    for k in 1..n {
        let next = 2.0 * x * cur - 2.0 * f64::from(k) * prev;
        prev = cur;
        cur = next;
    }
    cur
}

const RESCALE_ABOVE: f64 = 1e150;

/// Normalized Hermite function
/// `psi_n(x) = H_n(x) exp(-x^2/2) / (pi^{1/4} sqrt(2^n n!))`.
///
/// Runs the recurrence on the normalized functions,
/// `h_{k+1} = x sqrt(2/(k+1)) h_k - sqrt(k/(k+1)) h_{k-1}`,
/// with the Gaussian factor carried as a separate logarithmic scale, so the
/// result neither overflows nor underflows prematurely for large `n`.
pub fn eval_hermite_fn(n: u32, x: f64) -> f64 {
    let mut log_scale = -0.5 * x * x - 0.25 * PI.ln();
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let k = f64::from(k);
        let next = x * (2.0 / (k + 1.0)).sqrt() * cur - (k / (k + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE_ABOVE {
            cur /= RESCALE_ABOVE;
            prev /= RESCALE_ABOVE;
            log_scale += RESCALE_ABOVE.ln();
        }
    }
    cur * log_scale.exp()
}

/// Samples of [`eval_hermite_fn`] at every point of `xs`.
pub fn hermite_fn_samples(n: u32, xs: impl Iterator<Item = f64>) -> Vec<f64> {
    xs.map(|x| eval_hermite_fn(n, x)).collect()
}
