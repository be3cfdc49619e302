use num_complex::Complex64;
use std::ops::{Add, Mul};

use super::Grid1D;
use crate::error::{Error, Result};

fn weighted_sum<T>(samples: &[T], h: f64) -> T
where
    T: Copy + Add<Output = T> + Mul<f64, Output = T> + Default,
{
    let n = samples.len();
    if n % 2 == 1 {
        // composite Simpson
        let mut odd = T::default();
        let mut even = T::default();
        for (k, &v) in samples.iter().enumerate().take(n - 1).skip(1) {
            if k % 2 == 1 {
                odd = odd + v;
            } else {
                even = even + v;
            }
        }
        (samples[0] + samples[n - 1] + odd * 4.0 + even * 2.0) * (h / 3.0)
    } else {
        let mut inner = T::default();
        for &v in &samples[1..n - 1] {
            inner = inner + v;
        }
        (samples[0] * 0.5 + samples[n - 1] * 0.5 + inner) * h
    }
}

fn check_len(len: usize, grid: &Grid1D) -> Result<()> {
    if len != grid.count() {
        return Err(Error::LengthMismatch {
            expected: grid.count(),
            got: len,
        });
    }
    Ok(())
}

/// Integral of sampled values over the grid: composite Simpson for an odd
/// sample count, composite trapezoid otherwise.
pub fn integrate(samples: &[Complex64], grid: &Grid1D) -> Result<Complex64> {
    check_len(samples.len(), grid)?;
    Ok(weighted_sum(samples, grid.spacing()))
}

/// Real-valued counterpart of [`integrate`].
pub fn integrate_real(samples: &[f64], grid: &Grid1D) -> Result<f64> {
    check_len(samples.len(), grid)?;
    Ok(weighted_sum(samples, grid.spacing()))
}

/// Integral of `f` over `[a, b]` by composite Simpson on a uniform mesh,
/// starting from `initial_nodes` nodes and halving the step until two
/// successive estimates differ by less than `tol` (absolute).
///
/// Previously computed samples are reused at every refinement. Returns the
/// finest estimate reached after at most `max_levels` halvings.
pub fn integrate_fn<F>(f: F, a: f64, b: f64, initial_nodes: usize, tol: f64, max_levels: u32) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    if !(a < b) {
        return Err(Error::InvalidParameter {
            name: "interval",
            reason: format!("expected a < b, got [{a}, {b}]"),
        });
    }
    // Simpson needs an even number of panels.
    let mut panels = initial_nodes.max(3) - 1;
    panels += panels % 2;
    let mut h = (b - a) / panels as f64;
    let ends = f(a)? + f(b)?;
    let mut odd = 0.0;
    let mut even = 0.0;
    for k in 1..panels {
        let v = f(a + k as f64 * h)?;
        if k % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    let mut estimate = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
    for _ in 0..max_levels {
        // Old nodes all become even nodes of the refined mesh.
        even += odd;
        h *= 0.5;
        panels *= 2;
        odd = 0.0;
        for k in (1..panels).step_by(2) {
            odd += f(a + k as f64 * h)?;
        }
        let refined = h / 3.0 * (ends + 4.0 * odd + 2.0 * even);
        let delta = (refined - estimate).abs();
        estimate = refined;
        if delta < tol {
            break;
        }
    }
    Ok(estimate)
}
