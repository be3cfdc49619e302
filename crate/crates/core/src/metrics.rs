//! Scalar figures of merit: fidelities, outcome densities and the
//! acceptance-window averages.

use crate::error::{Error, Result};
use crate::gate::{
    exact_factor, exact_output, gate_grid, perfect_cat, semiclassical_output, GateParams,
    MIN_PROBABILITY,
};
use crate::numerics::{
    eval_hermite_fn, exp_into, integrate_fn, integrate_real, inv_sqrt_one_plus_into,
    product_coeff, Grid1D, Sign,
};
use crate::states::{assemble_cat, coherent_wavefunction, overlap, CoherentParams, WaveFunctionGrid};
use std::f64::consts::PI;

/// Initial node count for window integrals.
pub const WINDOW_NODES: usize = 201;
/// Target difference between successive window-integral refinements.
pub const WINDOW_TOL: f64 = 1e-9;
const WINDOW_MAX_LEVELS: u32 = 12;

/// `|<a|b>|^2` without clamping.
pub fn fidelity_raw(a: &WaveFunctionGrid, b: &WaveFunctionGrid) -> Result<f64> {
    Ok(overlap(a, b)?.norm_sqr())
}

/// `|<a|b>|^2` for unit-norm states on the same grid, clamped to `[0, 1]`.
pub fn fidelity(a: &WaveFunctionGrid, b: &WaveFunctionGrid) -> Result<f64> {
    Ok(fidelity_raw(a, b)?.clamp(0.0, 1.0))
}

fn coherent_on_gate_grid(params: GateParams, input: CoherentParams) -> Result<WaveFunctionGrid> {
    coherent_wavefunction(input, gate_grid(params, input.x0))
}

/// Fidelity between the exact and semiclassical outputs for a coherent input.
pub fn fidelity_scl(params: GateParams, input: CoherentParams) -> Result<f64> {
    let psi = coherent_on_gate_grid(params, input)?;
    let exact = exact_output(params, &psi)?;
    let scl = semiclassical_output(params, &psi)?;
    fidelity(&exact.state, &scl)
}

/// Fidelity between the exact output and the perfect cat for a coherent input.
pub fn fidelity_cat(params: GateParams, input: CoherentParams) -> Result<f64> {
    let psi = coherent_on_gate_grid(params, input)?;
    let exact = exact_output(params, &psi)?;
    let cat = assemble_cat(&perfect_cat(params, input)?, *psi.grid())?;
    fidelity(&exact.state, &cat)
}

/// [`fidelity_cat`] for the coherent input `(x0, 0)`. The result does not
/// depend on the input momentum.
pub fn fidelity_cat_scan(n: u32, y_m: f64, x0: f64) -> Result<f64> {
    fidelity_cat(GateParams::new(n, y_m)?, CoherentParams::new(x0, 0.0)?)
}

/// Probability density of the homodyne outcome `y_m` for the coherent input
/// centred at `x0`, from the generating function
/// `(2(1 - rho))^{-1/2} exp(-D^2 (1 - rho)/2)`, `D = y_m - x0`.
///
/// Every term of the coefficient sum is positive, so there is no
/// cancellation for any `n`.
pub fn outcome_density(n: u32, x0: f64, y_m: f64) -> f64 {
    let order = n as usize;
    let half_sq = 0.5 * (y_m - x0).powi(2);
    let mut binom = vec![0.0; order + 1];
    inv_sqrt_one_plus_into(Sign::Minus, &mut binom);
    let mut arg = vec![0.0; order + 1];
    if order > 0 {
        arg[1] = half_sq;
    }
    let mut expo = vec![0.0; order + 1];
    exp_into(&arg, &mut expo);
    let coeff = product_coeff(&binom, &expo, order);
    (-half_sq).exp() * coeff / (2.0 * PI).sqrt()
}

/// [`outcome_density`] by direct quadrature of
/// `|psi_in(x)|^2 psi_n(x - y_m)^2` on the default gate grid.
pub fn outcome_density_quadrature(n: u32, x0: f64, y_m: f64) -> Result<f64> {
    let params = GateParams::new(n, y_m)?;
    let grid = gate_grid(params, x0);
    let integrand: Vec<f64> = grid
        .points()
        .map(|x| (-(x - x0).powi(2)).exp() / PI.sqrt() * eval_hermite_fn(n, x - y_m).powi(2))
        .collect();
    integrate_real(&integrand, &grid)
}

/// Accepted outcomes `[center - width/2, center + width/2]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AcceptanceWindow {
    pub center: f64,
    pub width: f64,
}

impl AcceptanceWindow {
    pub fn new(center: f64, width: f64) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::InvalidParameter {
                name: "center",
                reason: format!("must be finite, got {center}"),
            });
        }
        if !(width > 0.0 && width.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "width",
                reason: format!("must be positive, got {width}"),
            });
        }
        Ok(Self { center, width })
    }

    pub fn bounds(&self) -> (f64, f64) {
        (self.center - 0.5 * self.width, self.center + 0.5 * self.width)
    }

    fn integrate(&self, f: impl Fn(f64) -> Result<f64>) -> Result<f64> {
        let (lo, hi) = self.bounds();
        integrate_fn(f, lo, hi, WINDOW_NODES, WINDOW_TOL, WINDOW_MAX_LEVELS)
    }
}

/// Probability that the outcome falls inside `window`.
pub fn window_probability(n: u32, x0: f64, window: AcceptanceWindow) -> Result<f64> {
    window.integrate(|y| Ok(outcome_density(n, x0, y)))
}

/// Outcome-weighted fidelity over an acceptance window and the probability
/// of accepting.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MixedFidelity {
    pub fidelity: f64,
    pub probability: f64,
}

/// `F_mix = (1/P_mix) int P(y) F_cat(y) dy` over a window centred at `x0`.
///
/// The reference is the single perfect cat of the window centre; every
/// accepted outcome is compared with that same state.
pub fn mixed_fidelity(n: u32, input: CoherentParams, window: AcceptanceWindow) -> Result<MixedFidelity> {
    if (window.center - input.x0).abs() > 1e-12 {
        return Err(Error::InvalidParameter {
            name: "window",
            reason: format!(
                "must be centred at x0 = {}, got {}",
                input.x0, window.center
            ),
        });
    }
    let center = GateParams::new(n, window.center)?;
    let (lo, hi) = window.bounds();
    // One grid wide enough for every accepted outcome.
    let half = crate::numerics::TAIL_MARGIN + center.radius();
    let grid = Grid1D::covering(
        &[(input.x0 - half, input.x0 + half), (lo - half, hi + half)],
        crate::numerics::DEFAULT_COUNT,
    )?;
    let psi = coherent_wavefunction(input, grid)?;
    let cat = assemble_cat(&perfect_cat(center, input)?, grid)?;

    let probability = window_probability(n, input.x0, window)?;
    if !(probability >= MIN_PROBABILITY) {
        return Err(Error::ZeroProbability(probability));
    }
    // P(y) F_cat(y) is the squared overlap with the unnormalized output.
    let weighted = window.integrate(|y| {
        let params = GateParams { n, y_m: y };
        let out = psi.multiply(|x| exact_factor(params, x));
        Ok(overlap(&cat, &out)?.norm_sqr())
    })?;
    Ok(MixedFidelity {
        fidelity: (weighted / probability).clamp(0.0, 1.0),
        probability,
    })
}
