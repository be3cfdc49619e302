//! Wigner functions of gate outputs.
//!
//! Two engines are provided:
//!
//! * [`wigner_mehler`] evaluates the exact output Wigner function of a
//!   coherent input in closed form, extracting one power-series coefficient
//!   per phase-space point. No integrals are evaluated.
//! * [`wigner_quadrature`] integrates
//!   `W(x, p) = (1/pi) int conj(psi(x + z)) psi(x - z) e^{2ipz} dz`
//!   for any sampled state and serves as the reference.
//!
//! With `x~ = x - y_m`, `p~ = p - p0` and `D = y_m - x0` the series form is
//! `W = W0 W~_n / N_n` where
//! `W0 = exp(-2 (x~ + D/2)^2 - p~^2/2) / pi`,
//! `W~_n` is the `rho^n` coefficient of
//! `(1 + rho)^{-1/2} exp(2 x~^2 rho/(1 + rho) + p~^2 rho/2)` and
//! `N_n` the `rho^n` coefficient of `exp(rho D^2/2) (1 - rho)^{-1/2}`.
//! The offset `D` is measured from the input position `x0`.

use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::gate::{exact_output, GateParams};
use crate::numerics::{
    exp_into, integrate_real, inv_sqrt_one_plus_into, product_coeff, Grid1D, Sign, TAIL_MARGIN,
};
use crate::states::{assemble_cat, coherent_wavefunction, CatSuperposition, CoherentParams, WaveFunctionGrid};

/// Default number of samples per axis.
pub const DEFAULT_AXIS_COUNT: usize = 201;
/// Largest state-grid spacing used by the quadrature engine.
pub const MAX_STATE_SPACING: f64 = 0.02;
/// The quadrature engine needs `|psi|` below this at the ends of the state grid.
pub const EDGE_TOLERANCE: f64 = 1e-12;

/// `W(x_j, p_k)` on a rectangular grid, stored with `p` varying fastest.
#[derive(Clone, Debug, PartialEq)]
pub struct WignerGrid {
    x_axis: Grid1D,
    p_axis: Grid1D,
    values: Vec<f64>,
}

impl WignerGrid {
    pub fn new(x_axis: Grid1D, p_axis: Grid1D, values: Vec<f64>) -> Result<Self> {
        let expected = x_axis.count() * p_axis.count();
        if values.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: values.len(),
            });
        }
        Ok(Self { x_axis, p_axis, values })
    }

    pub fn x_axis(&self) -> &Grid1D {
        &self.x_axis
    }

    pub fn p_axis(&self) -> &Grid1D {
        &self.p_axis
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn get(&self, j: usize, k: usize) -> f64 {
        self.values[j * self.p_axis.count() + k]
    }

    /// Values along `p` at `x_j`.
    pub fn row(&self, j: usize) -> &[f64] {
        let m = self.p_axis.count();
        &self.values[j * m..(j + 1) * m]
    }

    /// `int W(x_j, p) dp` for every `x_j`.
    pub fn x_marginal(&self) -> Vec<f64> {
        (0..self.x_axis.count())
            .map(|j| integrate_real(self.row(j), &self.p_axis).expect("row length matches axis"))
            .collect()
    }

    /// `int int W dx dp`.
    pub fn integral(&self) -> f64 {
        integrate_real(&self.x_marginal(), &self.x_axis).expect("marginal length matches axis")
    }

    /// Largest pointwise difference to a grid on the same axes.
    pub fn max_abs_diff(&self, other: &WignerGrid) -> Result<f64> {
        if !self.x_axis.same_as(&other.x_axis) || !self.p_axis.same_as(&other.p_axis) {
            return Err(Error::GridMismatch);
        }
        Ok(self
            .values
            .iter()
            .zip(&other.values)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max))
    }
}

/// Default plotting window: `x` within 6 of the midpoint between `x0` and
/// `y_m`, `p` within `sqrt(2n+1) + 4` of `p0`.
pub fn default_axes(params: GateParams, input: CoherentParams, count: usize) -> Result<(Grid1D, Grid1D)> {
    let x_c = 0.5 * (input.x0 + params.y_m);
    let x_axis = Grid1D::centered(x_c, 6.0, count)?;
    let p_axis = Grid1D::centered(input.p0, params.radius() + 4.0, count)?;
    Ok((x_axis, p_axis))
}

/// Per-configuration constants of the series engine.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MehlerContext {
    pub n: u32,
    /// `y_m - x0`.
    pub delta: f64,
    /// `rho^n` coefficient of `exp(rho delta^2/2) (1 - rho)^{-1/2}`.
    pub norm: f64,
}

impl MehlerContext {
    pub fn new(params: GateParams, input: CoherentParams) -> Self {
        let order = params.n as usize;
        let delta = params.y_m - input.x0;
        let mut binom = vec![0.0; order + 1];
        inv_sqrt_one_plus_into(Sign::Minus, &mut binom);
        let mut arg = vec![0.0; order + 1];
        let mut expo = vec![0.0; order + 1];
        if order > 0 {
            arg[1] = 0.5 * delta * delta;
        }
        exp_into(&arg, &mut expo);
        Self {
            n: params.n,
            delta,
            norm: product_coeff(&binom, &expo, order),
        }
    }
}

/// Row factor of the series engine at fixed `x~`: the polynomial in
/// `t = p~^2/2` whose value is `W~_n`.
///
/// `W~_n = sum_k A_k t^{n-k}/(n-k)!` where `A_k` are the coefficients of
/// `(1 + rho)^{-1/2} exp(2 x~^2 rho/(1 + rho))`, so the `O(n^2)` series work
/// is done once per row and each point costs one Horner evaluation.
fn row_polynomial(n: u32, xt: f64) -> Vec<f64> {
    let order = n as usize;
    let two_x2 = 2.0 * xt * xt;
    // 2 x~^2 rho/(1 + rho) = 2 x~^2 (rho - rho^2 + rho^3 - ...)
    let arg: Vec<f64> = (0..=order)
        .map(|k| match k {
            0 => 0.0,
            k if k % 2 == 1 => two_x2,
            _ => -two_x2,
        })
        .collect();
    let mut expo = vec![0.0; order + 1];
    exp_into(&arg, &mut expo);
    let mut binom = vec![0.0; order + 1];
    inv_sqrt_one_plus_into(Sign::Plus, &mut binom);
    // c_j = A_{n-j} / j!
    let mut inv_fact = 1.0;
    (0..=order)
        .map(|j| {
            if j > 0 {
                inv_fact /= j as f64;
            }
            product_coeff(&binom, &expo, order - j) * inv_fact
        })
        .collect()
}

fn horner(coeffs: &[f64], t: f64) -> f64 {
    coeffs.iter().rev().fold(0.0, |acc, c| acc * t + c)
}

/// Exact output Wigner function of a coherent input, by the series engine.
///
/// Each row costs `O(n^2)` and each point `O(n)`. Rows are filled in
/// parallel and every value depends only on its own coordinates, so the
/// result is deterministic.
pub fn wigner_mehler(params: GateParams, input: CoherentParams, x_axis: Grid1D, p_axis: Grid1D) -> WignerGrid {
    let ctx = MehlerContext::new(params, input);
    let m = p_axis.count();
    let columns: Vec<(f64, f64)> = p_axis
        .points()
        .map(|p| {
            let t = 0.5 * (p - input.p0).powi(2);
            (t, (-t).exp())
        })
        .collect();
    let mut values = vec![0.0; x_axis.count() * m];
    values.par_chunks_mut(m).enumerate().for_each(|(j, row)| {
        let xt = x_axis.point(j) - params.y_m;
        let poly = row_polynomial(params.n, xt);
        let x_factor = (-2.0 * (xt + 0.5 * ctx.delta).powi(2)).exp() / (PI * ctx.norm);
        for (slot, &(t, p_factor)) in row.iter_mut().zip(&columns) {
            *slot = x_factor * p_factor * horner(&poly, t);
        }
    });
    WignerGrid { x_axis, p_axis, values }
}

/// State grid whose nodes include every point of `axis` and which covers
/// `[lo, hi]`, with spacing `axis.spacing() / refine`.
pub fn aligned_grid(axis: &Grid1D, lo: f64, hi: f64, refine: usize) -> Result<Grid1D> {
    if refine == 0 {
        return Err(Error::InvalidParameter {
            name: "refine",
            reason: "must be at least 1".into(),
        });
    }
    let h = axis.spacing() / refine as f64;
    let below = ((axis.x_min() - lo) / h).ceil().max(0.0) as usize;
    let above = ((hi - axis.x_max()) / h).ceil().max(0.0) as usize;
    let count = below + (axis.count() - 1) * refine + above + 1;
    Grid1D::new(
        axis.x_min() - below as f64 * h,
        axis.x_max() + above as f64 * h,
        count,
    )
}

/// State grid for [`wigner_quadrature`] of an output with the given input:
/// aligned with `x_axis`, covering the input support and the axis, spacing
/// at most [`MAX_STATE_SPACING`].
pub fn quadrature_state_grid(input: CoherentParams, x_axis: &Grid1D) -> Result<Grid1D> {
    let refine = (x_axis.spacing() / MAX_STATE_SPACING).ceil().max(1.0) as usize;
    let lo = (input.x0 - TAIL_MARGIN).min(x_axis.x_min());
    let hi = (input.x0 + TAIL_MARGIN).max(x_axis.x_max());
    aligned_grid(x_axis, lo, hi, refine)
}

/// Half-node index `s` with `x = x_min + s h/2`.
fn half_node_index(grid: &Grid1D, x: f64) -> Result<usize> {
    let s = 2.0 * (x - grid.x_min()) / grid.spacing();
    let r = s.round();
    if (s - r).abs() > 1e-6 || r < 0.0 || r > 2.0 * (grid.count() - 1) as f64 {
        return Err(Error::MisalignedAxis(x));
    }
    Ok(r as usize)
}

/// Wigner function of a sampled state by direct quadrature.
///
/// Every `x` of `x_axis` must be a node or a midpoint between two nodes of
/// the state grid. The integral runs over all node pairs `(i, s - i)`
/// symmetric about `x`, so `z` steps by the state spacing and `z_max` is the
/// distance to the nearer grid end.
pub fn wigner_quadrature(state: &WaveFunctionGrid, x_axis: Grid1D, p_axis: Grid1D) -> Result<WignerGrid> {
    let grid = *state.grid();
    let edge = state.edge_magnitude();
    if edge >= EDGE_TOLERANCE {
        return Err(Error::TruncatedState(edge));
    }
    let indices: Vec<usize> = x_axis
        .points()
        .map(|x| half_node_index(&grid, x))
        .collect::<Result<_>>()?;
    let psi = state.values();
    let h = grid.spacing();
    let last = grid.count() - 1;
    let m = p_axis.count();
    let mut values = vec![0.0; x_axis.count() * m];
    values.par_chunks_mut(m).enumerate().for_each(|(j, row)| {
        let s = indices[j];
        // i runs over nodes with s - i also on the grid.
        let i_lo = s.saturating_sub(last);
        let i_hi = s.min(last);
        let products: Vec<Complex64> = (i_lo..=i_hi).map(|i| psi[i].conj() * psi[s - i]).collect();
        // z_i = x_i - x = (2i - s) h/2
        let z0 = (2.0 * i_lo as f64 - s as f64) * 0.5 * h;
        for (k, slot) in row.iter_mut().enumerate() {
            let p = p_axis.point(k);
            let step = Complex64::from_polar(1.0, 2.0 * p * h);
            let mut phase = Complex64::from_polar(1.0, 2.0 * p * z0);
            let mut acc = 0.0;
            for c in &products {
                acc += (c * phase).re;
                phase *= step;
            }
            *slot = acc * h / PI;
        }
    });
    WignerGrid::new(x_axis, p_axis, values)
}

/// Exact output state of a coherent input on the grid chosen by
/// [`quadrature_state_grid`], together with its quadrature Wigner function.
pub fn wigner_exact_quadrature(
    params: GateParams,
    input: CoherentParams,
    x_axis: Grid1D,
    p_axis: Grid1D,
) -> Result<(WaveFunctionGrid, WignerGrid)> {
    let grid = quadrature_state_grid(input, &x_axis)?;
    let out = exact_output(params, &coherent_wavefunction(input, grid)?)?;
    let w = wigner_quadrature(&out.state, x_axis, p_axis)?;
    Ok((out.state, w))
}

/// Wigner function of a reference cat, by quadrature of its assembled
/// wavefunction.
pub fn wigner_cat_reference(cat: &CatSuperposition, x_axis: Grid1D, p_axis: Grid1D) -> Result<WignerGrid> {
    let (a, b) = cat.components();
    let refine = (x_axis.spacing() / MAX_STATE_SPACING).ceil().max(1.0) as usize;
    let lo = (a.x0.min(b.x0) - TAIL_MARGIN).min(x_axis.x_min());
    let hi = (a.x0.max(b.x0) + TAIL_MARGIN).max(x_axis.x_max());
    let grid = aligned_grid(&x_axis, lo, hi, refine)?;
    wigner_quadrature(&assemble_cat(cat, grid)?, x_axis, p_axis)
}
