//! Input and reference states sampled in the coordinate representation:
//! coherent states, Fock states and two-component coherent superpositions.

use num_complex::Complex64;
use std::f64::consts::{FRAC_1_SQRT_2, PI, SQRT_2};

use crate::error::{Error, Result};
use crate::numerics::{eval_hermite_fn, integrate, Grid1D, TAIL_MARGIN};

/// Coherent-state amplitude given by its quadratures, `alpha = (x0 + i p0)/sqrt(2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CoherentParams {
    pub x0: f64,
    pub p0: f64,
}

impl CoherentParams {
    pub fn new(x0: f64, p0: f64) -> Result<Self> {
        if !x0.is_finite() || !p0.is_finite() {
            return Err(Error::InvalidParameter {
                name: "coherent amplitude",
                reason: format!("quadratures must be finite, got ({x0}, {p0})"),
            });
        }
        Ok(Self { x0, p0 })
    }

    pub fn vacuum() -> Self {
        Self { x0: 0.0, p0: 0.0 }
    }

    pub fn from_alpha(alpha: Complex64) -> Self {
        Self {
            x0: SQRT_2 * alpha.re,
            p0: SQRT_2 * alpha.im,
        }
    }

    pub fn alpha(&self) -> Complex64 {
        Complex64::new(self.x0, self.p0) * FRAC_1_SQRT_2
    }

    /// Coordinate window the state needs on a grid.
    pub fn support(&self) -> (f64, f64) {
        (self.x0 - TAIL_MARGIN, self.x0 + TAIL_MARGIN)
    }

    /// `<x|alpha> = pi^{-1/4} exp(-(x - x0)^2/2 + i p0 x - i p0 x0/2)`.
    pub fn amplitude_at(&self, x: f64) -> Complex64 {
        let dx = x - self.x0;
        let phase = self.p0 * x - 0.5 * self.p0 * self.x0;
        Complex64::from_polar(PI.powf(-0.25) * (-0.5 * dx * dx).exp(), phase)
    }
}

/// `<alpha|beta> = exp(-|alpha|^2/2 - |beta|^2/2 + conj(alpha) beta)`.
pub fn coherent_overlap(alpha: Complex64, beta: Complex64) -> Complex64 {
    (-0.5 * alpha.norm_sqr() - 0.5 * beta.norm_sqr() + alpha.conj() * beta).exp()
}

/// Complex samples `psi(x_k)` of a one-dimensional wavefunction.
#[derive(Clone, Debug, PartialEq)]
pub struct WaveFunctionGrid {
    grid: Grid1D,
    values: Vec<Complex64>,
}

impl WaveFunctionGrid {
    pub fn new(grid: Grid1D, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::LengthMismatch {
                expected: grid.count(),
                got: values.len(),
            });
        }
        Ok(Self { grid, values })
    }

    /// Samples `f` at every grid point.
    pub fn from_fn(grid: Grid1D, f: impl Fn(f64) -> Complex64) -> Self {
        let values = grid.points().map(f).collect();
        Self { grid, values }
    }

    pub fn grid(&self) -> &Grid1D {
        &self.grid
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    /// `|psi(x_k)|^2` at every grid point.
    pub fn density(&self) -> Vec<f64> {
        self.values.iter().map(|v| v.norm_sqr()).collect()
    }

    /// `int |psi|^2 dx`.
    pub fn norm_sqr(&self) -> f64 {
        let dens: Vec<Complex64> = self.values.iter().map(|v| v.norm_sqr().into()).collect();
        integrate(&dens, &self.grid).expect("lengths agree by construction").re
    }

    /// Pointwise product with `factor(x)`.
    pub fn multiply(&self, factor: impl Fn(f64) -> Complex64) -> Self {
        let values = self
            .grid
            .points()
            .zip(&self.values)
            .map(|(x, v)| v * factor(x))
            .collect();
        Self { grid: self.grid, values }
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            grid: self.grid,
            values: self.values.iter().map(|v| v * factor).collect(),
        }
    }

    /// Unit-norm copy of the state.
    pub fn normalized(&self) -> Result<Self> {
        let norm = self.norm_sqr();
        if !(norm > 0.0) || !norm.is_finite() {
            return Err(Error::ZeroState);
        }
        Ok(self.scaled(norm.sqrt().recip()))
    }

    /// Largest sample magnitude at the two grid ends.
    pub fn edge_magnitude(&self) -> f64 {
        let n = self.values.len();
        self.values[0].norm().max(self.values[n - 1].norm())
    }
}

/// Coherent state `|alpha>` sampled on `grid`, which must cover
/// `[x0 - 8, x0 + 8]`.
pub fn coherent_wavefunction(params: CoherentParams, grid: Grid1D) -> Result<WaveFunctionGrid> {
    let (lo, hi) = params.support();
    grid.require_window(lo, hi)?;
    Ok(WaveFunctionGrid::from_fn(grid, |x| params.amplitude_at(x)))
}

/// Fock state `|n>` sampled on `grid`, which must cover
/// `[-(sqrt(2n+1) + 8), sqrt(2n+1) + 8]`.
pub fn fock_wavefunction(n: u32, grid: Grid1D) -> Result<WaveFunctionGrid> {
    let half = f64::from(2 * n + 1).sqrt() + TAIL_MARGIN;
    grid.require_window(-half, half)?;
    Ok(WaveFunctionGrid::from_fn(grid, |x| eval_hermite_fn(n, x).into()))
}

/// `e^{i theta}|alpha_+> + s e^{-i theta}|alpha_->` with `s = parity_sign`,
/// normalized by `1/sqrt(norm_factor)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CatSuperposition {
    pub alpha_plus: Complex64,
    pub alpha_minus: Complex64,
    pub phase_theta: f64,
    pub parity_sign: f64,
    pub norm_factor: f64,
}

impl CatSuperposition {
    /// Builds the superposition and its normalization from the analytic
    /// two-state Gram matrix,
    /// `N = 2 + 2 s Re(e^{-2 i theta} <alpha_+|alpha_->)`.
    pub fn new(
        alpha_plus: Complex64,
        alpha_minus: Complex64,
        phase_theta: f64,
        parity_sign: f64,
    ) -> Result<Self> {
        if parity_sign != 1.0 && parity_sign != -1.0 {
            return Err(Error::InvalidParameter {
                name: "parity_sign",
                reason: format!("expected +1 or -1, got {parity_sign}"),
            });
        }
        let cross = Complex64::from_polar(1.0, -2.0 * phase_theta)
            * coherent_overlap(alpha_plus, alpha_minus);
        let norm_factor = 2.0 + 2.0 * parity_sign * cross.re;
        if !(norm_factor > 1e-12) {
            return Err(Error::ZeroState);
        }
        Ok(Self {
            alpha_plus,
            alpha_minus,
            phase_theta,
            parity_sign,
            norm_factor,
        })
    }

    /// Parity sign `(-1)^n`.
    pub fn parity_of(n: u32) -> f64 {
        if n % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }

    pub fn components(&self) -> (CoherentParams, CoherentParams) {
        (
            CoherentParams::from_alpha(self.alpha_plus),
            CoherentParams::from_alpha(self.alpha_minus),
        )
    }

    pub fn amplitude_at(&self, x: f64) -> Complex64 {
        let (plus, minus) = self.components();
        let a = Complex64::from_polar(1.0, self.phase_theta) * plus.amplitude_at(x);
        let b = Complex64::from_polar(self.parity_sign, -self.phase_theta) * minus.amplitude_at(x);
        (a + b) / self.norm_factor.sqrt()
    }
}

/// Samples the normalized cat on `grid`; the grid must cover the support of
/// both components.
pub fn assemble_cat(cat: &CatSuperposition, grid: Grid1D) -> Result<WaveFunctionGrid> {
    let (plus, minus) = cat.components();
    for (lo, hi) in [plus.support(), minus.support()] {
        grid.require_window(lo, hi)?;
    }
    Ok(WaveFunctionGrid::from_fn(grid, |x| cat.amplitude_at(x)))
}

/// `int conj(a) b dx` for two states on the same grid.
pub fn overlap(a: &WaveFunctionGrid, b: &WaveFunctionGrid) -> Result<Complex64> {
    if !a.grid.same_as(&b.grid) {
        return Err(Error::GridMismatch);
    }
    let prod: Vec<Complex64> = a.values.iter().zip(&b.values).map(|(u, v)| u.conj() * v).collect();
    integrate(&prod, &a.grid)
}
