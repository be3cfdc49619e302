//! The measurement-induced cat gate: a target oscillator is entangled with an
//! ancilla in the Fock state `|n>` by `C_Z = exp(i q q_a)`, and the ancilla
//! momentum is measured with outcome `y_m`.
//!
//! The target wavefunction is multiplied by a factor that depends only on
//! `n`, `y_m` and `x`. This module provides that factor exactly, its
//! semiclassical approximation, and the "perfect" cat states obtained by
//! linearizing the semiclassical phase.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::{eval_hermite_fn, Grid1D, DEFAULT_COUNT, TAIL_MARGIN};
use crate::states::{CatSuperposition, CoherentParams, WaveFunctionGrid};

/// Output probability densities below this are treated as impossible outcomes.
pub const MIN_PROBABILITY: f64 = 1e-300;

/// Relative size of the output wavefunction at the grid ends above which the
/// grid is considered too narrow.
const MAX_EDGE_AMPLITUDE: f64 = 1e-6;

/// Resource photon number and homodyne outcome.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GateParams {
    pub n: u32,
    pub y_m: f64,
}

impl GateParams {
    pub fn new(n: u32, y_m: f64) -> Result<Self> {
        if !y_m.is_finite() {
            return Err(Error::InvalidParameter {
                name: "y_m",
                reason: format!("must be finite, got {y_m}"),
            });
        }
        Ok(Self { n, y_m })
    }

    /// Radius `sqrt(2n+1)` of the resource circle.
    pub fn radius(&self) -> f64 {
        f64::from(2 * self.n + 1).sqrt()
    }

    /// Reduced coordinate `z = (x - y_m)/sqrt(2n+1)`.
    pub fn reduced(&self, x: f64) -> f64 {
        (x - self.y_m) / self.radius()
    }

    fn parity(&self) -> f64 {
        CatSuperposition::parity_of(self.n)
    }
}

/// Default grid for gate calculations: covers the input window around `x0`
/// and the resource window around `y_m`, each of half-width
/// `8 + sqrt(2n+1)`, with 4001 points.
pub fn gate_grid(params: GateParams, x0: f64) -> Grid1D {
    let half = TAIL_MARGIN + params.radius();
    Grid1D::covering(
        &[(x0 - half, x0 + half), (params.y_m - half, params.y_m + half)],
        DEFAULT_COUNT,
    )
    .expect("windows have positive width")
}

/// Semiclassical phase `phi(n, z) = (2n+1)(z sqrt(1 - z^2) + arcsin z)/2`.
pub fn phase_function(n: u32, z: f64) -> Result<f64> {
    if !(z.abs() <= 1.0) {
        return Err(Error::Domain(z));
    }
    Ok(phase_unchecked(n, z))
}

fn phase_unchecked(n: u32, z: f64) -> f64 {
    0.5 * f64::from(2 * n + 1) * (z * (1.0 - z * z).sqrt() + z.asin())
}

/// `e^{i phi} + (-1)^n e^{-i phi}`: `2 cos(phi)` for even `n`, `2 i sin(phi)`
/// for odd `n`.
fn fringe(n: u32, phi: f64) -> Complex64 {
    if n % 2 == 0 {
        Complex64::new(2.0 * phi.cos(), 0.0)
    } else {
        Complex64::new(0.0, 2.0 * phi.sin())
    }
}

/// Semiclassical added factor
/// `(1 - z^2)^{-1/4} [e^{i phi(n,z)} + (-1)^n e^{-i phi(n,z)}]`, set to zero
/// for `|z| >= 1` where the ancilla line misses the resource circle.
pub fn semiclassical_factor(params: GateParams, x: f64) -> Complex64 {
    let z = params.reduced(x);
    if z.abs() >= 1.0 {
        return Complex64::new(0.0, 0.0);
    }
    fringe(params.n, phase_unchecked(params.n, z)) * (1.0 - z * z).powf(-0.25)
}

/// Exact gate factor `i^n psi_n(x - y_m)`, the Fourier transform of the Fock
/// wavefunction evaluated at momentum `x - y_m`.
pub fn exact_factor(params: GateParams, x: f64) -> Complex64 {
    let i_pow = match params.n % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    i_pow * eval_hermite_fn(params.n, x - params.y_m)
}

/// Normalized exact output state and the probability density of the
/// outcome that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct ExactOutput {
    pub state: WaveFunctionGrid,
    /// `P(y_m) = int |psi_in(x) i^n psi_n(x - y_m)|^2 dx`.
    pub probability: f64,
}

/// Exact output of the gate for an arbitrary normalized input.
pub fn exact_output(params: GateParams, input: &WaveFunctionGrid) -> Result<ExactOutput> {
    let unnormalized = input.multiply(|x| exact_factor(params, x));
    let probability = unnormalized.norm_sqr();
    if !(probability >= MIN_PROBABILITY) {
        return Err(Error::ZeroProbability(probability));
    }
    let state = unnormalized.scaled(probability.sqrt().recip());
    let edge = state.edge_magnitude();
    if edge > MAX_EDGE_AMPLITUDE {
        return Err(Error::TruncatedState(edge));
    }
    Ok(ExactOutput { state, probability })
}

/// How the semiclassical output treats the region `|z| > 1`, where the
/// measured momentum line does not intersect the resource circle.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum ForbiddenRegion {
    /// Hold the factor at its turning-point value (`z` clamped to `[-1, 1]`).
    #[default]
    Clamp,
    /// Set the factor to zero.
    Zero,
}

/// Semiclassical output `psi_in(x) [e^{i phi} + (-1)^n e^{-i phi}]` with the
/// `(1 - z^2)^{-1/4}` weight taken as constant, renormalized to unit norm.
/// Uses [`ForbiddenRegion::Clamp`].
pub fn semiclassical_output(params: GateParams, input: &WaveFunctionGrid) -> Result<WaveFunctionGrid> {
    semiclassical_output_with(params, input, ForbiddenRegion::Clamp)
}

pub fn semiclassical_output_with(
    params: GateParams,
    input: &WaveFunctionGrid,
    region: ForbiddenRegion,
) -> Result<WaveFunctionGrid> {
    let product = input.multiply(|x| {
        let z = params.reduced(x);
        if z.abs() <= 1.0 {
            fringe(params.n, phase_unchecked(params.n, z))
        } else {
            match region {
                ForbiddenRegion::Clamp => fringe(params.n, phase_unchecked(params.n, z.signum())),
                ForbiddenRegion::Zero => Complex64::new(0.0, 0.0),
            }
        }
    });
    product.normalized()
}

/// Second-order Taylor expansion of the semiclassical phase about
/// `expansion_center`:
/// `phi ~ theta0 + p_plus (x - c) + dp_plus (x - c)^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct TaylorPhase {
    pub theta0: f64,
    pub p_plus: f64,
    pub dp_plus: f64,
    pub expansion_center: f64,
}

impl TaylorPhase {
    pub fn eval(&self, x: f64) -> f64 {
        let d = x - self.expansion_center;
        self.theta0 + self.p_plus * d + self.dp_plus * d * d
    }
}

pub fn taylor_phase(params: GateParams, center: f64) -> Result<TaylorPhase> {
    let offset = center - params.y_m;
    let disc = f64::from(2 * params.n + 1) - offset * offset;
    if disc.abs() <= 1e-12 {
        return Err(Error::SingularShear);
    }
    if disc < 0.0 {
        return Err(Error::Domain(params.reduced(center)));
    }
    let p_plus = disc.sqrt();
    Ok(TaylorPhase {
        theta0: phase_unchecked(params.n, params.reduced(center)),
        p_plus,
        dp_plus: -offset / (2.0 * p_plus),
        expansion_center: center,
    })
}

/// Reference cat obtained by keeping the linear part of the phase expanded
/// about `center`:
/// `psi_in(x) [e^{i(theta0 + p (x - c))} + (-1)^n e^{-i(theta0 + p (x - c))}]`,
/// written as a superposition of the coherent states
/// `alpha_pm = [x0 + i(p0 +- p)]/sqrt(2)`.
pub fn perfect_cat_about(
    params: GateParams,
    input: CoherentParams,
    center: f64,
) -> Result<CatSuperposition> {
    let phase = taylor_phase(params, center)?;
    let p = phase.p_plus;
    let shift = |s: f64| CoherentParams {
        x0: input.x0,
        p0: input.p0 + s * p,
    };
    // <x|alpha_pm> carries an extra e^{-+ i p x0/2} relative to psi_in(x) e^{+- i p x}.
    let theta = phase.theta0 - p * center + 0.5 * p * input.x0;
    CatSuperposition::new(
        shift(1.0).alpha(),
        shift(-1.0).alpha(),
        theta,
        params.parity(),
    )
}

/// The "perfect" cat for a coherent input.
///
/// When `y_m == x0` the phase is expanded about `x0`, where its curvature
/// vanishes, giving two undistorted copies of the input displaced by
/// `+-sqrt(2n+1)` in momentum. Otherwise the expansion is about the origin:
/// `theta = phi(n, -y_m/sqrt(2n+1))`, `p = sqrt(2n+1 - y_m^2)`.
pub fn perfect_cat(params: GateParams, input: CoherentParams) -> Result<CatSuperposition> {
    let center = if params.y_m == input.x0 { input.x0 } else { 0.0 };
    perfect_cat_about(params, input, center)
}

/// Half-width of the phase-space region `|z| < 1`.
pub fn allowed_half_width(params: GateParams) -> f64 {
    params.radius()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metrics::fidelity;
    use crate::states::{assemble_cat, coherent_wavefunction, overlap};
    use std::f64::consts::PI;

    fn params(n: u32, y_m: f64) -> GateParams {
        GateParams::new(n, y_m).unwrap()
    }

    fn coherent(x0: f64, p0: f64, grid: Grid1D) -> WaveFunctionGrid {
        coherent_wavefunction(CoherentParams::new(x0, p0).unwrap(), grid).unwrap()
    }

    #[test]
    fn phase_function_values() {
        assert_eq!(phase_function(7, 0.0).unwrap(), 0.0);
        for n in [0, 3, 10] {
            let want = f64::from(2 * n + 1) * PI / 4.0;
            assert!((phase_function(n, 1.0).unwrap() - want).abs() < 1e-14);
        }
        // 9 (0.5 sqrt(0.75) + pi/6) / 2
        let want = 9.0 * (0.5 * 0.75f64.sqrt() + PI / 6.0) / 2.0;
        assert!((phase_function(4, 0.5).unwrap() - want).abs() < 1e-14);
        assert!((want - 4.30475).abs() < 1e-5);
        assert_eq!(phase_function(4, 1.5), Err(Error::Domain(1.5)));
    }

    #[test]
    fn semiclassical_factor_values() {
        assert!((semiclassical_factor(params(4, 0.7), 0.7) - 2.0).norm() < 1e-15);
        assert_eq!(semiclassical_factor(params(3, 0.7), 0.7).norm(), 0.0);
        let p = params(5, -1.0);
        assert_eq!(semiclassical_factor(p, -1.0 + 2.0 * p.radius()).norm(), 0.0);
    }

    #[test]
    fn parity_anchor() {
        for n in [1, 3, 9, 15] {
            let p = params(n, 0.4);
            assert!(exact_factor(p, 0.4).norm() < 1e-15);
            assert!(semiclassical_factor(p, 0.4).norm() < 1e-15);
        }
    }

    #[test]
    fn n0_output_is_gaussian_at_midpoint() {
        let (x0, p0, y_m) = (1.0, 2.0, -0.6);
        let p = params(0, y_m);
        let grid = gate_grid(p, x0);
        let out = exact_output(p, &coherent(x0, p0, grid)).unwrap();
        let mu = 0.5 * (x0 + y_m);
        // |psi|^2 = exp(-2 (x - mu)^2) sqrt(2/pi) after normalization.
        for (x, d) in grid.points().zip(out.state.density()).step_by(97) {
            let want = (2.0 / PI).sqrt() * (-2.0 * (x - mu).powi(2)).exp();
            assert!((d - want).abs() < 1e-12, "x={x}");
        }
    }

    #[test]
    fn exact_output_is_normalized() {
        for n in [0, 1, 4, 10, 25] {
            let p = params(n, 1.3);
            let grid = gate_grid(p, -0.5);
            let out = exact_output(p, &coherent(-0.5, 2.0, grid)).unwrap();
            assert!((out.state.norm_sqr() - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn n3_output_zeros() {
        let p = params(3, 0.0);
        let grid = gate_grid(p, 0.0);
        let out = exact_output(p, &coherent(0.0, 0.0, grid)).unwrap();
        // i^3 * real: imaginary parts carry the sign pattern.
        let v = out.state.values();
        let changes = v.windows(2).filter(|w| w[0].im * w[1].im < 0.0).count();
        let exact_zeros = v.iter().filter(|z| z.im == 0.0).count();
        assert_eq!(changes + exact_zeros, 3);
    }

    #[test]
    fn impossible_outcome() {
        let p = params(0, 60.0);
        let grid = Grid1D::centered(0.0, 10.0, 2001).unwrap();
        let input = coherent(0.0, 0.0, grid);
        assert!(matches!(exact_output(p, &input), Err(Error::ZeroProbability(_))));
    }

    #[test]
    fn truncated_grid_is_detected() {
        let p = params(2, 9.5);
        let grid = Grid1D::centered(0.0, 10.0, 2001).unwrap();
        // A state that is flat up to the edges, measured near one of them.
        let input = WaveFunctionGrid::from_fn(grid, |_| Complex64::new(0.2, 0.0));
        assert!(matches!(exact_output(p, &input), Err(Error::TruncatedState(_))));
    }

    #[test]
    fn gate_factor_is_input_independent() {
        let p = params(6, 0.8);
        let grid = Grid1D::centered(0.5, 14.0, 4001).unwrap();
        let a = coherent(0.0, 1.0, grid);
        let b = coherent(1.0, -2.0, grid);
        let out_a = exact_output(p, &a).unwrap();
        let out_b = exact_output(p, &b).unwrap();
        let fa = out_a.probability.sqrt();
        let fb = out_b.probability.sqrt();
        for k in (0..grid.count()).step_by(13) {
            let (ia, ib) = (a.values()[k], b.values()[k]);
            if ia.norm() > 1e-8 && ib.norm() > 1e-8 {
                let ra = out_a.state.values()[k] * fa / ia;
                let rb = out_b.state.values()[k] * fb / ib;
                assert!((ra - rb).norm() <= 1e-9 * ra.norm().max(1e-3), "k={k}");
            }
        }
    }

    #[test]
    fn shift_covariance() {
        let (n, x0, y_m, s) = (5, 0.7, -0.4, 2.5);
        let grid = Grid1D::centered(1.0, 15.0, 4001).unwrap();
        let a = exact_output(params(n, y_m), &coherent(x0, 0.0, grid)).unwrap();
        // Same configuration translated by s, sampled on the translated grid,
        // then compared sample by sample.
        let shifted = Grid1D::centered(1.0 + s, 15.0, 4001).unwrap();
        let b = exact_output(params(n, y_m + s), &coherent(x0 + s, 0.0, shifted)).unwrap();
        let moved = WaveFunctionGrid::new(grid, b.state.values().to_vec()).unwrap();
        assert!((overlap(&a.state, &moved).unwrap().norm() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn zero_outcome_keeps_even_modulus() {
        let p = params(7, 0.0);
        let grid = Grid1D::centered(0.0, 14.0, 4001).unwrap();
        let out = exact_output(p, &coherent(0.0, 2.0, grid)).unwrap();
        let v = out.state.values();
        for k in 0..v.len() {
            assert!((v[k].norm() - v[v.len() - 1 - k].norm()).abs() < 1e-10);
        }
    }

    #[test]
    fn semiclassical_output_even_n_is_cosine_fringe() {
        let p = params(6, 0.0);
        let grid = gate_grid(p, 0.0);
        let input = coherent(0.0, 0.0, grid);
        let out = semiclassical_output(p, &input).unwrap();
        assert!((out.norm_sqr() - 1.0).abs() < 1e-10);
        // Compare against 2 cos(phi) psi_in up to normalization.
        let direct = input.multiply(|x| {
            let z = p.reduced(x).clamp(-1.0, 1.0);
            Complex64::new(2.0 * phase_function(6, z).unwrap().cos(), 0.0)
        });
        let direct = direct.normalized().unwrap();
        for (a, b) in out.values().iter().zip(direct.values()) {
            assert!((a - b).norm() < 1e-14);
            assert!(a.im == 0.0);
        }
    }

    #[test]
    fn semiclassical_zero_mode_and_zero_state() {
        let p = params(2, 0.0);
        let grid = Grid1D::new(20.0, 40.0, 2001).unwrap();
        let far = WaveFunctionGrid::from_fn(grid, |x| (-(x - 30.0).powi(2)).exp().into());
        assert_eq!(
            semiclassical_output_with(p, &far, ForbiddenRegion::Zero),
            Err(Error::ZeroState)
        );
        assert!(semiclassical_output_with(p, &far, ForbiddenRegion::Clamp).is_ok());
    }

    #[test]
    fn f_scl_reference_point() {
        let p = params(10, 0.0);
        let grid = gate_grid(p, 0.0);
        let input = coherent(0.0, 0.0, grid);
        let exact = exact_output(p, &input).unwrap();
        let scl = semiclassical_output(p, &input).unwrap();
        assert!(fidelity(&exact.state, &scl).unwrap() > 0.9970);
    }

    #[test]
    fn taylor_phase_examples() {
        let t = taylor_phase(params(6, 1.2), 1.2).unwrap();
        assert_eq!(t.theta0, 0.0);
        assert_eq!(t.dp_plus, 0.0);
        assert!((t.p_plus - 13f64.sqrt()).abs() < 1e-15);
        let t = taylor_phase(params(4, 0.0), 0.0).unwrap();
        assert_eq!(t.p_plus, 3.0);
        assert_eq!(taylor_phase(params(4, 0.0), 3.0), Err(Error::SingularShear));
        assert!(matches!(taylor_phase(params(4, 0.0), 3.5), Err(Error::Domain(_))));
    }

    #[test]
    fn taylor_phase_matches_finite_differences() {
        let h = 1e-3;
        for &(n, y_m, c) in &[(4, 0.0, 0.0), (4, 1.0, 0.0), (10, 0.0, 1.5), (10, -2.0, 1.0)] {
            let p = params(n, y_m);
            let t = taylor_phase(p, c).unwrap();
            let phi = |x: f64| phase_function(n, p.reduced(x)).unwrap();
            // Central differences are independent of the closed forms.
            let d1 = (phi(c + h) - phi(c - h)) / (2.0 * h);
            let d2 = (phi(c + h) - 2.0 * phi(c) + phi(c - h)) / (h * h);
            assert!((d1 - t.p_plus).abs() < 1e-5, "slope {d1} vs {}", t.p_plus);
            assert!((0.5 * d2 - t.dp_plus).abs() < 1e-4, "shear {} vs {}", 0.5 * d2, t.dp_plus);
            let step = phi(c + h) - phi(c);
            assert!((step - (t.p_plus * h + t.dp_plus * h * h)).abs() < 1e-8);
        }
    }

    #[test]
    fn origin_expansion_shear_sign() {
        // About the origin the shear is +y_m / (2 sqrt(2n+1 - y_m^2)).
        let y_m = 1.3;
        let t = taylor_phase(params(6, y_m), 0.0).unwrap();
        assert!((t.dp_plus - y_m / (2.0 * (13.0 - y_m * y_m).sqrt())).abs() < 1e-15);
        let want_theta = phase_function(6, -y_m / 13f64.sqrt()).unwrap();
        assert!((t.theta0 - want_theta).abs() < 1e-15);
    }

    #[test]
    fn perfect_cat_components() {
        let cat = perfect_cat(params(7, 0.0), CoherentParams::vacuum()).unwrap();
        let (plus, minus) = cat.components();
        let r = 15f64.sqrt();
        assert!((plus.x0).abs() < 1e-15 && (plus.p0 - r).abs() < 1e-14);
        assert!((minus.x0).abs() < 1e-15 && (minus.p0 + r).abs() < 1e-14);
        assert_eq!(cat.phase_theta, 0.0);

        let input = CoherentParams::new(3.0, 3.0).unwrap();
        let cat = perfect_cat(params(15, 3.0), input).unwrap();
        let (plus, minus) = cat.components();
        assert!((plus.x0 - 3.0).abs() < 1e-14 && (plus.p0 - (3.0 + 31f64.sqrt())).abs() < 1e-14);
        assert!((minus.x0 - 3.0).abs() < 1e-14 && (minus.p0 - (3.0 - 31f64.sqrt())).abs() < 1e-14);
        let grid = gate_grid(params(15, 3.0), 3.0);
        let psi = assemble_cat(&cat, grid).unwrap();
        assert!((psi.norm_sqr() - 1.0).abs() < 1e-9);
    }

    #[test]
    fn perfect_cat_matches_linearized_wavefunction() {
        // The coherent-state form must equal psi_in(x) times the linear fringe.
        for &(n, y_m, x0, p0, c) in &[(5, 3.0, 3.0, 3.0, 3.0), (10, 0.0, 1.5, 3.0, 0.0), (4, 0.5, -1.0, 2.0, -1.0)] {
            let p = params(n, y_m);
            let input = CoherentParams::new(x0, p0).unwrap();
            let cat = perfect_cat_about(p, input, c).unwrap();
            let grid = gate_grid(p, x0);
            let from_kets = assemble_cat(&cat, grid).unwrap();
            let t = taylor_phase(p, c).unwrap();
            let linear = coherent(x0, p0, grid)
                .multiply(|x| fringe(n, t.theta0 + t.p_plus * (x - c)))
                .normalized()
                .unwrap();
            for (a, b) in from_kets.values().iter().zip(linear.values()) {
                assert!((a - b).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn perfect_cat_n5_general_norm() {
        let input = CoherentParams::new(3.0, 3.0).unwrap();
        let p = params(5, 3.0);
        let psi = assemble_cat(&perfect_cat(p, input).unwrap(), gate_grid(p, 3.0)).unwrap();
        assert!((psi.norm_sqr() - 1.0).abs() < 1e-10);
    }
}
