use crate::error::{Error, Result};

/// Default number of samples for wavefunction grids.
pub const DEFAULT_COUNT: usize = 4001;

/// Gaussian tail margin (in units of the vacuum width) added around every
/// region where a state has support.
pub const TAIL_MARGIN: f64 = 8.0;

/// A uniform grid of `count` points spanning `[x_min, x_max]`, endpoints
/// included.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Grid1D {
    x_min: f64,
    x_max: f64,
    count: usize,
}

impl Grid1D {
    pub fn new(x_min: f64, x_max: f64, count: usize) -> Result<Self> {
        if !x_min.is_finite() || !x_max.is_finite() {
            return Err(Error::InvalidGrid(format!(
                "bounds must be finite, got [{x_min}, {x_max}]"
            )));
        }
        if x_min >= x_max {
            return Err(Error::InvalidGrid(format!(
                "x_min must be below x_max, got [{x_min}, {x_max}]"
            )));
        }
        if count < 2 {
            return Err(Error::InvalidGrid(format!(
                "at least 2 samples are required, got {count}"
            )));
        }
        Ok(Self { x_min, x_max, count })
    }

    /// Symmetric window `[center - half_width, center + half_width]`.
    pub fn centered(center: f64, half_width: f64, count: usize) -> Result<Self> {
        Self::new(center - half_width, center + half_width, count)
    }

    /// The default wavefunction grid for photon number `n`: a window of
    /// half-width `8 + sqrt(2n+1)` around `center`, 4001 points.
    pub fn for_photon_number(n: u32, center: f64) -> Self {
        let half = TAIL_MARGIN + f64::from(2 * n + 1).sqrt();
        Self::centered(center, half, DEFAULT_COUNT)
            .expect("default grid parameters are valid")
    }

    /// Smallest grid containing every window in `windows`.
    pub fn covering(windows: &[(f64, f64)], count: usize) -> Result<Self> {
        let lo = windows.iter().map(|w| w.0).fold(f64::INFINITY, f64::min);
        let hi = windows.iter().map(|w| w.1).fold(f64::NEG_INFINITY, f64::max);
        Self::new(lo, hi, count)
    }

    pub fn x_min(&self) -> f64 {
        self.x_min
    }

    pub fn x_max(&self) -> f64 {
        self.x_max
    }

    pub fn count(&self) -> usize {
        self.count
    }

    pub fn spacing(&self) -> f64 {
        (self.x_max - self.x_min) / (self.count - 1) as f64
    }

    pub fn point(&self, k: usize) -> f64 {
        if k + 1 == self.count {
            self.x_max
        } else {
            self.x_min + k as f64 * self.spacing()
        }
    }

    pub fn points(&self) -> impl ExactSizeIterator<Item = f64> + '_ {
        (0..self.count).map(move |k| self.point(k))
    }

    /// Whether `[lo, hi]` lies inside the grid (with a relative slack of one
    /// part in 1e12 to absorb rounding of the bounds).
    pub fn covers(&self, lo: f64, hi: f64) -> bool {
        let slack = 1e-12 * (self.x_max - self.x_min).max(1.0);
        self.x_min <= lo + slack && self.x_max >= hi - slack
    }

    /// Error unless `[lo, hi]` lies inside the grid.
    pub fn require_window(&self, lo: f64, hi: f64) -> Result<()> {
        if self.covers(lo, hi) {
            Ok(())
        } else {
            Err(Error::InsufficientCoverage {
                need_min: lo,
                need_max: hi,
                have_min: self.x_min,
                have_max: self.x_max,
            })
        }
    }

    /// Grids are interchangeable when they agree to rounding.
    pub fn same_as(&self, other: &Grid1D) -> bool {
        let tol = 1e-12 * (self.x_max - self.x_min).abs().max(1.0);
        self.count == other.count
            && (self.x_min - other.x_min).abs() <= tol
            && (self.x_max - other.x_max).abs() <= tol
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_degenerate_grids() {
        assert!(Grid1D::new(1.0, 1.0, 10).is_err());
        assert!(Grid1D::new(2.0, 1.0, 10).is_err());
        assert!(Grid1D::new(0.0, 1.0, 1).is_err());
        assert!(Grid1D::new(f64::NAN, 1.0, 10).is_err());
    }

    #[test]
    fn endpoints_are_exact() {
        let g = Grid1D::new(-3.3, 7.1, 101).unwrap();
        assert_eq!(g.point(0), -3.3);
        assert_eq!(g.point(100), 7.1);
        assert!((g.spacing() - 0.104).abs() < 1e-15);
        assert_eq!(g.points().len(), 101);
    }

    #[test]
    fn default_window() {
        let g = Grid1D::for_photon_number(4, 1.0);
        assert_eq!(g.count(), 4001);
        assert!((g.x_min() - (1.0 - 11.0)).abs() < 1e-14);
        assert!((g.x_max() - 12.0).abs() < 1e-14);
    }

    #[test]
    fn coverage_errors_name_the_window() {
        let g = Grid1D::new(-5.0, 5.0, 11).unwrap();
        assert!(g.require_window(-5.0, 5.0).is_ok());
        match g.require_window(-2.0, 11.0) {
            Err(Error::InsufficientCoverage { need_max, .. }) => assert_eq!(need_max, 11.0),
            other => panic!("unexpected {other:?}"),
        }
    }
}
