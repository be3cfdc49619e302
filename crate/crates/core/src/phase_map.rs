//! Geometric picture of the gate in phase space.
//!
//! After the `C_Z` interaction the ancilla occupies the circle
//! `q_a^2 + (p_a - x)^2 = 2n+1`. Measuring `p_a = y_m` selects the points of
//! that circle on a horizontal line, so an input point `(q, p)` is sent to
//! `(q, p +- sqrt(2n+1 - (y_m - q)^2))`: two images, one at tangency, none
//! when the line misses the circle.

use std::f64::consts::TAU;

use crate::error::{Error, Result};
use crate::gate::GateParams;

/// Discriminants within this distance of zero count as tangency.
pub const TANGENCY_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhasePoint {
    pub q: f64,
    pub p: f64,
}

impl PhasePoint {
    pub fn new(q: f64, p: f64) -> Self {
        Self { q, p }
    }
}

/// `q_a^2 + (p_a - shift)^2 = radius^2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ResourceCircle {
    pub center: PhasePoint,
    pub radius: f64,
}

pub fn resource_circle(n: u32, shift: f64) -> ResourceCircle {
    ResourceCircle {
        center: PhasePoint::new(0.0, shift),
        radius: f64::from(2 * n + 1).sqrt(),
    }
}

/// Images of one input point; upper branch first.
#[derive(Clone, Debug, PartialEq)]
pub struct BranchImage {
    images: Vec<PhasePoint>,
}

impl BranchImage {
    pub fn branch_count(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[PhasePoint] {
        &self.images
    }
}

pub fn map_point(params: GateParams, pt: PhasePoint) -> BranchImage {
    let d = f64::from(2 * params.n + 1) - (params.y_m - pt.q).powi(2);
    let images = if d.abs() <= TANGENCY_TOL {
        vec![pt]
    } else if d < 0.0 {
        Vec::new()
    } else {
        let s = d.sqrt();
        vec![PhasePoint::new(pt.q, pt.p + s), PhasePoint::new(pt.q, pt.p - s)]
    };
    BranchImage { images }
}

/// Sample points of the disk of `radius` about `center`: the centre, a set
/// of concentric rings, and `samples` points on the boundary circle.
pub fn disk_samples(center: PhasePoint, radius: f64, samples: usize) -> Vec<PhasePoint> {
    let rings = (samples / 8).max(1);
    let mut points = vec![center];
    for i in 1..=rings {
        let r = radius * i as f64 / rings as f64;
        let count = (samples * i / rings).max(6);
        points.extend((0..count).map(|k| {
            let t = TAU * k as f64 / count as f64;
            PhasePoint::new(center.q + r * t.cos(), center.p + r * t.sin())
        }));
    }
    points
}

/// Branch images of a sampled disk.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct DiskImage {
    pub upper: Vec<PhasePoint>,
    pub lower: Vec<PhasePoint>,
    /// Samples with no image.
    pub dropped: usize,
}

/// Maps every point of [`disk_samples`]. Tangent points appear in both lists.
pub fn map_disk(params: GateParams, center: PhasePoint, radius: f64, samples: usize) -> Result<DiskImage> {
    if samples < 8 {
        return Err(Error::InvalidParameter {
            name: "samples",
            reason: format!("need at least 8, got {samples}"),
        });
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "radius",
            reason: format!("must be positive, got {radius}"),
        });
    }
    let mut out = DiskImage::default();
    for pt in disk_samples(center, radius, samples) {
        match map_point(params, pt).images() {
            [] => out.dropped += 1,
            [single] => {
                out.upper.push(*single);
                out.lower.push(*single);
            }
            [up, down] => {
                out.upper.push(*up);
                out.lower.push(*down);
            }
            _ => unreachable!("at most two branches"),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn params(n: u32, y_m: f64) -> GateParams {
        GateParams::new(n, y_m).unwrap()
    }

    #[test]
    fn circles() {
        assert_eq!(resource_circle(4, 0.0).radius, 3.0);
        let c = resource_circle(0, 2.0);
        assert_eq!((c.center, c.radius), (PhasePoint::new(0.0, 2.0), 1.0));
        assert_eq!(resource_circle(12, -1.0).radius, 5.0);
    }

    #[test]
    fn point_examples() {
        let img = map_point(params(4, 3.0), PhasePoint::new(3.0, 3.0));
        assert_eq!(img.images(), &[PhasePoint::new(3.0, 6.0), PhasePoint::new(3.0, 0.0)]);
        assert_eq!(map_point(params(4, 0.0), PhasePoint::new(4.0, 0.0)).branch_count(), 0);
        let img = map_point(params(0, 1.0), PhasePoint::new(0.0, 5.0));
        assert_eq!(img.images(), &[PhasePoint::new(0.0, 5.0)]);
    }

    #[test]
    fn diameter_condition() {
        for n in 0..40 {
            let img = map_point(params(n, 0.3), PhasePoint::new(0.3, 0.0));
            assert_eq!(img.images()[0].p, f64::from(2 * n + 1).sqrt());
        }
    }

    #[test]
    fn disk_lenses() {
        let img = map_disk(params(4, 3.0), PhasePoint::new(3.0, 3.0), 1.0, 64).unwrap();
        assert_eq!(img.dropped, 0);
        let mean = |pts: &[PhasePoint]| {
            let k = pts.len() as f64;
            (pts.iter().map(|p| p.q).sum::<f64>() / k, pts.iter().map(|p| p.p).sum::<f64>() / k)
        };
        let (uq, up) = mean(&img.upper);
        let (lq, lp) = mean(&img.lower);
        assert!((uq - 3.0).abs() < 1e-9 && (lq - 3.0).abs() < 1e-9);
        assert!((up - 6.0).abs() < 0.3 && (lp - 0.0).abs() < 0.3);
        assert!((up + lp - 6.0).abs() < 1e-9);
    }

    #[test]
    fn disk_far_from_measurement_is_dropped() {
        let total = disk_samples(PhasePoint::new(0.0, 0.0), 1.0, 32).len();
        let img = map_disk(params(2, 10.0), PhasePoint::new(0.0, 0.0), 1.0, 32).unwrap();
        assert_eq!(img.dropped, total);
        assert!(img.upper.is_empty() && img.lower.is_empty());
    }

    #[test]
    fn disk_mirror_symmetry() {
        let c = PhasePoint::new(0.5, -2.0);
        let img = map_disk(params(3, 0.0), c, 1.5, 48).unwrap();
        for (u, l) in img.upper.iter().zip(&img.lower) {
            assert_eq!(u.q, l.q);
        }
        // The sample set is symmetric about p = c.p, so are the images.
        let mut ups: Vec<f64> = img.upper.iter().map(|p| p.p - c.p).collect();
        let mut downs: Vec<f64> = img.lower.iter().map(|p| c.p - p.p).collect();
        ups.sort_by(f64::total_cmp);
        downs.sort_by(f64::total_cmp);
        for (a, b) in ups.iter().zip(&downs) {
            assert!((a - b).abs() < 1e-9);
        }
    }

    #[test]
    fn disk_validation() {
        let c = PhasePoint::new(0.0, 0.0);
        assert!(map_disk(params(1, 0.0), c, 1.0, 7).is_err());
        assert!(map_disk(params(1, 0.0), c, 0.0, 16).is_err());
    }

    proptest! {
        #[test]
        fn branch_structure(n in 0u32..30, y_m in -10.0f64..10.0, q in -10.0f64..10.0, p in -10.0f64..10.0) {
            let img = map_point(params(n, y_m), PhasePoint::new(q, p));
            prop_assert!(img.images().iter().all(|i| i.q == q));
            let inside = (y_m - q).abs() < f64::from(2 * n + 1).sqrt();
            prop_assert_eq!(img.branch_count() == 2, inside);
            if img.branch_count() == 2 {
                let (a, b) = (img.images()[0].p, img.images()[1].p);
                prop_assert!((a + b - 2.0 * p).abs() < 1e-12);
            }
        }
    }
}
