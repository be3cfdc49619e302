//! Truncated power series in an auxiliary variable `rho`, double precision.
//!
//! All binary operations truncate at the smaller of the two orders.

use crate::error::{Error, Result};

/// `c_0 + c_1 rho + ... + c_K rho^K`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<f64>,
}

/// Sign `s` in `(1 + s rho)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    fn value(self) -> f64 {
        match self {
            Sign::Plus => 1.0,
            Sign::Minus => -1.0,
        }
    }
}

impl PowerSeries {
    pub fn new(coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::InvalidParameter {
                name: "coeffs",
                reason: "a series needs at least the constant term".into(),
            });
        }
        if let Some(bad) = coeffs.iter().find(|c| !c.is_finite()) {
            return Err(Error::InvalidParameter {
                name: "coeffs",
                reason: format!("non-finite coefficient {bad}"),
            });
        }
        Ok(Self { coeffs })
    }

    pub fn zero(order: usize) -> Self {
        Self { coeffs: vec![0.0; order + 1] }
    }

    pub fn constant(value: f64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// `rho / (1 + rho) = rho - rho^2 + rho^3 - ...`
    pub fn rho_over_one_plus(order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| match k {
                0 => 0.0,
                k if k % 2 == 1 => 1.0,
                _ => -1.0,
            })
            .collect();
        Self { coeffs }
    }

    /// Binomial series of `(1 + s rho)^{-1/2}`.
    pub fn inv_sqrt_one_plus(sign: Sign, order: usize) -> Self {
        let mut coeffs = vec![0.0; order + 1];
        inv_sqrt_one_plus_into(sign, &mut coeffs);
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `rho^k`, zero beyond the truncation order.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order).map(|k| self.coeffs[k] + other.coeffs[k]).collect();
        Self { coeffs }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn negate(&self) -> Self {
        self.scale(-1.0)
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut coeffs = vec![0.0; order + 1];
        for (k, out) in coeffs.iter_mut().enumerate() {
            *out = (0..=k).map(|j| self.coeffs[j] * other.coeffs[k - j]).sum();
        }
        Self { coeffs }
    }

    /// `exp(a(rho))` for a series with zero constant term.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs[0] != 0.0 {
            return Err(Error::SeriesConstantTerm(self.coeffs[0]));
        }
        let mut coeffs = vec![0.0; self.coeffs.len()];
        exp_into(&self.coeffs, &mut coeffs);
        Ok(Self { coeffs })
    }
}

/// Writes the `(1 + s rho)^{-1/2}` coefficients into `out`.
pub(crate) fn inv_sqrt_one_plus_into(sign: Sign, out: &mut [f64]) {
    let s = sign.value();
    let mut c = 1.0;
    for (k, slot) in out.iter_mut().enumerate() {
        if k > 0 {
            let k = k as f64;
            c *= -s * (2.0 * k - 1.0) / (2.0 * k);
        }
        *slot = c;
    }
}

/// Coefficients of `exp(a)` for `a[0] == 0` by the convolution recurrence
/// `c_k = (1/k) sum_{j=1..k} j a_j c_{k-j}`, truncated at `out.len() - 1`.
pub(crate) fn exp_into(a: &[f64], out: &mut [f64]) {
    debug_assert_eq!(a[0], 0.0);
    out[0] = 1.0;
    for k in 1..out.len() {
        let mut acc = 0.0;
        for j in 1..=k {
            acc += j as f64 * a[j] * out[k - j];
        }
        out[k] = acc / k as f64;
    }
}

/// Coefficient `n` of the product of two series, `sum_j a_j b_{n-j}`.
pub(crate) fn product_coeff(a: &[f64], b: &[f64], n: usize) -> f64 {
    (0..=n).map(|j| a[j] * b[n - j]).sum()
}
