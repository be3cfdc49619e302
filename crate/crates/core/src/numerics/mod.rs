//! Special functions, grid quadrature and truncated power series.

mod grid;
mod hermite;
mod quadrature;
mod series;

pub use grid::{Grid1D, DEFAULT_COUNT, TAIL_MARGIN};
pub use hermite::{eval_hermite, eval_hermite_fn, hermite_fn_samples};
pub use quadrature::{integrate, integrate_fn, integrate_real};
pub use series::{PowerSeries, Sign};

pub(crate) use series::{exp_into, inv_sqrt_one_plus_into, product_coeff};
