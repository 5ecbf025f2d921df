//! Quadrature, Monte Carlo, finite differences and the series used to pass
//! from squares of side `1/n` to the area of the amoeba piece `U0`.

mod finite_diff;
mod monte_carlo;
mod quadrature;
mod series;
mod spread;

use serde::{Deserialize, Serialize};

pub use finite_diff::{default_fd_step, fd_jacobian, fd_jacobian_det};
pub use monte_carlo::{mc_area_u0, mc_area_u0_sharded, MC_DEFAULT_SHARDS};
pub use quadrature::{
    integrate, integrate_area_u0, integrate_boundary_tail, integrate_exp_substituted, u0_integrand,
    QuadratureOptions,
};
pub use series::{
    boundary_tail_series, dyadic_grouping_lower_bound, harmonic_partial, log_series_partial,
    pile_covering_index, pile_height, zeta2_integral_bound, zeta2_partial, BoundCheck, PileBox,
    SeriesPartial,
};
pub use spread::{spread_square_bijection, spread_square_integral};

/// A computed value with its error estimate and the work spent on it.
///
/// For quadrature `error_bound` is the claimed bound on the absolute error;
/// for Monte Carlo it is a multiple of the standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct NumericEstimate {
    pub value: f64,
    pub error_bound: f64,
    /// Function evaluations or samples.
    pub work: u64,
}

impl NumericEstimate {
    pub fn contains(&self, target: f64) -> bool {
        (self.value - target).abs() <= self.error_bound
    }
}
