//! Bipolar triangle coordinates, the amoeba of the line `1 + z + w = 0`, and
//! the numerical checks that tie the area of one third of that amoeba to
//! `Σ 1/n² = π²/6`.
//!
//! * [`triangle`]: the coordinate types and the maps `F`, `F⁻¹`, `G`, `G⁻¹`.
//! * [`regions`]: membership, the three-fold subdivisions and exact areas.
//! * [`analysis`]: quadrature, Monte Carlo, finite differences and series.
//! * [`complex_lift`]: the exponential curve `1 + e^s + e^t = 0` and `G̃`.
//! * [`harness`]: named checks, JSON reports, figures and the triangle solver
//!   behind the `basel` binary.

pub mod analysis;
pub mod complex_lift;
pub mod error;
pub mod harness;
pub mod regions;
pub mod rng;
pub mod triangle;

pub use error::{Error, Result};
