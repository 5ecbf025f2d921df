//! Hit-or-miss estimate of the area of `U0`.
//!
//! Points uniform on `[0, L]²` are tested against `y < -ln(1 - e^-x)`. For
//! `L > ln 2` the part of `U0` outside the box is two congruent tentacles
//! along the axes, each of exact area `Σ e^{-nL} / n²`, which is added back.

use rand::Rng as _;
use rayon::prelude::*;

use super::series::boundary_tail_series;
use super::NumericEstimate;
use crate::error::{domain, Result};
use crate::regions::ln_one_minus_exp_neg;
use crate::rng;

/// Number of independent streams a run is split into. Fixed so that results
/// do not depend on the number of worker threads.
pub const MC_DEFAULT_SHARDS: u64 = 16;

pub fn mc_area_u0(samples: u64, box_size: f64, seed: u64) -> Result<NumericEstimate> {
    mc_area_u0_sharded(samples, box_size, seed, MC_DEFAULT_SHARDS)
}

/// Shard `k` draws from stream `k` of `seed`; hit counts are merged as
/// integers, so the estimate depends only on `(samples, box_size, seed, shards)`.
/// `error_bound` is three binomial standard errors scaled by the box area.
pub fn mc_area_u0_sharded(
    samples: u64,
    box_size: f64,
    seed: u64,
    shards: u64,
) -> Result<NumericEstimate> {
    if samples < 1_000 {
        return Err(domain(format!("need at least 1000 samples, got {samples}")));
    }
    if !(box_size > std::f64::consts::LN_2 && box_size.is_finite()) {
        return Err(domain(format!("box size must exceed ln 2, got {box_size}")));
    }
    if shards == 0 {
        return Err(domain("need at least one shard"));
    }
    let hits: u64 = (0..shards)
        .into_par_iter()
        .map(|shard| {
            let share = samples / shards + u64::from(shard < samples % shards);
            count_hits(share, box_size, rng::stream(seed, shard))
        })
        .sum();
    let fraction = hits as f64 / samples as f64;
    let box_area = box_size * box_size;
    let tail = 2.0 * boundary_tail_series(box_size)?;
    let std_err = box_area * (fraction * (1.0 - fraction) / samples as f64).sqrt();
    Ok(NumericEstimate {
        value: box_area * fraction + tail,
        error_bound: 3.0 * std_err,
        work: samples,
    })
}

fn count_hits(count: u64, box_size: f64, mut rng: rng::Rng) -> u64 {
    let mut hits = 0;
    for _ in 0..count {
        let x = box_size * rng.random::<f64>();
        let y = box_size * rng.random::<f64>();
        // x = 0 gives an infinite height, which counts as a hit
        if y < -ln_one_minus_exp_neg(x) {
            hits += 1;
        }
    }
    hits
}
