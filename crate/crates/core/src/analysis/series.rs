//! Partial sums with explicit remainder bounds: `Σ t^n / n`, `Σ 1/n²`, the
//! harmonic series, and piles of spread squares `Σ e^{-nx} / n`.

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::regions::amoeba_boundary_height;

/// A truncated series. When the limit is known, `|limit - partial_sum| <= remainder_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesPartial {
    pub n_terms: u64,
    pub partial_sum: f64,
    pub remainder_bound: f64,
}

/// A value compared against a bound, with the outcome of the comparison.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub value: f64,
    pub bound: f64,
    pub holds: bool,
}

/// `Σ_{n=1}^N t^n / n` with remainder bound `-t^N ln(1 - t)`.
pub fn log_series_partial(t: f64, n_terms: u64) -> Result<SeriesPartial> {
    if !(t > 0.0 && t < 1.0) {
        return Err(domain(format!("t must lie in (0, 1), got {t}")));
    }
    if n_terms == 0 {
        return Err(domain("need at least one term"));
    }
    let mut power = 1.0;
    let mut sum = 0.0;
    for n in 1..=n_terms {
        power *= t;
        sum += power / n as f64;
    }
    Ok(SeriesPartial {
        n_terms,
        partial_sum: sum,
        remainder_bound: -power * (-t).ln_1p(),
    })
}

/// Height of the pile of the first `N` spread squares at `x`:
/// `Σ_{n=1}^N e^{-nx} / n`.
pub fn pile_height(x: f64, n_terms: u64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(domain(format!("pile height needs x > 0, got {x}")));
    }
    log_series_partial((-x).exp(), n_terms).map(|s| s.partial_sum)
}

/// `Σ_{n≥1} e^{-nL} / n²`, the area of `U0` to the right of `x = L`, summed
/// until a term falls below `1e-16`.
pub fn boundary_tail_series(cut: f64) -> Result<f64> {
    if !(cut > 0.0) {
        return Err(domain(format!("tail start must be positive, got {cut}")));
    }
    let ratio = (-cut).exp();
    let mut power = 1.0;
    let mut sum = 0.0;
    for n in 1u64.. {
        power *= ratio;
        let term = power / (n * n) as f64;
        sum += term;
        if term < 1e-16 {
            break;
        }
    }
    Ok(sum)
}

/// The box `[x_min, x_max] × [0, height]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PileBox {
    pub x_min: f64,
    pub x_max: f64,
    pub height: f64,
}

/// Smallest `N` whose pile lies above `height` on all of `[x_min, x_max]`.
///
/// Every pile is decreasing in `x`, so only the right edge matters. The
/// remainder bound `t^N h(x_max)` (with `t = e^{-x_max}` and `h` the boundary
/// height) caps the search. Boxes with less than `margin` clearance below the
/// boundary curve are rejected.
pub fn pile_covering_index(region: PileBox, margin: f64) -> Result<u64> {
    let PileBox {
        x_min,
        x_max,
        height,
    } = region;
    if !(x_min > 0.0 && x_max >= x_min && x_max.is_finite() && height >= 0.0) {
        return Err(Error::NotContained(format!(
            "box [{x_min}, {x_max}] x [0, {height}] is not a box in the open first quadrant"
        )));
    }
    let boundary = amoeba_boundary_height(x_max)?;
    let clearance = boundary - height;
    let needed = margin.max(64.0 * f64::EPSILON * boundary);
    if !(clearance > needed) {
        return Err(Error::NotContained(format!(
            "height {height} leaves clearance {clearance:e} below the boundary curve at x = {x_max}"
        )));
    }
    let t = (-x_max).exp();
    // t^N h < clearance  <=>  N > ln(clearance / h) / ln t
    let cap = ((clearance / boundary).ln() / t.ln()).floor().max(0.0) as u64 + 1;
    let mut power = 1.0;
    let mut pile = 0.0;
    for n in 1..=cap.saturating_mul(2).saturating_add(16) {
        power *= t;
        pile += power / n as f64;
        if pile > height {
            return Ok(n);
        }
    }
    Err(Error::NotContained(format!(
        "pile at x = {x_max} did not clear {height} within the remainder-bound cap {cap}"
    )))
}

/// `Σ_{n=1}^N 1/n²` with remainder bound `1/N` from `∫_N^∞ dx / x²`.
/// Summed from the smallest term up.
pub fn zeta2_partial(n_terms: u64) -> Result<SeriesPartial> {
    if n_terms == 0 {
        return Err(domain("need at least one term"));
    }
    let sum = (1..=n_terms)
        .rev()
        .map(|n| {
            let n = n as f64;
            1.0 / (n * n)
        })
        .sum();
    Ok(SeriesPartial {
        n_terms,
        partial_sum: sum,
        remainder_bound: 1.0 / n_terms as f64,
    })
}

/// `Σ_{n=1}^N 1/n² < 1 + ∫_1^N dx / x² = 2 - 1/N` (equality at `N = 1`).
pub fn zeta2_integral_bound(n_terms: u64) -> Result<BoundCheck> {
    let value = zeta2_partial(n_terms)?.partial_sum;
    let bound = 2.0 - 1.0 / n_terms as f64;
    let holds = if n_terms == 1 {
        value <= bound
    } else {
        value < bound
    };
    Ok(BoundCheck {
        value,
        bound,
        holds,
    })
}

/// `Σ_{n=1}^N 1/n` against the lower bound `ln(1 + N)`.
pub fn harmonic_partial(n_terms: u64) -> Result<BoundCheck> {
    if n_terms == 0 {
        return Err(domain("need at least one term"));
    }
    let value: f64 = (1..=n_terms).rev().map(|n| 1.0 / n as f64).sum();
    let bound = (n_terms as f64).ln_1p();
    Ok(BoundCheck {
        value,
        bound,
        holds: value > bound,
    })
}

/// Grouping the first `2^k` harmonic terms into blocks of length `1, 1, 2, 4, ...`
/// bounds their sum below by `1 + k/2`. The bound is attained at `k = 1`
/// and strict afterwards.
pub fn dyadic_grouping_lower_bound(k: u32) -> Result<BoundCheck> {
    if k == 0 || k > 40 {
        return Err(domain(format!("group count must lie in 1..=40, got {k}")));
    }
    let value = harmonic_partial(1u64 << k)?.value;
    let bound = 1.0 + k as f64 / 2.0;
    let holds = if k == 1 {
        value >= bound
    } else {
        value > bound
    };
    Ok(BoundCheck {
        value,
        bound,
        holds,
    })
}
