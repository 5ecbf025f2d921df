//! The regions `T`, `S`, `U`, their three-fold subdivisions and exact areas.
//!
//! `T` is the open half square `{alpha > 0, beta > 0, alpha + beta < pi}`, `S`
//! the open polygon cut out by the triangle inequalities, and `U` the amoeba
//! obtained from `S` by `(A, B) -> (-ln A, -ln B)`. The medians of `T` and the
//! asymptotes of `U` cut each into three pieces of area `pi^2 / 6`; piece `k`
//! collects the triangles whose longest side (equivalently largest angle) is
//! the base (`k = 0`), side `A` (`k = 1`) or side `B` (`k = 2`).

use std::f64::consts::PI;

use rand::Rng as _;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::rng;
use crate::triangle::{AngularCoords, LogRadialCoords, EPS_BOUNDARY};

/// Position of a point relative to an open region.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Membership {
    Interior,
    Boundary,
    Outside,
}

/// Which piece of the three-fold subdivision a point lies in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RegionLabel {
    Sub0,
    Sub1,
    Sub2,
    Boundary,
    Outside,
}

impl RegionLabel {
    /// The label the cyclic map sends this piece to.
    pub fn successor(self) -> Self {
        match self {
            RegionLabel::Sub0 => RegionLabel::Sub1,
            RegionLabel::Sub1 => RegionLabel::Sub2,
            RegionLabel::Sub2 => RegionLabel::Sub0,
            other => other,
        }
    }

    pub fn index(self) -> Option<usize> {
        match self {
            RegionLabel::Sub0 => Some(0),
            RegionLabel::Sub1 => Some(1),
            RegionLabel::Sub2 => Some(2),
            _ => None,
        }
    }
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RegionLabel::Sub0 => "Sub0",
            RegionLabel::Sub1 => "Sub1",
            RegionLabel::Sub2 => "Sub2",
            RegionLabel::Boundary => "Boundary",
            RegionLabel::Outside => "Outside",
        };
        f.write_str(s)
    }
}

fn classify_margins(margins: [f64; 3], eps: f64) -> Membership {
    if margins.iter().any(|m| !m.is_finite()) {
        return Membership::Outside;
    }
    let min = margins.iter().copied().fold(f64::INFINITY, f64::min);
    if min > eps {
        Membership::Interior
    } else if min >= -eps {
        Membership::Boundary
    } else {
        Membership::Outside
    }
}

fn t_margins(alpha: f64, beta: f64) -> [(f64, &'static str); 3] {
    [
        (alpha, "alpha > 0"),
        (beta, "beta > 0"),
        (PI - alpha - beta, "alpha + beta < pi"),
    ]
}

fn s_margins(a: f64, b: f64) -> [(f64, &'static str); 3] {
    [
        (a + b - 1.0, "1 < A + B"),
        (1.0 + b - a, "A < 1 + B"),
        (1.0 + a - b, "B < 1 + A"),
    ]
}

fn weakest(margins: [(f64, &'static str); 3]) -> &'static str {
    margins
        .iter()
        .min_by(|l, r| l.0.partial_cmp(&r.0).unwrap_or(std::cmp::Ordering::Less))
        .map(|m| m.1)
        .unwrap_or("finite coordinates")
}

/// Names the inequality of `T` with the smallest margin at `(alpha, beta)`.
pub fn violated_t_inequality(alpha: f64, beta: f64) -> &'static str {
    if !(alpha.is_finite() && beta.is_finite()) {
        return "finite coordinates";
    }
    weakest(t_margins(alpha, beta))
}

/// Names the triangle inequality with the smallest margin at `(a, b)`.
pub fn violated_s_inequality(a: f64, b: f64) -> &'static str {
    if !(a.is_finite() && b.is_finite()) {
        return "finite coordinates";
    }
    weakest(s_margins(a, b))
}

pub fn membership_t(alpha: f64, beta: f64) -> Membership {
    membership_t_with_tolerance(alpha, beta, EPS_BOUNDARY)
}

pub fn membership_t_with_tolerance(alpha: f64, beta: f64, eps: f64) -> Membership {
    classify_margins(t_margins(alpha, beta).map(|m| m.0), eps)
}

pub fn membership_s(a: f64, b: f64) -> Membership {
    classify_margins(s_margins(a, b).map(|m| m.0), EPS_BOUNDARY)
}

/// Membership in the amoeba, decided on the side lengths `(e^-x, e^-y)`.
pub fn membership_u(x: f64, y: f64) -> Membership {
    membership_s((-x).exp(), (-y).exp())
}

/// Label of the strictly largest entry, or `Boundary` when the top two tie
/// within `eps`.
fn label_of_largest(values: [f64; 3], eps: f64) -> RegionLabel {
    let mut order = [0usize, 1, 2];
    order.sort_by(|&i, &j| values[j].total_cmp(&values[i]));
    if values[order[0]] - values[order[1]] <= eps {
        return RegionLabel::Boundary;
    }
    match order[0] {
        0 => RegionLabel::Sub0,
        1 => RegionLabel::Sub1,
        _ => RegionLabel::Sub2,
    }
}

/// Piece of `T` by largest angle: apex angle `gamma` (`Sub0`), `alpha`
/// (`Sub1`) or `beta` (`Sub2`). Ties along the dividing halves of the
/// medians give `Boundary`.
pub fn classify_t(p: AngularCoords) -> RegionLabel {
    if membership_t(p.alpha(), p.beta()) == Membership::Outside {
        return RegionLabel::Outside;
    }
    label_of_largest([p.gamma(), p.alpha(), p.beta()], EPS_BOUNDARY)
}

/// Piece of `U` by longest side: `U0 = {x > 0, y > 0}`,
/// `U1 = {x < 0, x < y}`, `U2 = {y < 0, y < x}`. Points within
/// [`EPS_BOUNDARY`] of the asymptote rays give `Boundary`.
pub fn classify_u(r: LogRadialCoords) -> RegionLabel {
    if membership_u(r.x(), r.y()) == Membership::Outside {
        return RegionLabel::Outside;
    }
    // log side lengths of (base, A, B)
    label_of_largest([0.0, -r.x(), -r.y()], EPS_BOUNDARY)
}

/// The order-three map `(x, y) -> (-y, x - y)`, which permutes `U0 -> U1 -> U2 -> U0`.
pub fn cyclic_map(r: LogRadialCoords) -> LogRadialCoords {
    LogRadialCoords::new_unchecked(-r.y(), r.x() - r.y())
}

/// `(x, y) -> (y - x, -x)`.
pub fn cyclic_map_inverse(r: LogRadialCoords) -> LogRadialCoords {
    LogRadialCoords::new_unchecked(r.y() - r.x(), -r.x())
}

/// Linear part of [`cyclic_map`], row-major.
pub const CYCLIC_MATRIX: [f64; 4] = [0.0, -1.0, 1.0, -1.0];

/// `ln(1 - e^-x)` for `x > 0`, accurate near both ends.
pub fn ln_one_minus_exp_neg(x: f64) -> f64 {
    if x < 0.5 {
        (-(-x).exp_m1()).ln()
    } else {
        (-(-x).exp()).ln_1p()
    }
}

/// Height `-ln(1 - e^-x)` of the first-quadrant boundary curve
/// `e^-x + e^-y = 1` of the amoeba.
pub fn amoeba_boundary_height(x: f64) -> Result<f64> {
    if x > 0.0 && !x.is_nan() {
        Ok(-ln_one_minus_exp_neg(x))
    } else {
        Err(domain(format!("boundary height needs x > 0, got {x}")))
    }
}

/// Area of `T` (and of `U`): half of the `pi × pi` square.
pub fn area_t_exact() -> f64 {
    PI * PI / 2.0
}

/// Vertices of the quadrilateral `T0` in angular coordinates, counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolygonT0 {
    pub vertices: [(f64, f64); 4],
}

impl PolygonT0 {
    pub fn new() -> Self {
        Self {
            vertices: [
                (0.0, 0.0),
                (PI / 2.0, 0.0),
                (PI / 3.0, PI / 3.0),
                (0.0, PI / 2.0),
            ],
        }
    }

    pub fn shoelace_area(&self) -> f64 {
        shoelace_area(&self.vertices)
    }
}

impl Default for PolygonT0 {
    fn default() -> Self {
        Self::new()
    }
}

pub fn shoelace_area(vertices: &[(f64, f64)]) -> f64 {
    let n = vertices.len();
    let twice: f64 = (0..n)
        .map(|i| {
            let (x0, y0) = vertices[i];
            let (x1, y1) = vertices[(i + 1) % n];
            x0 * y1 - x1 * y0
        })
        .sum();
    twice.abs() / 2.0
}

pub fn area_t0_exact() -> f64 {
    PolygonT0::new().shoelace_area()
}

/// `count` points uniform on `T`: unit-square samples above the diagonal are
/// folded back across it, then scaled by `pi`.
pub fn sample_t(count: usize, seed: u64) -> Vec<AngularCoords> {
    let mut rng = rng::seeded(seed);
    (0..count)
        .map(|_| {
            let (mut u, mut v): (f64, f64) = (rng.random(), rng.random());
            if u + v > 1.0 {
                (u, v) = (1.0 - u, 1.0 - v);
            }
            AngularCoords::new(PI * u, PI * v).expect("folded sample lies in closed T")
        })
        .collect()
}

/// Uniform samples of `T` whose three angles all exceed `margin`.
pub fn sample_t_with_margin(count: usize, margin: f64, seed: u64) -> Vec<AngularCoords> {
    let mut out = Vec::with_capacity(count);
    let mut batch_seed = seed;
    while out.len() < count {
        out.extend(
            sample_t(count, batch_seed)
                .into_iter()
                .filter(|p| p.alpha() > margin && p.beta() > margin && p.gamma() > margin),
        );
        batch_seed = batch_seed.wrapping_add(0x9e37_79b9_7f4a_7c15);
    }
    out.truncate(count);
    out
}
