//! Bipolar coordinates of a triangle with unit base.
//!
//! The apex of a triangle whose base is the unit segment can be described by
//! its interior base angles `(alpha, beta)` (a point of the half square `T`),
//! by the two remaining side lengths `(A, B)` (a point of the infinite polygon
//! `S`), or by the negated logarithms `(x, y) = (-ln A, -ln B)` (a point of the
//! amoeba `U`). This module holds those three coordinate types and the maps
//! between them:
//!
//! | map                     | direction | rule        |
//! |-------------------------|-----------|-------------|
//! | [`angles_to_sides`]     | T → S     | sine rule   |
//! | [`sides_to_angles`]     | S → T     | cosine rule |
//! | [`angles_to_log_sides`] | T → U     | sine rule, then `-ln` |
//! | [`log_sides_to_angles`] | U → T     | `exp`, then cosine rule |
//!
//! Angles are always radians. Points closer than [`EPS_BOUNDARY`] to the
//! boundary of an open region are rejected by the maps.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::regions::{self, Membership};

/// Default distance (radians or length units) below which a point counts as
/// lying on a region boundary.
pub const EPS_BOUNDARY: f64 = 1e-9;

/// Cosine-rule arguments this far outside [-1, 1] are clamped silently.
pub const ACOS_CLAMP_WINDOW: f64 = 1e-12;

/// Interior base angles of a unit-base triangle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AngularCoords {
    alpha: f64,
    beta: f64,
}

impl AngularCoords {
    /// Accepts any point of the closed half square `T`, allowing
    /// [`EPS_BOUNDARY`] of slack outside it.
    pub fn new(alpha: f64, beta: f64) -> Result<Self> {
        Self::with_tolerance(alpha, beta, EPS_BOUNDARY)
    }

    pub fn with_tolerance(alpha: f64, beta: f64, eps: f64) -> Result<Self> {
        match regions::membership_t_with_tolerance(alpha, beta, eps) {
            Membership::Outside => Err(domain(format!(
                "angles ({alpha}, {beta}) lie outside T: {}",
                regions::violated_t_inequality(alpha, beta)
            ))),
            _ => Ok(Self { alpha, beta }),
        }
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// The apex angle `pi - alpha - beta`.
    pub fn gamma(&self) -> f64 {
        PI - self.alpha - self.beta
    }

    /// Swaps the roles of the two base vertices.
    pub fn swapped(&self) -> Self {
        Self {
            alpha: self.beta,
            beta: self.alpha,
        }
    }

    pub fn to_pair(self) -> (f64, f64) {
        (self.alpha, self.beta)
    }

    fn require_interior(&self) -> Result<()> {
        match regions::membership_t(self.alpha, self.beta) {
            Membership::Interior => Ok(()),
            _ => Err(domain(format!(
                "angles ({}, {}) are not strictly inside T: {}",
                self.alpha,
                self.beta,
                regions::violated_t_inequality(self.alpha, self.beta)
            ))),
        }
    }
}

/// Side lengths `(A, B)` opposite the base angles `(alpha, beta)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialCoords {
    a: f64,
    b: f64,
}

impl RadialCoords {
    /// Accepts the closed polygon `S` with [`EPS_BOUNDARY`] of slack.
    pub fn new(a: f64, b: f64) -> Result<Self> {
        match regions::membership_s(a, b) {
            Membership::Outside => Err(domain(format!(
                "sides ({a}, {b}) violate a triangle inequality: {}",
                regions::violated_s_inequality(a, b)
            ))),
            _ => Ok(Self { a, b }),
        }
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn to_pair(self) -> (f64, f64) {
        (self.a, self.b)
    }

    pub fn to_log(self) -> LogRadialCoords {
        LogRadialCoords::new_unchecked(-self.a.ln(), -self.b.ln())
    }
}

/// Negated logarithmic side lengths `(x, y) = (-ln A, -ln B)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LogRadialCoords {
    x: f64,
    y: f64,
}

impl LogRadialCoords {
    /// Accepts the closed amoeba `U` with [`EPS_BOUNDARY`] of slack, measured
    /// on the side lengths.
    pub fn new(x: f64, y: f64) -> Result<Self> {
        match regions::membership_u(x, y) {
            Membership::Outside => Err(domain(format!(
                "log sides ({x}, {y}) lie outside the amoeba U: {}",
                regions::violated_s_inequality((-x).exp(), (-y).exp())
            ))),
            _ => Ok(Self { x, y }),
        }
    }

    /// For images of valid points under exact symmetries of `U`.
    pub(crate) fn new_unchecked(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn to_pair(self) -> (f64, f64) {
        (self.x, self.y)
    }

    pub fn to_sides(self) -> Result<RadialCoords> {
        RadialCoords::new((-self.x).exp(), (-self.y).exp())
    }
}

/// A real 2×2 matrix stored row-major.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Jacobian2 {
    entries: [f64; 4],
}

impl Jacobian2 {
    pub fn new(a11: f64, a12: f64, a21: f64, a22: f64) -> Result<Self> {
        let entries = [a11, a12, a21, a22];
        if entries.iter().all(|e| e.is_finite()) {
            Ok(Self { entries })
        } else {
            Err(domain(format!("non-finite Jacobian entries {entries:?}")))
        }
    }

    pub fn entries(&self) -> [f64; 4] {
        self.entries
    }

    /// `ad - bc`, with the rounding error of `bc` recovered by an fma so that
    /// the result is faithful to the stored entries.
    pub fn det(&self) -> f64 {
        let [a, b, c, d] = self.entries;
        let bc = b * c;
        let bc_err = (-b).mul_add(c, bc);
        a.mul_add(d, -bc) + bc_err
    }
}

/// The sine-rule map `F: T -> S`.
///
/// `F(alpha, beta) = (sin alpha / sin(alpha + beta), sin beta / sin(alpha + beta))`.
pub fn angles_to_sides(p: AngularCoords) -> Result<RadialCoords> {
    p.require_interior()?;
    let s = sin_of_sum(p.alpha, p.beta);
    Ok(RadialCoords {
        a: p.alpha.sin() / s,
        b: p.beta.sin() / s,
    })
}

/// The cosine-rule map `F⁻¹: S -> T`.
///
/// Points within [`EPS_BOUNDARY`] of the boundary of `S` are accepted and
/// produce the corresponding degenerate angles.
pub fn sides_to_angles(q: RadialCoords) -> Result<AngularCoords> {
    let (a, b) = (q.a, q.b);
    if regions::membership_s(a, b) == Membership::Outside {
        return Err(domain(format!(
            "sides ({a}, {b}) violate a triangle inequality: {}",
            regions::violated_s_inequality(a, b)
        )));
    }
    let alpha = clamped_acos((1.0 - a * a + b * b) / (2.0 * b))?;
    let beta = clamped_acos((1.0 + a * a - b * b) / (2.0 * a))?;
    AngularCoords::new(alpha, beta)
}

fn clamped_acos(arg: f64) -> Result<f64> {
    if arg.abs() <= 1.0 {
        Ok(arg.acos())
    } else if arg.abs() <= 1.0 + ACOS_CLAMP_WINDOW {
        Ok(arg.clamp(-1.0, 1.0).acos())
    } else {
        Err(Error::Clamp { value: arg })
    }
}

/// The area-preserving map `G: T -> U`,
/// `G(alpha, beta) = (ln(sin(alpha+beta)/sin alpha), ln(sin(alpha+beta)/sin beta))`.
pub fn angles_to_log_sides(p: AngularCoords) -> Result<LogRadialCoords> {
    p.require_interior()?;
    let s = sin_of_sum(p.alpha, p.beta);
    Ok(LogRadialCoords {
        x: (s / p.alpha.sin()).ln(),
        y: (s / p.beta.sin()).ln(),
    })
}

/// `G⁻¹: U -> T`, exponentiating back to side lengths and applying the cosine rule.
pub fn log_sides_to_angles(r: LogRadialCoords) -> Result<AngularCoords> {
    let q = r.to_sides()?;
    sides_to_angles(q)
}

/// Componentwise derivative of [`angles_to_log_sides`]:
///
/// ```text
/// | cot(α+β) - cot α    cot(α+β)          |
/// | cot(α+β)            cot(α+β) - cot β  |
/// ```
pub fn jacobian_g_analytic(p: AngularCoords) -> Result<Jacobian2> {
    p.require_interior()?;
    let c = cot_of_sum(p.alpha, p.beta);
    Jacobian2::new(c - cot(p.alpha), c, c, c - cot(p.beta))
}

/// `-cot(α+β)(cot α + cot β) + cot α cot β`, the expanded determinant of
/// [`jacobian_g_analytic`].
pub fn cotangent_identity(p: AngularCoords) -> Result<f64> {
    p.require_interior()?;
    let c = cot_of_sum(p.alpha, p.beta);
    let (ca, cb) = (cot(p.alpha), cot(p.beta));
    Ok(-c * (ca + cb) + ca * cb)
}

fn cot(t: f64) -> f64 {
    t.cos() / t.sin()
}

// Near alpha + beta = pi the rounding of the sum dominates the relative
// error of its sine, so the exact sum s + e is carried to first order.
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn sin_of_sum(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    let (sin, cos) = s.sin_cos();
    e.mul_add(cos, sin)
}

fn cot_of_sum(a: f64, b: f64) -> f64 {
    let (s, e) = two_sum(a, b);
    let (sin, cos) = s.sin_cos();
    (-e).mul_add(sin, cos) / e.mul_add(cos, sin)
}
