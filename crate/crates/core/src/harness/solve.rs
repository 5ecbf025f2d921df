use std::fmt;

use serde::Serialize;

use crate::error::{domain, Result};
use crate::regions::{classify_t, classify_u, violated_t_inequality, RegionLabel};
use crate::triangle::{
    angles_to_sides, sides_to_angles, AngularCoords, LogRadialCoords, RadialCoords,
};

/// One of the three coordinate systems a triangle over the unit base can be
/// given in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum SolveInput {
    Angles(f64, f64),
    Sides(f64, f64),
    LogSides(f64, f64),
}

/// A triangle with all of its angles and sides filled in.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Solution {
    pub alpha: f64,
    pub beta: f64,
    pub gamma: f64,
    pub a: f64,
    pub b: f64,
    pub x: f64,
    pub y: f64,
    pub label_t: RegionLabel,
    pub label_u: RegionLabel,
}

pub fn solve(input: SolveInput) -> Result<Solution> {
    let (p, q) = match input {
        SolveInput::Angles(alpha, beta) => {
            if !(alpha.is_finite() && beta.is_finite()) {
                return Err(domain(format!("angles ({alpha}, {beta}) must be finite")));
            }
            let p = AngularCoords::new(alpha, beta)?;
            let q = angles_to_sides(p).map_err(|_| {
                domain(format!(
                    "angles ({alpha}, {beta}) give a degenerate triangle: {}",
                    violated_t_inequality(alpha, beta)
                ))
            })?;
            (p, q)
        }
        SolveInput::Sides(a, b) => {
            let q = RadialCoords::new(a, b)?;
            (sides_to_angles(q)?, q)
        }
        SolveInput::LogSides(x, y) => {
            let q = LogRadialCoords::new(x, y)?.to_sides()?;
            (sides_to_angles(q)?, q)
        }
    };
    let r = q.to_log();
    Ok(Solution {
        alpha: p.alpha(),
        beta: p.beta(),
        gamma: p.gamma(),
        a: q.a(),
        b: q.b(),
        x: r.x(),
        y: r.y(),
        label_t: classify_t(p),
        label_u: classify_u(r),
    })
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "angles    alpha = {:.10}  beta = {:.10}  gamma = {:.10}",
            self.alpha, self.beta, self.gamma
        )?;
        writeln!(f, "sides     A = {:.10}  B = {:.10}", self.a, self.b)?;
        writeln!(f, "logsides  x = {:.10}  y = {:.10}", self.x, self.y)?;
        write!(f, "labels    T: {}  U: {}", self.label_t, self.label_u)
    }
}
