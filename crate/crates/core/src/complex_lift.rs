//! The lift of the line `1 + z + w = 0` to the exponential curve
//! `X = {(s, t) ∈ C² : 1 + e^s + e^t = 0}`.
//!
//! A triangle with base angles `(alpha, beta)` and sides `(A, B)` gives the
//! point `s = ln A + i(pi - beta)`, `t = ln B + i(pi + alpha)` of `X`, with
//! both arguments taken in `(0, 2pi)`. Projecting onto real parts gives the
//! log side lengths, onto imaginary parts the (shifted, rotated) angles, and
//! `G̃ = P ∘ Q⁻¹` maps the second projection to the first.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::triangle::{angles_to_log_sides, angles_to_sides, AngularCoords};

/// Largest `|1 + e^s + e^t|` accepted for a point of `X`.
pub const LIFT_RESIDUAL_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LiftPoint {
    pub s_re: f64,
    pub s_im: f64,
    pub t_re: f64,
    pub t_im: f64,
}

impl LiftPoint {
    pub fn new(s: Complex64, t: Complex64) -> Result<Self> {
        let p = Self {
            s_re: s.re,
            s_im: s.im,
            t_re: t.re,
            t_im: t.im,
        };
        let r = p.residual();
        if r < LIFT_RESIDUAL_TOL {
            Ok(p)
        } else {
            Err(domain(format!(
                "|1 + e^s + e^t| = {r:e} for ({s}, {t}); not on X"
            )))
        }
    }

    pub fn s(&self) -> Complex64 {
        Complex64::new(self.s_re, self.s_im)
    }

    pub fn t(&self) -> Complex64 {
        Complex64::new(self.t_re, self.t_im)
    }

    /// `|1 + e^s + e^t|`.
    pub fn residual(&self) -> f64 {
        (1.0 + self.s().exp() + self.t().exp()).norm()
    }

    /// Projection onto real parts.
    pub fn real_part(&self) -> (f64, f64) {
        (self.s_re, self.t_re)
    }

    /// Projection onto imaginary parts.
    pub fn imaginary_part(&self) -> (f64, f64) {
        (self.s_im, self.t_im)
    }
}

pub fn lift_from_angles(p: AngularCoords) -> Result<LiftPoint> {
    let q = angles_to_sides(p)?;
    LiftPoint::new(
        Complex64::new(q.a().ln(), PI - p.beta()),
        Complex64::new(q.b().ln(), PI + p.alpha()),
    )
}

/// Imaginary and real parts of `1 + A e^{i(pi - beta)} + B e^{i(pi + alpha)}`
/// for arbitrary sides: `(A sin beta - B sin alpha, 1 - A cos beta - B cos alpha)`.
pub fn eq34_residuals_with_sides(p: AngularCoords, a: f64, b: f64) -> (f64, f64) {
    let (sa, ca) = p.alpha().sin_cos();
    let (sb, cb) = p.beta().sin_cos();
    (a * sb - b * sa, 1.0 - a * cb - b * ca)
}

/// The two real equations of the lift, evaluated on the sides given by the
/// sine rule. Both vanish.
pub fn eq34_residuals(p: AngularCoords) -> Result<(f64, f64)> {
    let q = angles_to_sides(p)?;
    Ok(eq34_residuals_with_sides(p, q.a(), q.b()))
}

/// Cosine-rule residual reached from the two real equations: square
/// `A cos beta = 1 - B cos alpha` and trade `A² sin² beta` for
/// `B² sin² alpha`, giving `A² - B² sin² alpha - (1 - B cos alpha)²`,
/// which is `A² - (1 + B² - 2B cos alpha)`.
pub fn cosine_rule_from_eq34(p: AngularCoords) -> Result<f64> {
    let q = angles_to_sides(p)?;
    let (a, b) = (q.a(), q.b());
    let (sa, ca) = p.alpha().sin_cos();
    let a_cos_beta_sq = a * a - (b * sa).powi(2);
    Ok(a_cos_beta_sq - (1.0 - b * ca).powi(2))
}

/// `G̃ = P ∘ Q⁻¹` on the branch `u = arg z ∈ (0, pi)`, `v = arg w ∈ (pi, 2pi)`
/// with `v - u < pi`: recovers `(alpha, beta) = (v - pi, pi - u)` and returns
/// `(ln A, ln B)`.
pub fn g_tilde(u: f64, v: f64) -> Result<(f64, f64)> {
    if !(u > 0.0 && u < PI && v > PI && v < 2.0 * PI && v - u < PI) {
        return Err(domain(format!(
            "({u}, {v}) is off the branch 0 < u < pi < v < 2pi, v - u < pi"
        )));
    }
    let p = AngularCoords::new(v - PI, PI - u)?;
    let q = angles_to_sides(p)?;
    Ok((q.a().ln(), q.b().ln()))
}

/// Max-norm gap between `G(p)` and `N ∘ G̃(M p + (pi, pi))` with
/// `N = diag(-1, -1)` and `M = [[0, -1], [1, 0]]`. The translation puts the
/// rotated angles on the branch of [`g_tilde`].
pub fn verify_matrix_identity(p: AngularCoords) -> Result<f64> {
    let g = angles_to_log_sides(p)?;
    let (alpha, beta) = p.to_pair();
    let (u, v) = (-beta + PI, alpha + PI);
    let (re_s, re_t) = g_tilde(u, v)?;
    let (nx, ny) = (-re_s, -re_t);
    Ok((g.x() - nx).abs().max((g.y() - ny).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{default_fd_step, fd_jacobian_det};
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_3, FRAC_PI_4, SQRT_2};

    fn ang(a: f64, b: f64) -> AngularCoords {
        AngularCoords::new(a, b).unwrap()
    }

    #[test]
    fn lift_examples() {
        let l = lift_from_angles(ang(FRAC_PI_3, FRAC_PI_3)).unwrap();
        assert!(l.s_re.abs() < 1e-15 && l.t_re.abs() < 1e-15);
        assert!((l.s_im - 2.0 * PI / 3.0).abs() < 1e-15);
        assert!((l.t_im - 4.0 * PI / 3.0).abs() < 1e-15);
        assert!(l.residual() < 1e-15);

        let l = lift_from_angles(ang(FRAC_PI_2, FRAC_PI_4)).unwrap();
        assert!((l.s_re - SQRT_2.ln()).abs() < 1e-15);
        assert!((l.s_im - 3.0 * FRAC_PI_4).abs() < 1e-15);
        assert!(l.t_re.abs() < 1e-15);
        assert!((l.t_im - 3.0 * FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn off_curve_points_are_rejected() {
        assert!(LiftPoint::new(Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0)).is_err());
        assert!(lift_from_angles(ang(FRAC_PI_2, FRAC_PI_2)).is_err());
    }

    #[test]
    fn eq34_examples() {
        let (r3, r4) = eq34_residuals(ang(FRAC_PI_3, FRAC_PI_3)).unwrap();
        assert!(r3.abs() < 1e-15 && r4.abs() < 1e-15);
        let (r3, r4) = eq34_residuals(ang(FRAC_PI_2, FRAC_PI_4)).unwrap();
        assert!(r3.abs() < 1e-15 && r4.abs() < 1e-15);
        assert!(
            cosine_rule_from_eq34(ang(FRAC_PI_3, FRAC_PI_3))
                .unwrap()
                .abs()
                < 1e-15
        );
        assert!(
            cosine_rule_from_eq34(ang(FRAC_PI_2, FRAC_PI_4))
                .unwrap()
                .abs()
                < 1e-12
        );
    }

    #[test]
    fn residuals_detect_wrong_sides() {
        let delta = 1e-3;
        for p in [ang(0.4, 1.9), ang(1.0, 1.0), ang(2.5, 0.3)] {
            let q = angles_to_sides(p).unwrap();
            let (r3, r4) = eq34_residuals_with_sides(p, q.a() + delta, q.b());
            assert!(r3.abs().max(r4.abs()) >= delta / 10.0);
        }
    }

    #[test]
    fn g_tilde_examples() {
        let (x, y) = g_tilde(2.0 * PI / 3.0, 4.0 * PI / 3.0).unwrap();
        assert!(x.abs() < 1e-15 && y.abs() < 1e-15);
        let (x, y) = g_tilde(3.0 * FRAC_PI_4, 3.0 * FRAC_PI_2).unwrap();
        assert!((x - SQRT_2.ln()).abs() < 1e-15 && y.abs() < 1e-15);
        assert!(g_tilde(0.5, 4.0).is_err());
        assert!(g_tilde(-0.1, 4.0).is_err());
        assert!(g_tilde(2.0, 3.0).is_err());
    }

    #[test]
    fn g_tilde_is_area_preserving() {
        for (u, v) in [(2.0, 4.0), (2.5, 3.5), (1.2, 4.2), (3.0, 3.3)] {
            let p = (u, v);
            let det = fd_jacobian_det(g_tilde, p, default_fd_step(p, 0.2)).unwrap();
            assert!((det - 1.0).abs() < 1e-6, "{p:?} {det}");
        }
    }

    #[test]
    fn matrix_identity_examples() {
        assert!(verify_matrix_identity(ang(FRAC_PI_3, FRAC_PI_3)).unwrap() < 1e-12);
        assert!(verify_matrix_identity(ang(FRAC_PI_2, FRAC_PI_4)).unwrap() < 1e-12);
    }
}
