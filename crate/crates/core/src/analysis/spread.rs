use super::quadrature::{integrate_exp_substituted, QuadratureOptions};
use crate::error::{domain, Result};

/// Area under `y = e^{-nx} / n` on `x > 0`, by quadrature. Equals `1/n²`.
pub fn spread_square_integral(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(domain("spread squares are indexed from n = 1"));
    }
    let nf = n as f64;
    let est = integrate_exp_substituted(
        move |x| (-nf * x).exp() / nf,
        0.0,
        f64::INFINITY,
        QuadratureOptions {
            abs_tol: 1e-15,
            rel_tol: 1e-13,
            max_intervals: 500,
        },
    )?;
    Ok(est.value)
}

/// `(x, y) -> ((1 - e^{-nx}) / n, y e^{nx})`, carrying the region under
/// `y = e^{-nx} / n` onto the open square `(0, 1/n)²` with unit Jacobian.
pub fn spread_square_bijection(n: u64, x: f64, y: f64) -> Result<(f64, f64)> {
    if n == 0 {
        return Err(domain("spread squares are indexed from n = 1"));
    }
    let nf = n as f64;
    let curve = (-nf * x).exp() / nf;
    if !(x > 0.0 && y > 0.0 && y < curve) {
        return Err(domain(format!(
            "({x}, {y}) is not under the curve y = e^(-{n}x)/{n}"
        )));
    }
    Ok((-(-nf * x).exp_m1() / nf, y * (nf * x).exp()))
}
