use crate::error::{Error, Result};
use crate::triangle::Jacobian2;

/// Fourth-order central-difference Jacobian of a planar map at `p`, using the
/// same step `h` in both coordinates.
///
/// The stencil reaches `p ± 2h` along each axis; any stencil point the map
/// rejects turns into [`Error::Evaluation`].
pub fn fd_jacobian<F>(map: F, p: (f64, f64), h: f64) -> Result<Jacobian2>
where
    F: Fn(f64, f64) -> Result<(f64, f64)>,
{
    let eval = |x: f64, y: f64| {
        map(x, y).map_err(|e| Error::Evaluation {
            x,
            y,
            source: Box::new(e),
        })
    };
    let column = |dx: f64, dy: f64| -> Result<(f64, f64)> {
        let p2 = eval(p.0 + 2.0 * dx, p.1 + 2.0 * dy)?;
        let p1 = eval(p.0 + dx, p.1 + dy)?;
        let m1 = eval(p.0 - dx, p.1 - dy)?;
        let m2 = eval(p.0 - 2.0 * dx, p.1 - 2.0 * dy)?;
        let d = |a2: f64, a1: f64, b1: f64, b2: f64| (-a2 + 8.0 * a1 - 8.0 * b1 + b2) / (12.0 * h);
        Ok((d(p2.0, p1.0, m1.0, m2.0), d(p2.1, p1.1, m1.1, m2.1)))
    };
    let (a11, a21) = column(h, 0.0)?;
    let (a12, a22) = column(0.0, h)?;
    Jacobian2::new(a11, a12, a21, a22)
}

pub fn fd_jacobian_det<F>(map: F, p: (f64, f64), h: f64) -> Result<f64>
where
    F: Fn(f64, f64) -> Result<(f64, f64)>,
{
    fd_jacobian(map, p, h).map(|j| j.det())
}

/// Step for [`fd_jacobian`]: `max(|p|, 1) · eps^(1/5)`, shrunk by
/// `local_scale` when the map varies on a shorter length than unity near `p`
/// (for instance the distance to a singular boundary).
pub fn default_fd_step(p: (f64, f64), local_scale: f64) -> f64 {
    let size = p.0.abs().max(p.1.abs()).max(1.0);
    size * f64::EPSILON.powf(0.2) * local_scale.clamp(f64::MIN_POSITIVE, 1.0)
}
