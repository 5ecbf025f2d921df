//! Globally adaptive Gauss–Kronrod (7/15) quadrature.
//!
//! Each interval carries the Kronrod estimate and `|K15 - G7|` as its error.
//! The interval with the largest error is bisected until the summed error
//! meets the target. Nodes never touch interval endpoints, so integrable
//! endpoint singularities such as `ln(1 - t)` at `t = 1` are handled by
//! refinement alone.

use std::cmp::Ordering;
use std::collections::BinaryHeap;

use super::NumericEstimate;
use crate::error::{domain, Error, Result};
use crate::regions::ln_one_minus_exp_neg;

const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];

const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];

// Gauss weights for the nodes XGK[1], XGK[3], XGK[5], XGK[7].
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureOptions {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub max_intervals: usize,
}

impl Default for QuadratureOptions {
    fn default() -> Self {
        Self {
            abs_tol: 0.0,
            rel_tol: 1e-10,
            max_intervals: 2000,
        }
    }
}

#[derive(Debug, Clone, Copy)]
struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Interval {}

impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error
            .total_cmp(&other.error)
            .then_with(|| other.a.total_cmp(&self.a))
    }
}

fn gauss_kronrod<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Interval {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    for j in 0..7 {
        let dx = half * XGK[j];
        let pair = f(center - dx) + f(center + dx);
        kronrod += WGK[j] * pair;
        if j % 2 == 1 {
            gauss += WG[j / 2] * pair;
        }
    }
    Interval {
        a,
        b,
        value: kronrod * half,
        error: ((kronrod - gauss) * half).abs(),
    }
}

/// Integrates `f` over the finite interval `[a, b]`.
///
/// The returned `error_bound` is the summed per-interval error plus a
/// rounding allowance. `work` counts integrand evaluations.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: QuadratureOptions,
) -> Result<NumericEstimate> {
    if !(a.is_finite() && b.is_finite() && a <= b) {
        return Err(domain(format!(
            "quadrature needs finite a <= b, got [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(NumericEstimate {
            value: 0.0,
            error_bound: 0.0,
            work: 0,
        });
    }
    let mut heap = BinaryHeap::new();
    heap.push(gauss_kronrod(&f, a, b));
    let mut evals = 15u64;
    loop {
        let (value, error, magnitude) = heap.iter().fold((0.0, 0.0, 0.0), |acc, iv| {
            (acc.0 + iv.value, acc.1 + iv.error, acc.2 + iv.value.abs())
        });
        if !value.is_finite() || !error.is_finite() {
            return Err(domain("integrand produced a non-finite value"));
        }
        let target = opts.abs_tol.max(opts.rel_tol * value.abs());
        let rounding = 50.0 * f64::EPSILON * magnitude;
        if error + rounding <= target {
            return Ok(NumericEstimate {
                value,
                error_bound: error + rounding,
                work: evals,
            });
        }
        if heap.len() >= opts.max_intervals {
            return Err(Error::ToleranceNotMet {
                intervals: heap.len(),
                error,
                target,
            });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval can no longer be split in f64
            return Err(Error::ToleranceNotMet {
                intervals: heap.len() + 1,
                error,
                target,
            });
        }
        heap.push(gauss_kronrod(&f, worst.a, mid));
        heap.push(gauss_kronrod(&f, mid, worst.b));
        evals += 30;
    }
}

/// `∫_a^b f(x) dx` for `0 <= a < b <= ∞`, integrated in `t = e^-x` as
/// `∫_{e^-b}^{e^-a} f(-ln t) / t dt`.
pub fn integrate_exp_substituted<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    opts: QuadratureOptions,
) -> Result<NumericEstimate> {
    if !(a.is_finite() && a >= 0.0 && b > a) {
        return Err(domain(format!("need 0 <= a < b, got a = {a}, b = {b}")));
    }
    let (t_lo, t_hi) = ((-b).exp(), (-a).exp());
    integrate(move |t| f(-t.ln()) / t, t_lo, t_hi, opts)
}

/// `-ln(1 - e^-x)`, the height of `U0` above `x`.
pub fn u0_integrand(x: f64) -> f64 {
    -ln_one_minus_exp_neg(x)
}

/// `∫_0^∞ -ln(1 - e^-x) dx`, the area of `U0`, computed only from pointwise
/// values of the integrand.
///
/// The range is cut at `L` chosen so the neglected tail, at most
/// `e^-L / (1 - e^-L)` since the integrand is below `e^-x / (1 - e^-x)`,
/// costs a tenth of the budget. That bound is added to `error_bound`, not
/// to the value.
pub fn integrate_area_u0(rel_tol: f64) -> Result<NumericEstimate> {
    if !(rel_tol > 0.0 && rel_tol <= 1e-6) {
        return Err(domain(format!(
            "rel_tol must lie in (0, 1e-6], got {rel_tol}"
        )));
    }
    // The area exceeds ∫_0^1 -ln(1 - e^-x) dx > 1, so an absolute tail of
    // rel_tol / 10 is within a tenth of the relative budget.
    let cut = (10.0 / rel_tol).ln() + 1.0;
    let tail_bound = (-cut).exp() / (-(-cut).exp_m1());
    let core = integrate_exp_substituted(
        u0_integrand,
        0.0,
        cut,
        QuadratureOptions {
            abs_tol: 0.0,
            rel_tol: 0.8 * rel_tol,
            max_intervals: 4000,
        },
    )?;
    Ok(NumericEstimate {
        value: core.value,
        error_bound: core.error_bound + tail_bound,
        work: core.work,
    })
}

/// `∫_L^∞ -ln(1 - e^-x) dx` by quadrature.
pub fn integrate_boundary_tail(cut: f64, rel_tol: f64) -> Result<NumericEstimate> {
    if !(cut > 0.0) {
        return Err(domain(format!("tail start must be positive, got {cut}")));
    }
    integrate_exp_substituted(
        u0_integrand,
        cut,
        f64::INFINITY,
        QuadratureOptions {
            abs_tol: 0.0,
            rel_tol,
            max_intervals: 2000,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn low_degree_polynomials_need_one_interval() {
        // G7 is exact through degree 13, so K15 and G7 agree
        let est = integrate(|x| x.powi(13), 0.0, 1.0, QuadratureOptions::default()).unwrap();
        assert!((est.value - 1.0 / 14.0).abs() < 1e-16);
        assert_eq!(est.work, 15);
        let est = integrate(|x| x.powi(29), 0.0, 1.0, QuadratureOptions::default()).unwrap();
        assert!((est.value - 1.0 / 30.0).abs() < 1e-16);
    }

    #[test]
    fn log_endpoint_singularity() {
        // ∫_0^1 ln t dt = -1
        let est = integrate(f64::ln, 0.0, 1.0, QuadratureOptions::default()).unwrap();
        assert!((est.value + 1.0).abs() <= est.error_bound.max(1e-12));
        assert!((est.value + 1.0).abs() < 1e-9);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let opts = QuadratureOptions {
            abs_tol: 0.0,
            rel_tol: 1e-14,
            max_intervals: 3,
        };
        let err = integrate(|t: f64| (1.0 - t).ln(), 0.0, 1.0, opts).unwrap_err();
        assert!(matches!(err, Error::ToleranceNotMet { .. }));
    }

    #[test]
    fn bad_intervals_are_rejected() {
        let o = QuadratureOptions::default();
        assert!(integrate(|x| x, 1.0, 0.0, o).is_err());
        assert!(integrate(|x| x, 0.0, f64::INFINITY, o).is_err());
        assert!(integrate_exp_substituted(|x| x, -1.0, 1.0, o).is_err());
        assert_eq!(integrate(|x| x, 2.0, 2.0, o).unwrap().value, 0.0);
    }

    #[test]
    fn integrand_at_symmetry_point() {
        assert!((u0_integrand(LN_2) - LN_2).abs() < 1e-15);
    }

    #[test]
    fn area_u0_matches_pi_squared_over_six() {
        let est = integrate_area_u0(1e-10).unwrap();
        let exact = PI * PI / 6.0;
        assert!((est.value - exact).abs() < 1e-9, "{est:?}");
        assert!(est.contains(exact), "{est:?}");
    }

    #[test]
    fn area_u0_rejects_loose_or_invalid_tolerance() {
        assert!(integrate_area_u0(1e-3).is_err());
        assert!(integrate_area_u0(0.0).is_err());
        assert!(integrate_area_u0(f64::NAN).is_err());
    }

    #[test]
    fn tail_matches_termwise_pile_integrals() {
        // ∫_L^∞ Σ e^{-nx}/n dx = Σ e^{-nL}/n², summed here independently
        for cut in [1.0, 0.25, 3.0] {
            let mut series = 0.0;
            for n in 1..=2000 {
                let term = (-(n as f64) * cut).exp() / (n * n) as f64;
                series += term;
                if term < 1e-18 {
                    break;
                }
            }
            let est = integrate_boundary_tail(cut, 1e-12).unwrap();
            assert!(
                (est.value - series).abs() < 1e-11,
                "L={cut}: {} vs {series}",
                est.value
            );
        }
    }
}
