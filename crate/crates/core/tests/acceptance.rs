//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line and then
//! asserts on the same outcome.

use std::f64::consts::PI;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use basel::analysis::{
    default_fd_step, fd_jacobian_det, harmonic_partial, integrate_area_u0, log_series_partial,
    mc_area_u0, pile_covering_index, pile_height, spread_square_integral, zeta2_partial, PileBox,
};
use basel::complex_lift::{eq34_residuals, g_tilde, verify_matrix_identity};
use basel::regions::{
    area_t0_exact, area_t_exact, classify_t, classify_u, cyclic_map, sample_t,
    sample_t_with_margin, RegionLabel,
};
use basel::triangle::{angles_to_log_sides, jacobian_g_analytic, AngularCoords};

const ZETA2: f64 = 1.644_934_066_848_226_4;

fn verdict(criterion: u32, passed: bool, detail: &str) {
    println!(
        "{} criterion {criterion}: {detail}",
        if passed { "PASS" } else { "FAIL" }
    );
    assert!(passed, "criterion {criterion} failed: {detail}");
}

fn g_map(a: f64, b: f64) -> basel::Result<(f64, f64)> {
    angles_to_log_sides(AngularCoords::new(a, b)?).map(|r| r.to_pair())
}

fn edge_distance(p: &AngularCoords) -> f64 {
    p.alpha().min(p.beta()).min(p.gamma())
}

#[test]
fn criterion_1_jacobian_theorem() {
    let start = Instant::now();
    let points = sample_t_with_margin(10_000, 1e-3, 0);
    let mut analytic_worst = 0.0f64;
    let mut analytic_misses = 0;
    let mut fd_worst = 0.0f64;
    for p in &points {
        let e = (jacobian_g_analytic(*p).unwrap().det() - 1.0).abs();
        analytic_worst = analytic_worst.max(e);
        if e >= 1e-12 {
            analytic_misses += 1;
        }
        let q = p.to_pair();
        let det = fd_jacobian_det(g_map, q, default_fd_step(q, edge_distance(p))).unwrap();
        fd_worst = fd_worst.max((det - 1.0).abs());
    }
    let elapsed = start.elapsed();
    let passed = analytic_worst < 1e-12 && fd_worst < 1e-6 && elapsed < Duration::from_secs(1);
    verdict(
        1,
        passed,
        &format!(
            "{} points: max |analytic det - 1| = {analytic_worst:e} ({analytic_misses} at or above 1e-12), \
             max |fd det - 1| = {fd_worst:e} (< 1e-6), {elapsed:?} (< 1 s)",
            points.len()
        ),
    );
}

#[test]
fn criterion_2_areas() {
    let start = Instant::now();
    let t = area_t_exact();
    let t0 = area_t0_exact();
    let quad = integrate_area_u0(1e-10).unwrap();
    let mc = mc_area_u0(1_000_000, 20.0, 0).unwrap();
    let elapsed = start.elapsed();
    let ok_t = (t - PI * PI / 2.0).abs() <= 1e-12;
    let ok_t0 = (t0 - ZETA2).abs() <= 1e-12;
    let ok_quad = (quad.value - ZETA2).abs() <= 1e-9;
    let ok_mc = (mc.value - ZETA2).abs() <= mc.error_bound;
    verdict(
        2,
        ok_t && ok_t0 && ok_quad && ok_mc && elapsed < Duration::from_secs(5),
        &format!(
            "area T = {t}, area T0 = {t0}, quadrature {} (err {:e}), Monte Carlo {} +- {} (3 sigma), {elapsed:?} (< 5 s)",
            quad.value,
            (quad.value - ZETA2).abs(),
            mc.value,
            mc.error_bound
        ),
    );
}

#[test]
fn criterion_3_cyclic_permutation() {
    let mut label_violations = 0;
    let mut composition_violations = 0;
    let mut pushforward_mismatches = 0;
    let mut counted = 0;
    for p in sample_t(100_000, 3) {
        let Ok(r) = angles_to_log_sides(p) else {
            continue;
        };
        let label = classify_u(r);
        if label == RegionLabel::Boundary {
            continue;
        }
        counted += 1;
        if classify_t(p) != label {
            pushforward_mismatches += 1;
        }
        // the map (x, y) -> (-y, x - y) written out independently
        let (x1, y1) = (-r.y(), r.x() - r.y());
        let image = cyclic_map(r);
        if image.to_pair() != (x1, y1) {
            label_violations += 1;
        }
        let expected = match label {
            RegionLabel::Sub0 => RegionLabel::Sub1,
            RegionLabel::Sub1 => RegionLabel::Sub2,
            RegionLabel::Sub2 => RegionLabel::Sub0,
            other => other,
        };
        if classify_u(image) != expected {
            label_violations += 1;
        }
        let back = cyclic_map(cyclic_map(image));
        let scale = r.x().abs().max(r.y().abs());
        let gap = (back.x() - r.x()).abs().max((back.y() - r.y()).abs());
        if gap > 1e-12 * scale {
            composition_violations += 1;
        }
    }
    verdict(
        3,
        label_violations == 0 && composition_violations == 0 && pushforward_mismatches == 0,
        &format!(
            "{counted} non-boundary samples: {label_violations} label violations, \
             {composition_violations} triple-composition violations, {pushforward_mismatches} T/U label mismatches"
        ),
    );
}

fn tail_of_log_series(t: f64, n: u64) -> f64 {
    let mut power = t.powi(n as i32);
    let mut tail = 0.0;
    for k in n + 1.. {
        power *= t;
        let term = power / k as f64;
        tail += term;
        if term < 1e-18 * tail {
            break;
        }
    }
    tail
}

#[test]
fn criterion_4_series() {
    let mut remainder_violations = 0;
    for t in [0.1f64, 0.5, 0.9] {
        for n in 1..=50 {
            let s = log_series_partial(t, n).unwrap();
            let bound = -t.powi(n as i32) * (1.0 - t).ln();
            // the tail summed term by term, accurate even far below the last bit of the limit
            let tail = tail_of_log_series(t, n);
            if tail > bound || (s.remainder_bound - bound).abs() > 1e-13 * bound {
                remainder_violations += 1;
            }
        }
    }
    let z = zeta2_partial(1_000_000).unwrap().partial_sum;
    let zeta_ok = (z - ZETA2).abs() <= 1e-6;

    let mut harmonic_violations = 0;
    let mut running = 0.0;
    for n in 1..=10_000u64 {
        running += 1.0 / n as f64;
        let b = harmonic_partial(n).unwrap();
        let floor = (1.0 + n as f64).ln();
        if !(b.holds && b.value > floor && (b.value - running).abs() < 1e-12) {
            harmonic_violations += 1;
        }
    }
    let mut square_violations = 0;
    let mut running = 1.0;
    for n in 2..=10_000u64 {
        running += 1.0 / (n * n) as f64;
        let s = zeta2_partial(n).unwrap().partial_sum;
        if !(s < 2.0 - 1.0 / n as f64 && (s - running).abs() < 1e-13) {
            square_violations += 1;
        }
    }
    verdict(
        4,
        remainder_violations == 0 && zeta_ok && harmonic_violations == 0 && square_violations == 0,
        &format!(
            "{remainder_violations} remainder-bound violations in 150 cases, \
             |zeta2_partial(1e6) - pi^2/6| = {:e}, {harmonic_violations} harmonic and \
             {square_violations} squared-series violations",
            (z - ZETA2).abs()
        ),
    );
}

fn direct_pile(x: f64, n: u64) -> f64 {
    (1..=n).map(|k| (-(k as f64) * x).exp() / k as f64).sum()
}

#[test]
fn criterion_5_pile_covering() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut failures = 0;
    for _ in 0..100 {
        let x_max = 0.05 + 4.0 * rng.random::<f64>();
        let x_min = x_max * (0.01 + 0.99 * rng.random::<f64>());
        let curve = -(1.0 - (-x_max).exp()).ln();
        let height = curve * (0.05 + 0.9 * rng.random::<f64>());
        let n = match pile_covering_index(
            PileBox {
                x_min,
                x_max,
                height,
            },
            0.0,
        ) {
            Ok(n) => n,
            Err(_) => {
                failures += 1;
                continue;
            }
        };
        // smallest index whose pile clears the box at its right edge
        let mut search = 1;
        while direct_pile(x_max, search) <= height {
            search += 1;
        }
        let covers = (0..=50).all(|k| {
            let x = x_min + (x_max - x_min) * k as f64 / 50.0;
            direct_pile(x, n) > height
        });
        if n != search || !covers {
            failures += 1;
        }
    }
    let mut grid_failures = 0;
    for k in 1..=1000 {
        let x = 3.0 * k as f64 / 1000.0;
        let curve = -(1.0 - (-x).exp()).ln();
        for n in 1..=8 {
            if pile_height(x, n).unwrap() >= curve {
                grid_failures += 1;
            }
        }
    }
    verdict(
        5,
        failures == 0 && grid_failures == 0,
        &format!(
            "{failures} of 100 boxes without a minimal covering index, \
             {grid_failures} grid points where a pile of at most 8 layers reaches the boundary"
        ),
    );
}

#[test]
fn criterion_6_pipeline_identity() {
    let total: f64 = (1..=1000u64)
        .rev()
        .map(|n| spread_square_integral(n).unwrap())
        .sum();
    let partial = zeta2_partial(1000).unwrap().partial_sum;
    let gap = (total - partial).abs();
    verdict(
        6,
        gap <= 1e-10,
        &format!(
            "sum of 1000 spread-square integrals {total} vs partial sum {partial}: gap {gap:e}"
        ),
    );
}

#[test]
fn criterion_7_epilogue() {
    let points = sample_t_with_margin(10_000, 1e-3, 7);
    let mut residual = 0.0f64;
    let mut identity = 0.0f64;
    let mut lift_det = 0.0f64;
    for p in &points {
        let (im, re) = eq34_residuals(*p).unwrap();
        residual = residual.max(im.abs()).max(re.abs());
        identity = identity.max(verify_matrix_identity(*p).unwrap());
        let q = (PI - p.beta(), PI + p.alpha());
        let det = fd_jacobian_det(g_tilde, q, default_fd_step(q, edge_distance(p))).unwrap();
        lift_det = lift_det.max((det - 1.0).abs());
    }
    verdict(
        7,
        residual < 1e-12 && identity < 1e-10 && lift_det < 1e-6,
        &format!(
            "{} points: max residual {residual:e} (< 1e-12), max identity gap {identity:e} (< 1e-10), \
             max |fd det of lifted map - 1| = {lift_det:e} (< 1e-6)",
            points.len()
        ),
    );
}

#[test]
fn criterion_8_harness_reproducible() {
    let run = || {
        let start = Instant::now();
        let out = Command::new(env!("CARGO_BIN_EXE_basel"))
            .args(["check", "all", "--format", "json"])
            .env_remove("BASEL_SEED")
            .output()
            .expect("binary runs");
        (out, start.elapsed())
    };
    let (first, t1) = run();
    let (second, t2) = run();
    let identical = first.stdout == second.stdout && !first.stdout.is_empty();
    let exits = (first.status.code(), second.status.code());
    let passed = identical
        && exits == (Some(0), Some(0))
        && t1 < Duration::from_secs(30)
        && t2 < Duration::from_secs(30);
    verdict(
        8,
        passed,
        &format!(
            "byte-identical reports: {identical}, exit codes {exits:?}, wall times {t1:?} and {t2:?} (< 30 s each)"
        ),
    );
}
