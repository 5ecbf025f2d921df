//! Named verification checks, structured reports, figure rendering and the
//! triangle solver behind the command-line tool.

mod checks;
mod figures;
mod solve;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

pub use checks::CHECK_NAMES;
pub use figures::{
    figure_data, parse_figure_csv, render_figure, render_figure_string, CsvRow, Figure,
    FigureFormat, PILE_LAYERS, TENTACLE_CUTOFF,
};
pub use solve::{solve, Solution, SolveInput};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub seed: u64,
    pub mc_samples: u64,
    pub quad_rel_tol: f64,
    pub jacobian_sweep_points: u64,
    pub format: OutputFormat,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            mc_samples: 1_000_000,
            quad_rel_tol: 1e-10,
            jacobian_sweep_points: 10_000,
            format: OutputFormat::Text,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.mc_samples < 1_000 {
            return Err(domain(format!(
                "mc_samples must be at least 1000, got {}",
                self.mc_samples
            )));
        }
        if !(self.quad_rel_tol > 0.0 && self.quad_rel_tol < 1.0) {
            return Err(domain(format!(
                "quad_rel_tol must lie in (0, 1), got {}",
                self.quad_rel_tol
            )));
        }
        if self.jacobian_sweep_points == 0 {
            return Err(domain("jacobian_sweep_points must be positive"));
        }
        Ok(())
    }
}

/// Outcome of one named check.
///
/// `passed` is always `|measured - expected| <= tolerance`. Checks that test
/// an inequality over many cases report the number of violations as
/// `measured`, with `expected = 0` and `tolerance = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub name: String,
    #[serde(with = "nullable_f64")]
    pub measured: f64,
    pub expected: f64,
    pub tolerance: f64,
    pub passed: bool,
    pub work: u64,
    pub seed: Option<u64>,
}

impl CheckReport {
    pub(crate) fn new(
        name: &str,
        measured: f64,
        expected: f64,
        tolerance: f64,
        work: u64,
        seed: Option<u64>,
    ) -> Self {
        let mut report = Self {
            name: name.to_string(),
            measured,
            expected,
            tolerance,
            passed: false,
            work,
            seed,
        };
        report.recompute_passed();
        report
    }

    pub(crate) fn violations(name: &str, count: u64, work: u64, seed: Option<u64>) -> Self {
        Self::new(name, count as f64, 0.0, 0.0, work, seed)
    }

    fn recompute_passed(&mut self) {
        self.passed = (self.measured - self.expected).abs() <= self.tolerance;
    }
}

/// A full run: the configuration it used and one report per check, in
/// registration order.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: RunConfig,
    pub checks: Vec<CheckReport>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports always serialize");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let c = &self.config;
        let mut out = format!(
            "seed={} mc_samples={} quad_rel_tol={:e} jacobian_sweep_points={}\n",
            c.seed, c.mc_samples, c.quad_rel_tol, c.jacobian_sweep_points
        );
        for r in &self.checks {
            out.push_str(&format!(
                "{:<4} {:<18} measured={:<24e} expected={:<24e} tolerance={:<10e} work={}\n",
                if r.passed { "PASS" } else { "FAIL" },
                r.name,
                r.measured,
                r.expected,
                r.tolerance,
                r.work
            ));
        }
        let passed = self.checks.iter().filter(|r| r.passed).count();
        out.push_str(&format!("{passed}/{} checks passed\n", self.checks.len()));
        out
    }

    pub fn render(&self) -> String {
        match self.config.format {
            OutputFormat::Text => self.to_text(),
            OutputFormat::Json => self.to_json(),
        }
    }
}

/// Parses a JSON report and checks that every `passed` flag agrees with its
/// numbers.
pub fn parse_report(input: &str) -> Result<Report> {
    let report: Report = serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))?;
    for r in &report.checks {
        let consistent = (r.measured - r.expected).abs() <= r.tolerance;
        if r.passed != consistent {
            return Err(Error::Parse(format!(
                "check `{}` has passed = {} but |measured - expected| <= tolerance is {}",
                r.name, r.passed, consistent
            )));
        }
    }
    Ok(report)
}

/// Runs one registered check.
pub fn run_check(name: &str, config: &RunConfig) -> Result<CheckReport> {
    config.validate()?;
    checks::dispatch(name, config)
}

/// Result of [`run_all`]. Checks that could not be evaluated appear in
/// `report` as failed with a non-finite `measured`, and their errors are
/// listed in `errors`.
#[derive(Debug)]
pub struct RunOutcome {
    pub report: Report,
    pub errors: Vec<(String, Error)>,
    pub exit_code: i32,
}

/// Runs every registered check in parallel and collects the reports in
/// registration order. The exit code is 0 iff every check passed.
pub fn run_all(config: &RunConfig) -> Result<RunOutcome> {
    run_selected(CHECK_NAMES, config)
}

pub fn run_selected(names: &[&str], config: &RunConfig) -> Result<RunOutcome> {
    config.validate()?;
    for name in names {
        if !CHECK_NAMES.contains(name) {
            return Err(Error::UnknownCheck(name.to_string()));
        }
    }
    let results: Vec<Result<CheckReport>> = names
        .par_iter()
        .map(|name| checks::dispatch(name, config))
        .collect();
    let mut checks = Vec::with_capacity(names.len());
    let mut errors = Vec::new();
    for (name, result) in names.iter().zip(results) {
        match result {
            Ok(r) => checks.push(r),
            Err(e) => {
                checks.push(CheckReport::new(name, f64::NAN, 0.0, 0.0, 0, None));
                errors.push((name.to_string(), e));
            }
        }
    }
    Ok(finish(
        Report {
            config: *config,
            checks,
        },
        errors,
    ))
}

/// Test hook: runs every check, then shifts the expected value of `name` by
/// `offset` and re-evaluates its verdict.
#[doc(hidden)]
pub fn run_all_tampered(config: &RunConfig, name: &str, offset: f64) -> Result<RunOutcome> {
    let outcome = run_all(config)?;
    let mut report = outcome.report;
    let target = report
        .checks
        .iter_mut()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
    target.expected += offset;
    target.recompute_passed();
    Ok(finish(report, outcome.errors))
}

fn finish(report: Report, errors: Vec<(String, Error)>) -> RunOutcome {
    let exit_code = if report.all_passed() { 0 } else { 1 };
    RunOutcome {
        report,
        errors,
        exit_code,
    }
}

// Non-finite measurements serialize as null and read back as NaN.
mod nullable_f64 {
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> Result<S::Ok, S::Error> {
        if v.is_finite() {
            s.serialize_f64(*v)
        } else {
            s.serialize_none()
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}
