use std::process::{Command, Output};

fn basel(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_basel"))
        .args(args)
        .env_remove("BASEL_SEED")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn single_check_passes() {
    let o = basel(&["check", "area-t0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("PASS area-t0"));
}

#[test]
fn unknown_check_is_a_usage_error() {
    let o = basel(&["check", "nonsense"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("nonsense"));
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(basel(&["check", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(basel(&["solve"]).status.code(), Some(2));
    assert_eq!(
        basel(&["solve", "--angles", "1", "1", "--sides", "1", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        basel(&["check", "--mc-samples", "5"]).status.code(),
        Some(2)
    );
}

#[test]
fn seed_comes_from_the_environment() {
    let run = |seed: Option<&str>, args: &[&str]| {
        let mut c = Command::new(env!("CARGO_BIN_EXE_basel"));
        c.args([
            "check",
            "area-u0-mc",
            "--format",
            "json",
            "--mc-samples",
            "20000",
        ]);
        c.args(args);
        c.env_remove("BASEL_SEED");
        if let Some(s) = seed {
            c.env("BASEL_SEED", s);
        }
        stdout(&c.output().unwrap())
    };
    let from_env = run(Some("42"), &[]);
    assert!(from_env.contains("\"seed\": 42"));
    assert_eq!(from_env, run(None, &["--seed", "42"]));
    assert_ne!(from_env, run(None, &[]));
    assert!(stdout(&basel(&["--help"])).contains("BASEL_SEED"));
}

#[test]
fn report_goes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = basel(&[
        "check",
        "pipeline",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let report = basel::harness::parse_report(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report.checks[0].name, "pipeline");
}

#[test]
fn solve_prints_every_coordinate() {
    let o = basel(&["solve", "--angles", "1.0471976", "1.0471976"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    for needle in [
        "alpha",
        "gamma",
        "A = 1.0000000",
        "x = -0.0000000",
        "T: Boundary",
        "U: Boundary",
    ] {
        assert!(text.contains(needle), "{needle} missing from {text}");
    }
    let o = basel(&["solve", "--logsides", "-0.5", "0.3"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn solve_reports_the_violated_inequality() {
    let o = basel(&["solve", "--sides", "3", "1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("A < 1 + B"));
}

#[test]
fn plot_writes_each_figure() {
    let dir = tempfile::tempdir().unwrap();
    for figure in ["regions-ST", "amoeba", "subdivision", "pile"] {
        for format in ["svg", "csv"] {
            let path = dir.path().join(format!("{figure}.{format}"));
            let o = basel(&[
                "plot",
                figure,
                "--format",
                format,
                "--out",
                path.to_str().unwrap(),
            ]);
            assert_eq!(o.status.code(), Some(0), "{figure} {format}");
            assert!(std::fs::metadata(&path).unwrap().len() > 0);
        }
    }
    let o = basel(&["plot", "fig9", "--format", "svg", "--out", "x.svg"]);
    assert_eq!(o.status.code(), Some(2));
}
