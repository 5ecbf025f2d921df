//! Plots of `S` and `T`, the amoeba `U`, the two subdivisions and the piles
//! of spread squares, as self-contained SVG or as raw CSV samples.

use std::f64::consts::{LN_2, PI};
use std::fmt::Write as _;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::pile_height;
use crate::error::{Error, Result};
use crate::regions::{amoeba_boundary_height, cyclic_map, cyclic_map_inverse};
use crate::triangle::LogRadialCoords;

/// Tentacles of the amoeba are cut off at `|x|, |y| <= TENTACLE_CUTOFF`.
pub const TENTACLE_CUTOFF: f64 = 6.0;

/// Number of pile layers drawn under the boundary curve.
pub const PILE_LAYERS: u64 = 8;

const BOUNDARY_SAMPLES: usize = 400;

// Beyond this the gap between the last layer and the curve drops below a
// few ulps and the layers stop being distinguishable in f64.
const PILE_X_MAX: f64 = 3.5;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    RegionsSt,
    Amoeba,
    Subdivision,
    Pile,
}

impl Figure {
    pub const ALL: [Figure; 4] = [
        Figure::RegionsSt,
        Figure::Amoeba,
        Figure::Subdivision,
        Figure::Pile,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Figure::RegionsSt => "regions-ST",
            Figure::Amoeba => "amoeba",
            Figure::Subdivision => "subdivision",
            Figure::Pile => "pile",
        }
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Figure::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::UnknownFigure(s.to_string()))
    }
}

impl std::fmt::Display for Figure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FigureFormat {
    Svg,
    Csv,
}

/// One sampled point of a named curve, as written to CSV.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CsvRow {
    pub curve: String,
    pub x: f64,
    pub y: f64,
}

#[derive(Debug, Clone, PartialEq)]
struct Curve {
    name: String,
    closed: bool,
    color: &'static str,
    points: Vec<(f64, f64)>,
}

impl Curve {
    fn open(name: impl Into<String>, color: &'static str, points: Vec<(f64, f64)>) -> Self {
        Self {
            name: name.into(),
            closed: false,
            color,
            points,
        }
    }

    fn closed(name: impl Into<String>, color: &'static str, points: Vec<(f64, f64)>) -> Self {
        Self {
            closed: true,
            ..Self::open(name, color, points)
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
struct Panel {
    title: &'static str,
    axes: (&'static str, &'static str),
    x_range: (f64, f64),
    y_range: (f64, f64),
    curves: Vec<Curve>,
    labels: Vec<(&'static str, (f64, f64))>,
    note: Option<String>,
}

/// The sampled curves of a figure as CSV rows, in drawing order.
pub fn figure_data(figure: Figure) -> Vec<CsvRow> {
    panels(figure)
        .into_iter()
        .flat_map(|p| p.curves)
        .flat_map(|c| {
            let name = c.name;
            c.points.into_iter().map(move |(x, y)| CsvRow {
                curve: name.clone(),
                x,
                y,
            })
        })
        .collect()
}

pub fn render_figure_string(figure: Figure, format: FigureFormat) -> String {
    match format {
        FigureFormat::Csv => to_csv(&figure_data(figure)),
        FigureFormat::Svg => to_svg(figure, &panels(figure)),
    }
}

pub fn render_figure(figure: Figure, path: &Path, format: FigureFormat) -> Result<()> {
    std::fs::write(path, render_figure_string(figure, format)).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn to_csv(rows: &[CsvRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("writing to memory cannot fail");
    }
    String::from_utf8(w.into_inner().expect("writing to memory cannot fail"))
        .expect("csv output is utf-8")
}

/// Reads CSV written by [`render_figure`]: a `curve,x,y` header, then one
/// row per sample with finite coordinates.
pub fn parse_figure_csv(input: &str) -> Result<Vec<CsvRow>> {
    let mut reader = csv::Reader::from_reader(input.as_bytes());
    let header = reader.headers().map_err(|e| Error::Parse(e.to_string()))?;
    if header.iter().collect::<Vec<_>>() != ["curve", "x", "y"] {
        return Err(Error::Parse(format!(
            "expected header `curve,x,y`, got `{}`",
            header.iter().collect::<Vec<_>>().join(",")
        )));
    }
    let mut rows = Vec::new();
    for (i, record) in reader.deserialize::<CsvRow>().enumerate() {
        let row = record.map_err(|e| Error::Parse(format!("row {}: {e}", i + 1)))?;
        if !(row.x.is_finite() && row.y.is_finite()) {
            return Err(Error::Parse(format!(
                "row {}: non-finite coordinate",
                i + 1
            )));
        }
        if row.curve.is_empty() {
            return Err(Error::Parse(format!("row {}: empty curve name", i + 1)));
        }
        rows.push(row);
    }
    Ok(rows)
}

/// `n` points from `lo` to `hi`, evenly spaced in `ln x`, with `extra`
/// merged in.
fn log_grid(lo: f64, hi: f64, n: usize, extra: &[f64]) -> Vec<f64> {
    let (l0, l1) = (lo.ln(), hi.ln());
    let mut xs: Vec<f64> = (0..n)
        .map(|k| match k {
            0 => lo,
            k if k == n - 1 => hi,
            k => (l0 + (l1 - l0) * k as f64 / (n - 1) as f64).exp(),
        })
        .chain(extra.iter().copied().filter(|x| (lo..=hi).contains(x)))
        .collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    xs
}

/// Parameter range of the first-quadrant boundary curve inside the window.
fn boundary_grid() -> Vec<f64> {
    let lo = amoeba_boundary_height(TENTACLE_CUTOFF).expect("cutoff is positive");
    log_grid(lo, TENTACLE_CUTOFF, BOUNDARY_SAMPLES, &[LN_2])
}

fn in_window(p: &(f64, f64)) -> bool {
    p.0.abs() <= TENTACLE_CUTOFF && p.1.abs() <= TENTACLE_CUTOFF
}

/// The three boundary curves of `U`. The first bounds `U0`; the others are
/// its images under the cyclic map and its inverse.
fn amoeba_boundary() -> [Vec<(f64, f64)>; 3] {
    let first: Vec<LogRadialCoords> = boundary_grid()
        .into_iter()
        .map(|x| {
            let y = amoeba_boundary_height(x).expect("grid is positive");
            LogRadialCoords::new(x, y).expect("boundary point of U")
        })
        .collect();
    let piece = |f: &dyn Fn(LogRadialCoords) -> LogRadialCoords| -> Vec<(f64, f64)> {
        first
            .iter()
            .map(|&r| f(r).to_pair())
            .filter(in_window)
            .collect()
    };
    [
        piece(&|r| r),
        piece(&cyclic_map),
        piece(&cyclic_map_inverse),
    ]
}

fn amoeba_curves() -> Vec<Curve> {
    let [b0, b1, b2] = amoeba_boundary();
    vec![
        Curve::open("u-boundary-0", "#1f4e79", b0),
        Curve::open("u-boundary-1", "#1f4e79", b1),
        Curve::open("u-boundary-2", "#1f4e79", b2),
    ]
}

fn cutoff_note() -> Option<String> {
    Some(format!(
        "tentacles truncated at |x|, |y| <= {TENTACLE_CUTOFF}"
    ))
}

fn t_outline() -> Curve {
    Curve::closed(
        "t-outline",
        "#7f3f00",
        vec![(0.0, 0.0), (PI, 0.0), (0.0, PI)],
    )
}

fn panels(figure: Figure) -> Vec<Panel> {
    let w = TENTACLE_CUTOFF;
    match figure {
        Figure::RegionsSt => vec![
            Panel {
                title: "S: radial coordinates",
                axes: ("A", "B"),
                x_range: (0.0, 4.0),
                y_range: (0.0, 4.0),
                curves: vec![Curve::open(
                    "s-outline",
                    "#1f4e79",
                    vec![(4.0, 3.0), (1.0, 0.0), (0.0, 1.0), (3.0, 4.0)],
                )],
                labels: vec![("S", (1.8, 1.8))],
                note: Some("S is unbounded; drawn for A, B <= 4".to_string()),
            },
            Panel {
                title: "T: angular coordinates",
                axes: ("alpha", "beta"),
                x_range: (0.0, PI),
                y_range: (0.0, PI),
                curves: vec![t_outline()],
                labels: vec![("T", (0.8, 0.8))],
                note: None,
            },
        ],
        Figure::Amoeba => vec![Panel {
            title: "U: logarithmic side lengths",
            axes: ("x", "y"),
            x_range: (-w, w),
            y_range: (-w, w),
            curves: amoeba_curves(),
            labels: vec![("U", (0.6, 0.6))],
            note: cutoff_note(),
        }],
        Figure::Subdivision => {
            let third = PI / 3.0;
            let mut u = amoeba_curves();
            u.extend([
                Curve::open("u-ray-x", "#b03a2e", vec![(0.0, 0.0), (w, 0.0)]),
                Curve::open("u-ray-y", "#b03a2e", vec![(0.0, 0.0), (0.0, w)]),
                Curve::open("u-ray-diagonal", "#b03a2e", vec![(0.0, 0.0), (-w, -w)]),
            ]);
            vec![
                Panel {
                    title: "U0, U1, U2",
                    axes: ("x", "y"),
                    x_range: (-w, w),
                    y_range: (-w, w),
                    curves: u,
                    labels: vec![("U0", (0.5, 0.5)), ("U1", (-1.2, 2.5)), ("U2", (2.5, -1.2))],
                    note: cutoff_note(),
                },
                Panel {
                    title: "T0, T1, T2",
                    axes: ("alpha", "beta"),
                    x_range: (0.0, PI),
                    y_range: (0.0, PI),
                    curves: vec![
                        t_outline(),
                        Curve::open(
                            "t-median-alpha-beta",
                            "#b03a2e",
                            vec![(third, third), (PI / 2.0, PI / 2.0)],
                        ),
                        Curve::open(
                            "t-median-alpha-gamma",
                            "#b03a2e",
                            vec![(third, third), (PI / 2.0, 0.0)],
                        ),
                        Curve::open(
                            "t-median-beta-gamma",
                            "#b03a2e",
                            vec![(third, third), (0.0, PI / 2.0)],
                        ),
                    ],
                    labels: vec![("T0", (0.5, 0.5)), ("T1", (1.9, 0.4)), ("T2", (0.4, 1.9))],
                    note: None,
                },
            ]
        }
        Figure::Pile => {
            let lo = amoeba_boundary_height(w).expect("cutoff is positive");
            let xs = log_grid(lo, PILE_X_MAX, BOUNDARY_SAMPLES, &[LN_2]);
            let mut curves: Vec<Curve> = (1..=PILE_LAYERS)
                .map(|n| {
                    let points = xs
                        .iter()
                        .map(|&x| (x, pile_height(x, n).expect("grid is positive")))
                        .collect();
                    Curve::open(format!("pile-{n}"), "#5d8aa8", points)
                })
                .collect();
            curves.push(Curve::open(
                "boundary",
                "#1f4e79",
                xs.iter()
                    .map(|&x| (x, amoeba_boundary_height(x).expect("grid is positive")))
                    .collect(),
            ));
            vec![Panel {
                title: "piles of spread squares under the boundary of U0",
                axes: ("x", "y"),
                x_range: (0.0, w),
                y_range: (0.0, w),
                curves,
                labels: vec![],
                note: Some(format!(
                    "first {PILE_LAYERS} layers; x <= {PILE_X_MAX}, y <= {w}"
                )),
            }]
        }
    }
}

const PANEL: f64 = 360.0;
const PAD: f64 = 40.0;

fn to_svg(figure: Figure, panels: &[Panel]) -> String {
    let width = panels.len() as f64 * (PANEL + PAD) + PAD;
    let height = PANEL + 3.0 * PAD;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    );
    let _ = writeln!(s, "<title>{}</title>", figure.name());
    let _ = writeln!(
        s,
        r#"<rect x="0" y="0" width="{width}" height="{height}" style="fill:#ffffff"/>"#
    );
    for (i, panel) in panels.iter().enumerate() {
        let left = PAD + i as f64 * (PANEL + PAD);
        write_panel(&mut s, panel, left, PAD);
    }
    s.push_str("</svg>\n");
    s
}

fn write_panel(s: &mut String, p: &Panel, left: f64, top: f64) {
    let (x0, x1) = p.x_range;
    let (y0, y1) = p.y_range;
    let scale = PANEL / (x1 - x0).max(y1 - y0);
    // data (x, y) lands at pixel (tx + scale x, ty - scale y)
    let tx = left - scale * x0;
    let ty = top + scale * y1;
    let px = |x: f64, y: f64| (tx + scale * x, ty - scale * y);

    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" style="font:14px sans-serif;text-anchor:middle">{}</text>"#,
        left + PANEL / 2.0,
        top - 14.0,
        xml_escape(p.title)
    );
    let _ = writeln!(
        s,
        r#"<g transform="translate({tx} {ty}) scale({scale} {})">"#,
        -scale
    );
    let axis = "fill:none;stroke:#999999;stroke-width:1;vector-effect:non-scaling-stroke";
    if (x0..=x1).contains(&0.0) {
        let _ = writeln!(
            s,
            r#"<line x1="0" y1="{y0}" x2="0" y2="{y1}" style="{axis}"/>"#
        );
    }
    if (y0..=y1).contains(&0.0) {
        let _ = writeln!(
            s,
            r#"<line x1="{x0}" y1="0" x2="{x1}" y2="0" style="{axis}"/>"#
        );
    }
    for c in &p.curves {
        let points: Vec<String> = c.points.iter().map(|(x, y)| format!("{x},{y}")).collect();
        let (tag, fill) = if c.closed {
            ("polygon", format!("fill:{};fill-opacity:0.12", c.color))
        } else {
            ("polyline", "fill:none".to_string())
        };
        let _ = writeln!(
            s,
            r#"<{tag} id="{}" points="{}" style="{fill};stroke:{};stroke-width:1.5;vector-effect:non-scaling-stroke"/>"#,
            xml_escape(&c.name),
            points.join(" "),
            c.color
        );
    }
    s.push_str("</g>\n");

    for (text, (x, y)) in &p.labels {
        let (lx, ly) = px(*x, *y);
        let _ = writeln!(
            s,
            r#"<text x="{lx}" y="{ly}" style="font:italic 13px serif;text-anchor:middle">{}</text>"#,
            xml_escape(text)
        );
    }
    let (ax, ay) = px(x1, y0.max(0.0).min(y1));
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" style="font:12px sans-serif">{}</text>"#,
        ax + 4.0,
        ay + 4.0,
        xml_escape(p.axes.0)
    );
    let (bx, by) = px(x0.max(0.0).min(x1), y1);
    let _ = writeln!(
        s,
        r#"<text x="{}" y="{}" style="font:12px sans-serif">{}</text>"#,
        bx + 4.0,
        by + 10.0,
        xml_escape(p.axes.1)
    );
    if let Some(note) = &p.note {
        let _ = writeln!(
            s,
            r#"<text x="{left}" y="{}" style="font:11px sans-serif;fill:#555555">{}</text>"#,
            top + PANEL + 28.0,
            xml_escape(note)
        );
    }
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}
