//! `report.json`, `samples.csv` and per-case SVG plots.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use hconv_core::geochk::sweep::{CaseId, SweepRow};
use hconv_core::C64;
use serde_json::Value;

use crate::json::{number, to_text};
use crate::report::{params_json, report_json};
use crate::HarnessError;

pub const SVG_SIZE: f64 = 1000.0;
const MARGIN: f64 = 40.0;
const PALETTE: [&str; 8] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf", "#8c564b", "#e377c2",
];

/// Evenly spaced subsample of at most `points` entries.
pub fn subsample(curve: &[C64], points: usize) -> Vec<C64> {
    if curve.len() <= points {
        return curve.to_vec();
    }
    (0..points).map(|i| curve[i * curve.len() / points]).collect()
}

fn field(x: f64) -> String {
    match number(x) {
        Value::Null => String::new(),
        v => v.to_string(),
    }
}

pub fn svg_name(case: CaseId) -> String {
    format!("{}.svg", case.as_str().to_ascii_lowercase())
}

fn write_file(path: &Path, text: &str) -> Result<(), HarnessError> {
    fs::write(path, text).map_err(|e| HarnessError::io(path, e))
}

pub fn write_report(dir: &Path, rows: &[SweepRow]) -> Result<PathBuf, HarnessError> {
    let path = dir.join("report.json");
    write_file(&path, &to_text(&report_json(rows)))?;
    Ok(path)
}

/// Columns `param-id, t-index, re, im`; non-finite samples are left empty.
pub fn write_samples(dir: &Path, rows: &[SweepRow], points: usize) -> Result<PathBuf, HarnessError> {
    let path = dir.join("samples.csv");
    let csv_err = |source| HarnessError::Csv {
        path: path.clone(),
        source,
    };
    let mut w = csv::Writer::from_path(&path).map_err(csv_err)?;
    w.write_record(["param-id", "t-index", "re", "im"]).map_err(csv_err)?;
    for (id, row) in rows.iter().enumerate() {
        for (k, z) in subsample(&row.curve, points).iter().enumerate() {
            w.write_record([id.to_string(), k.to_string(), field(z.re), field(z.im)])
                .map_err(csv_err)?;
        }
    }
    w.flush().map_err(|e| HarnessError::io(&path, e))?;
    Ok(path)
}

pub fn write_svg(dir: &Path, case: CaseId, rows: &[SweepRow], points: usize) -> Result<PathBuf, HarnessError> {
    let path = dir.join(svg_name(case));
    let curves: Vec<Vec<C64>> = rows.iter().map(|r| subsample(&r.curve, points)).collect();
    write_file(&path, &svg(case, rows, &curves))?;
    Ok(path)
}

struct Frame {
    scale: f64,
    cx: f64,
    cy: f64,
}

impl Frame {
    fn fit(curves: &[Vec<C64>]) -> Option<Self> {
        let finite = curves
            .iter()
            .flatten()
            .filter(|z| z.re.is_finite() && z.im.is_finite());
        let (mut x0, mut x1, mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY, f64::INFINITY, f64::NEG_INFINITY);
        for z in finite {
            x0 = x0.min(z.re);
            x1 = x1.max(z.re);
            y0 = y0.min(z.im);
            y1 = y1.max(z.im);
        }
        if !x0.is_finite() {
            return None;
        }
        let span = (x1 - x0).max(y1 - y0);
        let scale = if span > 0.0 { (SVG_SIZE - 2.0 * MARGIN) / span } else { 1.0 };
        Some(Frame {
            scale,
            cx: 0.5 * (x0 + x1),
            cy: 0.5 * (y0 + y1),
        })
    }

    fn x(&self, re: f64) -> f64 {
        0.5 * SVG_SIZE + (re - self.cx) * self.scale
    }

    fn y(&self, im: f64) -> f64 {
        0.5 * SVG_SIZE - (im - self.cy) * self.scale
    }
}

/// Autoscaled 1000×1000 plot with one closed polyline per row.
pub fn svg(case: CaseId, rows: &[SweepRow], curves: &[Vec<C64>]) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{0}" height="{0}" viewBox="0 0 {0} {0}">"#,
        SVG_SIZE
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(
        s,
        r#"<text x="{MARGIN}" y="{}" font-family="sans-serif" font-size="16">{} ({} curves)</text>"#,
        MARGIN * 0.6,
        case,
        rows.len()
    );
    if let Some(frame) = Frame::fit(curves) {
        let (left, right) = (MARGIN, SVG_SIZE - MARGIN);
        let ox = frame.x(0.0);
        let oy = frame.y(0.0);
        if (left..=right).contains(&ox) {
            let _ = writeln!(s, r##"<line x1="{ox:.2}" y1="{left}" x2="{ox:.2}" y2="{right}" stroke="#bbbbbb" stroke-width="0.5"/>"##);
        }
        if (left..=right).contains(&oy) {
            let _ = writeln!(s, r##"<line x1="{left}" y1="{oy:.2}" x2="{right}" y2="{oy:.2}" stroke="#bbbbbb" stroke-width="0.5"/>"##);
        }
        for (id, (row, curve)) in rows.iter().zip(curves).enumerate() {
            let colour = PALETTE[id % PALETTE.len()];
            let title = params_json(&row.params).to_string();
            let closed = curve.iter().all(|z| z.re.is_finite() && z.im.is_finite());
            let mut runs: Vec<Vec<C64>> = vec![Vec::new()];
            for &z in curve {
                if z.re.is_finite() && z.im.is_finite() {
                    runs.last_mut().expect("non-empty").push(z);
                } else if !runs.last().expect("non-empty").is_empty() {
                    runs.push(Vec::new());
                }
            }
            if closed {
                if let Some(&first) = curve.first() {
                    runs[0].push(first);
                }
            }
            for run in runs.iter().filter(|r| r.len() > 1) {
                let pts: Vec<String> = run
                    .iter()
                    .map(|z| format!("{:.2},{:.2}", frame.x(z.re), frame.y(z.im)))
                    .collect();
                let _ = writeln!(
                    s,
                    r#"<polyline fill="none" stroke="{colour}" stroke-width="1" points="{}"><title>#{id} {}</title></polyline>"#,
                    pts.join(" "),
                    title.replace('"', "")
                );
            }
        }
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use hconv_core::cis;
    use hconv_core::geochk::sweep::{Metrics, Verdict};

    fn circle_row(radius: f64) -> SweepRow {
        SweepRow {
            case: CaseId::T25,
            params: vec![("a", radius)],
            verdict: Verdict::Pass,
            metrics: Metrics::default(),
            note: String::new(),
            curve: (0..64).map(|k| cis(k as f64 * 0.1) * radius).collect(),
        }
    }

    #[test]
    fn subsampling() {
        let c: Vec<C64> = (0..100).map(|k| C64::new(k as f64, 0.0)).collect();
        let s = subsample(&c, 10);
        assert_eq!(s.len(), 10);
        assert_eq!(s[1].re, 10.0);
        assert_eq!(subsample(&c, 200).len(), 100);
    }

    #[test]
    fn svg_fits_the_viewport() {
        let rows = vec![circle_row(0.5), circle_row(2.0)];
        let curves: Vec<Vec<C64>> = rows.iter().map(|r| r.curve.clone()).collect();
        let text = svg(CaseId::T25, &rows, &curves);
        assert!(text.starts_with("<svg"));
        assert_eq!(text.matches("<polyline").count(), 2);
        for token in text.split(['"', ' ', ',']) {
            if let Ok(v) = token.parse::<f64>() {
                assert!((0.0..=SVG_SIZE).contains(&v), "{v}");
            }
        }
    }

    #[test]
    fn gaps_split_polylines() {
        let mut row = circle_row(1.0);
        row.curve[10] = C64::new(f64::NAN, 0.0);
        let text = svg(CaseId::T25, &[row.clone()], &[row.curve.clone()]);
        assert_eq!(text.matches("<polyline").count(), 2);
        let empty = svg(CaseId::T25, &[], &[]);
        assert!(!empty.contains("<polyline"));
    }
}
