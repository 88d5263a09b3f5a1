//! Run configuration from flags and an optional `--config` JSON file.

use std::f64::consts::PI;
use std::fs;
use std::path::{Path, PathBuf};

use hconv_core::geochk::sweep::{expand, stepped, CaseId, CasePoint, ParamRanges, SweepParams};
use hconv_core::geochk::DiskGrid;
use serde::Deserialize;

use crate::cli::SweepArgs;
use crate::HarnessError;

pub const TRUNCATION_RANGE: (usize, usize) = (16, 512);
pub const CONVEXITY_ORDER_RANGE: (usize, usize) = (16, 16384);
pub const CURVE_POINTS_RANGE: (usize, usize) = (16, 4096);
pub const DEFAULT_CURVE_POINTS: usize = 512;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Verify,
    Explore,
    Plot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Formats {
    pub json: bool,
    pub csv: bool,
    pub svg: bool,
}

impl Formats {
    pub fn parse(list: &[String]) -> Result<Self, HarnessError> {
        let mut f = Formats {
            json: false,
            csv: false,
            svg: false,
        };
        for item in list {
            match item.trim().to_ascii_lowercase().as_str() {
                "json" => f.json = true,
                "csv" => f.csv = true,
                "svg" => f.svg = true,
                other => {
                    return Err(HarnessError::config(format!(
                        "unknown format `{other}`; choose from json, csv, svg"
                    )))
                }
            }
        }
        if !(f.json || f.csv || f.svg) {
            return Err(HarnessError::config("--format needs at least one of json, csv, svg"));
        }
        Ok(f)
    }

    fn default_for(mode: Mode) -> Self {
        Formats {
            json: mode != Mode::Plot,
            csv: true,
            svg: true,
        }
    }
}

/// A parameter in a config file: a number, a list or a `lo:hi:step` string.
#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum Values {
    Number(f64),
    List(Vec<f64>),
    Spec(String),
}

#[derive(Clone, Debug, Deserialize, PartialEq)]
#[serde(untagged)]
pub enum FormatList {
    One(String),
    Many(Vec<String>),
}

/// Keys of a `--config` file.
#[derive(Clone, Debug, Default, Deserialize, PartialEq)]
#[serde(deny_unknown_fields)]
pub struct FileConfig {
    pub case: Option<String>,
    pub a: Option<Values>,
    pub gamma: Option<Values>,
    pub theta: Option<Values>,
    pub n: Option<Values>,
    pub t: Option<Values>,
    #[serde(alias = "alpha")]
    pub alpha1: Option<Values>,
    pub alpha2: Option<Values>,
    pub part: Option<Values>,
    pub truncation: Option<usize>,
    pub grid_radius: Option<f64>,
    pub grid_angles: Option<usize>,
    pub convexity: Option<bool>,
    pub convexity_order: Option<usize>,
    pub curve_points: Option<usize>,
    pub out: Option<PathBuf>,
    pub format: Option<FormatList>,
}

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, HarnessError> {
        let text = fs::read_to_string(path).map_err(|e| HarnessError::io(path, e))?;
        serde_json::from_str(&text)
            .map_err(|e| HarnessError::config(format!("{}: {e}", path.display())))
    }
}

/// Parses `1.5`, `-pi/4`, `0.5pi` and the like.
pub fn parse_number(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let bad = || format!("`{s}` is not a number");
    let x = match s.find("pi") {
        Some(i) => {
            let coef = match s[..i].trim_end_matches('*') {
                "" | "+" => 1.0,
                "-" => -1.0,
                c => c.parse::<f64>().map_err(|_| bad())?,
            };
            let div = match &s[i + 2..] {
                "" => 1.0,
                rest => rest
                    .strip_prefix('/')
                    .and_then(|d| d.parse::<f64>().ok())
                    .ok_or_else(bad)?,
            };
            coef * PI / div
        }
        None => s.parse::<f64>().map_err(|_| bad())?,
    };
    if x.is_finite() {
        Ok(x)
    } else {
        Err(bad())
    }
}

/// A number, a comma list or `lo:hi:step`.
pub fn parse_values(name: &str, spec: &str) -> Result<Vec<f64>, HarnessError> {
    let err = |detail: String| {
        HarnessError::config(format!(
            "--{name}: {detail}; expected a number, a comma list or lo:hi:step"
        ))
    };
    let parts: Vec<&str> = spec.split(':').collect();
    match parts.as_slice() {
        [lo, hi, step] => {
            let lo = parse_number(lo).map_err(err)?;
            let hi = parse_number(hi).map_err(err)?;
            let step = parse_number(step).map_err(err)?;
            stepped(lo, hi, step).map_err(|e| err(e.to_string()))
        }
        [single] => single
            .split(',')
            .map(|v| parse_number(v).map_err(err))
            .collect(),
        _ => Err(err(format!("`{spec}` has {} colons", parts.len() - 1))),
    }
}

fn integers(name: &str, values: Vec<f64>, lo: u32, hi: u32) -> Result<Vec<u32>, HarnessError> {
    values
        .into_iter()
        .map(|v| {
            if v.fract() == 0.0 && v >= lo as f64 && v <= hi as f64 {
                Ok(v as u32)
            } else {
                Err(HarnessError::config(format!(
                    "--{name}: {v} is not an integer in [{lo}, {hi}]"
                )))
            }
        })
        .collect()
}

/// Parameter names a case reads.
pub fn case_params(case: CaseId) -> &'static [&'static str] {
    match case {
        CaseId::T22 => &["n", "gamma", "theta", "a"],
        CaseId::T23 | CaseId::T24 | CaseId::T25 => &["a"],
        CaseId::T38 => &["n", "alpha1", "t"],
        CaseId::T39 | CaseId::T311 => &["n", "alpha1", "alpha2", "t"],
        CaseId::T310 => &["part", "n", "alpha1", "alpha2", "t"],
        CaseId::Oq1 | CaseId::Oq2 | CaseId::Oq3 => &["n", "theta", "a"],
    }
}

fn max_power(case: CaseId) -> u32 {
    match case {
        CaseId::T38 | CaseId::T39 | CaseId::T310 | CaseId::T311 => 8,
        _ => 32,
    }
}

fn in_range<T: PartialOrd + std::fmt::Display + Copy>(name: &str, v: T, (lo, hi): (T, T)) -> Result<T, HarnessError> {
    if v >= lo && v <= hi {
        Ok(v)
    } else {
        Err(HarnessError::config(format!("--{name} {v} is outside [{lo}, {hi}]")))
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub mode: Mode,
    pub case: CaseId,
    pub sweep: SweepParams,
    pub curve_points: usize,
    pub out: PathBuf,
    pub formats: Formats,
}

impl RunConfig {
    /// Merges flags over the config file and validates the result.
    pub fn build(mode: Mode, args: &SweepArgs) -> Result<Self, HarnessError> {
        let file = match &args.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let case_text = args
            .case
            .clone()
            .or(file.case.clone())
            .ok_or_else(|| HarnessError::config("no case given; pass one such as t2.5 (see --help)"))?;
        let case: CaseId = case_text.parse()?;
        match mode {
            Mode::Verify if case.is_exploratory() => {
                return Err(HarnessError::config(format!(
                    "{case} is an open question; run `hconv explore {case}`"
                )))
            }
            Mode::Explore if !case.is_exploratory() => {
                return Err(HarnessError::config(format!(
                    "{case} asserts conclusions; run `hconv verify {case}`"
                )))
            }
            _ => {}
        }

        let pick = |name: &str, flag: &Option<String>, key: &Option<Values>| -> Result<Option<Vec<f64>>, HarnessError> {
            let values = match (flag, key) {
                (Some(spec), _) => parse_values(name, spec)?,
                (None, Some(Values::Number(x))) => vec![*x],
                (None, Some(Values::List(v))) => v.clone(),
                (None, Some(Values::Spec(spec))) => parse_values(name, spec)?,
                (None, None) => return Ok(None),
            };
            if values.is_empty() {
                return Err(HarnessError::config(format!("--{name} has no values")));
            }
            if !case_params(case).contains(&name) {
                return Err(HarnessError::config(format!(
                    "{case} does not take --{name}; its parameters are {}",
                    case_params(case).join(", ")
                )));
            }
            Ok(Some(values))
        };
        let n = pick("n", &args.n, &file.n)?
            .map(|v| integers("n", v, 1, max_power(case)))
            .transpose()?;
        let part = pick("part", &args.part, &file.part)?
            .map(|v| integers("part", v, 1, 2))
            .transpose()?;
        let ranges = ParamRanges {
            a: pick("a", &args.a, &file.a)?,
            gamma: pick("gamma", &args.gamma, &file.gamma)?,
            theta: pick("theta", &args.theta, &file.theta)?,
            n,
            t: pick("t", &args.t, &file.t)?,
            alpha1: pick("alpha1", &args.alpha1, &file.alpha1)?,
            alpha2: pick("alpha2", &args.alpha2, &file.alpha2)?,
            part,
        };

        let order = args
            .truncation
            .or(file.truncation)
            .map(|n| in_range("truncation", n, TRUNCATION_RANGE))
            .transpose()?;
        let radius = args.grid_radius.or(file.grid_radius).unwrap_or(0.99);
        if !(radius > 0.0 && radius < 1.0) {
            return Err(HarnessError::config(format!("--grid-radius {radius} must lie in (0, 1)")));
        }
        let angles = in_range("grid-angles", args.grid_angles.or(file.grid_angles).unwrap_or(720), (8, 100_000))?;
        let mut sweep = SweepParams {
            ranges,
            order,
            grid: DiskGrid::standard_with(radius, angles),
            convexity: args.convexity || file.convexity.unwrap_or(false),
            ..SweepParams::default()
        };
        if let Some(k) = args.convexity_order.or(file.convexity_order) {
            sweep.convexity_order = in_range("convexity-order", k, CONVEXITY_ORDER_RANGE)?;
        }
        let formats = match (&args.format, &file.format) {
            (Some(list), _) => Formats::parse(list)?,
            (None, Some(FormatList::One(s))) => Formats::parse(&s.split(',').map(str::to_string).collect::<Vec<_>>())?,
            (None, Some(FormatList::Many(list))) => Formats::parse(list)?,
            (None, None) => Formats::default_for(mode),
        };
        sweep.keep_curves = formats.csv || formats.svg;
        let curve_points = in_range(
            "curve-points",
            args.curve_points.or(file.curve_points).unwrap_or(DEFAULT_CURVE_POINTS),
            CURVE_POINTS_RANGE,
        )?;
        let out = args
            .out
            .clone()
            .or(file.out)
            .unwrap_or_else(|| PathBuf::from("out"));

        let cfg = RunConfig {
            mode,
            case,
            sweep,
            curve_points,
            out,
            formats,
        };
        cfg.points()?;
        Ok(cfg)
    }

    pub fn points(&self) -> Result<Vec<CasePoint>, HarnessError> {
        Ok(expand(self.case, &self.sweep.ranges)?)
    }
}
