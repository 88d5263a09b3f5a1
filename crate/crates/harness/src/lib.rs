//! Command-line front end for `hconv-core`: parameter sweeps of the
//! convolution and combination cases with JSON reports, CSV image samples,
//! SVG plots and golden fixtures.

pub mod cli;
pub mod config;
mod error;
pub mod fixtures;
pub mod json;
pub mod output;
pub mod report;

use std::fs;
use std::path::PathBuf;

use hconv_core::geochk::sweep::{evaluate, SweepRow};
use rayon::prelude::*;

pub use config::{Formats, Mode, RunConfig};
pub use error::HarnessError;
pub use report::Status;

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub rows: Vec<SweepRow>,
    pub status: Status,
    pub files: Vec<PathBuf>,
}

/// Evaluates every parameter tuple in parallel, then writes the requested
/// outputs in row order from this thread.
pub fn run(cfg: &RunConfig) -> Result<RunOutcome, HarnessError> {
    let points = cfg.points()?;
    let rows: Vec<SweepRow> = points.par_iter().map(|p| evaluate(p, &cfg.sweep)).collect();
    fs::create_dir_all(&cfg.out).map_err(|e| HarnessError::io(&cfg.out, e))?;
    let mut files = Vec::new();
    if cfg.formats.json {
        files.push(output::write_report(&cfg.out, &rows)?);
    }
    if cfg.formats.csv {
        files.push(output::write_samples(&cfg.out, &rows, cfg.curve_points)?);
    }
    if cfg.formats.svg {
        files.push(output::write_svg(&cfg.out, cfg.case, &rows, cfg.curve_points)?);
    }
    Ok(RunOutcome {
        status: Status::of_rows(cfg.mode, &rows),
        rows,
        files,
    })
}
