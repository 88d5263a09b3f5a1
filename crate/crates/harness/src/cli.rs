use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use hconv_core::geochk::sweep::CaseId;

/// Case table appended to every `--help` page.
pub fn case_help() -> String {
    let mut s = String::from("Cases:\n");
    for c in CaseId::ALL {
        s.push_str(&format!("  {:<6} {}\n", c.as_str(), c.summary()));
    }
    s.push_str(
        "\nParameter values take a number, a comma list or lo:hi:step, e.g. --a-range -0.9:0.9:0.1.\n\
         Angles accept pi forms such as pi/4 or 0.5pi.\n\
         \nExit status: 0 pass, 1 invalid config, 2 an assertion failed, 3 indeterminate, 4 I/O error.",
    );
    s
}

#[derive(Debug, Parser)]
#[command(
    name = "hconv",
    version,
    about = "Sweeps, fixtures and plots for convolutions and combinations of planar harmonic maps",
    after_help = case_help()
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run an asserting case (T2.2 to T3.11) and check its conclusions
    #[command(after_help = case_help())]
    Verify(SweepArgs),
    /// Run an open-question case (OQ1 to OQ3); nothing is asserted
    #[command(after_help = case_help())]
    Explore(SweepArgs),
    /// Sample boundary image curves of a case to CSV and SVG
    #[command(after_help = case_help())]
    Plot(SweepArgs),
    /// Regenerate the golden JSON fixtures
    Fixtures {
        /// Output directory
        #[arg(long, default_value = "fixtures")]
        out: PathBuf,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct SweepArgs {
    /// Case id, e.g. t2.5 (case-insensitive); may come from --config instead
    pub case: Option<String>,

    /// Dilatation parameter a
    #[arg(long, visible_alias = "a-range", value_name = "VALUES", allow_hyphen_values = true)]
    pub a: Option<String>,

    /// Slant angle gamma
    #[arg(long, visible_alias = "gamma-range", value_name = "VALUES", allow_hyphen_values = true)]
    pub gamma: Option<String>,

    /// Rotation angle theta
    #[arg(long, visible_alias = "theta-range", value_name = "VALUES", allow_hyphen_values = true)]
    pub theta: Option<String>,

    /// Power n
    #[arg(long, visible_alias = "n-range", value_name = "VALUES")]
    pub n: Option<String>,

    /// Combination weight t in [0, 1]
    #[arg(long, visible_alias = "t-range", value_name = "VALUES")]
    pub t: Option<String>,

    /// First family parameter (alpha for T3.8)
    #[arg(long, visible_aliases = ["alpha1-range", "alpha"], value_name = "VALUES", allow_hyphen_values = true)]
    pub alpha1: Option<String>,

    /// Second family parameter
    #[arg(long, visible_alias = "alpha2-range", value_name = "VALUES", allow_hyphen_values = true)]
    pub alpha2: Option<String>,

    /// Part of T3.10: 1 or 2
    #[arg(long, value_name = "VALUES")]
    pub part: Option<String>,

    /// Series truncation order N in [16, 512]
    #[arg(long, value_name = "N")]
    pub truncation: Option<usize>,

    /// Outer radius of the sample grid, in (0, 1)
    #[arg(long, value_name = "R")]
    pub grid_radius: Option<f64>,

    /// Angles per grid ring
    #[arg(long, value_name = "COUNT")]
    pub grid_angles: Option<usize>,

    /// Also collect convexity-in-direction evidence (slow)
    #[arg(long)]
    pub convexity: bool,

    /// Series order of the maps sampled for convexity and curves, in [16, 16384]
    #[arg(long, value_name = "N")]
    pub convexity_order: Option<usize>,

    /// Points per curve in samples.csv and the SVG plot
    #[arg(long, value_name = "COUNT")]
    pub curve_points: Option<usize>,

    /// Output directory
    #[arg(long, value_name = "DIR")]
    pub out: Option<PathBuf>,

    /// Output formats, a subset of json,csv,svg
    #[arg(long, value_name = "LIST", value_delimiter = ',')]
    pub format: Option<Vec<String>>,

    /// JSON file with the same keys as the flags; flags override it
    #[arg(long, value_name = "PATH")]
    pub config: Option<PathBuf>,
}
