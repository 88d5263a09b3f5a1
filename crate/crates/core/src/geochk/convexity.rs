use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::f64::consts::{PI, TAU};

use super::{hengartner_schober, max_dilatation_modulus, DiskGrid, BOUNDARY_TIGHT};
use crate::hmap::HarmonicMap;
use crate::{cis, Error, Result, C64};

/// Boundary sampling for the line-sweep check.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryParams {
    pub r_max: f64,
    pub samples: usize,
    pub levels: usize,
}

impl Default for BoundaryParams {
    fn default() -> Self {
        BoundaryParams {
            r_max: 0.995,
            samples: 4096,
            levels: 256,
        }
    }
}

impl BoundaryParams {
    /// Default sampling on the circle `r = min(0.995, 10^{-12/N})`, where the
    /// tail of a series with bounded coefficients drops below `1e-12`.
    pub fn truncation_safe(order: usize) -> Self {
        let r = libm::pow(10.0, -12.0 / order.max(1) as f64);
        BoundaryParams {
            r_max: r.min(0.995),
            ..Self::default()
        }
    }
}

/// Horizontal line sweep of one closed curve.
#[derive(Clone, Debug, PartialEq)]
pub struct LineCheck {
    pub crossing_max: usize,
    /// Height of the first line attaining `crossing_max`.
    pub worst_level: f64,
    /// Lines with an odd crossing count; always zero for a closed curve.
    pub odd_lines: usize,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ConvexityReport {
    pub direction: f64,
    /// `crossing_max <= 2` on both curves with local univalence confirmed.
    pub passed: bool,
    pub worst_line: String,
    pub crossing_max: usize,
    /// Minimum of `Re((1 - z²)(h + g)')`, filled for the imaginary direction.
    pub min_hs_value: Option<f64>,
    /// Sampled image of `h - e^{2iφ} g`.
    pub analytic: Option<LineCheck>,
    /// Sampled image of `f` itself.
    pub harmonic: Option<LineCheck>,
    /// Grid maximum of `|ω|` when it could be computed.
    pub max_dilatation: Option<f64>,
    /// Point where local univalence failed; the verdict is then withheld.
    pub univalence_failure: Option<C64>,
    /// Harmonic image curve `f(r_max e^{it})`, unrotated.
    pub curve: Vec<C64>,
}

impl ConvexityReport {
    pub fn withheld(&self) -> bool {
        self.univalence_failure.is_some()
    }
}

/// Crossings of the closed polyline `curve` with horizontal lines spread over
/// its bounding box, by sign change of `y - level`. Values within `1e-9` of a
/// level (relative to the box height) are nudged up by `1e-8`.
pub fn count_crossings(curve: &[C64], levels: usize) -> LineCheck {
    let finite = curve.iter().all(|z| z.re.is_finite() && z.im.is_finite());
    if !finite || curve.len() < 3 || levels == 0 {
        return LineCheck {
            crossing_max: usize::MAX,
            worst_level: f64::NAN,
            odd_lines: 0,
            passed: false,
        };
    }
    let lo = curve.iter().map(|z| z.im).fold(f64::INFINITY, f64::min);
    let hi = curve.iter().map(|z| z.im).fold(f64::NEG_INFINITY, f64::max);
    let height = hi - lo;
    let mut out = LineCheck {
        crossing_max: 0,
        worst_level: lo,
        odd_lines: 0,
        passed: true,
    };
    if height <= 0.0 {
        return out;
    }
    for j in 0..levels {
        let level = lo + (j as f64 + 0.5) / levels as f64 * height;
        let side = |z: &C64| {
            let d = z.im - level;
            if d.abs() < 1e-9 * height {
                true
            } else {
                d > 0.0
            }
        };
        let mut prev = side(&curve[curve.len() - 1]);
        let mut count = 0;
        for z in curve {
            let s = side(z);
            if s != prev {
                count += 1;
            }
            prev = s;
        }
        if count % 2 == 1 {
            out.odd_lines += 1;
        }
        if count > out.crossing_max {
            out.crossing_max = count;
            out.worst_level = level;
        }
    }
    out.passed = out.crossing_max <= 2;
    out
}

fn circle(boundary: &BoundaryParams) -> impl Iterator<Item = C64> + '_ {
    let m = boundary.samples;
    (0..m).map(move |k| cis(TAU * k as f64 / m as f64) * boundary.r_max)
}

/// Two-stage check that `f` is convex in direction `φ`.
///
/// Local univalence (`|ω| < 1` on `grid`) is checked first. Then the sampled
/// images of `A = h - e^{2iφ} g` and of `f` on `|z| = r_max`, rotated by
/// `e^{-iφ}`, must meet every horizontal line at most twice.
pub fn convex_in_direction(
    f: &HarmonicMap,
    phi: f64,
    grid: &DiskGrid,
    boundary: &BoundaryParams,
) -> ConvexityReport {
    let mut report = ConvexityReport {
        direction: phi,
        passed: false,
        worst_line: String::new(),
        crossing_max: 0,
        min_hs_value: None,
        analytic: None,
        harmonic: None,
        max_dilatation: None,
        univalence_failure: None,
        curve: Vec::new(),
    };
    if (libm::remainder(phi - PI / 2.0, PI)).abs() < 1e-12 {
        report.min_hs_value = Some(hengartner_schober(&f.shear_combination(phi), grid).min);
    }
    match max_dilatation_modulus(f, grid) {
        Ok(m) => {
            report.max_dilatation = Some(m.max);
            if m.max >= 1.0 + BOUNDARY_TIGHT {
                report.univalence_failure = Some(m.argmax);
            }
        }
        Err(Error::DegenerateDerivative { point }) => report.univalence_failure = Some(point),
        Err(_) => report.univalence_failure = Some(C64::new(f64::NAN, f64::NAN)),
    }

    let rot = cis(-phi);
    let a_series = f.shear_combination(phi);
    let analytic: Vec<C64> = circle(boundary).map(|z| a_series.evaluate(z) * rot).collect();
    let image: Vec<C64> = circle(boundary).map(|z| f.eval(z)).collect();
    let rotated: Vec<C64> = image.iter().map(|&w| w * rot).collect();
    let a = count_crossings(&analytic, boundary.levels);
    let h = count_crossings(&rotated, boundary.levels);

    let (stage, worst) = if a.crossing_max >= h.crossing_max {
        ("analytic", &a)
    } else {
        ("harmonic", &h)
    };
    report.crossing_max = worst.crossing_max;
    report.worst_line = format!(
        "{stage} image, line Im(e^{{-i phi}} w) = {:.6e} with {} crossings",
        worst.worst_level, worst.crossing_max
    );
    report.passed = report.univalence_failure.is_none() && a.passed && h.passed;
    report.analytic = Some(a);
    report.harmonic = Some(h);
    report.curve = image;
    report
}

/// Result form of [`convex_in_direction`]: local-univalence failure is an error.
pub fn require_convex(
    f: &HarmonicMap,
    phi: f64,
    grid: &DiskGrid,
    boundary: &BoundaryParams,
) -> Result<ConvexityReport> {
    let report = convex_in_direction(f, phi, grid, boundary);
    match report.univalence_failure {
        Some(point) => Err(Error::DegenerateDerivative { point }),
        None => Ok(report),
    }
}
