//! Parameter sweeps that run a construction, its certificates and optional
//! convexity evidence over a grid of parameters.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use core::fmt;
use core::str::FromStr;

use super::{convex_in_direction, family_functional, min_real_part, BoundaryParams, DiskGrid};
use crate::convo::chains::{blaschke_square_chain, cayley_square_chain, mixed_power_chain};
use crate::convo::{
    blaschke_square_dilatation, blaschke_square_quartic, cayley_square_dilatation, cayley_square_quartic, certify_bounded_on,
    combination, combination_dilatation, convolve, detect_monomial, double_power_cubic, double_power_dilatation,
    equal_index_dilatation, half_plane_dilatation, mixed_power_dilatation, mixed_power_sextic, monomial_dilatation,
    opposite_power_cubic, opposite_power_dilatation, strip_dilatation, BoundReport, RationalFunction,
};
use crate::cpoly::{ComplexPolynomial, ORACLE_TOL};
use crate::grid::scatter_points;
use crate::hmap::{f_a_alpha, family_f_alpha_n, slanted_halfplane, strip_map, FamilyParams, HarmonicMap, SlantParams};
use crate::series::{check_disk_param, family_alpha_bound, PowerSeries};
use crate::{cis, Error, Result, C64};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseId {
    T22,
    T23,
    T24,
    T25,
    T38,
    T39,
    T310,
    T311,
    Oq1,
    Oq2,
    Oq3,
}

impl CaseId {
    pub const ALL: [CaseId; 11] = [
        CaseId::T22,
        CaseId::T23,
        CaseId::T24,
        CaseId::T25,
        CaseId::T38,
        CaseId::T39,
        CaseId::T310,
        CaseId::T311,
        CaseId::Oq1,
        CaseId::Oq2,
        CaseId::Oq3,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            CaseId::T22 => "T2.2",
            CaseId::T23 => "T2.3",
            CaseId::T24 => "T2.4",
            CaseId::T25 => "T2.5",
            CaseId::T38 => "T3.8",
            CaseId::T39 => "T3.9",
            CaseId::T310 => "T3.10",
            CaseId::T311 => "T3.11",
            CaseId::Oq1 => "OQ1",
            CaseId::Oq2 => "OQ2",
            CaseId::Oq3 => "OQ3",
        }
    }

    /// Open-question cases never assert.
    pub fn is_exploratory(self) -> bool {
        matches!(self, CaseId::Oq1 | CaseId::Oq2 | CaseId::Oq3)
    }

    pub fn summary(self) -> &'static str {
        match self {
            CaseId::T22 => "f_{a,0} * slanted half-plane map, omega = e^{i theta} z^n; |omega~| < 1 for a >= (n-2)/(n+2)",
            CaseId::T23 => "f_{a,0} * half-plane map, omega = (a - z^2)/(1 - a z^2); quartic zeros in the disk",
            CaseId::T24 => "f_{a,0} * half-plane map, omega = -(a - z)^2/(1 - a z)^2; quartic zeros in the disk",
            CaseId::T25 => "f_{0,0} * strip map, omega = (a - z^2)/(1 - a z^2); omega~ = z^2",
            CaseId::T38 => "t f_{alpha,n} + (1-t) f_{alpha,n} with omega1 = z, omega2 = -z^2",
            CaseId::T39 => "combination with omega1 = -z^{2^{n-1}}, omega2 = z^{2^{n-1}}; hypothesis alpha1 >= alpha2",
            CaseId::T310 => "combination with omega1 = -z^{2^{n-1}}, omega2 = -z^{2^n} (part 1) or z^{2^n} (part 2)",
            CaseId::T311 => "combination with omega1 = -z^{2^{n-2}}, omega2 = z^{2^{n-1}}; sextic zeros, alpha1 <= alpha2",
            CaseId::Oq1 => "exploratory: f_{a,0} * half-plane map, omega = e^{i theta}(a - z^n)/(1 - a z^n)",
            CaseId::Oq2 => "exploratory: f_{a,0} * half-plane map, omega = -e^{i theta}(a - z)^n/(1 - a z)^n",
            CaseId::Oq3 => "exploratory: f_{0,0} * strip map, omega = e^{i theta}(a - z)^n/(1 - a z)^n",
        }
    }

    fn default_order(self) -> usize {
        match self {
            CaseId::T25 => 64,
            _ => 128,
        }
    }
}

impl fmt::Display for CaseId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CaseId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        CaseId::ALL
            .into_iter()
            .find(|c| c.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownCase(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Pass,
    Fail,
    Exploratory,
    Indeterminate,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Exploratory => "exploratory",
            Verdict::Indeterminate => "indeterminate",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Metrics {
    /// Grid maximum of `|ω̃|` from the closed form.
    pub max_omega: Option<f64>,
    /// Grid minimum of `Re((1 - z²)(h + g)')`.
    pub min_hs: Option<f64>,
    /// Root moduli of the certifying polynomial, ascending.
    pub roots: Vec<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepRow {
    pub case: CaseId,
    pub params: Vec<(&'static str, f64)>,
    pub verdict: Verdict,
    pub metrics: Metrics,
    pub note: String,
    /// Harmonic image of `|z| = r_max`, filled when curves are requested.
    pub curve: Vec<C64>,
}

/// Explicit parameter lists; `None` selects the case default.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ParamRanges {
    pub a: Option<Vec<f64>>,
    pub gamma: Option<Vec<f64>>,
    pub theta: Option<Vec<f64>>,
    pub n: Option<Vec<u32>>,
    pub t: Option<Vec<f64>>,
    pub alpha1: Option<Vec<f64>>,
    pub alpha2: Option<Vec<f64>>,
    pub part: Option<Vec<u32>>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepParams {
    pub ranges: ParamRanges,
    /// Series truncation for map constructions; `None` picks the case default.
    pub order: Option<usize>,
    pub grid: DiskGrid,
    /// Boundary sampling; `None` picks [`BoundaryParams::truncation_safe`].
    pub boundary: Option<BoundaryParams>,
    pub convexity: bool,
    /// Series order of the maps sampled for convexity evidence and curves.
    /// The boundary radius grows with it, so it is kept independent of `order`.
    pub convexity_order: usize,
    pub keep_curves: bool,
}

impl Default for SweepParams {
    fn default() -> Self {
        SweepParams {
            ranges: ParamRanges::default(),
            order: None,
            grid: DiskGrid::standard(),
            boundary: None,
            convexity: false,
            convexity_order: 1024,
            keep_curves: false,
        }
    }
}

impl SweepParams {
    pub fn order_for(&self, case: CaseId) -> usize {
        self.order.unwrap_or(case.default_order())
    }

    /// Order of the maps built for convexity evidence and image curves.
    pub fn map_order_for(&self, case: CaseId) -> usize {
        self.convexity_order.max(self.order_for(case))
    }

    pub fn boundary_for(&self, case: CaseId) -> BoundaryParams {
        self.boundary
            .unwrap_or_else(|| BoundaryParams::truncation_safe(self.map_order_for(case)))
    }
}

/// One parameter tuple of a case.
#[derive(Clone, Debug, PartialEq)]
pub struct CasePoint {
    pub case: CaseId,
    pub params: Vec<(&'static str, f64)>,
}

impl CasePoint {
    pub fn get(&self, name: &str) -> f64 {
        self.params
            .iter()
            .find(|(k, _)| *k == name)
            .map(|&(_, v)| v)
            .unwrap_or(f64::NAN)
    }

    fn int(&self, name: &str) -> u32 {
        self.get(name) as u32
    }
}

/// `lo, lo + step, …` with `round((hi - lo)/step) + 1` values.
pub fn stepped(lo: f64, hi: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !(hi >= lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::invalid("range needs finite lo <= hi and step > 0"));
    }
    let count = libm::round((hi - lo) / step) as usize + 1;
    if count > 100_000 {
        return Err(Error::invalid("range has too many values"));
    }
    Ok((0..count).map(|i| lo + i as f64 * step).collect())
}

fn or_default<T: Clone>(v: &Option<Vec<T>>, default: Vec<T>) -> Vec<T> {
    v.clone().unwrap_or(default)
}

fn default_weights() -> Vec<f64> {
    vec![0.0, 0.25, 0.5, 0.75, 1.0]
}

fn default_alphas() -> Vec<f64> {
    vec![-0.5, 0.0, 0.5]
}

fn check_weight(t: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::invalid("combination weight t must lie in [0, 1]"));
    }
    Ok(())
}

fn check_alpha(alpha: f64) -> Result<()> {
    if !(alpha.abs() <= family_alpha_bound() + 1e-12) {
        return Err(Error::invalid("alpha must lie in [-2(sqrt2-1), 2(sqrt2-1)]"));
    }
    Ok(())
}

/// Expands the parameter lists of `case` into tuples sorted by value.
pub fn expand(case: CaseId, ranges: &ParamRanges) -> Result<Vec<CasePoint>> {
    let mut points = Vec::new();
    let mut push = |params: Vec<(&'static str, f64)>| points.push(CasePoint { case, params });
    match case {
        CaseId::T22 => {
            let ns = or_default(&ranges.n, (1..=5).collect());
            let gammas = or_default(&ranges.gamma, vec![0.0, FRAC_PI_4, FRAC_PI_2]);
            let thetas = or_default(&ranges.theta, vec![0.0, 1.0]);
            for &n in &ns {
                if n == 0 {
                    return Err(Error::invalid("n must be at least 1"));
                }
                let lo = SlantParams::a_lower_bound(n);
                let a_values = ranges
                    .a
                    .clone()
                    .unwrap_or_else(|| vec![lo, 0.5 * (lo + 0.95), 0.95]);
                for &gamma in &gammas {
                    for &theta in &thetas {
                        for &a in &a_values {
                            check_disk_param(a)?;
                            push(vec![("n", n as f64), ("gamma", gamma), ("theta", theta), ("a", a)]);
                        }
                    }
                }
            }
        }
        CaseId::T23 | CaseId::T24 | CaseId::T25 => {
            let default = if case == CaseId::T25 {
                stepped(-0.9, 0.9, 0.1)?
            } else {
                stepped(0.05, 0.95, 0.05)?
            };
            for a in or_default(&ranges.a, default) {
                check_disk_param(a)?;
                push(vec![("a", a)]);
            }
        }
        CaseId::T38 => {
            let b = family_alpha_bound();
            for n in or_default(&ranges.n, vec![1, 2, 3]) {
                for alpha in or_default(&ranges.alpha1, vec![-b, -0.5, 0.0, 0.5, b]) {
                    for t in or_default(&ranges.t, default_weights()) {
                        FamilyParams::new(alpha, n, t)?;
                        push(vec![("n", n as f64), ("alpha", alpha), ("t", t)]);
                    }
                }
            }
        }
        CaseId::T39 | CaseId::T310 | CaseId::T311 => {
            let parts = if case == CaseId::T310 {
                or_default(&ranges.part, vec![1, 2])
            } else {
                vec![0]
            };
            let ns = or_default(&ranges.n, if case == CaseId::T311 { vec![2, 3] } else { vec![1, 2, 3] });
            for &part in &parts {
                if case == CaseId::T310 && !(part == 1 || part == 2) {
                    return Err(Error::invalid("part must be 1 or 2"));
                }
                for &n in &ns {
                    if case == CaseId::T311 && n < 2 {
                        return Err(Error::invalid("this combination needs n >= 2"));
                    }
                    for a1 in or_default(&ranges.alpha1, default_alphas()) {
                        for a2 in or_default(&ranges.alpha2, default_alphas()) {
                            for t in or_default(&ranges.t, default_weights()) {
                                FamilyParams::new(a1, n, t)?;
                                FamilyParams::new(a2, n, t)?;
                                let mut p = vec![("n", n as f64), ("alpha1", a1), ("alpha2", a2), ("t", t)];
                                if case == CaseId::T310 {
                                    p.insert(0, ("part", part as f64));
                                }
                                push(p);
                            }
                        }
                    }
                }
            }
        }
        CaseId::Oq1 | CaseId::Oq2 | CaseId::Oq3 => {
            for n in or_default(&ranges.n, vec![3, 4]) {
                if n == 0 {
                    return Err(Error::invalid("n must be at least 1"));
                }
                for theta in or_default(&ranges.theta, vec![0.0, 1.0]) {
                    for a in or_default(&ranges.a, vec![-0.5, 0.0, 0.5]) {
                        check_disk_param(a)?;
                        push(vec![("n", n as f64), ("theta", theta), ("a", a)]);
                    }
                }
            }
        }
    }
    for v in [&ranges.alpha1, &ranges.alpha2].into_iter().flatten() {
        v.iter().try_for_each(|&a| check_alpha(a))?;
    }
    if let Some(ts) = &ranges.t {
        ts.iter().try_for_each(|&t| check_weight(t))?;
    }
    points.sort_by(|x, y| {
        x.params
            .iter()
            .zip(&y.params)
            .map(|(a, b)| a.1.total_cmp(&b.1))
            .find(|o| o.is_ne())
            .unwrap_or(core::cmp::Ordering::Equal)
    });
    points.dedup();
    Ok(points)
}

/// Checks gathered for one row before the verdict is assigned.
struct Outcome {
    ok: bool,
    indeterminate: bool,
    metrics: Metrics,
    notes: Vec<String>,
    /// Map and direction for convexity evidence.
    map: Option<(HarmonicMap, f64)>,
}

impl Outcome {
    fn new() -> Self {
        Outcome {
            ok: true,
            indeterminate: false,
            metrics: Metrics::default(),
            notes: Vec::new(),
            map: None,
        }
    }

    fn check(&mut self, ok: bool, pass: &str, fail: String) {
        if ok {
            self.notes.push(pass.to_string());
        } else {
            self.ok = false;
            self.notes.push(fail);
        }
    }

    /// Records a certificate: true passes, false fails, none is indeterminate.
    fn certificate(&mut self, report: &BoundReport) {
        self.metrics.max_omega = Some(report.grid.max);
        if report.roots_available() {
            self.metrics.roots = report.root_moduli.clone();
        }
        match (report.certified, report.pole) {
            (_, Some(p)) => {
                self.indeterminate = true;
                self.notes.push(format!("pole near grid point {:.4}{:+.4}i", p.re, p.im));
            }
            (Some(true), _) => self.notes.push("|omega~| < 1 certified".into()),
            (Some(false), _) => {
                self.ok = false;
                self.notes.push("certificate failed: zeros outside the disk".into());
            }
            (None, _) if report.numeric_only() => {
                let ok = report.grid.max < 1.0;
                self.check(
                    ok,
                    "numeric-only: grid max |omega~| < 1",
                    format!("numeric-only: grid max |omega~| = {:.6}", report.grid.max),
                );
            }
            (None, _) => {
                self.indeterminate = true;
                self.notes.push("zeros on the unit circle".into());
            }
        }
    }
}

impl BoundReport {
    fn roots_available(&self) -> bool {
        !self.root_moduli.is_empty()
    }
}

fn sorted_moduli(p: &ComplexPolynomial) -> Vec<f64> {
    match p.roots(ORACLE_TOL) {
        Ok(r) => {
            let mut m: Vec<f64> = r.iter().map(|z| z.norm()).collect();
            m.sort_by(f64::total_cmp);
            m
        }
        Err(_) => Vec::new(),
    }
}

fn monomial_series(c: C64, k: usize, order: usize) -> PowerSeries {
    PowerSeries::monomial(c, k, order)
}

fn half_plane_convolution(a: f64, gamma: f64, omega: &RationalFunction, order: usize) -> Result<HarmonicMap> {
    let f = slanted_halfplane(gamma, &omega.to_series(order)?, order)?;
    Ok(convolve(&f_a_alpha(a, 0.0, order)?, &f))
}

fn strip_convolution(omega: &RationalFunction, order: usize) -> Result<HarmonicMap> {
    let f = strip_map(&omega.to_series(order)?, order)?;
    Ok(convolve(&f_a_alpha(0.0, 0.0, order)?, &f))
}

fn family_combination(
    (a1, w1): (f64, &RationalFunction),
    (a2, w2): (f64, &RationalFunction),
    n: u32,
    t: f64,
    order: usize,
) -> Result<HarmonicMap> {
    let f1 = family_f_alpha_n(a1, n, &w1.to_series(order)?, order)?;
    let f2 = family_f_alpha_n(a2, n, &w2.to_series(order)?, order)?;
    combination(&f1, &f2, t)
}

fn run_t22(pt: &CasePoint, sp: &SweepParams, want_map: bool) -> Result<(bool, Outcome)> {
    let (n, gamma, theta, a) = (pt.int("n"), pt.get("gamma"), pt.get("theta"), pt.get("a"));
    let params = SlantParams::new(gamma, theta, n, a)?;
    let w = monomial_dilatation(&params);
    let mut out = Outcome::new();
    out.certificate(&certify_bounded_on(&w, &sp.grid));
    let beta = theta - (n as f64 + 2.0) * gamma;
    let straight = monomial_dilatation(&SlantParams::new(0.0, beta, n, a)?);
    let dev = scatter_points(20, 0.9)
        .into_iter()
        .map(|z| (w.eval(z) - cis(2.0 * gamma) * straight.eval(z * cis(gamma))).norm())
        .fold(0.0, f64::max);
    out.check(
        dev < 1e-10,
        "rotation substitution identity holds",
        format!("rotation substitution identity off by {dev:.3e}"),
    );
    if out.metrics.max_omega.is_some_and(|m| (1.0 - super::BOUNDARY_TIGHT..1.0).contains(&m)) {
        out.notes.push("boundary-tight".into());
    }
    if want_map {
        let order = sp.map_order_for(pt.case);
        let omega = RationalFunction::monomial(cis(theta), n as usize);
        out.map = Some((half_plane_convolution(a, gamma, &omega, order)?, -gamma));
    }
    let hypothesis = a >= SlantParams::a_lower_bound(n) - 1e-12;
    Ok((hypothesis, out))
}

fn run_quartic(pt: &CasePoint, sp: &SweepParams, want_map: bool) -> Result<(bool, Outcome)> {
    let a = pt.get("a");
    let cayley = pt.case == CaseId::T23;
    let (p, chain, omega) = if cayley {
        (cayley_square_quartic(a), cayley_square_chain(a), RationalFunction::cayley_power(a, 2, 0.0))
    } else {
        (blaschke_square_quartic(a), blaschke_square_chain(a), RationalFunction::blaschke_power(a, 2, PI))
    };
    let mut out = Outcome::new();
    match p.count_zeros_in_disk() {
        Ok(z) => out.check(
            z.inside == 4 && z.on_circle == 0,
            "4 roots inside",
            format!("{} roots inside, {} on the circle", z.inside, z.on_circle),
        ),
        Err(e) => out.check(false, "", format!("zero count failed: {e}")),
    }
    match chain.max_deviation() {
        Ok(d) => out.check(
            d < 1e-12,
            "Cohn chain matches the hand factorization",
            format!("Cohn chain deviates by {d:.3e}"),
        ),
        Err(e) => out.check(false, "", format!("Cohn chain stopped: {e}")),
    }
    let closed = if cayley {
        cayley_square_dilatation(a)
    } else {
        blaschke_square_dilatation(a)
    };
    let closed = closed.or_else(|_| half_plane_dilatation(a, 0.0, &omega))?;
    out.certificate(&certify_bounded_on(&closed, &sp.grid));
    out.metrics.roots = sorted_moduli(&p);
    out.check(
        out.metrics.roots.len() == 4 && out.metrics.roots.iter().all(|&m| m < 1.0),
        "oracle root moduli < 1",
        "oracle root moduli not all < 1".into(),
    );
    if want_map {
        out.map = Some((half_plane_convolution(a, 0.0, &omega, sp.map_order_for(pt.case))?, 0.0));
    }
    Ok((a > 0.0 && a < 1.0, out))
}

fn run_t25(pt: &CasePoint, sp: &SweepParams, want_map: bool) -> Result<(bool, Outcome)> {
    let a = pt.get("a");
    let omega = RationalFunction::cayley_power(a, 2, 0.0);
    let w = strip_dilatation(&omega);
    let mut out = Outcome::new();
    out.certificate(&certify_bounded_on(&w, &sp.grid));
    let mono = detect_monomial(&w);
    let is_z2 = matches!(mono, Some((2, u)) if (u - C64::new(1.0, 0.0)).norm() < 1e-9);
    let order = sp.order_for(pt.case);
    let map = strip_convolution(&omega, order)?;
    let dev = map
        .dilatation_series()?
        .max_deviation(&monomial_series(C64::new(1.0, 0.0), 2, order));
    out.check(
        is_z2 && dev < 1e-10,
        "omega-tilde == z^2",
        format!("omega-tilde differs from z^2 (series deviation {dev:.3e})"),
    );
    if want_map {
        out.map = Some((strip_convolution(&omega, sp.map_order_for(pt.case))?, 0.0));
    }
    Ok((a.abs() < 1.0, out))
}

fn hs_combination(a1: f64, a2: f64, n: u32, t: f64, grid: &DiskGrid) -> f64 {
    let r1 = family_functional(a1, n);
    let r2 = family_functional(a2, n);
    min_real_part(grid, |z| r1.eval(z) * t + r2.eval(z) * (1.0 - t)).min
}

fn run_t38(pt: &CasePoint, sp: &SweepParams, want_map: bool) -> Result<(bool, Outcome)> {
    let (n, alpha, t) = (pt.int("n"), pt.get("alpha"), pt.get("t"));
    let w1 = RationalFunction::monomial(C64::new(1.0, 0.0), 1);
    let w2 = RationalFunction::monomial(C64::new(-1.0, 0.0), 2);
    let w = equal_index_dilatation(&w1, &w2, t)?;
    let mut out = Outcome::new();
    out.certificate(&certify_bounded_on(&w, &sp.grid));
    let hs = hs_combination(alpha, alpha, n, t, &sp.grid);
    out.metrics.min_hs = Some(hs);
    out.check(hs > 0.0, "Re((1-z^2)F') > 0", format!("Re((1-z^2)F') reaches {hs:.3e}"));
    if want_map {
        let f = family_combination((alpha, &w1), (alpha, &w2), n, t, sp.map_order_for(pt.case))?;
        out.map = Some((f, FRAC_PI_2));
    }
    Ok((true, out))
}

fn run_combination(pt: &CasePoint, sp: &SweepParams, want_map: bool) -> Result<(bool, Outcome)> {
    let (n, a1, a2, t) = (pt.int("n"), pt.get("alpha1"), pt.get("alpha2"), pt.get("t"));
    let part = pt.int("part");
    let m = |sign: f64, k: usize| RationalFunction::monomial(C64::new(sign, 0.0), k);
    let half = 1usize << (n - 1);
    let (w1, w2, hypothesis) = match pt.case {
        CaseId::T39 => (m(-1.0, half), m(1.0, half), a1 >= a2),
        CaseId::T310 if part == 1 => (m(-1.0, half), m(-1.0, 2 * half), a1 > a2),
        CaseId::T310 => (m(-1.0, half), m(1.0, 2 * half), a1.abs() > a2.abs() && a1 * a2 >= 0.0),
        _ => (m(-1.0, half / 2), m(1.0, half), a1 <= a2),
    };
    let p1 = FamilyParams::new(a1, n, t)?;
    let p2 = FamilyParams::new(a2, n, t)?;
    let general = combination_dilatation(&p1, &p2, &w1, &w2, t)?;
    let (reduced, poly) = match pt.case {
        CaseId::T39 => (Some(opposite_power_dilatation(a1, a2, t, n)?), Some(opposite_power_cubic(a1, a2, t))),
        CaseId::T310 if part == 1 => (Some(double_power_dilatation(a1, a2, t, n)?), Some(double_power_cubic(a1, a2, t))),
        CaseId::T311 => (Some(mixed_power_dilatation(a1, a2, t, n)?), Some(mixed_power_sextic(a1, a2, t))),
        _ => (None, None),
    };
    let mut out = Outcome::new();
    if let Some(r) = &reduced {
        out.check(
            general.approx_eq(r, 1e-9),
            "reduced form matches the general combination dilatation",
            "reduced form differs from the general combination dilatation".into(),
        );
    }
    let endpoint = detect_monomial(&general).is_some();
    let target = match (&reduced, endpoint) {
        (Some(r), false) => r,
        _ => &general,
    };
    out.certificate(&certify_bounded_on(target, &sp.grid));
    if let (Some(p), false) = (&poly, endpoint) {
        out.metrics.roots = sorted_moduli(p);
        if pt.case == CaseId::T311 && a1 < a2 {
            let inside = out.metrics.roots.len() == 6 && out.metrics.roots.iter().all(|&r| r < 1.0);
            out.check(inside, "all six roots inside", "not all six roots inside".into());
            let (dev, stopped) = mixed_power_chain(a1, a2, t).concordance_prefix();
            let worst = dev.iter().copied().fold(0.0, f64::max);
            out.check(
                worst < 1e-12,
                if stopped {
                    "Cohn chain matches where applicable"
                } else {
                    "Cohn chain matches the hand factorization"
                },
                format!("Cohn chain deviates by {worst:.3e}"),
            );
        }
    }
    let hs = hs_combination(a1, a2, n, t, &sp.grid);
    out.metrics.min_hs = Some(hs);
    out.check(hs > 0.0, "Re((1-z^2)F') > 0", format!("Re((1-z^2)F') reaches {hs:.3e}"));
    if want_map {
        let f = family_combination((a1, &w1), (a2, &w2), n, t, sp.map_order_for(pt.case))?;
        out.map = Some((f, FRAC_PI_2));
    }
    Ok((hypothesis, out))
}

fn run_open(pt: &CasePoint, sp: &SweepParams, want_map: bool) -> Result<(bool, Outcome)> {
    let (n, theta, a) = (pt.int("n") as usize, pt.get("theta"), pt.get("a"));
    let order = sp.map_order_for(pt.case);
    let (w, omega) = match pt.case {
        CaseId::Oq1 => {
            let omega = RationalFunction::cayley_power(a, n, theta);
            (half_plane_dilatation(a, 0.0, &omega)?, omega)
        }
        CaseId::Oq2 => {
            let omega = RationalFunction::blaschke_power(a, n, theta + PI);
            (half_plane_dilatation(a, 0.0, &omega)?, omega)
        }
        _ => {
            let omega = RationalFunction::blaschke_power(a, n, theta);
            (strip_dilatation(&omega), omega)
        }
    };
    let mut out = Outcome::new();
    out.certificate(&certify_bounded_on(&w, &sp.grid));
    if want_map {
        let map = if pt.case == CaseId::Oq3 {
            strip_convolution(&omega, order)?
        } else {
            half_plane_convolution(a, 0.0, &omega, order)?
        };
        out.map = Some((map, 0.0));
    }
    Ok((false, out))
}

fn boundary_curve(f: &HarmonicMap, boundary: &BoundaryParams) -> Vec<C64> {
    let m = boundary.samples;
    (0..m)
        .map(|k| f.eval(cis(core::f64::consts::TAU * k as f64 / m as f64) * boundary.r_max))
        .collect()
}

/// Runs one parameter tuple. Hypothesis violations and open-question cases
/// become exploratory rows; construction errors become indeterminate rows.
pub fn evaluate(pt: &CasePoint, sp: &SweepParams) -> SweepRow {
    let want_map = sp.convexity || sp.keep_curves;
    let run = match pt.case {
        CaseId::T22 => run_t22(pt, sp, want_map),
        CaseId::T23 | CaseId::T24 => run_quartic(pt, sp, want_map),
        CaseId::T25 => run_t25(pt, sp, want_map),
        CaseId::T38 => run_t38(pt, sp, want_map),
        CaseId::T39 | CaseId::T310 | CaseId::T311 => run_combination(pt, sp, want_map),
        CaseId::Oq1 | CaseId::Oq2 | CaseId::Oq3 => run_open(pt, sp, want_map),
    };
    let (hypothesis, mut out) = match run {
        Ok(r) => r,
        Err(e) => {
            return SweepRow {
                case: pt.case,
                params: pt.params.clone(),
                verdict: Verdict::Indeterminate,
                metrics: Metrics::default(),
                note: format!("construction failed: {e}"),
                curve: Vec::new(),
            }
        }
    };
    let mut curve = Vec::new();
    if let Some((map, phi)) = &out.map {
        let boundary = sp.boundary_for(pt.case);
        if sp.convexity {
            let r = boundary.r_max.min(sp.grid.r_max());
            let grid = DiskGrid::standard_with(r, sp.grid.angles_per_ring());
            let report = convex_in_direction(map, *phi, &grid, &boundary);
            if let Some(p) = report.univalence_failure {
                out.indeterminate |= !p.re.is_finite();
                out.check(false, "", format!("local univalence fails near {:.4}{:+.4}i", p.re, p.im));
            } else if report.passed {
                out.notes.push("convex in direction (numeric evidence)".into());
            } else {
                // convexity on |z| < r does not follow from convexity on the disk
                out.indeterminate = true;
                out.notes.push(format!(
                    "convexity inconclusive at r = {:.4}: {}",
                    boundary.r_max, report.worst_line
                ));
            }
            if sp.keep_curves {
                curve = report.curve;
            }
        } else if sp.keep_curves {
            curve = boundary_curve(map, &boundary);
        }
    }
    let exploratory = pt.case.is_exploratory() || !hypothesis;
    let verdict = if exploratory {
        out.notes.insert(0, "exploratory: no assertion".into());
        Verdict::Exploratory
    } else if out.indeterminate {
        Verdict::Indeterminate
    } else if out.ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    SweepRow {
        case: pt.case,
        params: pt.params.clone(),
        verdict,
        metrics: out.metrics,
        note: out.notes.join("; "),
        curve,
    }
}

/// Expands and evaluates every tuple of `case` in parameter order.
pub fn sweep_report(case: CaseId, params: &SweepParams) -> Result<Vec<SweepRow>> {
    Ok(expand(case, &params.ranges)?
        .iter()
        .map(|p| evaluate(p, params))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn only(rows: &[SweepRow]) -> Verdict {
        let v = rows[0].verdict;
        assert!(rows.iter().all(|r| r.verdict == v), "{rows:#?}");
        v
    }

    #[test]
    fn case_ids_round_trip() {
        for c in CaseId::ALL {
            assert_eq!(c.as_str().parse::<CaseId>().unwrap(), c);
            assert_eq!(c.as_str().to_lowercase().parse::<CaseId>().unwrap(), c);
        }
        assert!(matches!("T9.9".parse::<CaseId>(), Err(Error::UnknownCase(_))));
    }

    #[test]
    fn stepped_ranges() {
        assert_eq!(stepped(-0.9, 0.9, 0.1).unwrap().len(), 19);
        assert_eq!(stepped(0.05, 0.95, 0.05).unwrap().len(), 19);
        assert!(stepped(1.0, 0.0, 0.1).is_err());
        assert!(stepped(0.0, 1.0, 0.0).is_err());
    }

    #[test]
    fn strip_case_is_z_squared() {
        let rows = sweep_report(CaseId::T25, &SweepParams::default()).unwrap();
        assert_eq!(rows.len(), 19);
        assert_eq!(only(&rows), Verdict::Pass);
        assert!(rows.iter().all(|r| r.note.contains("omega-tilde == z^2")));
    }

    #[test]
    fn quartic_cases_pass() {
        for case in [CaseId::T23, CaseId::T24] {
            let rows = sweep_report(case, &SweepParams::default()).unwrap();
            assert_eq!(only(&rows), Verdict::Pass);
            assert!(rows.iter().all(|r| r.note.contains("4 roots inside")));
        }
    }

    #[test]
    fn below_range_is_exploratory() {
        let mut sp = SweepParams::default();
        sp.ranges.n = Some(vec![3]);
        sp.ranges.a = Some(vec![0.1]);
        sp.ranges.gamma = Some(vec![0.0]);
        sp.ranges.theta = Some(vec![0.0]);
        let rows = sweep_report(CaseId::T22, &sp).unwrap();
        assert_eq!(only(&rows), Verdict::Exploratory);
        assert!(rows[0].metrics.max_omega.is_some());
    }

    #[test]
    fn slanted_case_passes() {
        let rows = sweep_report(CaseId::T22, &SweepParams::default()).unwrap();
        assert_eq!(rows.len(), 90);
        assert_eq!(only(&rows), Verdict::Pass);
    }

    #[test]
    fn sextic_case() {
        let mut sp = SweepParams::default();
        sp.ranges.alpha1 = Some(vec![-0.5]);
        sp.ranges.alpha2 = Some(vec![0.5]);
        sp.ranges.t = Some(vec![0.25, 0.5, 0.75]);
        let rows = sweep_report(CaseId::T311, &sp).unwrap();
        assert_eq!(only(&rows), Verdict::Pass);
        assert!(rows.iter().all(|r| r.metrics.roots.len() == 6));
    }

    #[test]
    fn combination_cases_without_failures() {
        let mut sp = SweepParams::default();
        sp.ranges.part = Some(vec![2]);
        for case in [CaseId::T38, CaseId::T310, CaseId::T311] {
            for r in sweep_report(case, &sp).unwrap() {
                assert!(
                    matches!(r.verdict, Verdict::Pass | Verdict::Exploratory),
                    "{case} {:?}: {}",
                    r.params,
                    r.note
                );
            }
        }
    }

    #[test]
    fn opposite_and_double_power_need_alpha1_below_alpha2() {
        let mut sp = SweepParams::default();
        sp.ranges.part = Some(vec![1]);
        for case in [CaseId::T39, CaseId::T310] {
            for r in sweep_report(case, &sp).unwrap() {
                let get = |k: &str| r.params.iter().find(|p| p.0 == k).unwrap().1;
                let (a1, a2, t) = (get("alpha1"), get("alpha2"), get("t"));
                let interior = t > 0.0 && t < 1.0;
                if a1 > a2 && interior {
                    assert_eq!(r.verdict, Verdict::Fail, "{case} {:?}", r.params);
                    assert!(r.metrics.roots.iter().any(|&m| m > 1.0));
                } else {
                    assert!(r.note.contains("|omega~| < 1 certified"), "{case} {:?}: {}", r.params, r.note);
                }
                if a1 < a2 {
                    assert_eq!(r.verdict, Verdict::Exploratory);
                }
            }
        }
    }

    #[test]
    fn open_questions_never_assert() {
        for case in [CaseId::Oq1, CaseId::Oq2, CaseId::Oq3] {
            let rows = sweep_report(case, &SweepParams::default()).unwrap();
            assert_eq!(only(&rows), Verdict::Exploratory);
            assert!(rows[0].note.starts_with("exploratory: no assertion"));
        }
    }

    #[test]
    fn invalid_ranges_are_rejected() {
        let mut sp = SweepParams::default();
        sp.ranges.a = Some(vec![1.0]);
        assert!(sweep_report(CaseId::T23, &sp).is_err());
        let mut sp = SweepParams::default();
        sp.ranges.t = Some(vec![1.5]);
        assert!(sweep_report(CaseId::T39, &sp).is_err());
        let mut sp = SweepParams::default();
        sp.ranges.n = Some(vec![1]);
        assert!(sweep_report(CaseId::T311, &sp).is_err());
    }

    #[test]
    fn rows_are_sorted() {
        let mut sp = SweepParams::default();
        sp.ranges.a = Some(vec![0.5, 0.1, 0.3]);
        let rows = sweep_report(CaseId::T23, &sp).unwrap();
        let a: Vec<f64> = rows.iter().map(|r| r.params[0].1).collect();
        assert_eq!(a, vec![0.1, 0.3, 0.5]);
    }
}
