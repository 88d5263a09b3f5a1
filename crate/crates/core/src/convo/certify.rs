use alloc::vec::Vec;

use crate::convo::{GridMax, RationalFunction};
use crate::cpoly::{ComplexPolynomial, ZeroCountReport, ORACLE_TOL};
use crate::grid::DiskGrid;
use crate::{Error, Result, C64};

/// Relative tolerance for matching `num` against `u z^k den*`.
pub const SHAPE_TOL: f64 = 1e-10;

/// Relative size of `|den|` on the grid below which a pole is reported.
pub const POLE_TOL: f64 = 1e-10;

#[derive(Clone, Debug, PartialEq)]
pub enum BoundShape {
    /// `ω̃ = u z^k p/p*` with `|u| = 1`; `core` is `p`.
    Blaschke {
        k: usize,
        unimodular: C64,
        core: ComplexPolynomial,
    },
    /// No exact shape recognised; only the grid maximum is available.
    NumericOnly,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub shape: BoundShape,
    /// `Some(true)` when `|ω̃| < 1` on the disk is certified by zero location,
    /// `Some(false)` when the certificate fails, `None` when no exact verdict exists.
    pub certified: Option<bool>,
    pub grid: GridMax,
    /// Grid point where the denominator (numerically) vanishes.
    pub pole: Option<C64>,
    pub zeros: Option<ZeroCountReport>,
    /// Oracle root moduli of the core polynomial, ascending.
    pub root_moduli: Vec<f64>,
    /// Zeros of the core on the unit circle that survive cancellation.
    pub indeterminate: bool,
    /// Unit-circle zeros of the core divided out before counting. Such a zero
    /// of `p` is also a zero of `p*`, so it cancels from `p/p*`.
    pub cancelled: usize,
}

impl BoundReport {
    pub fn numeric_only(&self) -> bool {
        self.shape == BoundShape::NumericOnly
    }
}

/// Recognises `num = u z^k den*` with `|u|` within `SHAPE_TOL` of one.
pub fn detect_blaschke_shape(omega: &RationalFunction) -> Option<(usize, C64, ComplexPolynomial)> {
    let den = omega.den();
    if den.coeff(0).norm() <= SHAPE_TOL * den.scale() {
        return None;
    }
    let core = den.reciprocal_adjoint().ok()?;
    let num = omega.num();
    let k = num.coeffs().iter().position(|c| c.norm() > 1e-14 * num.scale())?;
    let u = num.coeff(k) / core.coeff(0);
    if (u.norm() - 1.0).abs() > SHAPE_TOL {
        return None;
    }
    let expect = core.scale_by(u).shift(k);
    if num.max_deviation(&expect) > SHAPE_TOL * num.scale().max(1.0) {
        return None;
    }
    Some((k, u, core))
}

/// Recognises `ω̃ ≡ u z^k`, `|u| = 1`, by cross-multiplied evaluation. Covers
/// closed forms whose numerator and denominator share a common factor.
pub fn detect_monomial(omega: &RationalFunction) -> Option<(usize, C64)> {
    let den0 = omega.den().coeff(0);
    if den0.norm() <= SHAPE_TOL * omega.den().scale() {
        return None;
    }
    let num = omega.num();
    let k = num.coeffs().iter().position(|c| c.norm() > 1e-14 * num.scale())?;
    let u = num.coeff(k) / den0;
    if (u.norm() - 1.0).abs() > 1e-9 {
        return None;
    }
    omega
        .approx_eq(&RationalFunction::monomial(u, k), 1e-9)
        .then_some((k, u))
}

/// Certifies `|ω̃| < 1` on the disk over the standard grid.
pub fn certify_bounded(omega: &RationalFunction) -> BoundReport {
    certify_bounded_on(omega, &DiskGrid::standard())
}

/// A pure monomial `u z^k`, `k ≥ 1`, is certified directly; it is tried
/// first because such closed forms often share self-reciprocal factors between
/// numerator and denominator. Blaschke shapes are decided by the zeros of the
/// core `p`: all strictly inside means `|p/p*| < 1`. Other shapes get the grid
/// maximum only. A pole near the grid withholds any certificate.
pub fn certify_bounded_on(omega: &RationalFunction, grid: &DiskGrid) -> BoundReport {
    let grid_max = omega.max_modulus_on(grid);
    let pole = (grid_max.min_den <= POLE_TOL).then_some(grid_max.argmin_den);
    let mut report = BoundReport {
        shape: BoundShape::NumericOnly,
        certified: None,
        grid: grid_max,
        pole,
        zeros: None,
        root_moduli: Vec::new(),
        indeterminate: false,
        cancelled: 0,
    };
    let shape = detect_monomial(omega)
        .map(|(k, u)| (k, u, ComplexPolynomial::one()))
        .or_else(|| detect_blaschke_shape(omega));
    let Some((k, u, core)) = shape else {
        return report;
    };
    let degree = core.degree().unwrap_or(0);
    let verdict = if degree == 0 {
        Some(k >= 1)
    } else {
        if let Ok(roots) = core.roots(ORACLE_TOL) {
            let mut m: Vec<f64> = roots.iter().map(|r| r.norm()).collect();
            m.sort_by(f64::total_cmp);
            report.root_moduli = m;
        }
        let (reduced, cancelled) = cancel_circle_zeros(&core);
        report.cancelled = cancelled;
        report.zeros = reduced.count_zeros_in_disk().ok();
        match reduced.blaschke_bound_certificate() {
            _ if reduced.degree() == Some(0) => Some(k >= 1),
            Ok(b) => Some(b),
            Err(Error::Indeterminate { .. }) => {
                report.indeterminate = true;
                None
            }
            Err(_) => None,
        }
    };
    report.shape = BoundShape::Blaschke {
        k,
        unimodular: u,
        core,
    };
    report.certified = if report.pole.is_some() { None } else { verdict };
    report
}

/// Root moduli within this distance of one are treated as unit-circle zeros.
const CIRCLE_ROOT_TOL: f64 = 1e-6;

/// Divides out the oracle roots of `p` that sit on the unit circle, projected
/// onto it. Returns `p` unchanged when no such roots exist.
fn cancel_circle_zeros(p: &ComplexPolynomial) -> (ComplexPolynomial, usize) {
    let Ok(roots) = p.roots(ORACLE_TOL) else {
        return (p.clone(), 0);
    };
    let mut q = p.clone();
    let mut count = 0;
    for r in roots.iter().filter(|r| (r.norm() - 1.0).abs() < CIRCLE_ROOT_TOL) {
        q = deflate(&q, r / r.norm());
        count += 1;
    }
    (q, count)
}

/// Quotient of `p` by `z - r`, dropping the remainder.
fn deflate(p: &ComplexPolynomial, r: C64) -> ComplexPolynomial {
    let c = p.coeffs();
    if c.len() < 2 {
        return p.clone();
    }
    let mut out = alloc::vec![C64::new(0.0, 0.0); c.len() - 1];
    let mut acc = C64::new(0.0, 0.0);
    for i in (1..c.len()).rev() {
        acc = acc * r + c[i];
        out[i - 1] = acc;
    }
    ComplexPolynomial::new(out)
}

/// Result type of [`certify_bounded`] with an explicit error for a pole.
pub fn require_certified(report: &BoundReport) -> Result<bool> {
    if let Some(point) = report.pole {
        return Err(Error::DegenerateDerivative { point });
    }
    report.certified.ok_or(Error::Indeterminate {
        on_circle: report.zeros.as_ref().map_or(0, |z| z.on_circle),
    })
}
