//! Numerical evidence for local univalence, the Hengartner–Schober positivity
//! criterion and convexity in a direction. Verdicts are sampled, never proofs.

mod convexity;
pub mod sweep;

pub use crate::grid::{scatter_points, DiskGrid};
pub use convexity::{
    convex_in_direction, count_crossings, require_convex, BoundaryParams, ConvexityReport, LineCheck,
};

use crate::convo::RationalFunction;
use crate::cpoly::ComplexPolynomial;
use crate::hmap::HarmonicMap;
use crate::series::{family_product, PowerSeries};
use crate::{Error, Result, C64};

/// `|ω|` at or above `1 - BOUNDARY_TIGHT` is reported as boundary-tight.
pub const BOUNDARY_TIGHT: f64 = 1e-9;

/// `|h'|` below this makes sense preservation indeterminate.
pub const DEGENERATE_DERIVATIVE: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DilatationMax {
    pub max: f64,
    pub argmax: C64,
    pub boundary_tight: bool,
}

impl DilatationMax {
    /// `|ω| < 1` on the grid, allowing boundary-tight values below one.
    pub fn sense_preserving(&self) -> bool {
        self.max < 1.0
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FunctionalMin {
    pub min: f64,
    pub argmin: C64,
}

/// Maximum of `|g'(z)/h'(z)|` over the grid from series evaluation.
pub fn max_dilatation_modulus(f: &HarmonicMap, grid: &DiskGrid) -> Result<DilatationMax> {
    let hp = f.h().differentiate();
    let gp = f.g().differentiate();
    let mut out = DilatationMax {
        max: 0.0,
        argmax: C64::new(0.0, 0.0),
        boundary_tight: false,
    };
    for z in grid.points() {
        let hv = hp.evaluate(z);
        if hv.norm() < DEGENERATE_DERIVATIVE {
            return Err(Error::DegenerateDerivative { point: z });
        }
        let v = (gp.evaluate(z) / hv).norm();
        if !(v <= out.max) {
            out.max = v;
            out.argmax = z;
        }
    }
    out.boundary_tight = out.max >= 1.0 - BOUNDARY_TIGHT;
    Ok(out)
}

/// Minimum over the grid of `Re((1 - z²) F'(z))`.
pub fn hengartner_schober(f: &PowerSeries, grid: &DiskGrid) -> FunctionalMin {
    let fp = f.differentiate();
    min_real_part(grid, |z| (C64::new(1.0, 0.0) - z * z) * fp.evaluate(z))
}

/// Minimum over the grid of `Re(r(z))`.
pub fn min_real_part(grid: &DiskGrid, r: impl Fn(C64) -> C64) -> FunctionalMin {
    let mut out = FunctionalMin {
        min: f64::INFINITY,
        argmin: C64::new(0.0, 0.0),
    };
    for z in grid.points() {
        let v = r(z).re;
        if !(v >= out.min) {
            out.min = v;
            out.argmin = z;
        }
    }
    out
}

/// `(1 - z²)(h' + g')` of the family member `f_{α,n}` as an exact rational
/// function: `(1 - z²) Π(α, n) / (1 + z^{2^{n+1}})`.
pub fn family_functional(alpha: f64, n: u32) -> RationalFunction {
    let num = &ComplexPolynomial::from_real(&[1.0, 0.0, -1.0]) * &family_product(alpha, n);
    RationalFunction::new(num, ComplexPolynomial::one_plus_power(1usize << (n + 1)))
        .expect("1 + z^k is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hmap::{family_analytic_sum, shear};
    use crate::series::{family_alpha_bound, NamedSeries};
    use alloc::vec;

    fn one() -> C64 {
        C64::new(1.0, 0.0)
    }

    #[test]
    fn zero_co_analytic_part() {
        let f = HarmonicMap::analytic(PowerSeries::monomial(one(), 1, 16));
        let m = max_dilatation_modulus(&f, &DiskGrid::standard()).unwrap();
        assert_eq!(m.max, 0.0);
    }

    #[test]
    fn identity_shear_tracks_radius() {
        let f = NamedSeries::Geometric { alpha: 0.0 }.expand(256).unwrap();
        let m = shear(&f, &PowerSeries::monomial(one(), 1, 256), 0.0, 256).unwrap();
        let r = max_dilatation_modulus(&m, &DiskGrid::standard_with(0.9, 360)).unwrap();
        assert!((r.max - 0.9).abs() < 1e-9);
        assert!(!r.boundary_tight);
    }

    #[test]
    fn degenerate_derivative_is_reported() {
        // h' = 1 - 2z vanishes at 0.5, a grid point
        let h = PowerSeries::from_coeffs(vec![C64::new(0.0, 0.0), one(), -one()]);
        let f = HarmonicMap::new(h, PowerSeries::zero(2));
        assert!(matches!(
            max_dilatation_modulus(&f, &DiskGrid::standard()),
            Err(Error::DegenerateDerivative { .. })
        ));
    }

    #[test]
    fn functional_examples() {
        let grid = DiskGrid::standard();
        let id = PowerSeries::monomial(one(), 1, 8);
        let m = hengartner_schober(&id, &grid);
        assert!((m.min - (1.0 - 0.99 * 0.99)).abs() < 1e-12);
        let log = NamedSeries::LogHalf.expand(2048).unwrap();
        let m = hengartner_schober(&log, &DiskGrid::standard_with(0.9, 720));
        assert!((m.min - 0.1).abs() < 1e-9);
    }

    #[test]
    fn family_functional_is_positive() {
        let b = family_alpha_bound();
        for n in 1..=3 {
            for alpha in [-b, -0.5, 0.0, 0.5, b] {
                let r = family_functional(alpha, n);
                assert!(min_real_part(&DiskGrid::standard(), |z| r.eval(z)).min > 0.0);
            }
        }
    }

    #[test]
    fn family_functional_matches_series() {
        let (alpha, n) = (0.5, 2);
        let f = family_analytic_sum(alpha, n, 256).unwrap();
        let r = family_functional(alpha, n);
        let fp = f.differentiate();
        for z in scatter_points(30, 0.8) {
            let s = (one() - z * z) * fp.evaluate(z);
            assert!((s - r.eval(z)).norm() < 1e-10);
        }
    }
}
