//! Harmonic convolution, convex combinations and their closed-form dilatations.

mod certify;
pub mod chains;
mod dilatation;
mod rational;

pub use certify::{
    certify_bounded, certify_bounded_on, detect_blaschke_shape, detect_monomial, require_certified, BoundReport,
    BoundShape, POLE_TOL, SHAPE_TOL,
};
pub use dilatation::{
    blaschke_quotient, blaschke_square_dilatation, blaschke_square_quartic, cayley_square_dilatation,
    cayley_square_quartic, combination_dilatation, double_power_cubic, double_power_dilatation,
    equal_index_dilatation, half_plane_dilatation, mixed_power_dilatation, mixed_power_sextic, monomial_dilatation,
    opposite_power_cubic, opposite_power_dilatation, strip_dilatation,
};
pub use rational::{GridMax, RationalFunction};

use crate::hmap::HarmonicMap;
use crate::{Error, Result};

/// `f1 * f2 = h1 * h2 + conj(g1 * g2)`, Hadamard products componentwise.
pub fn convolve(f1: &HarmonicMap, f2: &HarmonicMap) -> HarmonicMap {
    HarmonicMap::new(f1.h().hadamard(f2.h()), f1.g().hadamard(f2.g()))
}

/// `t f1 + (1 - t) f2`.
pub fn combination(f1: &HarmonicMap, f2: &HarmonicMap, t: f64) -> Result<HarmonicMap> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::invalid("combination weight t must lie in [0, 1]"));
    }
    let mix = |a: &crate::series::PowerSeries, b: &crate::series::PowerSeries| {
        &a.scale(crate::C64::new(t, 0.0)) + &b.scale(crate::C64::new(1.0 - t, 0.0))
    };
    Ok(HarmonicMap::new(mix(f1.h(), f2.h()), mix(f1.g(), f2.g())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::scatter_points;
    use crate::hmap::{f_a_alpha, family_f_alpha_n, slanted_halfplane, strip_map, FamilyParams, SlantParams};
    use crate::series::{NamedSeries, PowerSeries};
    use crate::{cis, C64};

    const N: usize = 256;

    fn max_gap(f: impl Fn(C64) -> C64, g: impl Fn(C64) -> C64, r: f64) -> f64 {
        scatter_points(100, r)
            .into_iter()
            .map(|z| (f(z) - g(z)).norm())
            .fold(0.0, f64::max)
    }

    #[test]
    fn identity_convolution() {
        let f = f_a_alpha(0.3, 0.2, 64).unwrap();
        let id = HarmonicMap::analytic(NamedSeries::Geometric { alpha: 0.0 }.expand(64).unwrap());
        let out = convolve(&f, &id);
        assert_eq!(out.h(), f.h());
        assert!(out.g().max_modulus() == 0.0);
    }

    #[test]
    fn half_convolution_identity() {
        let a = 0.4;
        let k = (1.0 - a) / (1.0 + a);
        let omega = RationalFunction::cayley_power(0.3, 2, 0.0).to_series(64).unwrap();
        let f = slanted_halfplane(0.5, &omega, 64).unwrap();
        let out = convolve(&f_a_alpha(a, 0.0, 64).unwrap(), &f);
        let h = (f.h() + &f.h().differentiate().mul_z().scale(C64::new(k, 0.0))).scale(C64::new(0.5, 0.0));
        let g = (f.g() - &f.g().differentiate().mul_z().scale(C64::new(k, 0.0))).scale(C64::new(0.5, 0.0));
        assert!(out.h().max_deviation(&h.truncate(64)) < 1e-12);
        assert!(out.g().max_deviation(&g.truncate(64)) < 1e-12);
    }

    #[test]
    fn convolution_commutes() {
        let f1 = f_a_alpha(0.2, 0.7, 32).unwrap();
        let f2 = slanted_halfplane(0.3, &PowerSeries::monomial(C64::new(1.0, 0.0), 1, 32), 32).unwrap();
        assert_eq!(convolve(&f1, &f2), convolve(&f2, &f1));
    }

    #[test]
    fn combination_endpoints() {
        let f1 = f_a_alpha(0.2, 0.7, 32).unwrap();
        let f2 = f_a_alpha(-0.5, 0.1, 32).unwrap();
        assert_eq!(combination(&f1, &f2, 1.0).unwrap(), f1);
        assert_eq!(combination(&f1, &f2, 0.0).unwrap(), f2);
        let mid = combination(&f1, &f1, 0.5).unwrap();
        assert!(mid.h().max_deviation(f1.h()) < 1e-15);
        assert!(combination(&f1, &f2, -0.1).is_err());
    }

    #[test]
    fn half_plane_closed_form_matches_series() {
        for &(a, gamma) in &[(0.3, 0.0), (0.6, 1.1), (0.8, -0.4)] {
            for omega in [
                RationalFunction::monomial(C64::new(1.0, 0.0), 1),
                RationalFunction::monomial(cis(0.7), 3),
                RationalFunction::cayley_power(a, 2, 0.0),
            ] {
                let f = slanted_halfplane(gamma, &omega.to_series(N).unwrap(), N).unwrap();
                let conv = convolve(&f_a_alpha(a, 0.0, N).unwrap(), &f);
                let closed = half_plane_dilatation(a, gamma, &omega).unwrap();
                let series = conv.dilatation_series().unwrap();
                let gap = max_gap(|z| closed.eval(z), |z| series.evaluate(z), 0.9);
                assert!(gap < 1e-9, "a={a} γ={gamma}: {gap}");
            }
        }
    }

    #[test]
    fn rotation_covariance() {
        let (a, gamma, alpha) = (0.3, 0.4, 0.9);
        let omega = RationalFunction::monomial(C64::new(1.0, 0.0), 2).to_series(N).unwrap();
        let f = slanted_halfplane(gamma, &omega, N).unwrap();
        let rotated = convolve(&f_a_alpha(a, alpha, N).unwrap(), &f).dilatation_series().unwrap();
        let base = convolve(&f_a_alpha(a, 0.0, N).unwrap(), &f).dilatation_series().unwrap();
        let gap = max_gap(
            |z| rotated.evaluate(z),
            |z| cis(2.0 * alpha) * base.evaluate(cis(alpha) * z),
            0.8,
        );
        assert!(gap < 1e-10, "{gap}");
    }

    #[test]
    fn monomial_closed_form_matches_series() {
        let params = SlantParams::new(0.6, 1.0, 3, 0.2).unwrap();
        let omega = RationalFunction::monomial(cis(1.0), 3).to_series(N).unwrap();
        let f = slanted_halfplane(0.6, &omega, N).unwrap();
        let series = convolve(&f_a_alpha(0.2, 0.0, N).unwrap(), &f).dilatation_series().unwrap();
        let closed = monomial_dilatation(&params);
        assert!(max_gap(|z| closed.eval(z), |z| series.evaluate(z), 0.9) < 1e-9);
    }

    #[test]
    fn strip_closed_form_matches_series() {
        let omega = RationalFunction::cayley_power(0.5, 2, 0.0);
        let f = strip_map(&omega.to_series(N).unwrap(), N).unwrap();
        let conv = convolve(&f_a_alpha(0.0, 0.0, N).unwrap(), &f);
        let series = conv.dilatation_series().unwrap();
        let closed = strip_dilatation(&omega);
        assert!(max_gap(|z| closed.eval(z), |z| series.evaluate(z), 0.9) < 1e-9);
    }

    #[test]
    fn combination_closed_form_matches_series() {
        let (a1, a2, t, n) = (-0.5, 0.5, 0.3, 2u32);
        let w1 = RationalFunction::monomial(C64::new(-1.0, 0.0), 1);
        let w2 = RationalFunction::monomial(C64::new(1.0, 0.0), 2);
        let f1 = family_f_alpha_n(a1, n, &w1.to_series(N).unwrap(), N).unwrap();
        let f2 = family_f_alpha_n(a2, n, &w2.to_series(N).unwrap(), N).unwrap();
        let series = combination(&f1, &f2, t).unwrap().dilatation_series().unwrap();
        let closed = mixed_power_dilatation(a1, a2, t, n).unwrap();
        assert!(max_gap(|z| closed.eval(z), |z| series.evaluate(z), 0.9) < 1e-9);
        let p1 = FamilyParams::new(a1, n, t).unwrap();
        let p2 = FamilyParams::new(a2, n, t).unwrap();
        let general = combination_dilatation(&p1, &p2, &w1, &w2, t).unwrap();
        assert!(general.approx_eq(&closed, 1e-9));
    }
}
