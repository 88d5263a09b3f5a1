//! Harmonic maps `f = h + conj(g)` and the shearing construction.

use crate::series::{check_disk_param, check_family, NamedSeries, PowerSeries};
use crate::{cis, Error, Result, C64};

const ONE: C64 = C64::new(1.0, 0.0);

/// `f = h + conj(g)`; `g` is stored unconjugated.
#[derive(Clone, Debug, PartialEq)]
pub struct HarmonicMap {
    h: PowerSeries,
    g: PowerSeries,
}

/// Parameters of the slanted half-plane convolution: slant `γ`, dilatation
/// `e^{iθ} z^n` and the half-plane family parameter `a`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SlantParams {
    pub gamma: f64,
    pub theta: f64,
    pub n: u32,
    pub a: f64,
}

impl SlantParams {
    pub fn new(gamma: f64, theta: f64, n: u32, a: f64) -> Result<Self> {
        check_disk_param(a)?;
        if n == 0 {
            return Err(Error::invalid("dilatation power n must be at least 1"));
        }
        Ok(SlantParams { gamma, theta, n, a })
    }

    /// Lower end `(n - 2) / (n + 2)` of the admissible `a` range.
    pub fn a_lower_bound(n: u32) -> f64 {
        (n as f64 - 2.0) / (n as f64 + 2.0)
    }
}

/// Parameters of a member `f_{α,n}` of the imaginary-direction family, with an
/// optional combination weight `t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyParams {
    pub alpha: f64,
    pub n: u32,
    pub t: f64,
}

impl FamilyParams {
    pub fn new(alpha: f64, n: u32, t: f64) -> Result<Self> {
        check_family(alpha, n)?;
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::invalid("combination weight t must lie in [0, 1]"));
        }
        Ok(FamilyParams { alpha, n, t })
    }
}

impl HarmonicMap {
    /// Both parts are truncated to the smaller order.
    pub fn new(h: PowerSeries, g: PowerSeries) -> Self {
        let n = h.order().min(g.order());
        HarmonicMap {
            h: h.truncate(n),
            g: g.truncate(n),
        }
    }

    /// Analytic map `h` with `g = 0`.
    pub fn analytic(h: PowerSeries) -> Self {
        let n = h.order();
        HarmonicMap {
            h,
            g: PowerSeries::zero(n),
        }
    }

    pub fn h(&self) -> &PowerSeries {
        &self.h
    }

    pub fn g(&self) -> &PowerSeries {
        &self.g
    }

    pub fn order(&self) -> usize {
        self.h.order()
    }

    /// `h(z) + conj(g(z))`.
    pub fn eval(&self, z: C64) -> C64 {
        self.h.evaluate(z) + self.g.evaluate(z).conj()
    }

    /// `(h'(0), g'(0))`. The `S_H` normalization asks `h'(0) = 1`, `S_H^0`
    /// additionally `g'(0) = 0`.
    pub fn normalization(&self) -> (C64, C64) {
        (self.h.coeff(1), self.g.coeff(1))
    }

    /// Dilatation `g'/h'` as a series.
    pub fn dilatation_series(&self) -> Result<PowerSeries> {
        let hp = self.h.differentiate();
        if hp.coeff(0).norm() <= 1e-13 {
            return Err(Error::invalid("dilatation needs h'(0) != 0"));
        }
        self.g.differentiate().divide(&hp)
    }

    /// `g'(z) / h'(z)` from pointwise evaluation of the truncated derivatives.
    pub fn dilatation_at(&self, z: C64) -> C64 {
        self.g.differentiate().evaluate(z) / self.h.differentiate().evaluate(z)
    }

    /// The map `z ↦ e^{-iα} f(e^{iα} z)`, whose image is the image of `f`
    /// rotated by `e^{-iα}`.
    pub fn rotate_conjugate(&self, alpha: f64) -> Self {
        HarmonicMap {
            h: self.h.rotate(alpha).scale(cis(-alpha)),
            g: self.g.rotate(alpha).scale(cis(alpha)),
        }
    }

    /// `h - e^{2iφ} g`, the analytic function that governs convexity in direction `φ`.
    pub fn shear_combination(&self, phi: f64) -> PowerSeries {
        &self.h - &self.g.scale(cis(2.0 * phi))
    }
}

/// Shears `F = h + e^{-2iγ} g` along the dilatation `ω = g'/h'`:
/// `h' = F' / (1 + e^{-2iγ} ω)`, `g' = ω h'`, both integrated with zero constant.
pub fn shear(f: &PowerSeries, omega: &PowerSeries, gamma: f64, order: usize) -> Result<HarmonicMap> {
    let f = f.truncate(order);
    if f.coeff(0).norm() > 1e-13 {
        return Err(Error::invalid("shear needs F(0) = 0"));
    }
    let rot = cis(-2.0 * gamma);
    let omega = omega.truncate(order);
    let denom = &PowerSeries::constant(ONE, omega.order()) + &omega.scale(rot);
    if denom.coeff(0).norm() <= 1e-13 {
        return Err(Error::invalid("1 + e^{-2iγ} ω vanishes at the origin"));
    }
    let hp = f.differentiate().divide(&denom)?;
    let gp = omega.multiply(&hp);
    Ok(HarmonicMap::new(hp.integrate(), gp.integrate()))
}

/// Right half-plane family `f_{a,α}`.
pub fn f_a_alpha(a: f64, alpha: f64, order: usize) -> Result<HarmonicMap> {
    check_disk_param(a)?;
    let h = NamedSeries::HalfPlaneAnalytic { a, alpha }.expand(order)?;
    let g = NamedSeries::HalfPlaneCoAnalytic { a, alpha }.expand(order)?;
    Ok(HarmonicMap::new(h, g))
}

/// Map onto the slanted half-plane `H_γ` with dilatation `ω`.
pub fn slanted_halfplane(gamma: f64, omega: &PowerSeries, order: usize) -> Result<HarmonicMap> {
    let f = NamedSeries::Geometric { alpha: gamma }.expand(order)?;
    shear(&f, omega, gamma, order)
}

/// Strip map: `h + g = (1/2i) log((1 + iz)/(1 - iz))`.
pub fn strip_map(omega: &PowerSeries, order: usize) -> Result<HarmonicMap> {
    let f = NamedSeries::LogStrip.expand(order)?;
    shear(&f, omega, 0.0, order)
}

/// `h + g` for the family member `f_{α,n}`: the family sum Hadamard `log(1/(1-z))`.
pub fn family_analytic_sum(alpha: f64, n: u32, order: usize) -> Result<PowerSeries> {
    let sum = NamedSeries::FamilySum { alpha, n }.expand(order)?;
    Ok(sum.hadamard(&NamedSeries::LogHalf.expand(order)?))
}

/// Family member `f_{α,n}` with dilatation `ω`.
pub fn family_f_alpha_n(alpha: f64, n: u32, omega: &PowerSeries, order: usize) -> Result<HarmonicMap> {
    let f = family_analytic_sum(alpha, n, order)?;
    shear(&f, omega, 0.0, order)
}
