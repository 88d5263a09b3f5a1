//! Truncated Taylor series `c_0 + c_1 z + … + c_N z^N` on the unit disk.
//!
//! Binary operations between series of different orders truncate to the
//! smaller order. Multiplication and division skip zero coefficients, so the
//! sparse denominators that show up in the constructions (`1 + z^16`,
//! `(1 - z)^2`, …) stay cheap at large orders.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::cpoly::ComplexPolynomial;
use crate::{cis, Error, Result, C64};

/// Default truncation order.
pub const DEFAULT_ORDER: usize = 128;

/// Division needs the divisor's constant term above this modulus.
pub const DIVIDE_TOL: f64 = 1e-13;

const ZERO: C64 = C64::new(0.0, 0.0);
const ONE: C64 = C64::new(1.0, 0.0);

#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<C64>,
}

/// Closed forms with a known Taylor expansion at the origin.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NamedSeries {
    /// `z / (1 - e^{iα} z)`
    Geometric { alpha: f64 },
    /// Analytic part `h_{a,α}` of the right half-plane family.
    HalfPlaneAnalytic { a: f64, alpha: f64 },
    /// Co-analytic part `g_{a,α}` of the right half-plane family.
    HalfPlaneCoAnalytic { a: f64, alpha: f64 },
    /// `(1/2i) log((1 + iz) / (1 - iz))`, i.e. `arctan z`.
    LogStrip,
    /// `log(1 / (1 - z))`
    LogHalf,
    /// `z (1+z^2)(1+z^4)…(1+z^{2^{n-1}}) (1 + z^{2^n} + α z^{2^{n-1}}) / (1 + z^{2^{n+1}})`
    FamilySum { alpha: f64, n: u32 },
}

impl PowerSeries {
    /// Zero series of order `order`.
    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![ZERO; order + 1],
        }
    }

    /// Takes the coefficients as given; an empty list becomes the zero series of order 0.
    pub fn from_coeffs(coeffs: Vec<C64>) -> Self {
        if coeffs.is_empty() {
            return Self::zero(0);
        }
        PowerSeries { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C64) -> Self {
        PowerSeries {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn constant(c: C64, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = c;
        s
    }

    /// `c z^k`, truncated to `order`.
    pub fn monomial(c: C64, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn from_polynomial(p: &ComplexPolynomial, order: usize) -> Self {
        Self::from_fn(order, |k| p.coeff(k))
    }

    /// Truncation order `N`; the series holds `N + 1` coefficients.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_fn(order.min(self.order()), |k| self.coeffs[k])
    }

    pub fn scale(&self, c: C64) -> Self {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|&a| a * c).collect(),
        }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn multiply(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![ZERO; n + 1];
        let nz: Vec<(usize, C64)> = nonzero_terms(&other.coeffs[..=n]);
        for (i, &a) in self.coeffs[..=n].iter().enumerate() {
            if a == ZERO {
                continue;
            }
            for &(j, b) in &nz {
                if i + j > n {
                    break;
                }
                out[i + j] += a * b;
            }
        }
        PowerSeries { coeffs: out }
    }

    /// Long division `self / other`, truncated at the smaller order.
    pub fn divide(&self, other: &Self) -> Result<Self> {
        let b0 = other.coeffs[0];
        if b0.norm() <= DIVIDE_TOL {
            return Err(Error::invalid("series division by a (near-)zero constant term"));
        }
        let n = self.order().min(other.order());
        let tail: Vec<(usize, C64)> = nonzero_terms(&other.coeffs[1..=n])
            .into_iter()
            .map(|(j, b)| (j + 1, b))
            .collect();
        let inv = ONE / b0;
        let mut q = vec![ZERO; n + 1];
        for k in 0..=n {
            let mut acc = self.coeffs[k];
            for &(j, b) in &tail {
                if j > k {
                    break;
                }
                acc -= b * q[k - j];
            }
            q[k] = acc * inv;
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// Hadamard (coefficientwise) product.
    pub fn hadamard(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self::from_fn(n, |k| self.coeffs[k] * other.coeffs[k])
    }

    /// Term-by-term derivative, order `N - 1` (order 0 stays 0).
    pub fn differentiate(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        Self::from_fn(n - 1, |k| self.coeffs[k + 1] * (k + 1) as f64)
    }

    /// Term-by-term antiderivative with zero constant, order `N + 1`.
    pub fn integrate(&self) -> Self {
        Self::from_fn(self.order() + 1, |k| {
            if k == 0 {
                ZERO
            } else {
                self.coeffs[k - 1] / k as f64
            }
        })
    }

    /// Multiplies by `z`, keeping the order.
    pub fn mul_z(&self) -> Self {
        Self::from_fn(self.order(), |k| if k == 0 { ZERO } else { self.coeffs[k - 1] })
    }

    /// Horner evaluation of the truncated polynomial.
    pub fn evaluate(&self, z: C64) -> C64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &c| acc * z + c)
    }

    /// Series of `z ↦ f(e^{iα} z)`.
    pub fn rotate(&self, alpha: f64) -> Self {
        Self::from_fn(self.order(), |k| self.coeffs[k] * cis(alpha * k as f64))
    }

    /// Largest coefficient deviation over the shared indices.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    /// Largest coefficient modulus.
    pub fn max_modulus(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn named(kind: NamedSeries, order: usize) -> Result<Self> {
        kind.expand(order)
    }
}

fn nonzero_terms(c: &[C64]) -> Vec<(usize, C64)> {
    c.iter()
        .enumerate()
        .filter(|(_, &b)| b != ZERO)
        .map(|(j, &b)| (j, b))
        .collect()
}

/// Largest α for which the `f_{α,n}` family is defined: `2(√2 - 1)`.
pub fn family_alpha_bound() -> f64 {
    2.0 * (core::f64::consts::SQRT_2 - 1.0)
}

/// Numerator polynomial of [`NamedSeries::FamilySum`] divided by `z`:
/// `(1+z^2)(1+z^4)…(1+z^{2^{n-1}}) (1 + z^{2^n} + α z^{2^{n-1}})`.
pub fn family_product(alpha: f64, n: u32) -> ComplexPolynomial {
    let mut p = ComplexPolynomial::one();
    for k in 1..n {
        p = &p * &ComplexPolynomial::one_plus_power(1usize << k);
    }
    &p * &family_factor(alpha, n)
}

/// `1 + z^{2^n} + α z^{2^{n-1}}`.
pub fn family_factor(alpha: f64, n: u32) -> ComplexPolynomial {
    let hi = 1usize << n;
    let mid = 1usize << (n - 1);
    let mut coeffs = vec![ZERO; hi + 1];
    coeffs[0] += 1.0;
    coeffs[hi] += 1.0;
    coeffs[mid] += alpha;
    ComplexPolynomial::new(coeffs)
}

pub(crate) fn check_family(alpha: f64, n: u32) -> Result<()> {
    if n == 0 || n > 16 {
        return Err(Error::invalid("family index n must be in 1..=16"));
    }
    if !(alpha.abs() <= family_alpha_bound() + 1e-12) {
        return Err(Error::invalid("family parameter α must lie in [-2(√2-1), 2(√2-1)]"));
    }
    Ok(())
}

pub(crate) fn check_disk_param(a: f64) -> Result<()> {
    if !(a.abs() < 1.0) {
        return Err(Error::invalid("parameter a must satisfy -1 < a < 1"));
    }
    Ok(())
}

impl NamedSeries {
    /// Looks a kind up by name; `params` are read in declaration order.
    pub fn from_name(name: &str, params: &[f64]) -> Result<Self> {
        let p = |i: usize| {
            params
                .get(i)
                .copied()
                .ok_or_else(|| Error::invalid("missing parameter for named series"))
        };
        Ok(match name {
            "geometric" => NamedSeries::Geometric { alpha: p(0)? },
            "half-plane-h" => NamedSeries::HalfPlaneAnalytic { a: p(0)?, alpha: p(1)? },
            "half-plane-g" => NamedSeries::HalfPlaneCoAnalytic { a: p(0)?, alpha: p(1)? },
            "log-strip" => NamedSeries::LogStrip,
            "log-half" => NamedSeries::LogHalf,
            "family-sum" => {
                let n = p(1)?;
                if n < 1.0 || libm::trunc(n) != n {
                    return Err(Error::invalid("family-sum needs a positive integer n"));
                }
                NamedSeries::FamilySum { alpha: p(0)?, n: n as u32 }
            }
            other => {
                return Err(Error::invalid(alloc::format!("unknown series kind `{other}`")));
            }
        })
    }

    pub fn expand(self, order: usize) -> Result<PowerSeries> {
        match self {
            NamedSeries::Geometric { alpha } => Ok(PowerSeries::from_fn(order, |k| {
                if k == 0 {
                    ZERO
                } else {
                    cis(alpha * (k - 1) as f64)
                }
            })),
            // coefficients of (z/(1+a) - e^{iα}z²/2) / (1 - e^{iα}z)² and its co-analytic partner
            NamedSeries::HalfPlaneAnalytic { a, alpha } => {
                check_disk_param(a)?;
                Ok(PowerSeries::from_fn(order, |k| {
                    if k == 0 {
                        return ZERO;
                    }
                    let k = k as f64;
                    cis(alpha * (k - 1.0)) * (k / (1.0 + a) - 0.5 * (k - 1.0))
                }))
            }
            NamedSeries::HalfPlaneCoAnalytic { a, alpha } => {
                check_disk_param(a)?;
                Ok(PowerSeries::from_fn(order, |k| {
                    if k == 0 {
                        return ZERO;
                    }
                    let k = k as f64;
                    cis(alpha * (k + 1.0)) * (a * k / (1.0 + a) - 0.5 * (k - 1.0))
                }))
            }
            NamedSeries::LogStrip => Ok(PowerSeries::from_fn(order, |k| {
                if k % 2 == 0 {
                    ZERO
                } else {
                    let sign = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
                    C64::new(sign / k as f64, 0.0)
                }
            })),
            NamedSeries::LogHalf => Ok(PowerSeries::from_fn(order, |k| {
                if k == 0 {
                    ZERO
                } else {
                    C64::new(1.0 / k as f64, 0.0)
                }
            })),
            NamedSeries::FamilySum { alpha, n } => {
                check_family(alpha, n)?;
                let num = PowerSeries::from_polynomial(&family_product(alpha, n).shift(1), order);
                let den = PowerSeries::from_polynomial(
                    &ComplexPolynomial::one_plus_power(1usize << (n + 1)),
                    order,
                );
                num.divide(&den)
            }
        }
    }
}

/// `(1 - e^{iα} z)^2` as a series.
#[cfg(test)]
fn squared_cayley_denominator(alpha: f64, order: usize) -> PowerSeries {
    let e = cis(alpha);
    PowerSeries::from_fn(order, |k| match k {
        0 => ONE,
        1 => -e * 2.0,
        2 => e * e,
        _ => ZERO,
    })
}

impl Add for &PowerSeries {
    type Output = PowerSeries;
    fn add(self, rhs: Self) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_fn(n, |k| self.coeffs[k] + rhs.coeffs[k])
    }
}

impl Sub for &PowerSeries {
    type Output = PowerSeries;
    fn sub(self, rhs: Self) -> PowerSeries {
        let n = self.order().min(rhs.order());
        PowerSeries::from_fn(n, |k| self.coeffs[k] - rhs.coeffs[k])
    }
}

impl Mul for &PowerSeries {
    type Output = PowerSeries;
    fn mul(self, rhs: Self) -> PowerSeries {
        self.multiply(rhs)
    }
}

impl Neg for &PowerSeries {
    type Output = PowerSeries;
    fn neg(self) -> PowerSeries {
        self.scale(C64::new(-1.0, 0.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use core::f64::consts::PI;

    fn r(x: f64) -> C64 {
        C64::new(x, 0.0)
    }

    fn geometric(order: usize) -> PowerSeries {
        PowerSeries::named(NamedSeries::Geometric { alpha: 0.0 }, order).unwrap()
    }

    #[test]
    fn geometric_is_hadamard_identity() {
        let f = PowerSeries::from_fn(20, |k| if k == 0 { ZERO } else { C64::new(k as f64, -0.5) });
        assert_eq!(geometric(20).hadamard(&f), f);
    }

    #[test]
    fn koebe_hadamard_is_z_derivative() {
        let koebe = PowerSeries::from_fn(20, |k| r(k as f64));
        let f = PowerSeries::from_fn(20, |k| C64::new(0.1 * k as f64, 1.0 / (k + 1) as f64));
        let expect = PowerSeries::from_fn(20, |k| f.coeff(k) * k as f64);
        assert!(koebe.hadamard(&f).max_deviation(&expect) < 1e-15);
    }

    #[test]
    fn half_plane_hadamard_identity() {
        // h_{a,0} * h = (h + ((1-a)/(1+a)) z h') / 2 for h = z/(1-z), a = 1/2
        let a = 0.5;
        let n = 16;
        let h = geometric(n);
        let ha = PowerSeries::named(NamedSeries::HalfPlaneAnalytic { a, alpha: 0.0 }, n).unwrap();
        let lhs = ha.hadamard(&h);
        let zh = PowerSeries::from_fn(n, |k| h.coeff(k) * k as f64);
        let rhs = (&h + &zh.scale(r((1.0 - a) / (1.0 + a)))).scale(r(0.5));
        assert!(lhs.max_deviation(&rhs) < 1e-14);
    }

    #[test]
    fn differentiate_examples() {
        let f = PowerSeries::from_fn(5, |k| if k == 0 { ZERO } else { ONE });
        let d = f.differentiate();
        assert_eq!(d.order(), 4);
        assert_eq!(d.coeffs(), &[r(1.0), r(2.0), r(3.0), r(4.0), r(5.0)]);
        assert_eq!(PowerSeries::constant(r(3.0), 4).differentiate(), PowerSeries::zero(3));
        assert_eq!(PowerSeries::constant(r(3.0), 0).differentiate(), PowerSeries::zero(0));
        let log = PowerSeries::named(NamedSeries::LogHalf, 10).unwrap();
        let g = PowerSeries::from_fn(9, |_| ONE);
        assert!(log.differentiate().max_deviation(&g) < 1e-15);
    }

    #[test]
    fn integrate_inverts_differentiate() {
        let f = PowerSeries::from_fn(12, |k| if k == 0 { ZERO } else { C64::new(1.0 / k as f64, k as f64) });
        assert!(f.differentiate().integrate().max_deviation(&f) < 1e-15);
    }

    #[test]
    fn multiply_and_divide_examples() {
        let one_minus_z = PowerSeries::from_fn(8, |k| match k {
            0 => ONE,
            1 => -ONE,
            _ => ZERO,
        });
        let inv = PowerSeries::from_fn(8, |_| ONE);
        assert_eq!(one_minus_z.multiply(&inv), PowerSeries::constant(ONE, 8));

        let z = PowerSeries::monomial(ONE, 1, 8);
        assert_eq!(z.divide(&one_minus_z).unwrap(), geometric(8));

        // (1 - e^{iπ/2} z)^2 = 1 - 2iz - z^2
        let sq = squared_cayley_denominator(PI / 2.0, 4);
        let expect = [r(1.0), C64::new(0.0, -2.0), r(-1.0), ZERO, ZERO];
        for (a, b) in sq.coeffs().iter().zip(expect) {
            assert!((a - b).norm() < 1e-15);
        }
        let lin = PowerSeries::from_fn(4, |k| if k == 0 { ONE } else { C64::new(0.0, -1.0) });
        let lin = PowerSeries::from_fn(4, |k| if k <= 1 { lin.coeff(k) } else { ZERO });
        assert!(lin.multiply(&lin).max_deviation(&sq) < 1e-15);
    }

    #[test]
    fn divide_rejects_vanishing_constant() {
        let z = PowerSeries::monomial(ONE, 1, 4);
        assert!(matches!(z.divide(&z), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn mixed_orders_truncate_to_smaller() {
        let a = PowerSeries::from_fn(5, |_| ONE);
        let b = PowerSeries::from_fn(9, |_| ONE);
        assert_eq!((&a + &b).order(), 5);
        assert_eq!(a.multiply(&b).order(), 5);
        assert_eq!(a.hadamard(&b).order(), 5);
        assert_eq!(a.divide(&b).unwrap().order(), 5);
    }

    #[test]
    fn evaluate_examples() {
        let n = 20;
        let geo = PowerSeries::from_fn(n, |_| ONE);
        let v = geo.evaluate(r(0.5));
        let expect = 2.0 - libm::pow(2.0, -(n as f64));
        assert!((v.re - expect).abs() < 1e-15 && v.im == 0.0);

        let f = PowerSeries::from_fn(7, |k| C64::new(k as f64 + 1.5, -1.0));
        assert_eq!(f.evaluate(ZERO), C64::new(1.5, -1.0));

        let z = geometric(32).evaluate(r(0.3));
        // 0.3/0.7 minus the tail 0.3^33/0.7
        let exact = 0.3 / 0.7 - libm::pow(0.3, 33.0) / 0.7;
        assert!((z.re - exact).abs() < 1e-15);
        assert!((z.re - 0.428571).abs() < 1e-6);
    }

    #[test]
    fn rotate_examples() {
        let f = PowerSeries::from_fn(10, |k| C64::new(k as f64, 1.0));
        assert!(f.rotate(0.0).max_deviation(&f) < 1e-15);
        let alt = geometric(10).rotate(PI);
        for k in 1..=10 {
            let expect = if k % 2 == 0 { 1.0 } else { -1.0 };
            assert!((alt.coeff(k) - r(expect)).norm() < 1e-14);
        }
        assert!(f.rotate(0.7).rotate(-0.7).max_deviation(&f) < 1e-13);
    }

    #[test]
    fn named_series_examples() {
        let log = PowerSeries::named(NamedSeries::LogHalf, 5).unwrap();
        let expect = [0.0, 1.0, 0.5, 1.0 / 3.0, 0.25, 0.2];
        for (c, e) in log.coeffs().iter().zip(expect) {
            assert!((c - r(e)).norm() < 1e-16);
        }
        let strip = PowerSeries::named(NamedSeries::LogStrip, 5).unwrap();
        let expect = [0.0, 1.0, 0.0, -1.0 / 3.0, 0.0, 0.2];
        for (c, e) in strip.coeffs().iter().zip(expect) {
            assert!((c - r(e)).norm() < 1e-16);
        }
        // n = 1, α = 0: z (1 + z^2) / (1 + z^4)
        let fam = PowerSeries::named(NamedSeries::FamilySum { alpha: 0.0, n: 1 }, 12).unwrap();
        let expect = [0.0, 1.0, 0.0, 1.0, 0.0, -1.0, 0.0, -1.0, 0.0, 1.0, 0.0, 1.0, 0.0];
        for (c, e) in fam.coeffs().iter().zip(expect) {
            assert!((c - r(e)).norm() < 1e-15);
        }
    }

    #[test]
    fn named_series_by_name() {
        assert_eq!(NamedSeries::from_name("log-half", &[]).unwrap(), NamedSeries::LogHalf);
        assert_eq!(
            NamedSeries::from_name("family-sum", &[0.5, 2.0]).unwrap(),
            NamedSeries::FamilySum { alpha: 0.5, n: 2 }
        );
        assert!(NamedSeries::from_name("cardioid", &[]).is_err());
        assert!(NamedSeries::from_name("geometric", &[]).is_err());
        assert!(PowerSeries::named(NamedSeries::FamilySum { alpha: 0.9, n: 1 }, 8).is_err());
        assert!(PowerSeries::named(NamedSeries::HalfPlaneAnalytic { a: 1.0, alpha: 0.0 }, 8).is_err());
    }

    #[test]
    fn family_product_telescopes() {
        // (1 - z^2) ∏_{k<n} (1 + z^{2^k}) = 1 - z^{2^n}
        let one_minus_z2 = ComplexPolynomial::from_real(&[1.0, 0.0, -1.0]);
        for n in 1..=4u32 {
            for alpha in [-0.5, 0.0, 0.8] {
                let lhs = &one_minus_z2 * &family_product(alpha, n);
                let one_minus = &ComplexPolynomial::one() - &ComplexPolynomial::monomial(ONE, 1 << n);
                let rhs = &one_minus * &family_factor(alpha, n);
                assert!(lhs.max_deviation(&rhs) < 1e-15, "n={n}");
            }
        }
        let p = family_product(0.5, 2);
        let expect = &ComplexPolynomial::from_real(&[1.0, 0.0, 1.0])
            * &ComplexPolynomial::from_real(&[1.0, 0.0, 0.5, 0.0, 1.0]);
        assert!(p.max_deviation(&expect) < 1e-15);
    }
}
