use crate::cpoly::ComplexPolynomial;
use crate::grid::{scatter_points, DiskGrid};
use crate::series::PowerSeries;
use crate::{cis, Error, Result, C64};

/// Quotient of two polynomials. Common factors are never cancelled.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFunction {
    num: ComplexPolynomial,
    den: ComplexPolynomial,
}

/// Maximum of `|r(z)|` over a grid.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridMax {
    pub max: f64,
    pub argmax: C64,
    /// Smallest `|den(z)| / scale(den)` seen; tiny values flag a pole near the grid.
    pub min_den: f64,
    pub argmin_den: C64,
}

impl RationalFunction {
    pub fn new(num: ComplexPolynomial, den: ComplexPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::invalid("rational function with zero denominator"));
        }
        Ok(RationalFunction { num, den })
    }

    pub fn polynomial(p: ComplexPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: ComplexPolynomial::one(),
        }
    }

    pub fn zero() -> Self {
        Self::polynomial(ComplexPolynomial::zero())
    }

    /// `c z^k`
    pub fn monomial(c: C64, k: usize) -> Self {
        Self::polynomial(ComplexPolynomial::monomial(c, k))
    }

    /// `e^{iθ} (a - z^n) / (1 - a z^n)`
    pub fn cayley_power(a: f64, n: usize, theta: f64) -> Self {
        let e = cis(theta);
        let mut num = alloc::vec![C64::new(0.0, 0.0); n + 1];
        num[0] += e * a;
        num[n] -= e;
        let mut den = alloc::vec![C64::new(0.0, 0.0); n + 1];
        den[0] += 1.0;
        den[n] -= a;
        RationalFunction {
            num: ComplexPolynomial::new(num),
            den: ComplexPolynomial::new(den),
        }
    }

    /// `e^{iθ} (a - z)^n / (1 - a z)^n`
    pub fn blaschke_power(a: f64, n: usize, theta: f64) -> Self {
        let lin_num = ComplexPolynomial::from_real(&[a, -1.0]);
        let lin_den = ComplexPolynomial::from_real(&[1.0, -a]);
        let mut num = ComplexPolynomial::constant(cis(theta));
        let mut den = ComplexPolynomial::one();
        for _ in 0..n {
            num = &num * &lin_num;
            den = &den * &lin_den;
        }
        RationalFunction { num, den }
    }

    pub fn num(&self) -> &ComplexPolynomial {
        &self.num
    }

    pub fn den(&self) -> &ComplexPolynomial {
        &self.den
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.num.eval(z) / self.den.eval(z)
    }

    /// Quotient rule at the polynomial level: `(N'D - ND') / D^2`.
    pub fn derivative(&self) -> Self {
        let num = &(&self.num.derivative() * &self.den) - &(&self.num * &self.den.derivative());
        RationalFunction {
            num,
            den: &self.den * &self.den,
        }
    }

    /// Taylor expansion at the origin.
    pub fn to_series(&self, order: usize) -> Result<PowerSeries> {
        PowerSeries::from_polynomial(&self.num, order)
            .divide(&PowerSeries::from_polynomial(&self.den, order))
    }

    /// Cross-multiplied comparison `n1 d2 = n2 d1` at 20 scattered points of
    /// radius ≤ 0.9, relative tolerance `tol`.
    pub fn approx_eq(&self, other: &Self, tol: f64) -> bool {
        self.max_cross_deviation(other, 20, 0.9) <= tol
    }

    /// Largest relative deviation `|n1 d2 - n2 d1| / max(|n1 d2|, |n2 d1|)`.
    pub fn max_cross_deviation(&self, other: &Self, points: usize, r_max: f64) -> f64 {
        scatter_points(points, r_max)
            .into_iter()
            .map(|z| {
                let lhs = self.num.eval(z) * other.den.eval(z);
                let rhs = other.num.eval(z) * self.den.eval(z);
                let scale = lhs.norm().max(rhs.norm());
                if scale == 0.0 {
                    0.0
                } else {
                    (lhs - rhs).norm() / scale
                }
            })
            .fold(0.0, f64::max)
    }

    pub fn max_modulus_on(&self, grid: &DiskGrid) -> GridMax {
        let den_scale = self.den.scale();
        let mut out = GridMax {
            max: 0.0,
            argmax: C64::new(0.0, 0.0),
            min_den: f64::INFINITY,
            argmin_den: C64::new(0.0, 0.0),
        };
        for z in grid.points() {
            let d = self.den.eval(z);
            let rel = d.norm() / den_scale;
            if rel < out.min_den {
                out.min_den = rel;
                out.argmin_den = z;
            }
            let v = (self.num.eval(z) / d).norm();
            if !(v <= out.max) {
                out.max = v;
                out.argmax = z;
            }
        }
        out
    }
}
