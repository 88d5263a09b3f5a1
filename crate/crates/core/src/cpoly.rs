//! Complex polynomials and zero location relative to the unit circle.
//!
//! Zero counting follows Cohn's rule: for `t(z) = a_0 + … + a_n z^n` with
//! `|a_0| < |a_n|`, the polynomial
//!
//! ```text
//! t_1(z) = (conj(a_n) t(z) - a_0 t*(z)) / z,     t*(z) = z^n conj(t(1/conj(z)))
//! ```
//!
//! has degree `n - 1`, one zero fewer inside the disk and the same number of
//! zeros on the circle. When the rule stops applying, the remaining
//! polynomial is handed to a Durand–Kerner root oracle.

use alloc::vec;
use alloc::vec::Vec;
use core::f64::consts::TAU;
use core::ops::{Add, Mul, Neg, Sub};

use crate::{cis, Error, Result, C64};

/// Trailing coefficients below this fraction of the largest modulus are dropped.
pub const TRIM_REL: f64 = 1e-15;
/// `|a_n| - |a_0| <= COHN_TOL * max(|a_0|, |a_n|, 1)` counts as degenerate.
pub const COHN_TOL: f64 = 1e-12;
/// Roots with `||z| - 1| <= CIRCLE_TOL` are counted as on the circle.
pub const CIRCLE_TOL: f64 = 1e-9;
/// Residual tolerance used when the root oracle backs a zero count.
pub const ORACLE_TOL: f64 = 1e-9;

const MAX_ITERATIONS: usize = 500;
const STEP_TOL: f64 = 1e-13;

/// Polynomial with complex coefficients in ascending degree.
///
/// The coefficient list is always trimmed: the last entry is nonzero, and the
/// zero polynomial has an empty list.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<C64>,
}

/// Outcome of [`ComplexPolynomial::count_zeros_in_disk`].
#[derive(Clone, Debug, PartialEq)]
pub struct ZeroCountReport {
    /// Zeros with modulus strictly below one.
    pub inside: usize,
    /// Zeros on the unit circle.
    pub on_circle: usize,
    /// Successive Cohn reductions, each one degree lower than the previous.
    pub chain: Vec<ComplexPolynomial>,
    /// The chain stopped before reaching a constant and the oracle finished the count.
    pub degenerate: bool,
}

impl ComplexPolynomial {
    pub fn new(mut coeffs: Vec<C64>) -> Self {
        let scale = coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max);
        while let Some(last) = coeffs.last() {
            let m = last.norm();
            if m == 0.0 || m <= TRIM_REL * scale {
                coeffs.pop();
            } else {
                break;
            }
        }
        ComplexPolynomial { coeffs }
    }

    pub fn from_real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        ComplexPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: C64) -> Self {
        Self::new(vec![c])
    }

    pub fn one() -> Self {
        Self::constant(C64::new(1.0, 0.0))
    }

    /// `c z^k`.
    pub fn monomial(c: C64, k: usize) -> Self {
        let mut coeffs = vec![C64::new(0.0, 0.0); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `1 + z^k`.
    pub fn one_plus_power(k: usize) -> Self {
        let mut coeffs = vec![C64::new(0.0, 0.0); k + 1];
        coeffs[0] += 1.0;
        coeffs[k] += 1.0;
        Self::new(coeffs)
    }

    /// Ascending coefficients.
    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> C64 {
        self.coeffs.last().copied().unwrap_or_default()
    }

    /// Largest coefficient modulus.
    pub fn scale(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn eval(&self, z: C64) -> C64 {
        self.coeffs
            .iter()
            .rev()
            .fold(C64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        )
    }

    pub fn scale_by(&self, c: C64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Multiplies by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C64::new(0.0, 0.0); k];
        coeffs.extend_from_slice(&self.coeffs);
        ComplexPolynomial { coeffs }
    }

    /// Substitutes `z^k` for `z`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1, "compose_power needs k >= 1");
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![C64::new(0.0, 0.0); (self.coeffs.len() - 1) * k + 1];
        for (j, &c) in self.coeffs.iter().enumerate() {
            coeffs[j * k] = c;
        }
        Self::new(coeffs)
    }

    /// Largest coefficientwise deviation from `other`.
    pub fn max_deviation(&self, other: &Self) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|k| (self.coeff(k) - other.coeff(k)).norm())
            .fold(0.0, f64::max)
    }

    /// `p*(z) = z^n conj(p(1/conj(z)))`: the conjugated coefficients in reverse order.
    pub fn reciprocal_adjoint(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::invalid("reciprocal adjoint of the zero polynomial"));
        }
        Ok(Self::new(self.coeffs.iter().rev().map(|c| c.conj()).collect()))
    }

    /// One step of Cohn's rule: `(conj(a_n) p - a_0 p*) / z`.
    pub fn cohn_reduce(&self) -> Result<Self> {
        let n = match self.degree() {
            None => return Err(Error::invalid("Cohn reduction of the zero polynomial")),
            Some(0) => return Err(Error::invalid("Cohn reduction of a constant")),
            Some(n) => n,
        };
        let a0 = self.coeffs[0];
        let an = self.coeffs[n];
        let (m0, mn) = (a0.norm(), an.norm());
        if mn - m0 <= COHN_TOL * m0.max(mn).max(1.0) {
            return Err(Error::ReductionNotApplicable {
                constant: m0,
                leading: mn,
            });
        }
        let lead_conj = an.conj();
        let reduced: Vec<C64> = (1..=n)
            .map(|k| lead_conj * self.coeffs[k] - a0 * self.coeffs[n - k].conj())
            .collect();
        let out = Self::new(reduced);
        if out.degree() != Some(n - 1) {
            return Err(Error::ReductionNotApplicable {
                constant: m0,
                leading: mn,
            });
        }
        Ok(out)
    }

    /// Counts zeros inside and on the unit circle.
    ///
    /// Cohn reductions run while they apply. If the chain reaches a constant,
    /// every zero is inside. Otherwise `degenerate` is set and the oracle
    /// counts the zeros of the last chain entry (reductions keep the
    /// on-circle count and drop the inside count by one each).
    pub fn count_zeros_in_disk(&self) -> Result<ZeroCountReport> {
        if self.is_zero() {
            return Err(Error::invalid("zero count of the zero polynomial"));
        }
        let mut chain = Vec::new();
        let mut current = self.clone();
        let mut degenerate = false;
        while current.degree().unwrap_or(0) > 0 {
            match current.cohn_reduce() {
                Ok(next) => {
                    chain.push(next.clone());
                    current = next;
                }
                Err(Error::ReductionNotApplicable { .. }) => {
                    degenerate = true;
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        let reductions = chain.len();
        let (inside, on_circle) = if degenerate {
            let (r, s) = current.oracle_count()?;
            (reductions + r, s)
        } else {
            (reductions, 0)
        };
        Ok(ZeroCountReport {
            inside,
            on_circle,
            chain,
            degenerate,
        })
    }

    /// `(inside, on_circle)` from the root oracle alone.
    pub fn oracle_count(&self) -> Result<(usize, usize)> {
        if self.degree().unwrap_or(0) == 0 {
            return Ok((0, 0));
        }
        let roots = self.roots(ORACLE_TOL)?;
        let mut inside = 0;
        let mut on = 0;
        for r in roots {
            let m = r.norm();
            if (m - 1.0).abs() <= CIRCLE_TOL {
                on += 1;
            } else if m < 1.0 {
                inside += 1;
            }
        }
        Ok((inside, on))
    }

    /// All roots by simultaneous (Durand–Kerner) iteration.
    ///
    /// Negligible low-order coefficients give exact zero roots and are split
    /// off first. Starting points are equally spaced on the circle of radius
    /// `1 + max_k |a_k / a_n|`. Iteration stops after 500 sweeps or once every
    /// correction is below `1e-13`. The result is accepted when each root has
    /// `|p(z)| <= tol * sum_k |a_k| |z|^k`.
    pub fn roots(&self, tol: f64) -> Result<Vec<C64>> {
        let n = match self.degree() {
            None | Some(0) => return Err(Error::invalid("roots need degree >= 1")),
            Some(n) => n,
        };
        if !(tol > 0.0) {
            return Err(Error::invalid("root tolerance must be positive"));
        }
        let zeros = self
            .coeffs
            .iter()
            .position(|c| c.norm() > TRIM_REL * self.scale())
            .unwrap_or(0);
        if zeros > 0 {
            let mut out = if zeros < n {
                ComplexPolynomial::new(self.coeffs[zeros..].to_vec()).roots(tol)?
            } else {
                Vec::new()
            };
            out.extend(core::iter::repeat_n(C64::new(0.0, 0.0), zeros));
            return Ok(out);
        }
        let lead = self.leading();
        let monic: Vec<C64> = self.coeffs.iter().map(|&c| c / lead).collect();
        let radius = 1.0 + monic[..n].iter().map(|c| c.norm()).fold(0.0, f64::max);
        // Offset keeps the start off symmetry axes of real polynomials.
        let mut z: Vec<C64> = (0..n)
            .map(|j| cis(TAU * j as f64 / n as f64 + 0.4) * radius)
            .collect();

        let eval_monic = |x: C64| monic.iter().rev().fold(C64::new(0.0, 0.0), |acc, &c| acc * x + c);
        for _ in 0..MAX_ITERATIONS {
            let mut max_step: f64 = 0.0;
            for i in 0..n {
                let zi = z[i];
                let mut denom = C64::new(1.0, 0.0);
                for (j, &zj) in z.iter().enumerate() {
                    if j != i {
                        denom *= zi - zj;
                    }
                }
                if denom.norm() == 0.0 {
                    denom = C64::new(f64::EPSILON, 0.0);
                }
                let step = eval_monic(zi) / denom;
                z[i] = zi - step;
                max_step = max_step.max(step.norm() / zi.norm().max(1.0));
            }
            if max_step < STEP_TOL {
                break;
            }
        }
        let residual = z
            .iter()
            .map(|&r| self.relative_residual(r))
            .fold(0.0, f64::max);
        if residual.is_finite() && residual <= tol {
            Ok(z)
        } else {
            Err(Error::NoConvergence {
                iterations: MAX_ITERATIONS,
                residual,
                best: z,
            })
        }
    }

    fn relative_residual(&self, z: C64) -> f64 {
        let m = z.norm();
        let mut scale = 0.0;
        let mut pow = 1.0;
        for c in &self.coeffs {
            scale += c.norm() * pow;
            pow *= m;
        }
        self.eval(z).norm() / scale
    }

    /// True iff every zero lies strictly inside the unit disk, which makes
    /// `|p(z) / p*(z)| < 1` on the open disk.
    ///
    /// A constant has no zeros but `|p/p*| = 1`, so it is not certified. Zeros
    /// on the circle give [`Error::Indeterminate`].
    pub fn blaschke_bound_certificate(&self) -> Result<bool> {
        let report = self.count_zeros_in_disk()?;
        if report.on_circle > 0 {
            return Err(Error::Indeterminate {
                on_circle: report.on_circle,
            });
        }
        let n = self.degree().unwrap_or(0);
        Ok(n > 0 && report.inside == n)
    }
}

impl From<Vec<C64>> for ComplexPolynomial {
    fn from(coeffs: Vec<C64>) -> Self {
        Self::new(coeffs)
    }
}

impl Add for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn add(self, rhs: Self) -> ComplexPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn sub(self, rhs: Self) -> ComplexPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ComplexPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn mul(self, rhs: Self) -> ComplexPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ComplexPolynomial::zero();
        }
        let mut out = vec![C64::new(0.0, 0.0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == C64::new(0.0, 0.0) {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ComplexPolynomial::new(out)
    }
}

impl Mul<C64> for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn mul(self, rhs: C64) -> ComplexPolynomial {
        self.scale_by(rhs)
    }
}

impl Neg for &ComplexPolynomial {
    type Output = ComplexPolynomial;
    fn neg(self) -> ComplexPolynomial {
        self.scale_by(C64::new(-1.0, 0.0))
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for ComplexPolynomial {
            type Output = ComplexPolynomial;
            fn $m(self, rhs: Self) -> ComplexPolynomial { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
