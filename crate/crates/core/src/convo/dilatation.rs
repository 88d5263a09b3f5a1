//! Closed-form dilatations of convolutions and convex combinations.

use crate::convo::RationalFunction;
use crate::cpoly::ComplexPolynomial;
use crate::hmap::{FamilyParams, SlantParams};
use crate::series::{check_disk_param, family_factor};
use crate::{cis, Error, Result, C64};

use alloc::vec;

type Poly = ComplexPolynomial;

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn poly(coeffs: &[C64]) -> Poly {
    Poly::new(coeffs.to_vec())
}

/// `P'Q - PQ'` for `ω = P/Q`.
fn wronskian(omega: &RationalFunction) -> Poly {
    let (p, q) = (omega.num(), omega.den());
    &(&p.derivative() * q) - &(p * &q.derivative())
}

/// Dilatation of `f_{a,0} * f` where `f` maps onto the slanted half-plane
/// `H_γ` with dilatation `ω`:
///
/// ```text
///            2ω(1 + e^{-2iγ}ω)(a - e^{iγ}z) + zω'(a-1)(1 - e^{iγ}z)
///  ω̃(z) = --------------------------------------------------------------
///          2(1 - a e^{iγ}z)(1 + e^{-2iγ}ω) + e^{-2iγ}zω'(a-1)(1 - e^{iγ}z)
/// ```
///
/// Numerator and denominator are multiplied through by `Q^2` for `ω = P/Q`.
pub fn half_plane_dilatation(a: f64, gamma: f64, omega: &RationalFunction) -> Result<RationalFunction> {
    check_disk_param(a)?;
    let (p, q) = (omega.num(), omega.den());
    let e1 = cis(gamma);
    let e2 = cis(-2.0 * gamma);
    let w = wronskian(omega);
    let q_plus = q + &p.scale_by(e2);
    let z_lin = poly(&[c(a), -e1]);
    let one_minus = poly(&[c(1.0), -e1]);
    let tail = &(&w.shift(1) * &one_minus).scale_by(c(a - 1.0));

    let num = &(&(p * &q_plus) * &z_lin).scale_by(c(2.0)) + tail;
    let den_lin = poly(&[c(1.0), -e1 * a]);
    let den = &(&(&den_lin * q) * &q_plus).scale_by(c(2.0)) + &tail.scale_by(e2);
    RationalFunction::new(num, den)
}

/// The convolution dilatation for `ω = e^{iθ} z^n`:
///
/// ```text
/// ω̃ = -e^{2iθ}e^{-iγ} z^n N / D
/// N = z^{n+1} - a e^{-iγ} z^n + ½(2-n+an) e^{-iθ}e^{2iγ} z + ½(n-2a-an) e^{-iθ}e^{iγ}
/// D = ½(n-2a-an) e^{iθ}e^{-iγ} z^{n+1} + ½(2-n+an) e^{iθ}e^{-2iγ} z^n - a e^{iγ} z + 1
/// ```
pub fn monomial_dilatation(params: &SlantParams) -> RationalFunction {
    let SlantParams { gamma, theta, n, a } = *params;
    let n = n as usize;
    let nf = n as f64;
    let lo = 0.5 * (2.0 - nf + a * nf);
    let hi = 0.5 * (nf - 2.0 * a - a * nf);
    let zero = c(0.0);

    let mut num = vec![zero; n + 2];
    num[n + 1] += 1.0;
    num[n] += -cis(-gamma) * a;
    num[1] += cis(2.0 * gamma - theta) * lo;
    num[0] += cis(gamma - theta) * hi;

    let mut den = vec![zero; n + 2];
    den[n + 1] += cis(theta - gamma) * hi;
    den[n] += cis(theta - 2.0 * gamma) * lo;
    den[1] += -cis(gamma) * a;
    den[0] += 1.0;

    let pre = -cis(2.0 * theta - gamma);
    RationalFunction::new(Poly::new(num).scale_by(pre).shift(n), Poly::new(den))
        .expect("constant term 1 keeps the denominator nonzero")
}

/// `u z^k p(z) / p*(z)`.
pub fn blaschke_quotient(p: &Poly, u: C64, k: usize) -> Result<RationalFunction> {
    RationalFunction::new(p.scale_by(u).shift(k), p.reciprocal_adjoint()?)
}

/// `-w p(w) / p*(w)` with `w = z^{2^j}`.
fn neg_w_quotient(p: &Poly, j: u32) -> RationalFunction {
    let k = 1usize << j;
    let num = p.scale_by(c(-1.0)).shift(1).compose_power(k);
    let den = p
        .reciprocal_adjoint()
        .expect("combination polynomials are monic")
        .compose_power(k);
    RationalFunction::new(num, den).expect("nonzero denominator")
}

/// Quartic `p` with `ω̃ = p/p*` for the dilatation `(a - z²)/(1 - az²)`,
/// ascending: `a², a(a-1), 1-4a+a², 1-a, 1`.
pub fn cayley_square_quartic(a: f64) -> Poly {
    Poly::from_real(&[a * a, a * (a - 1.0), 1.0 - 4.0 * a + a * a, 1.0 - a, 1.0])
}

pub fn cayley_square_dilatation(a: f64) -> Result<RationalFunction> {
    check_disk_param(a)?;
    blaschke_quotient(&cayley_square_quartic(a), c(1.0), 0)
}

/// Quartic `p` with `ω̃ = p/p*` for the dilatation `-(a - z)²/(1 - az)²`.
pub fn blaschke_square_quartic(a: f64) -> Poly {
    let (a2, a3) = (a * a, a * a * a);
    Poly::from_real(&[
        -a3,
        -a + 4.0 * a2 - a3,
        1.0 - 4.0 * a + 4.0 * a2 - a3,
        1.0 - 4.0 * a + a2,
        1.0,
    ])
}

/// Requires `0 < a < 1`.
pub fn blaschke_square_dilatation(a: f64) -> Result<RationalFunction> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::invalid("parameter a must satisfy 0 < a < 1"));
    }
    blaschke_quotient(&blaschke_square_quartic(a), c(1.0), 0)
}

/// Dilatation of `f_{0,0} * f` where `f` is the strip map with dilatation `ω`:
///
/// ```text
/// ω̃ = -z (ω'(1+z²) - 2zω(1+ω)) / (2(1+ω) - ω'z(1+z²))
/// ```
///
/// multiplied through by `Q^2` for `ω = P/Q`.
pub fn strip_dilatation(omega: &RationalFunction) -> RationalFunction {
    let (p, q) = (omega.num(), omega.den());
    let w = wronskian(omega);
    let one_z2 = Poly::from_real(&[1.0, 0.0, 1.0]);
    let q_plus = q + p;
    let w_term = &w * &one_z2;
    let num = (&w_term - &(p * &q_plus).shift(1).scale_by(c(2.0)))
        .scale_by(c(-1.0))
        .shift(1);
    let den = &(q * &q_plus).scale_by(c(2.0)) - &w_term.shift(1);
    RationalFunction::new(num, den).expect("2Q^2 leads the denominator at the origin")
}

/// Affine combination `t ω1 + ...` for two members of the same index and
/// parameter: `(tω1 + (1-t)ω2 + ω1ω2) / (1 + tω2 + (1-t)ω1)`.
pub fn equal_index_dilatation(
    omega1: &RationalFunction,
    omega2: &RationalFunction,
    t: f64,
) -> Result<RationalFunction> {
    check_weight(t)?;
    let (p1, q1) = (omega1.num(), omega1.den());
    let (p2, q2) = (omega2.num(), omega2.den());
    let q12 = q1 * q2;
    let num = &(&(p1 * q2).scale_by(c(t)) + &(p2 * q1).scale_by(c(1.0 - t))) + &(p1 * p2);
    let den = &(&q12 + &(q1 * p2).scale_by(c(t))) + &(p1 * q2).scale_by(c(1.0 - t));
    RationalFunction::new(num, den)
}

/// Dilatation of `t f_{α1,n} + (1-t) f_{α2,m}` for `n ≥ m` with member
/// dilatations `ω1 = P1/Q1`, `ω2 = P2/Q2`.
///
/// With `S_k = 1 + z^{2^{k+1}}`, `Π = ∏_{k=m}^{n-1} (1 + z^{2^k})` and
/// `B_i = 1 + z^{2^{n_i}} + α_i z^{2^{n_i - 1}}`:
///
/// ```text
/// num = t P1 Π B1 (Q2+P2) S_m + (1-t) P2 B2 (Q1+P1) S_n
/// den = t Q1 Π B1 (Q2+P2) S_m + (1-t) Q2 B2 (Q1+P1) S_n
/// ```
pub fn combination_dilatation(
    params1: &FamilyParams,
    params2: &FamilyParams,
    omega1: &RationalFunction,
    omega2: &RationalFunction,
    t: f64,
) -> Result<RationalFunction> {
    check_weight(t)?;
    let p1 = FamilyParams::new(params1.alpha, params1.n, t)?;
    let p2 = FamilyParams::new(params2.alpha, params2.n, t)?;
    let (n, m) = (p1.n, p2.n);
    if n < m {
        return Err(Error::invalid("combination dilatation needs n >= m; swap the members"));
    }
    let mut pi = Poly::one();
    for k in m..n {
        pi = &pi * &Poly::one_plus_power(1usize << k);
    }
    let s_m = Poly::one_plus_power(1usize << (m + 1));
    let s_n = Poly::one_plus_power(1usize << (n + 1));
    let b1 = family_factor(p1.alpha, n);
    let b2 = family_factor(p2.alpha, m);
    let (n1, d1) = (omega1.num(), omega1.den());
    let (n2, d2) = (omega2.num(), omega2.den());

    let left = &(&(&pi * &b1) * &(d2 + n2)) * &s_m;
    let right = &(&b2 * &(d1 + n1)) * &s_n;
    let num = &(n1 * &left).scale_by(c(t)) + &(n2 * &right).scale_by(c(1.0 - t));
    let den = &(d1 * &left).scale_by(c(t)) + &(d2 * &right).scale_by(c(1.0 - t));
    RationalFunction::new(num, den)
}

fn check_weight(t: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::invalid("combination weight t must lie in [0, 1]"));
    }
    Ok(())
}

/// Cubic `P` with `ω̃ = -w P(w)/P*(w)`, `w = z^{2^{n-1}}`, for member
/// dilatations `-z^{2^{n-1}}` and `z^{2^{n-1}}`.
pub fn opposite_power_cubic(alpha1: f64, alpha2: f64, t: f64) -> Poly {
    let s = 1.0 - t;
    Poly::from_real(&[
        2.0 * t - 1.0,
        1.0 + alpha1 * t - alpha2 * s,
        2.0 * t - 1.0 + alpha1 * t + alpha2 * s,
        1.0,
    ])
}

pub fn opposite_power_dilatation(alpha1: f64, alpha2: f64, t: f64, n: u32) -> Result<RationalFunction> {
    check_combination(alpha1, alpha2, t, n)?;
    Ok(neg_w_quotient(&opposite_power_cubic(alpha1, alpha2, t), n - 1))
}

/// Cubic `P` with `ω̃ = -w P(w)/P*(w)`, `w = z^{2^{n-1}}`, for member
/// dilatations `-z^{2^{n-1}}` and `-z^{2^n}` after cancelling `1 - w`.
pub fn double_power_cubic(alpha1: f64, alpha2: f64, t: f64) -> Poly {
    Poly::from_real(&[
        t,
        1.0 + alpha1 * t,
        t * (1.0 + alpha1) + (1.0 - t) * alpha2,
        1.0,
    ])
}

pub fn double_power_dilatation(alpha1: f64, alpha2: f64, t: f64, n: u32) -> Result<RationalFunction> {
    check_combination(alpha1, alpha2, t, n)?;
    Ok(neg_w_quotient(&double_power_cubic(alpha1, alpha2, t), n - 1))
}

/// Sextic `p` with `ω̃ = -w p(w)/p*(w)`, `w = z^{2^{n-2}}`, for member
/// dilatations `-z^{2^{n-2}}` and `z^{2^{n-1}}`, ascending:
/// `t, t-1, 1+α1 t, α2(t-1), α2+(1+α1-α2)t, t-1, 1`.
pub fn mixed_power_sextic(alpha1: f64, alpha2: f64, t: f64) -> Poly {
    Poly::from_real(&[
        t,
        t - 1.0,
        1.0 + alpha1 * t,
        alpha2 * (t - 1.0),
        alpha2 + (1.0 + alpha1 - alpha2) * t,
        t - 1.0,
        1.0,
    ])
}

/// Requires `n ≥ 2`.
pub fn mixed_power_dilatation(alpha1: f64, alpha2: f64, t: f64, n: u32) -> Result<RationalFunction> {
    check_combination(alpha1, alpha2, t, n)?;
    if n < 2 {
        return Err(Error::invalid("mixed-power combination needs n >= 2"));
    }
    Ok(neg_w_quotient(&mixed_power_sextic(alpha1, alpha2, t), n - 2))
}

fn check_combination(alpha1: f64, alpha2: f64, t: f64, n: u32) -> Result<()> {
    FamilyParams::new(alpha1, n, t)?;
    FamilyParams::new(alpha2, n, t)?;
    Ok(())
}
