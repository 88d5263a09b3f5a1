//! Hand-factored Cohn chains `q_i = c_i p_i` for the quartic and sextic
//! dilatation numerators, used to cross-check [`ComplexPolynomial::cohn_reduce`].

use alloc::vec;
use alloc::vec::Vec;

use crate::convo::dilatation::{blaschke_square_quartic, cayley_square_quartic, mixed_power_sextic};
use crate::cpoly::ComplexPolynomial;
use crate::Result;

#[derive(Clone, Debug, PartialEq)]
pub struct ChainStep {
    pub factor: f64,
    pub poly: ComplexPolynomial,
}

/// `steps[i]` claims `cohn_reduce(p_{i-1}) = factor * poly`, with `p_0 = start`.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosedFormChain {
    pub start: ComplexPolynomial,
    pub steps: Vec<ChainStep>,
}

impl ClosedFormChain {
    /// Relative coefficient deviation of each step, `max|q - c p| / max|q|`.
    /// Stops with the reduction error if a step is not applicable.
    pub fn concordance(&self) -> Result<Vec<f64>> {
        let mut prev = &self.start;
        let mut out = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            let q = prev.cohn_reduce()?;
            let claimed = step.poly.scale_by(crate::C64::new(step.factor, 0.0));
            out.push(q.max_deviation(&claimed) / q.scale());
            prev = &step.poly;
        }
        Ok(out)
    }

    /// Concordance over the leading run of applicable steps.
    pub fn concordance_prefix(&self) -> (Vec<f64>, bool) {
        let mut prev = &self.start;
        let mut out = Vec::new();
        for step in &self.steps {
            let Ok(q) = prev.cohn_reduce() else {
                return (out, true);
            };
            let claimed = step.poly.scale_by(crate::C64::new(step.factor, 0.0));
            out.push(q.max_deviation(&claimed) / q.scale());
            prev = &step.poly;
        }
        (out, false)
    }

    pub fn max_deviation(&self) -> Result<f64> {
        Ok(self.concordance()?.into_iter().fold(0.0, f64::max))
    }
}

fn step(factor: f64, coeffs: &[f64]) -> ChainStep {
    ChainStep {
        factor,
        poly: ComplexPolynomial::from_real(coeffs),
    }
}

/// Chain for the quartic of the dilatation `(a - z²)/(1 - az²)`.
pub fn cayley_square_chain(a: f64) -> ClosedFormChain {
    let a2 = a * a;
    let a3 = a2 * a;
    let a4 = a2 * a2;
    ClosedFormChain {
        start: cayley_square_quartic(a),
        steps: vec![
            step(1.0 - a2, &[-a, 1.0 + a2 - 4.0 * a, 1.0 - a + a2, 1.0 + a2]),
            step(
                1.0,
                &[
                    1.0 - 3.0 * a + a2 - 3.0 * a3 + a4,
                    (1.0 - a2) * (1.0 - a2),
                    1.0 + a2 + a4,
                ],
            ),
            step(
                3.0 * a * (a - 1.0) * (a - 1.0) * (1.0 + a2),
                &[(1.0 + a) * (1.0 + a), 2.0 + a + 2.0 * a2],
            ),
        ],
    }
}

/// Chain for the quartic of the dilatation `-(a - z)²/(1 - az)²`.
pub fn blaschke_square_chain(a: f64) -> ClosedFormChain {
    let p: Vec<f64> = (0..=8).map(|k| libm::pow(a, k as f64)).collect();
    let m = |x: f64| x * x;
    ClosedFormChain {
        start: blaschke_square_quartic(a),
        steps: vec![
            step(
                1.0 - p[2],
                &[
                    -(a - 4.0 * p[2] + p[3]),
                    1.0 - 4.0 * a + 5.0 * p[2] - 4.0 * p[3] + p[4],
                    1.0 - 4.0 * a + 2.0 * p[2] - 4.0 * p[3] + p[4],
                    1.0 + p[2] + p[4],
                ],
            ),
            step(
                1.0,
                &[
                    1.0 - 3.0 * a - 2.0 * p[2] + 11.0 * p[3] - 9.0 * p[4] + 11.0 * p[5]
                        - 2.0 * p[6]
                        - 3.0 * p[7]
                        + p[8],
                    (1.0 - 4.0 * a + p[2]) * m(1.0 - a + p[2]) * (1.0 + 3.0 * a + p[2]),
                    1.0 + p[2] + 8.0 * p[3] - 15.0 * p[4] + 8.0 * p[5] + p[6] + p[8],
                ],
            ),
            step(
                3.0 * a * m(p[2] - 1.0) * (1.0 + p[2] + p[4]),
                &[
                    1.0 - 2.0 * a - 8.0 * p[2] + 8.0 * p[3] - 8.0 * p[4] - 2.0 * p[5] + p[6],
                    2.0 - a - 4.0 * p[2] + 16.0 * p[3] - 4.0 * p[4] - p[5] + 2.0 * p[6],
                ],
            ),
        ],
    }
}

/// Chain for the sextic of the mixed-power combination.
pub fn mixed_power_chain(alpha1: f64, alpha2: f64, t: f64) -> ClosedFormChain {
    let s = 1.0 - t;
    let d = alpha1 - alpha2;
    let e = alpha1 + 3.0 * alpha2 + d * t;
    ClosedFormChain {
        start: mixed_power_sextic(alpha1, alpha2, t),
        steps: vec![
            step(
                s,
                &[
                    -s,
                    1.0 + (1.0 + alpha1 - alpha2) * t,
                    -alpha2 * s,
                    alpha2 + alpha1 * t,
                    -s,
                    1.0 + t,
                ],
            ),
            step(t, &[4.0 + d * (1.0 + t), d * s, e, d * s, 4.0]),
            step(-d * (1.0 + t), &[d * s, e, d * s, 8.0 + d * (1.0 + t)]),
        ],
    }
}
