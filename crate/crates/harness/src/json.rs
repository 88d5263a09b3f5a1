//! JSON forms of numbers, series, polynomials and rational functions.
//!
//! Floats are rounded to 15 significant digits and then written in shortest
//! round-trip form. Non-finite values become `null`. Complex numbers are
//! `[re, im]` pairs and coefficient lists are ascending.

use hconv_core::convo::RationalFunction;
use hconv_core::cpoly::ComplexPolynomial;
use hconv_core::series::PowerSeries;
use hconv_core::C64;
use serde_json::{json, Number, Value};

use crate::HarnessError;

/// `x` rounded to 15 significant digits, `None` when not finite.
pub fn round15(x: f64) -> Option<f64> {
    if !x.is_finite() {
        return None;
    }
    let r: f64 = format!("{x:.14e}").parse().ok()?;
    Some(if r == 0.0 { 0.0 } else { r })
}

pub fn number(x: f64) -> Value {
    round15(x)
        .and_then(Number::from_f64)
        .map_or(Value::Null, Value::Number)
}

pub fn complex(z: C64) -> Value {
    json!([number(z.re), number(z.im)])
}

pub fn coeffs(c: &[C64]) -> Value {
    Value::Array(c.iter().map(|&z| complex(z)).collect())
}

pub fn series(s: &PowerSeries) -> Value {
    coeffs(s.coeffs())
}

pub fn polynomial(p: &ComplexPolynomial) -> Value {
    coeffs(p.coeffs())
}

pub fn rational(r: &RationalFunction) -> Value {
    json!({ "num": polynomial(r.num()), "den": polynomial(r.den()) })
}

fn bad(msg: &str) -> HarnessError {
    HarnessError::Json(msg.to_string())
}

pub fn complex_from(v: &Value) -> Result<C64, HarnessError> {
    match v.as_array().map(Vec::as_slice) {
        Some([re, im]) => match (re.as_f64(), im.as_f64()) {
            (Some(re), Some(im)) => Ok(C64::new(re, im)),
            _ => Err(bad("complex parts must be numbers")),
        },
        _ => Err(bad("complex numbers are [re, im] pairs")),
    }
}

pub fn coeffs_from(v: &Value) -> Result<Vec<C64>, HarnessError> {
    v.as_array()
        .ok_or_else(|| bad("coefficients must be an array"))?
        .iter()
        .map(complex_from)
        .collect()
}

pub fn series_from(v: &Value) -> Result<PowerSeries, HarnessError> {
    let c = coeffs_from(v)?;
    if c.is_empty() {
        return Err(bad("a series needs at least one coefficient"));
    }
    Ok(PowerSeries::from_coeffs(c))
}

pub fn polynomial_from(v: &Value) -> Result<ComplexPolynomial, HarnessError> {
    Ok(ComplexPolynomial::new(coeffs_from(v)?))
}

pub fn rational_from(v: &Value) -> Result<RationalFunction, HarnessError> {
    let num = polynomial_from(v.get("num").ok_or_else(|| bad("missing num"))?)?;
    let den = polynomial_from(v.get("den").ok_or_else(|| bad("missing den"))?)?;
    RationalFunction::new(num, den).map_err(|e| HarnessError::Json(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}
