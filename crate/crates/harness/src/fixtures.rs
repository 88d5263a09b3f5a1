//! Golden JSON fixtures for the worked examples of the constructions.

use std::fs;
use std::path::{Path, PathBuf};

use hconv_core::convo::{
    blaschke_square_quartic, cayley_square_quartic, mixed_power_sextic, monomial_dilatation, opposite_power_cubic,
    strip_dilatation, RationalFunction,
};
use hconv_core::hmap::{f_a_alpha, family_analytic_sum, SlantParams};
use hconv_core::series::NamedSeries;
use serde_json::{json, Value};

use crate::json::{number, polynomial, rational, series, to_text};
use crate::HarnessError;

fn cayley_square_quartics() -> Value {
    let cases: Vec<Value> = [0.25, 0.5, 0.75]
        .into_iter()
        .map(|a| json!({ "a": number(a), "p": polynomial(&cayley_square_quartic(a)) }))
        .collect();
    json!({
        "description": "quartic p with omega~ = p/p* for f_{a,0} * half-plane map with omega = (a - z^2)/(1 - a z^2)",
        "cases": cases,
    })
}

fn cayley_square_reduction() -> Result<Value, HarnessError> {
    let a = 0.5;
    let p = cayley_square_quartic(a);
    let q = p.cohn_reduce()?;
    Ok(json!({
        "description": "first Cohn reduction q = (conj(p_n) p - p_0 p*)/z of the quartic",
        "a": number(a),
        "p": polynomial(&p),
        "q": polynomial(&q),
    }))
}

fn blaschke_square_fixture() -> Value {
    let a = 0.5;
    json!({
        "description": "quartic p with omega~ = p/p* for f_{a,0} * half-plane map with omega = -(a - z)^2/(1 - a z)^2",
        "a": number(a),
        "p": polynomial(&blaschke_square_quartic(a)),
    })
}

fn half_convolution() -> Result<Value, HarnessError> {
    let (a, order) = (0.5, 32);
    let h = NamedSeries::Geometric { alpha: 0.0 }.expand(order)?;
    let f = f_a_alpha(a, 0.0, order)?;
    Ok(json!({
        "description": "h_{a,0} * h = (h + (1 - a)/(1 + a) z h')/2 for h = z/(1 - z)",
        "a": number(a),
        "order": order,
        "h": series(&h),
        "convolution": series(&f.h().hadamard(&h)),
    }))
}

fn right_half_plane() -> Result<Value, HarnessError> {
    let f = f_a_alpha(0.0, 0.0, 16)?;
    Ok(json!({
        "description": "right half-plane map f_{0,0}: h = (z - z^2/2)/(1 - z)^2, g = -(z^2/2)/(1 - z)^2",
        "order": 16,
        "h": series(f.h()),
        "g": series(f.g()),
    }))
}

fn strip_dilatations() -> Value {
    let cases: Vec<Value> = [-0.5, 0.0, 0.5]
        .into_iter()
        .map(|a| {
            let w = strip_dilatation(&RationalFunction::cayley_power(a, 2, 0.0));
            json!({ "a": number(a), "omega": rational(&w) })
        })
        .collect();
    json!({
        "description": "dilatation of f_{0,0} * strip map with omega = (a - z^2)/(1 - a z^2); equals z^2",
        "cases": cases,
    })
}

fn slanted_lower_bound() -> Result<Value, HarnessError> {
    let (gamma, theta, n, a) = (0.0, 0.0, 3, 0.2);
    let w = monomial_dilatation(&SlantParams::new(gamma, theta, n, a)?);
    Ok(json!({
        "description": "dilatation of f_{a,0} * slanted half-plane map with omega = e^{i theta} z^n at a = (n - 2)/(n + 2)",
        "gamma": number(gamma),
        "theta": number(theta),
        "n": n,
        "a": number(a),
        "omega": rational(&w),
    }))
}

fn opposite_cubic() -> Value {
    let (t, alpha1, alpha2) = (0.5, 0.5, -0.5);
    json!({
        "description": "cubic q with omega~ = -w q/q*, w = z^{2^{n-1}}, for omega1 = -w, omega2 = w",
        "t": number(t),
        "alpha1": number(alpha1),
        "alpha2": number(alpha2),
        "q": polynomial(&opposite_power_cubic(alpha1, alpha2, t)),
    })
}

fn mixed_sextic() -> Value {
    let (t, alpha1, alpha2) = (0.5, -0.5, 0.5);
    json!({
        "description": "sextic p with omega~ = -w p/p*, w = z^{2^{n-2}}, for omega1 = -w, omega2 = w^2",
        "t": number(t),
        "alpha1": number(alpha1),
        "alpha2": number(alpha2),
        "p": polynomial(&mixed_power_sextic(alpha1, alpha2, t)),
    })
}

fn family_derivative() -> Result<Value, HarnessError> {
    let (alpha, n, order) = (0.5, 2, 32);
    let d = family_analytic_sum(alpha, n, order + 1)?.differentiate().truncate(order);
    Ok(json!({
        "description": "h' + g' of f_{alpha,n} = (1 + z^2)(1 + z^4 + alpha z^2)/(1 + z^8) for n = 2",
        "alpha": number(alpha),
        "n": n,
        "order": order,
        "derivative": series(&d),
    }))
}

/// Fixture file names and contents, sorted by name.
pub fn fixtures() -> Result<Vec<(&'static str, Value)>, HarnessError> {
    let mut out = vec![
        ("blaschke_square_quartic.json", blaschke_square_fixture()),
        ("cayley_square_quartic.json", cayley_square_quartics()),
        ("cayley_square_reduction.json", cayley_square_reduction()?),
        ("family_derivative_sum.json", family_derivative()?),
        ("half_convolution_identity.json", half_convolution()?),
        ("mixed_power_sextic.json", mixed_sextic()),
        ("opposite_power_cubic.json", opposite_cubic()),
        ("right_half_plane_map.json", right_half_plane()?),
        ("slanted_dilatation_lower_bound.json", slanted_lower_bound()?),
        ("strip_dilatation.json", strip_dilatations()),
    ];
    out.sort_by_key(|(name, _)| *name);
    Ok(out)
}

pub fn write_fixtures(dir: &Path) -> Result<Vec<PathBuf>, HarnessError> {
    fs::create_dir_all(dir).map_err(|e| HarnessError::io(dir, e))?;
    fixtures()?
        .into_iter()
        .map(|(name, value)| {
            let path = dir.join(name);
            fs::write(&path, to_text(&value)).map_err(|e| HarnessError::io(&path, e))?;
            Ok(path)
        })
        .collect()
}
