use hconv_core::geochk::sweep::{SweepRow, Verdict};
use serde_json::{json, Map, Value};

use crate::config::Mode;
use crate::json::number;

/// Process exit status.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass = 0,
    InvalidConfig = 1,
    Fail = 2,
    Indeterminate = 3,
    Io = 4,
}

impl Status {
    pub fn code(self) -> u8 {
        self as u8
    }

    /// Verify runs fail on any failed row, then on any indeterminate row.
    /// Explore and plot runs assert nothing.
    pub fn of_rows(mode: Mode, rows: &[SweepRow]) -> Self {
        if mode != Mode::Verify {
            Status::Pass
        } else if rows.iter().any(|r| r.verdict == Verdict::Fail) {
            Status::Fail
        } else if rows.iter().any(|r| r.verdict == Verdict::Indeterminate) {
            Status::Indeterminate
        } else {
            Status::Pass
        }
    }
}

fn is_integer_param(name: &str) -> bool {
    matches!(name, "n" | "part")
}

pub fn params_json(params: &[(&'static str, f64)]) -> Value {
    let mut m = Map::new();
    for &(k, v) in params {
        let value = if is_integer_param(k) { json!(v as u32) } else { number(v) };
        m.insert(k.to_string(), value);
    }
    Value::Object(m)
}

pub fn row_json(id: usize, row: &SweepRow) -> Value {
    let opt = |x: Option<f64>| x.map_or(Value::Null, number);
    json!({
        "id": id,
        "case": row.case.as_str(),
        "params": params_json(&row.params),
        "verdict": row.verdict.as_str(),
        "metrics": {
            "max_omega": opt(row.metrics.max_omega),
            "min_hs": opt(row.metrics.min_hs),
            "roots": row.metrics.roots.iter().map(|&r| number(r)).collect::<Vec<_>>(),
        },
        "note": row.note,
    })
}

/// The `report.json` document: one object per row in sweep order.
pub fn report_json(rows: &[SweepRow]) -> Value {
    Value::Array(rows.iter().enumerate().map(|(i, r)| row_json(i, r)).collect())
}

fn short(name: &str, x: f64) -> String {
    let v = number(x);
    if is_integer_param(name) {
        (x as u32).to_string()
    } else if v.is_null() {
        x.to_string()
    } else {
        v.to_string()
    }
}

/// One console line per row.
pub fn row_line(id: usize, row: &SweepRow) -> String {
    let params: Vec<String> = row
        .params
        .iter()
        .map(|&(k, v)| format!("{k}={}", short(k, v)))
        .collect();
    format!("{} #{id} [{}] {} | {}", row.case, params.join(" "), row.verdict, row.note)
}

pub fn summary_line(rows: &[SweepRow]) -> String {
    let count = |v: Verdict| rows.iter().filter(|r| r.verdict == v).count();
    format!(
        "{} rows: {} pass, {} fail, {} indeterminate, {} exploratory",
        rows.len(),
        count(Verdict::Pass),
        count(Verdict::Fail),
        count(Verdict::Indeterminate),
        count(Verdict::Exploratory)
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use hconv_core::geochk::sweep::{CaseId, Metrics};

    fn row(verdict: Verdict) -> SweepRow {
        SweepRow {
            case: CaseId::T25,
            params: vec![("a", -0.7999999999999999)],
            verdict,
            metrics: Metrics {
                max_omega: Some(0.9801),
                min_hs: None,
                roots: vec![0.5, f64::NAN],
            },
            note: "omega-tilde == z^2".into(),
            curve: Vec::new(),
        }
    }

    #[test]
    fn status_precedence() {
        let p = row(Verdict::Pass);
        let f = row(Verdict::Fail);
        let i = row(Verdict::Indeterminate);
        let e = row(Verdict::Exploratory);
        assert_eq!(Status::of_rows(Mode::Verify, &[p.clone(), e.clone()]), Status::Pass);
        assert_eq!(Status::of_rows(Mode::Verify, &[p.clone(), i.clone()]), Status::Indeterminate);
        assert_eq!(Status::of_rows(Mode::Verify, &[i.clone(), f.clone()]), Status::Fail);
        assert_eq!(Status::of_rows(Mode::Explore, std::slice::from_ref(&f)), Status::Pass);
        assert_eq!(Status::of_rows(Mode::Plot, &[i]), Status::Pass);
        assert_eq!(Status::Io.code(), 4);
    }

    #[test]
    fn integer_params() {
        let p = params_json(&[("n", 3.0), ("theta", 0.0)]);
        assert_eq!(p.to_string(), r#"{"n":3,"theta":0.0}"#);
    }

    #[test]
    fn row_schema() {
        let text = row_json(3, &row(Verdict::Pass)).to_string();
        assert_eq!(
            text,
            r#"{"id":3,"case":"T2.5","params":{"a":-0.8},"verdict":"pass","metrics":{"max_omega":0.9801,"min_hs":null,"roots":[0.5,null]},"note":"omega-tilde == z^2"}"#
        );
        assert_eq!(row_line(3, &row(Verdict::Pass)), "T2.5 #3 [a=-0.8] pass | omega-tilde == z^2");
    }
}
