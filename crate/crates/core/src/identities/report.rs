use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

/// Named integer parameters of one check.
pub type Params = BTreeMap<String, i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    ExpectedDiscrepancy,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Float => "float",
        })
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::ExpectedDiscrepancy => "expected-discrepancy",
        })
    }
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub mode: Mode,
    #[serde(serialize_with = "ser_sig12")]
    pub residual: f64,
    pub verdict: Verdict,
    #[serde(serialize_with = "ser_sig12")]
    pub elapsed_ms: f64,
    /// Free-form context; carries both sides when they disagree.
    pub detail: String,
}

impl IdentityReport {
    pub(crate) fn new(id: &str, params: Params, mode: Mode, residual: f64, verdict: Verdict) -> Self {
        Self {
            id: id.to_string(),
            params,
            mode,
            residual,
            verdict,
            elapsed_ms: 0.0,
            detail: String::new(),
        }
    }

    /// Exact comparison: passes iff the residual is zero.
    pub(crate) fn exact(id: &str, params: Params, residual: f64) -> Self {
        let verdict = if residual == 0.0 { Verdict::Pass } else { Verdict::Fail };
        Self::new(id, params, Mode::Exact, residual, verdict)
    }

    /// Float comparison against an already-scaled tolerance.
    pub(crate) fn float(id: &str, params: Params, residual: f64, tol: f64) -> Self {
        let verdict = if residual.is_finite() && residual <= tol {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        Self::new(id, params, Mode::Float, residual, verdict)
    }

    pub(crate) fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = detail.into();
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub(crate) fn sort_key(&self) -> (&str, &Params, Mode) {
        (&self.id, &self.params, self.mode)
    }

    pub fn params_string(&self) -> String {
        self.params
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(";")
    }
}

/// Rounds to 12 significant digits.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.11e}").parse().unwrap_or(x)
}

fn ser_sig12<S: Serializer>(x: &f64, ser: S) -> Result<S::Ok, S::Error> {
    ser.serialize_f64(sig12(*x))
}

/// Counts by verdict.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub expected_discrepancy: usize,
}

impl Summary {
    pub fn of(reports: &[IdentityReport]) -> Self {
        let mut s = Self::default();
        for r in reports {
            match r.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::ExpectedDiscrepancy => s.expected_discrepancy += 1,
            }
        }
        s
    }
}

pub fn reports_to_json(reports: &[IdentityReport]) -> String {
    let mut s = serde_json::to_string_pretty(reports).expect("reports serialize");
    s.push('\n');
    s
}

/// CSV with columns `id,params,mode,residual,verdict,elapsed_ms,detail`;
/// params are `key=value` joined by `;`.
pub fn reports_to_csv(reports: &[IdentityReport]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["id", "params", "mode", "residual", "verdict", "elapsed_ms", "detail"])
        .expect("in-memory write");
    for r in reports {
        w.write_record([
            r.id.clone(),
            r.params_string(),
            r.mode.to_string(),
            sig12(r.residual).to_string(),
            r.verdict.to_string(),
            sig12(r.elapsed_ms).to_string(),
            r.detail.clone(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> IdentityReport {
        let mut p = Params::new();
        p.insert("a".into(), 3);
        p.insert("b".into(), 5);
        IdentityReport::float("prop6.eq7", p, 1.234567890123456e-12, 1e-8).with_detail("x, \"y\"")
    }

    #[test]
    fn json_fields() {
        let text = reports_to_json(&[sample()]);
        assert!(text.contains("\"residual\": 1.23456789012e-12"), "{text}");
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let r = &v[0];
        assert_eq!(r["id"], "prop6.eq7");
        assert_eq!(r["params"]["b"], 5);
        assert_eq!(r["mode"], "float");
        assert_eq!(r["verdict"], "pass");
    }

    #[test]
    fn csv_quotes_and_params() {
        let csv = reports_to_csv(&[sample()]);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap(), "id,params,mode,residual,verdict,elapsed_ms,detail");
        assert_eq!(
            lines.next().unwrap(),
            "prop6.eq7,a=3;b=5,float,0.00000000000123456789012,pass,0,\"x, \"\"y\"\"\""
        );
    }

    #[test]
    fn exact_verdicts_and_summary() {
        let pass = IdentityReport::exact("eq1", Params::new(), 0.0);
        let fail = IdentityReport::exact("eq1", Params::new(), 2.0);
        let nan = IdentityReport::float("x", Params::new(), f64::NAN, 1.0);
        assert!(pass.passed());
        assert!(!fail.passed() && !nan.passed());
        assert_eq!(
            Summary::of(&[pass, fail, nan]),
            Summary { pass: 1, fail: 2, expected_discrepancy: 0 }
        );
    }
}
