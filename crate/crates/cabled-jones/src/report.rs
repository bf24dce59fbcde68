//! Run configuration and deterministic report emission.
//!
//! JSON output preserves insertion order and renders every rational as a
//! canonical `p/q` string, so identical configurations produce byte-identical
//! reports. CSV output flattens polynomial dumps to
//! `n,exponent_quarters,coeff` rows and degree tables to `n,dplus,dminus`.

use crate::bracket::EvalBudget;
use crate::laurent::{rat_string, QLaurent};
use crate::quasipoly::SlopeSet;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum OutputFormat {
    Json,
    Csv,
}

/// Batch-run configuration. Budgets come from the environment by default
/// (`CJP_MAX_CROSSINGS`, `CJP_MAX_STRANDS`) and may be overridden by flags.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub n_max: i64,
    pub pi_max: usize,
    pub budget: EvalBudget,
    pub format: OutputFormat,
    pub threads: Option<usize>,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            n_max: 8,
            pi_max: 12,
            budget: EvalBudget::from_env(),
            format: OutputFormat::Json,
            threads: None,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<(), crate::error::Error> {
        if self.n_max < 1 || self.pi_max < 1 {
            return Err(crate::error::Error::Parameter(
                "n_max and pi_max must be positive".into(),
            ));
        }
        if self.budget.max_state_crossings == 0 || self.budget.max_tl_strands == 0 {
            return Err(crate::error::Error::Parameter(
                "evaluator budgets must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// One `(n, J(n))` row of a polynomial dump.
pub fn polynomial_row_json(n: i64, j: &QLaurent) -> serde_json::Value {
    let degrees = j.degrees().ok();
    serde_json::json!({
        "n": n,
        "terms": j.to_json(),
        "dplus": degrees.as_ref().map(|(d, _)| rat_string(d)),
        "dminus": degrees.as_ref().map(|(_, d)| rat_string(d)),
        "display": j.to_string(),
    })
}

pub fn polynomial_rows_csv(rows: &[(i64, QLaurent)]) -> String {
    let mut out = String::from("n,exponent_quarters,coeff\n");
    for (n, j) in rows {
        for (e, c) in j.iter() {
            out.push_str(&format!("{n},{e},{c}\n"));
        }
    }
    out
}

pub fn slope_set_json(s: &SlopeSet) -> serde_json::Value {
    serde_json::Value::Array(
        s.iter()
            .map(|v| serde_json::Value::String(v.to_string()))
            .collect(),
    )
}

/// Pretty-print a JSON value with a trailing newline (stable key order is
/// guaranteed by insertion-ordered maps).
pub fn emit_json(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("JSON serialization");
    s.push('\n');
    s
}
