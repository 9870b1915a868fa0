//! Structured comparison of the closed forms against the exact oracle.

use serde_json::{json, Value};

use crate::closedform::{even_case_corrected, even_case_paper, odd_case};
use crate::derivkernel::DEFAULT_FLOAT_SAFETY_BOUND;
use crate::exactnum::PiRational;
use crate::oracle::{integral_exact, quadrature, QuadratureError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntryStatus {
    /// Closed form equals the oracle exactly.
    Agree,
    /// Closed form is exactly the negation of the oracle.
    SignMismatch,
    /// Anything else.
    ValueMismatch,
}

impl EntryStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            EntryStatus::Agree => "agree",
            EntryStatus::SignMismatch => "sign_mismatch",
            EntryStatus::ValueMismatch => "value_mismatch",
        }
    }

    fn classify(oracle: &PiRational, formula: &PiRational) -> Self {
        if formula == oracle {
            EntryStatus::Agree
        } else if &-formula == oracle {
            EntryStatus::SignMismatch
        } else {
            EntryStatus::ValueMismatch
        }
    }
}

/// Quadrature column of one report row; absent for orders beyond the
/// float-safety bound. A non-converged run is recorded, not fatal.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureColumn {
    pub value: f64,
    pub converged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ReportEntry {
    pub m: u32,
    pub n: u32,
    pub oracle: PiRational,
    /// The literal closed form: even case with the printed sign factor,
    /// odd case via the factorial sum.
    pub paper_formula: PiRational,
    /// The phase-restored even-case candidate; absent for odd m+n, where
    /// the two formulas coincide.
    pub corrected: Option<PiRational>,
    pub quadrature: Option<QuadratureColumn>,
    pub status: EntryStatus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StatusCounts {
    pub agree: usize,
    pub sign_mismatch: usize,
    pub value_mismatch: usize,
}

/// Every pair m >= n with m+n <= range_max, compared across all evaluators.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub range_max: u32,
    pub entries: Vec<ReportEntry>,
    pub summary: StatusCounts,
    pub version: String,
}

impl VerificationReport {
    /// Builds the report; `rel_tol` drives the quadrature column only.
    pub fn build(range_max: u32, rel_tol: f64) -> Self {
        let mut entries = Vec::new();
        let mut summary = StatusCounts::default();
        for s in 0..=range_max {
            for n in 0..=s / 2 {
                let m = s - n;
                let oracle = integral_exact(m, n);
                let (paper_formula, corrected) = if s % 2 == 0 {
                    (
                        even_case_paper(m, n).expect("parity checked"),
                        Some(even_case_corrected(m, n).expect("parity checked")),
                    )
                } else {
                    (odd_case(m, n).expect("parity checked"), None)
                };
                let quad = if m <= DEFAULT_FLOAT_SAFETY_BOUND && n <= DEFAULT_FLOAT_SAFETY_BOUND {
                    match quadrature(m, n, rel_tol) {
                        Ok(r) => Some(QuadratureColumn {
                            value: r.value,
                            converged: true,
                        }),
                        Err(QuadratureError::DidNotConverge { result }) => Some(QuadratureColumn {
                            value: result.value,
                            converged: false,
                        }),
                        Err(_) => None,
                    }
                } else {
                    None
                };
                let status = EntryStatus::classify(&oracle, &paper_formula);
                match status {
                    EntryStatus::Agree => summary.agree += 1,
                    EntryStatus::SignMismatch => summary.sign_mismatch += 1,
                    EntryStatus::ValueMismatch => summary.value_mismatch += 1,
                }
                entries.push(ReportEntry {
                    m,
                    n,
                    oracle,
                    paper_formula,
                    corrected,
                    quadrature: quad,
                    status,
                });
            }
        }
        Self {
            range_max,
            entries,
            summary,
            version: env!("CARGO_PKG_VERSION").to_string(),
        }
    }

    /// 0 when the odd case agrees everywhere and the even case is at worst
    /// sign-flipped; 1 as soon as any substantive (value) disagreement shows.
    pub fn exit_code(&self) -> i32 {
        let odd_all_agree = self
            .entries
            .iter()
            .filter(|e| (e.m + e.n) % 2 == 1)
            .all(|e| e.status == EntryStatus::Agree);
        if self.summary.value_mismatch > 0 || !odd_all_agree {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .entries
            .iter()
            .map(|e| {
                let mut obj = serde_json::Map::new();
                obj.insert("m".into(), json!(e.m));
                obj.insert("n".into(), json!(e.n));
                obj.insert("oracle".into(), e.oracle.to_json());
                obj.insert("paper_formula".into(), e.paper_formula.to_json());
                if let Some(c) = &e.corrected {
                    obj.insert("corrected".into(), c.to_json());
                }
                if let Some(q) = &e.quadrature {
                    obj.insert("quadrature".into(), json!(q.value));
                    obj.insert("quadrature_converged".into(), json!(q.converged));
                }
                obj.insert("status".into(), json!(e.status.as_str()));
                Value::Object(obj)
            })
            .collect();
        json!({
            "version": self.version,
            "range_max": self.range_max,
            "entries": entries,
            "summary": {
                "agree": self.summary.agree,
                "sign_mismatch": self.summary.sign_mismatch,
                "value_mismatch": self.summary.value_mismatch,
            },
        })
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!(
            "# Verification report (m+n <= {}, v{})\n\n",
            self.range_max, self.version
        ));
        out.push_str("| m | n | oracle | paper formula | corrected | quadrature | status |\n");
        out.push_str("|---|---|--------|---------------|-----------|------------|--------|\n");
        for e in &self.entries {
            let corrected = e
                .corrected
                .as_ref()
                .map_or_else(|| "-".to_string(), ToString::to_string);
            let quad = e.quadrature.as_ref().map_or_else(
                || "-".to_string(),
                |q| {
                    if q.converged {
                        format!("{:.14e}", q.value)
                    } else {
                        format!("{:.14e} (not converged)", q.value)
                    }
                },
            );
            out.push_str(&format!(
                "| {} | {} | {} | {} | {} | {} | {} |\n",
                e.m,
                e.n,
                e.oracle,
                e.paper_formula,
                corrected,
                quad,
                e.status.as_str()
            ));
        }
        out.push_str(&format!(
            "\nsummary: {} agree, {} sign_mismatch, {} value_mismatch\n",
            self.summary.agree, self.summary.sign_mismatch, self.summary.value_mismatch
        ));
        out
    }
}
