//! Serializable report documents. Every rational is an exact string and
//! every state index is one-based.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use zeon_core::degree2::{mat_embed, DegreeTwoVector};
use zeon_core::markov::{ErgodicityReport, Verdict};
use zeon_core::rational::{self, format_rational, Rational};
use zeon_core::zeon::MultiIndexBasis;
use zeon_core::Matrix;

pub const TOOL_NAME: &str = "zeon";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum VerdictDoc {
    Ergodic,
    NotErgodic,
    CriterionInapplicable,
}

impl From<Verdict> for VerdictDoc {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Ergodic => VerdictDoc::Ergodic,
            Verdict::NotErgodic => VerdictDoc::NotErgodic,
            Verdict::CriterionInapplicable => VerdictDoc::CriterionInapplicable,
        }
    }
}

impl VerdictDoc {
    pub fn exit_code(self) -> i32 {
        match self {
            VerdictDoc::Ergodic => 0,
            VerdictDoc::NotErgodic => 1,
            VerdictDoc::CriterionInapplicable => 2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDoc {
    pub states: Vec<usize>,
    pub closed: bool,
    pub period: Option<usize>,
    pub cyclic_classes: Vec<Vec<usize>>,
}

/// A degree-2 vector with its pair labels and embedded matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeTwoDoc {
    pub labels: Vec<String>,
    #[serde(with = "rational::serde_vec")]
    pub coords: Vec<Rational>,
    pub x_hat: Matrix,
}

impl DegreeTwoDoc {
    pub fn new(x: &DegreeTwoVector) -> Self {
        let labels = if x.n() >= 2 {
            let basis = MultiIndexBasis::new(x.n(), 2).expect("n >= 2");
            (0..basis.len()).map(|r| basis.label(r)).collect()
        } else {
            Vec::new()
        };
        Self {
            labels,
            coords: x.coords().to_vec(),
            x_hat: mat_embed(x).into_matrix(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportBody {
    pub verdict: VerdictDoc,
    #[serde(with = "rational::serde_str")]
    pub det_value: Rational,
    pub is_irreducible: bool,
    pub is_aperiodic: bool,
    pub quasi_positive_exponent: Option<u64>,
    pub has_positive_invariant: bool,
    pub classes: Vec<ClassDoc>,
    pub transient_states: Vec<usize>,
    pub witness: Option<DegreeTwoDoc>,
    #[serde(with = "rational::serde_opt_vec")]
    pub invariant_distribution: Option<Vec<Rational>>,
    pub limit_matrix: Option<Matrix>,
}

impl From<&ErgodicityReport> for ReportBody {
    fn from(r: &ErgodicityReport) -> Self {
        let plus_one = |v: &[usize]| v.iter().map(|s| s + 1).collect::<Vec<_>>();
        Self {
            verdict: r.criterion_verdict.into(),
            det_value: r.det_value.clone(),
            is_irreducible: r.is_irreducible,
            is_aperiodic: r.is_aperiodic,
            quasi_positive_exponent: r.quasi_positive_exponent,
            has_positive_invariant: r.has_positive_invariant,
            classes: r
                .structure
                .classes()
                .iter()
                .map(|c| ClassDoc {
                    states: plus_one(&c.states),
                    closed: c.closed,
                    period: c.period,
                    cyclic_classes: c.cyclic_classes.iter().map(|k| plus_one(k)).collect(),
                })
                .collect(),
            transient_states: plus_one(&r.structure.transient_states()),
            witness: r.witness.as_ref().map(DegreeTwoDoc::new),
            invariant_distribution: r.invariant_distribution.clone(),
            limit_matrix: r.limit_matrix.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ToolInfo {
    pub name: String,
    pub version: String,
}

impl Default for ToolInfo {
    fn default() -> Self {
        Self {
            name: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReportDocument {
    pub tool: ToolInfo,
    /// `sha256:` of the raw input bytes.
    pub input_digest: String,
    pub label: Option<String>,
    pub n: usize,
    pub elapsed_micros: u64,
    pub report: ReportBody,
}

impl AnalysisReportDocument {
    pub fn exit_code(&self) -> i32 {
        self.report.verdict.exit_code()
    }

    /// Fixed-width text rendering for `--pretty`.
    pub fn to_pretty(&self) -> String {
        let r = &self.report;
        let mut out = String::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let states = |v: &[usize]| {
            let s: Vec<String> = v.iter().map(usize::to_string).collect();
            format!("{{{}}}", s.join(","))
        };
        if let Some(label) = &self.label {
            let _ = writeln!(out, "input            {label}");
        }
        let _ = writeln!(out, "states           {}", self.n);
        let _ = writeln!(out, "det(I - Psi2(A)) {}", format_rational(&r.det_value));
        let verdict = serde_json::to_value(r.verdict).expect("enum serializes");
        let _ = writeln!(out, "verdict          {}", verdict.as_str().unwrap_or_default());
        let _ = writeln!(out, "irreducible      {}", yes_no(r.is_irreducible));
        let _ = writeln!(out, "aperiodic        {}", yes_no(r.is_aperiodic));
        let qp = r
            .quasi_positive_exponent
            .map_or_else(|| "no".to_string(), |m| format!("yes (A^{m} > 0)"));
        let _ = writeln!(out, "quasi-positive   {qp}");
        let _ = writeln!(out, "positive pi      {}", yes_no(r.has_positive_invariant));
        let _ = writeln!(out, "transient        {}", states(&r.transient_states));
        for c in &r.classes {
            let kind = if c.closed { "closed" } else { "open" };
            let period = c.period.map_or_else(|| "-".to_string(), |p| p.to_string());
            let cyclic: Vec<String> = c.cyclic_classes.iter().map(|k| states(k)).collect();
            let _ = writeln!(
                out,
                "class            {} {kind}, period {period}, cyclic {}",
                states(&c.states),
                cyclic.join(" ")
            );
        }
        if let Some(pi) = &r.invariant_distribution {
            let p: Vec<String> = pi.iter().map(format_rational).collect();
            let _ = writeln!(out, "pi               [{}]", p.join(", "));
        }
        if let Some(w) = &r.witness {
            let cells: Vec<String> = w
                .labels
                .iter()
                .zip(&w.coords)
                .map(|(l, v)| format!("{l}={}", format_rational(v)))
                .collect();
            let _ = writeln!(out, "witness          {}", cells.join(" "));
        }
        if let Some(limit) = &r.limit_matrix {
            let _ = writeln!(out, "lim A^n");
            out.push_str(&limit.to_string());
        }
        out
    }
}

pub fn digest(raw: &[u8]) -> String {
    format!("sha256:{}", hex::encode(Sha256::digest(raw)))
}

/// `Ψ_k` with subset labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ZeonPowerDocument {
    pub n: usize,
    pub k: usize,
    pub labels: Vec<String>,
    pub matrix: Matrix,
}

impl ZeonPowerDocument {
    pub fn to_pretty(&self) -> String {
        let width = self
            .matrix
            .entries()
            .iter()
            .map(|v| format_rational(v).len())
            .chain(self.labels.iter().map(String::len))
            .max()
            .unwrap_or(1);
        let mut out = String::new();
        let _ = write!(out, "{:width$}", "");
        for l in &self.labels {
            let _ = write!(out, "  {l:>width$}");
        }
        out.push('\n');
        for (label, row) in self.labels.iter().zip(self.matrix.row_iter()) {
            let _ = write!(out, "{label:>width$}");
            for v in row {
                let _ = write!(out, "  {:>width$}", format_rational(v));
            }
            out.push('\n');
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    Reducible,
    Periodic,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessDocument {
    pub kind: WitnessKind,
    pub delta: Option<usize>,
    pub witness: DegreeTwoDoc,
    /// `Ψ₂(A)·X† = X†` checked exactly.
    pub fixed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialFailure {
    pub trial: usize,
    pub check: String,
    pub x: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyDocument {
    pub identity: String,
    pub n: usize,
    pub trials: usize,
    pub seed: u64,
    pub checks: Vec<String>,
    pub passed: usize,
    pub failed: usize,
    pub failures: Vec<TrialFailure>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CounterexampleDoc {
    pub matrix: Matrix,
    #[serde(with = "rational::serde_str")]
    pub det_value: Rational,
    pub quasi_positive: bool,
    pub irreducible_aperiodic: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HarnessDocument {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub evaluated: usize,
    pub skipped_transient: usize,
    pub ergodic: usize,
    pub reducible: usize,
    pub periodic: usize,
    pub counterexamples: Vec<CounterexampleDoc>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use zeon_core::linalg::mat;
    use zeon_core::markov::{zeon_criterion, StochasticMatrix};

    fn document(rows: &[&[&str]]) -> AnalysisReportDocument {
        let a = StochasticMatrix::new(mat(rows)).unwrap();
        let report = zeon_criterion(&a);
        AnalysisReportDocument {
            tool: ToolInfo::default(),
            input_digest: digest(b"fixture"),
            label: Some("t".into()),
            n: a.n(),
            elapsed_micros: 12,
            report: ReportBody::from(&report),
        }
    }

    #[test]
    fn round_trips_through_json() {
        for rows in [
            &[&["1/2", "1/2"][..], &["1/2", "1/2"][..]][..],
            &[&["0", "1"][..], &["1", "0"][..]][..],
            &[
                &["1/4", "1/4", "1/2"][..],
                &["1/4", "1/4", "1/2"][..],
                &["0", "0", "1"][..],
            ][..],
        ] {
            let doc = document(rows);
            let json = serde_json::to_string(&doc).unwrap();
            let back: AnalysisReportDocument = serde_json::from_str(&json).unwrap();
            assert_eq!(back, doc);
        }
    }

    #[test]
    fn rationals_are_exact_strings() {
        let doc = document(&[&["1/4", "1/4", "1/2"], &["1/4", "1/4", "1/2"], &["0", "0", "1"]]);
        let v = serde_json::to_value(&doc).unwrap();
        assert_eq!(v["report"]["det_value"], "7/16");
        assert_eq!(v["report"]["verdict"], "criterion-inapplicable");
        assert_eq!(v["report"]["transient_states"], serde_json::json!([1, 2]));
        assert!(doc.to_pretty().contains("7/16"));
    }

    #[test]
    fn digest_is_sha256() {
        assert_eq!(
            digest(b""),
            "sha256:e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
        );
    }
}
