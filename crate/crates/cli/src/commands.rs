//! Command implementations. Each returns the text for stdout and the exit
//! code; `main` only does the printing.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use zeon_core::degree2;
use zeon_core::markov::{self, ChainStructure, HarnessReport, StochasticMatrix};
use zeon_core::rational::format_rational;
use zeon_core::zeon::{zeon_power, MultiIndexBasis};
use zeon_core::Error;

use crate::error::CliError;
use crate::identities::{self, Identity};
use crate::input::MatrixInput;
use crate::report::{
    digest, AnalysisReportDocument, CounterexampleDoc, DegreeTwoDoc, HarnessDocument, ReportBody, ToolInfo,
    TrialFailure, VerifyDocument, WitnessDocument, WitnessKind, ZeonPowerDocument,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub exit_code: i32,
}

fn json<T: Serialize>(value: &T, exit_code: i32) -> Output {
    let mut stdout = serde_json::to_string_pretty(value).expect("documents serialize");
    stdout.push('\n');
    Output { stdout, exit_code }
}

pub fn analyze_document(input: &MatrixInput) -> Result<AnalysisReportDocument, CliError> {
    let start = Instant::now();
    let a = StochasticMatrix::new(input.matrix.clone())?;
    let report = markov::zeon_criterion(&a);
    Ok(AnalysisReportDocument {
        tool: ToolInfo::default(),
        input_digest: digest(&input.raw),
        label: input.label.clone(),
        n: a.n(),
        elapsed_micros: u64::try_from(start.elapsed().as_micros()).unwrap_or(u64::MAX),
        report: ReportBody::from(&report),
    })
}

pub fn analyze(input: &MatrixInput, pretty: bool) -> Result<Output, CliError> {
    let doc = analyze_document(input)?;
    let code = doc.exit_code();
    if pretty {
        Ok(Output {
            stdout: doc.to_pretty(),
            exit_code: code,
        })
    } else {
        Ok(json(&doc, code))
    }
}

pub fn zeon_power_document(input: &MatrixInput, k: usize) -> Result<ZeonPowerDocument, CliError> {
    let matrix = zeon_power(&input.matrix, k)?;
    let basis = MultiIndexBasis::new(input.matrix.rows(), k)?;
    Ok(ZeonPowerDocument {
        n: basis.n(),
        k,
        labels: (0..basis.len()).map(|r| basis.label(r)).collect(),
        matrix,
    })
}

pub fn zeon_power_cmd(input: &MatrixInput, k: usize, pretty: bool) -> Result<Output, CliError> {
    let doc = zeon_power_document(input, k)?;
    if pretty {
        Ok(Output {
            stdout: doc.to_pretty(),
            exit_code: 0,
        })
    } else {
        Ok(json(&doc, 0))
    }
}

pub fn verify_document(
    input: &MatrixInput,
    identity: Identity,
    trials: usize,
    seed: u64,
) -> Result<VerifyDocument, CliError> {
    let a = &input.matrix;
    if !a.is_square() {
        return Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        }
        .into());
    }
    if a.rows() < 2 {
        return Err(Error::InvalidArgument("identity checks need at least 2 states".into()).into());
    }
    if identity == Identity::IntegrationByParts {
        StochasticMatrix::new(a.clone())?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();
    let mut failures = Vec::new();
    let mut passed = 0;
    for trial in 0..trials {
        let x = identities::random_vector(a.rows(), &mut rng);
        let results = identities::run_checks(identity, a, &x)?;
        if checks.is_empty() {
            checks = results.iter().map(|c| c.name.to_string()).collect();
        }
        let mut ok = true;
        for c in results.iter().filter(|c| !c.holds) {
            ok = false;
            failures.push(TrialFailure {
                trial: trial + 1,
                check: c.name.to_string(),
                x: x.coords().iter().map(format_rational).collect(),
            });
        }
        passed += usize::from(ok);
    }
    Ok(VerifyDocument {
        identity: identity.name().to_string(),
        n: a.rows(),
        trials,
        seed,
        checks,
        passed,
        failed: trials - passed,
        failures,
    })
}

pub fn verify(input: &MatrixInput, identity: &str, trials: usize, seed: u64) -> Result<Output, CliError> {
    let identity: Identity = identity.parse()?;
    let doc = verify_document(input, identity, trials, seed)?;
    let code = i32::from(doc.failed > 0);
    Ok(json(&doc, code))
}

pub fn witness_document(input: &MatrixInput, delta: Option<usize>) -> Result<WitnessDocument, CliError> {
    let a = StochasticMatrix::new(input.matrix.clone())?;
    let structure = ChainStructure::of(&a);
    if structure.has_transients() {
        let states = structure.transient_states().iter().map(|s| s + 1).collect();
        return Err(Error::TransientStates { states }.into());
    }
    let (kind, x) = if !structure.is_irreducible() {
        if delta.is_some() {
            return Err(Error::InvalidArgument("--delta applies only to irreducible periodic chains".into()).into());
        }
        (WitnessKind::Reducible, markov::witness_reducible(&structure)?)
    } else if !structure.is_aperiodic() {
        (
            WitnessKind::Periodic,
            markov::witness_periodic(&structure, delta.unwrap_or(1))?,
        )
    } else {
        return Err(Error::Ergodic.into());
    };
    let fixed = degree2::right_action(a.matrix(), &x)? == x;
    Ok(WitnessDocument {
        delta: (kind == WitnessKind::Periodic).then(|| delta.unwrap_or(1)),
        kind,
        witness: DegreeTwoDoc::new(&x),
        fixed,
    })
}

pub fn witness(input: &MatrixInput, delta: Option<usize>) -> Result<Output, CliError> {
    let doc = witness_document(input, delta)?;
    let code = i32::from(!doc.fixed);
    Ok(json(&doc, code))
}

pub fn harness_document(n: usize, samples: usize, seed: u64) -> Result<HarnessDocument, CliError> {
    let report: HarnessReport = markov::equivalence_harness(n, samples, seed)?;
    Ok(HarnessDocument {
        n,
        samples,
        seed,
        evaluated: report.evaluated,
        skipped_transient: report.skipped_transient,
        ergodic: report.ergodic,
        reducible: report.reducible,
        periodic: report.periodic,
        counterexamples: report
            .counterexamples
            .into_iter()
            .map(|c| CounterexampleDoc {
                matrix: c.matrix,
                det_value: c.det_value,
                quasi_positive: c.quasi_positive,
                irreducible_aperiodic: c.irreducible_aperiodic,
            })
            .collect(),
    })
}

pub fn harness(n: usize, samples: usize, seed: u64) -> Result<Output, CliError> {
    let doc = harness_document(n, samples, seed)?;
    let code = i32::from(!doc.counterexamples.is_empty());
    Ok(json(&doc, code))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::input::parse_matrix_str;

    fn input(text: &str) -> MatrixInput {
        let (matrix, label) = parse_matrix_str(text).unwrap();
        MatrixInput {
            matrix,
            label,
            raw: text.as_bytes().to_vec(),
        }
    }

    #[test]
    fn analyze_uniform_is_ergodic() {
        let out = analyze(&input("1/2,1/2\n1/2,1/2"), false).unwrap();
        assert_eq!(out.exit_code, 0);
        let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(v["report"]["invariant_distribution"], serde_json::json!(["1/2", "1/2"]));
    }

    #[test]
    fn analyze_reports_exact_row_sum() {
        let err = analyze(&input("1/2,1/3\n0,1"), false).unwrap_err();
        assert_eq!(err.to_string(), "row 1 sums to 5/6, expected 1");
        assert_eq!(err.exit_code(), 3);
    }

    #[test]
    fn zeon_power_k1_is_identity_map() {
        let doc = zeon_power_document(&input("1/3,2/3\n1,0"), 1).unwrap();
        assert_eq!(doc.labels, vec!["(1)", "(2)"]);
        assert_eq!(doc.matrix, input("1/3,2/3\n1,0").matrix);
        assert!(zeon_power_document(&input("1,0\n0,1"), 3).is_err());
    }

    #[test]
    fn witness_rejects_ergodic() {
        let err = witness(&input("1/2,1/2\n1/2,1/2"), None).unwrap_err();
        assert_eq!(err.to_string(), "chain is ergodic; no nonnegative fixed vector exists");
    }

    #[test]
    fn witness_flip_flop() {
        let doc = witness_document(&input("0,1\n1,0"), None).unwrap();
        assert_eq!(doc.kind, WitnessKind::Periodic);
        assert!(doc.fixed);
    }

    #[test]
    fn verify_unknown_identity() {
        let err = verify(&input("1,0\n0,1"), "eq9", 1, 0).unwrap_err();
        assert!(err.to_string().contains("integration-by-parts"));
    }

    #[test]
    fn harness_small() {
        let out = harness(3, 20, 1).unwrap();
        assert_eq!(out.exit_code, 0);
    }
}
