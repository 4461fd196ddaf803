//! Matrix ingestion from JSON or CSV.
//!
//! JSON: `{"label": "...", "rows": [["1/4", 0, "0.5"], ...]}` where each
//! literal is a string (`"p"`, `"p/q"`, or an exact decimal) or an integer.
//! CSV: one row per line, comma-separated literals. `#` starts a comment line.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};
use zeon_core::rational::{parse_rational, Rational};
use zeon_core::Matrix;

use crate::error::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Literal {
    Int(i64),
    Text(String),
}

impl Literal {
    fn text(&self) -> String {
        match self {
            Literal::Int(v) => v.to_string(),
            Literal::Text(s) => s.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub rows: Vec<Vec<Literal>>,
}

/// A parsed input: the exact matrix plus the raw bytes it came from.
#[derive(Debug, Clone)]
pub struct MatrixInput {
    pub matrix: Matrix,
    pub label: Option<String>,
    pub raw: Vec<u8>,
}

impl MatrixDocument {
    pub fn to_matrix(&self) -> Result<Matrix, CliError> {
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Literal::text).collect())
            .collect();
        literals_to_matrix(&cells)
    }
}

fn literals_to_matrix(cells: &[Vec<String>]) -> Result<Matrix, CliError> {
    if cells.is_empty() || cells.iter().all(Vec::is_empty) {
        return Err(CliError::EmptyInput);
    }
    let width = cells[0].len();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(cells.len());
    for (i, row) in cells.iter().enumerate() {
        if row.len() != width {
            return Err(CliError::RaggedRows {
                row: i + 1,
                expected: width,
                found: row.len(),
            });
        }
        let parsed = row
            .iter()
            .enumerate()
            .map(|(j, lit)| {
                parse_rational(lit).map_err(|_| CliError::MalformedLiteral {
                    row: i + 1,
                    col: j + 1,
                    literal: lit.clone(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(parsed);
    }
    Ok(Matrix::from_rows(rows).expect("rows checked rectangular"))
}

fn parse_csv(text: &str) -> Result<Matrix, CliError> {
    let cells: Vec<Vec<String>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split(',').map(|c| c.trim().to_string()).collect())
        .collect();
    literals_to_matrix(&cells)
}

/// Parses matrix text; JSON when it starts with `{`, CSV otherwise.
pub fn parse_matrix_str(text: &str) -> Result<(Matrix, Option<String>), CliError> {
    let trimmed = text.trim_start();
    if trimmed.is_empty() {
        return Err(CliError::EmptyInput);
    }
    if trimmed.starts_with('{') {
        let doc: MatrixDocument = serde_json::from_str(text).map_err(|e| CliError::Json(e.to_string()))?;
        Ok((doc.to_matrix()?, doc.label))
    } else {
        Ok((parse_csv(text)?, None))
    }
}

/// Reads a matrix from `path`, or from stdin when `path` is `-`.
pub fn parse_matrix(path: &Path) -> Result<MatrixInput, CliError> {
    let raw = if path.as_os_str() == "-" {
        let mut buf = Vec::new();
        std::io::stdin()
            .read_to_end(&mut buf)
            .map_err(|e| CliError::Io(format!("stdin: {e}")))?;
        buf
    } else {
        std::fs::read(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?
    };
    let text = std::str::from_utf8(&raw).map_err(|_| CliError::Io("input is not UTF-8".into()))?;
    let (matrix, label) = parse_matrix_str(text)?;
    Ok(MatrixInput { matrix, label, raw })
}
