//! Matrix files: a JSON object `{"rows", "cols", "data"}` with row-major
//! `[re, im]` entries, or plain text with one row per line and `re+imj` tokens.

use std::fmt::Write as _;
use std::path::Path;

use lme_core::{c, Complex, ComplexMatrix};
use serde::{Deserialize, Serialize};

use crate::error::CliError;

/// Serialized form of a matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixPayload {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Vec<[f64; 2]>>,
}

impl MatrixPayload {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        MatrixPayload {
            rows: m.rows(),
            cols: m.cols(),
            data: m
                .row_vecs()
                .into_iter()
                .map(|row| row.into_iter().map(|z| [z.re, z.im]).collect())
                .collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix, String> {
        if self.data.len() != self.rows {
            return Err(format!("declared {} rows, found {}", self.rows, self.data.len()));
        }
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.data.iter().enumerate() {
            if row.len() != self.cols {
                return Err(format!("row {i} has {} entries, declared {}", row.len(), self.cols));
            }
            entries.extend(row.iter().map(|&[re, im]| c(re, im)));
        }
        ComplexMatrix::new(self.rows, self.cols, entries).map_err(|e| e.to_string())
    }
}

/// A parsed input file.
#[derive(Debug, Clone)]
pub struct MatrixFile {
    pub name: String,
    pub matrix: ComplexMatrix,
}

impl MatrixFile {
    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
        let matrix = parse_matrix(&text).map_err(|msg| CliError::Parse(path.display().to_string(), msg))?;
        let name = path
            .file_stem()
            .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
        Ok(MatrixFile { name, matrix })
    }
}

pub fn parse_matrix(text: &str) -> Result<ComplexMatrix, String> {
    if text.trim_start().starts_with('{') {
        let payload: MatrixPayload = serde_json::from_str(text).map_err(|e| e.to_string())?;
        payload.to_matrix()
    } else {
        parse_plain(text)
    }
}

fn parse_plain(text: &str) -> Result<ComplexMatrix, String> {
    let rows: Vec<Vec<Complex>> = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
        .map(|l| {
            l.split(|ch: char| ch.is_whitespace() || ch == ',')
                .filter(|t| !t.is_empty())
                .map(parse_complex)
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    if rows.is_empty() {
        return Err("no matrix rows".into());
    }
    ComplexMatrix::from_rows(&rows).map_err(|e| e.to_string())
}

/// `3`, `-1.5`, `2j`, `-j`, `1+2j`, `1e-3-4.5e2j`.
pub fn parse_complex(token: &str) -> Result<Complex, String> {
    let bad = || format!("cannot parse complex number {token:?}");
    let finite = |x: f64| if x.is_finite() { Ok(x) } else { Err(bad()) };
    let Some(body) = token.strip_suffix(['j', 'i']) else {
        return Ok(c(finite(token.parse::<f64>().map_err(|_| bad())?)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&i| matches!(bytes[i], b'+' | b'-') && !matches!(bytes[i - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let re = if re.is_empty() { 0.0 } else { finite(re.parse::<f64>().map_err(|_| bad())?)? };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        s => finite(s.parse::<f64>().map_err(|_| bad())?)?,
    };
    Ok(c(re, im))
}

fn number(x: f64) -> String {
    serde_json::to_string(&x).expect("finite entries")
}

/// Canonical JSON text of a matrix file, one matrix row per line.
pub fn write_matrix(m: &ComplexMatrix) -> String {
    let mut out = format!("{{\n  \"rows\": {},\n  \"cols\": {},\n  \"data\": [\n", m.rows(), m.cols());
    let rows = m.row_vecs();
    for (i, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row
            .iter()
            .map(|z| format!("[{}, {}]", number(z.re), number(z.im)))
            .collect();
        let sep = if i + 1 < rows.len() { "," } else { "" };
        let _ = writeln!(out, "    [{}]{sep}", cells.join(", "));
    }
    out.push_str("  ]\n}\n");
    out
}
