//! Matrix files.
//!
//! Text form: a header line `n <int>` followed by `2n` rows of `2n`
//! whitespace-separated numbers. JSON form: `{"n": int, "rows": [[...]]}`.
//! [`parse_matrix`] picks the form from the first non-blank character.

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<f64>>,
}

impl MatrixJson {
    pub fn from_matrix(m: &DMatrix<f64>) -> Self {
        MatrixJson {
            n: m.nrows() / 2,
            rows: rows_of(m),
        }
    }

    pub fn to_matrix(&self) -> Result<DMatrix<f64>> {
        build(self.n, &self.rows)
    }
}

/// The rows of a matrix as nested vectors.
pub fn rows_of(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    (0..m.nrows())
        .map(|i| m.row(i).iter().copied().collect())
        .collect()
}

fn build(n: usize, rows: &[Vec<f64>]) -> Result<DMatrix<f64>> {
    if n == 0 {
        return Err(Error::Parse("n must be positive".into()));
    }
    let dim = 2 * n;
    if rows.len() != dim {
        return Err(Error::Parse(format!("expected {dim} rows, found {}", rows.len())));
    }
    for (i, r) in rows.iter().enumerate() {
        if r.len() != dim {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {dim}",
                i + 1,
                r.len()
            )));
        }
        if r.iter().any(|v| !v.is_finite()) {
            return Err(Error::Parse(format!("row {} has a non-finite entry", i + 1)));
        }
    }
    Ok(DMatrix::from_fn(dim, dim, |i, j| rows[i][j]))
}

pub fn parse_matrix(input: &str) -> Result<DMatrix<f64>> {
    let trimmed = input.trim_start();
    if trimmed.starts_with('{') {
        let j: MatrixJson =
            serde_json::from_str(trimmed).map_err(|e| Error::Parse(e.to_string()))?;
        return j.to_matrix();
    }
    let mut lines = trimmed
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?;
    let mut parts = header.split_whitespace();
    let n = match (parts.next(), parts.next(), parts.next()) {
        (Some("n"), Some(v), None) => v
            .parse::<usize>()
            .map_err(|_| Error::Parse(format!("bad dimension {v:?}")))?,
        _ => return Err(Error::Parse(format!("expected header \"n <int>\", found {header:?}"))),
    };
    let rows = lines
        .map(|l| {
            l.split_whitespace()
                .map(|t| {
                    t.parse::<f64>()
                        .map_err(|_| Error::Parse(format!("bad number {t:?}")))
                })
                .collect::<Result<Vec<f64>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    build(n, &rows)
}

/// Text form with round-trip float formatting.
pub fn format_matrix(m: &DMatrix<f64>) -> String {
    let mut out = format!("n {}\n", m.nrows() / 2);
    for i in 0..m.nrows() {
        let row: Vec<String> = m.row(i).iter().map(|v| format!("{v:?}")).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// A JSON list of points, `[[x_1, …, x_m], …]`.
pub fn parse_points(input: &str) -> Result<Vec<Vec<f64>>> {
    serde_json::from_str(input).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_roundtrip() {
        let m = DMatrix::from_fn(4, 4, |i, j| (i as f64) * 0.1 - j as f64 / 3.0);
        let s = format_matrix(&m);
        assert!(s.starts_with("n 2\n"));
        assert_eq!(parse_matrix(&s).unwrap(), m);
    }

    #[test]
    fn json_form() {
        let s = r#"{"n": 1, "rows": [[1, 2], [3, 4.5]]}"#;
        let m = parse_matrix(s).unwrap();
        assert_eq!(m[(1, 1)], 4.5);
        let back = serde_json::to_string(&MatrixJson::from_matrix(&m)).unwrap();
        assert_eq!(back, r#"{"n":1,"rows":[[1.0,2.0],[3.0,4.5]]}"#);
    }

    #[test]
    fn errors() {
        assert!(parse_matrix("").is_err());
        assert!(parse_matrix("n 1\n1 0\n").is_err());
        assert!(parse_matrix("n 1\n1 0 0\n0 1\n").is_err());
        assert!(parse_matrix("n 1\n1 x\n0 1\n").is_err());
        assert!(parse_matrix("dim 1\n1 0\n0 1\n").is_err());
        assert!(parse_matrix(r#"{"n": 1, "rows": [[1]]}"#).is_err());
    }
}
