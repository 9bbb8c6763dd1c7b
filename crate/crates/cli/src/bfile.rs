//! OEIS b-file parsing and comparison against the exact engine.
//!
//! b-files are lines of the form "n a(n)" (whitespace separated), with
//! '#' comments. The `offset` maps b-file indices to u_1-based indices:
//! b-file index n corresponds to u_{n - offset + 1}.

use num_bigint::BigInt;

#[derive(Debug)]
pub enum BFileError {
    Malformed { line: usize, content: String },
    Io(std::io::Error),
}

impl std::fmt::Display for BFileError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            BFileError::Malformed { line, content } => {
                write!(f, "malformed b-file line {line}: {content:?}")
            }
            BFileError::Io(e) => write!(f, "cannot read b-file: {e}"),
        }
    }
}

pub fn parse_bfile(text: &str) -> Result<Vec<(i64, BigInt)>, BFileError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(n), Some(v)) = (parts.next(), parts.next()) else {
            return Err(BFileError::Malformed { line: i + 1, content: raw.to_string() });
        };
        let n: i64 = n.parse().map_err(|_| BFileError::Malformed {
            line: i + 1,
            content: raw.to_string(),
        })?;
        let v: BigInt = v.parse().map_err(|_| BFileError::Malformed {
            line: i + 1,
            content: raw.to_string(),
        })?;
        out.push((n, v));
    }
    Ok(out)
}

/// Comparison outcome over the overlapping index range.
#[derive(Debug)]
pub struct CompareResult {
    pub compared: usize,
    pub mismatches: Vec<(i64, BigInt, BigInt)>,
    pub skipped_out_of_range: usize,
}

/// Compare b-file entries to exact sequence values (1-indexed), honoring
/// the offset.
pub fn compare(
    entries: &[(i64, BigInt)],
    values: &[selfconv_core::Rat],
    offset: i64,
) -> CompareResult {
    let mut compared = 0;
    let mut mismatches = Vec::new();
    let mut skipped = 0;
    for (n, v) in entries {
        let idx = n - offset + 1;
        if idx < 1 || idx as usize > values.len() {
            skipped += 1;
            continue;
        }
        let u = &values[idx as usize - 1];
        compared += 1;
        if !u.is_integer() || u.numer() != v {
            mismatches.push((*n, v.clone(), u.numer().clone()));
        }
    }
    CompareResult {
        compared,
        mismatches,
        skipped_out_of_range: skipped,
    }
}
