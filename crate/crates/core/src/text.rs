//! Text serialization: the comma-separated row-major `R` string, the
//! per-row `mR` records, free-form matrix text ingestion, and the rounded
//! display rendering.
//!
//! Every number is written as the shortest decimal string that parses back
//! to the same binary64 value (so `2`, never `2.0`). That makes string
//! equality on serialized matrices a sound identity test, which the result
//! store relies on for lookups.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::TextError;
use crate::matrix::{Backend, DenseMatrix};

/// A canonical comma-separated row-major serialization of a matrix.
///
/// Constructed only by canonicalizing parsed input or serializing a
/// matrix, so two `RString`s are equal exactly when the matrices they
/// describe are bit-identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RString(String);

impl RString {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn into_string(self) -> String {
        self.0
    }
}

impl core::fmt::Display for RString {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&self.0)
    }
}

/// Shortest decimal string that round-trips the binary64 value.
pub fn canonical_f64(value: f64) -> String {
    format!("{value}")
}

/// Serializes a matrix as one comma-separated row-major string.
pub fn to_r_string(a: &DenseMatrix) -> RString {
    let mut out = String::new();
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            if !(i == 0 && j == 0) {
                out.push(',');
            }
            out.push_str(&canonical_f64(a.get(i, j)));
        }
    }
    RString(out)
}

/// Parses an `R` string with declared dimensions.
pub fn from_r_string(s: &str, rows: usize, cols: usize) -> Result<DenseMatrix, TextError> {
    from_r_string_in(s, rows, cols, Backend::Flat)
}

/// Parses an `R` string into the given backend.
pub fn from_r_string_in(
    s: &str,
    rows: usize,
    cols: usize,
    backend: Backend,
) -> Result<DenseMatrix, TextError> {
    let elements = parse_comma_list(s)?;
    if elements.len() != rows * cols {
        return Err(TextError::LengthMismatch {
            expected: rows * cols,
            got: elements.len(),
        });
    }
    Ok(DenseMatrix::with_backend(rows, cols, elements, backend)?)
}

/// Serializes a matrix as `m` per-row comma-separated records.
pub fn to_mr_records(a: &DenseMatrix) -> Vec<String> {
    (0..a.rows())
        .map(|i| {
            let mut row = String::new();
            for j in 0..a.cols() {
                if j > 0 {
                    row.push(',');
                }
                row.push_str(&canonical_f64(a.get(i, j)));
            }
            row
        })
        .collect()
}

/// Reassembles a matrix from per-row records of `cols` elements each.
pub fn from_mr_records(records: &[String], cols: usize) -> Result<DenseMatrix, TextError> {
    if records.is_empty() {
        return Err(TextError::Empty);
    }
    let mut elements = Vec::with_capacity(records.len() * cols);
    for (line, record) in records.iter().enumerate() {
        let row = parse_comma_list(record)?;
        if row.len() != cols {
            return Err(TextError::RaggedRows {
                line: line + 1,
                expected: cols,
                got: row.len(),
            });
        }
        elements.extend_from_slice(&row);
    }
    Ok(DenseMatrix::new(records.len(), cols, elements)?)
}

fn parse_comma_list(s: &str) -> Result<Vec<f64>, TextError> {
    s.split(',').map(|tok| parse_element(tok.trim())).collect()
}

fn parse_element(token: &str) -> Result<f64, TextError> {
    token
        .parse::<f64>()
        .ok()
        .filter(|v| v.is_finite())
        .ok_or_else(|| TextError::ParseError {
            token: token.to_string(),
        })
}

/// Parses free-form matrix text: one matrix row per non-empty line,
/// elements split on commas when any comma is present, else on whitespace.
/// The column count is inferred from the first row.
pub fn parse_matrix_text(text: &str) -> Result<DenseMatrix, TextError> {
    let lines: Vec<&str> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .collect();
    if lines.is_empty() {
        return Err(TextError::Empty);
    }
    let use_commas = text.contains(',');
    let mut elements = Vec::new();
    let mut cols = 0usize;
    for (idx, line) in lines.iter().enumerate() {
        let tokens: Vec<&str> = if use_commas {
            line.split(',').map(str::trim).collect()
        } else {
            line.split_whitespace().collect()
        };
        if idx == 0 {
            cols = tokens.len();
        } else if tokens.len() != cols {
            return Err(TextError::RaggedRows {
                line: idx + 1,
                expected: cols,
                got: tokens.len(),
            });
        }
        for tok in tokens {
            elements.push(parse_element(tok)?);
        }
    }
    Ok(DenseMatrix::new(lines.len(), cols, elements)?)
}

/// Rounds half away from zero to `places` decimals.
pub(crate) fn round_half_away(value: f64, places: u32) -> f64 {
    let mut scale = 1.0_f64;
    for _ in 0..places {
        scale *= 10.0;
    }
    libm::round(value * scale) / scale
}

/// Renders every element rounded to `places` decimals, row-major.
///
/// Trailing zeros are dropped by the shortest-string formatting and a
/// rounded `-0` is normalized to `0`. Display only — stored and computed
/// values keep full precision.
pub fn display_round(a: &DenseMatrix, places: u32) -> Vec<String> {
    let mut out = Vec::with_capacity(a.rows() * a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let rounded = round_half_away(a.get(i, j), places);
            let rounded = if rounded == 0.0 { 0.0 } else { rounded };
            out.push(canonical_f64(rounded));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn parse_whitespace_and_comma_forms_agree() {
        let a = parse_matrix_text("1 2\n3 4").unwrap();
        let b = parse_matrix_text("1,2\n3,4").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]));
    }

    #[test]
    fn parse_commas_take_precedence_and_tolerate_spaces() {
        let a = parse_matrix_text("1, 2\n 3 ,4 ").unwrap();
        assert_eq!(a, DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]));
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_matrix_text("1 2\n3"),
            Err(TextError::RaggedRows {
                line: 2,
                expected: 2,
                got: 1
            })
        ));
        assert_eq!(parse_matrix_text("  \n \n"), Err(TextError::Empty));
        assert!(matches!(
            parse_matrix_text("1 x\n2 3"),
            Err(TextError::ParseError { .. })
        ));
    }

    #[test]
    fn r_string_round_trip_and_canonical_form() {
        let a = DenseMatrix::from_rows(&[&[5.0]]);
        let s = to_r_string(&a);
        assert_eq!(s.as_str(), "5");
        assert_eq!(from_r_string(s.as_str(), 1, 1).unwrap(), a);

        let b = DenseMatrix::from_rows(&[&[1.0, -2.5], &[0.1, 4.0]]);
        let s = to_r_string(&b);
        assert_eq!(s.as_str(), "1,-2.5,0.1,4");
        assert_eq!(from_r_string(s.as_str(), 2, 2).unwrap(), b);

        assert!(matches!(
            from_r_string("1,2,3", 2, 2),
            Err(TextError::LengthMismatch {
                expected: 4,
                got: 3
            })
        ));
    }

    #[test]
    fn mr_records_round_trip() {
        let a = DenseMatrix::from_rows(&[&[1.0, 2.0], &[3.0, 4.0]]);
        let records = to_mr_records(&a);
        assert_eq!(records, vec!["1,2".to_string(), "3,4".to_string()]);
        assert_eq!(from_mr_records(&records, 2).unwrap(), a);

        let single = DenseMatrix::from_rows(&[&[7.5, -1.0, 0.0]]);
        let records = to_mr_records(&single);
        assert_eq!(records.len(), 1);
        assert_eq!(records[0], to_r_string(&single).as_str());
    }

    #[test]
    fn display_round_rules() {
        let a = DenseMatrix::from_rows(&[&[-0.4166667, 2.0], &[-0.0004, 1974.0]]);
        let cells = display_round(&a, 3);
        assert_eq!(cells, vec!["-0.417", "2", "0", "1974"]);
    }

    #[test]
    fn display_round_zero_places() {
        let a = DenseMatrix::from_rows(&[&[1.5, -1.5, 0.4]]);
        assert_eq!(display_round(&a, 0), vec!["2", "-2", "0"]);
    }
}
