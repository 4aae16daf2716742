//! The `tmat 1` text format and small parsers for command-line arguments.
//!
//! ```text
//! tmat 1
//! # comments and blank lines are ignored
//! 3 3
//! 0 -1 -1
//! -3 0 -2
//! -2 -1 0
//! ```

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::metric::DistanceTable;
use crate::semiring::{ExtMatrix, ExtScalar, Matrix, MaxPlus, Scalar, TropMatrix, TropVector};

pub const HEADER: &str = "tmat 1";

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Significant lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

/// Parses a matrix file. `-inf` entries are accepted only when `extended`.
pub fn parse_ext_matrix(text: &str, extended: bool) -> Result<ExtMatrix> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty file"))?;
    if header.split_whitespace().collect::<Vec<_>>() != ["tmat", "1"] {
        return Err(parse_err(
            hline,
            format!("expected header {HEADER:?}, found {header:?}"),
        ));
    }
    let last_line = hline;
    let (dline, dims) = lines
        .next()
        .ok_or_else(|| parse_err(last_line + 1, "missing dimensions line"))?;
    let dims: Vec<&str> = dims.split_whitespace().collect();
    let (rows, cols) = match dims.as_slice() {
        [r, c] => {
            let r: usize = r
                .parse()
                .map_err(|_| parse_err(dline, format!("bad row count {r:?}")))?;
            let c: usize = c
                .parse()
                .map_err(|_| parse_err(dline, format!("bad column count {c:?}")))?;
            (r, c)
        }
        _ => return Err(parse_err(dline, "dimensions line must be \"n m\"")),
    };
    if rows == 0 || cols == 0 {
        return Err(parse_err(dline, "dimensions must be positive"));
    }

    let mut data = Vec::with_capacity(rows * cols);
    let mut last = dline;
    for r in 0..rows {
        let (lno, line) = lines
            .next()
            .ok_or_else(|| parse_err(last + 1, format!("expected {rows} rows, found {r}")))?;
        last = lno;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.len() != cols {
            return Err(parse_err(
                lno,
                format!("expected {cols} entries, found {}", tokens.len()),
            ));
        }
        for tok in tokens {
            let value: ExtScalar = tok
                .parse()
                .map_err(|_| parse_err(lno, format!("invalid entry {tok:?}")))?;
            if value.is_bottom() && !extended {
                return Err(parse_err(lno, "-inf is only allowed for extended matrices"));
            }
            data.push(value);
        }
    }
    if let Some((lno, _)) = lines.next() {
        return Err(parse_err(
            lno,
            format!("unexpected content after {rows} rows"),
        ));
    }
    Matrix::new(rows, cols, data)
}

pub fn parse_matrix(text: &str) -> Result<TropMatrix> {
    let m = parse_ext_matrix(text, false)?;
    Ok(m.to_finite()
        .expect("finite entries enforced by the parser"))
}

/// A distance table in the same format; the diagonal must be zero.
pub fn parse_distance_table(text: &str) -> Result<DistanceTable> {
    let m = parse_matrix(text)?;
    if !m.is_square() {
        return Err(parse_err(
            1,
            format!(
                "distance table must be square, got {}x{}",
                m.rows(),
                m.cols()
            ),
        ));
    }
    let rows: Vec<Vec<Scalar>> = (0..m.rows()).map(|i| m.row_entries(i).to_vec()).collect();
    DistanceTable::from_rows(&rows)
}

/// Canonical form: header, dimensions, single-space separated exact entries.
pub fn serialize_matrix<T: MaxPlus>(m: &Matrix<T>) -> String {
    let mut out = format!("{HEADER}\n{} {}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row_entries(i).iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn serialize_distance_table(d: &DistanceTable) -> String {
    serialize_matrix(&d.as_matrix())
}

/// A point given as comma-separated scalars, e.g. `0,-1/2,1.5`.
pub fn parse_point(s: &str) -> Result<TropVector> {
    let entries = s
        .split(',')
        .map(|t| t.parse::<Scalar>())
        .collect::<Result<Vec<_>>>()
        .map_err(|e| parse_err(1, format!("bad point {s:?}: {e}")))?;
    TropVector::new(entries)
}

/// Matrix rows in the display format, one row per line, entries separated by
/// single spaces, optionally rendered as decimals.
pub fn format_rows(m: &TropMatrix, decimal: bool) -> String {
    let mut out = String::new();
    for i in 0..m.rows() {
        let row: Vec<String> = m
            .row_entries(i)
            .iter()
            .map(|x| format_scalar(x, decimal))
            .collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

pub fn format_scalar(x: &Scalar, decimal: bool) -> String {
    if decimal {
        x.to_decimal_string(6)
    } else {
        x.to_string()
    }
}

pub fn format_vector(v: &TropVector, decimal: bool) -> String {
    v.entries()
        .iter()
        .map(|x| format_scalar(x, decimal))
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn parses_mixed_notation() {
        let text = "tmat 1\n# EC\n3 3\n0 -1.5 -3/2\n\n-1.5 0 -1\n-3/2 -1 0\n";
        assert_eq!(parse_matrix(text).unwrap(), fixtures::ec());
    }

    #[test]
    fn canonical_round_trip() {
        let text = serialize_matrix(&fixtures::ec());
        assert_eq!(text, "tmat 1\n3 3\n0 -3/2 -3/2\n-3/2 0 -1\n-3/2 -1 0\n");
        assert_eq!(serialize_matrix(&parse_matrix(&text).unwrap()), text);
    }

    #[test]
    fn extended_entries() {
        let text = "tmat 1\n2 2\n-inf 5\n-2 -inf\n";
        let m = parse_ext_matrix(text, true).unwrap();
        assert!(m.get(0, 0).is_bottom());
        assert_eq!(serialize_matrix(&m), text);
        let err = parse_matrix(text).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("", 1),
            ("tmat 2\n1 1\n0\n", 1),
            ("tmat 1\n2 2\n0 0\n0\n", 4),
            ("tmat 1\n2 2\n0 0\n", 4),
            ("tmat 1\n\n1 x\n", 3),
            ("tmat 1\n1 1\nzero\n", 3),
            ("tmat 1\n1 1\n0\n0\n", 4),
            ("tmat 1\n0 3\n", 2),
        ];
        for (text, line) in cases {
            match parse_matrix(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
    }

    #[test]
    fn distance_tables() {
        let text = serialize_distance_table(&fixtures::cube_metric());
        assert_eq!(
            parse_distance_table(&text).unwrap(),
            fixtures::cube_metric()
        );
        assert!(parse_distance_table("tmat 1\n1 2\n0 0\n").is_err());
        assert!(matches!(
            parse_distance_table("tmat 1\n2 2\n1 0\n0 0\n"),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn points() {
        assert_eq!(
            parse_point("0,-1/2, 1.5").unwrap().entries()[2],
            Scalar::from_ratio(3, 2)
        );
        assert!(parse_point("0,,1").is_err());
        assert!(parse_point("").is_err());
    }
}
