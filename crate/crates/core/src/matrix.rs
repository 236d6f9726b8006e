use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, ParseErrorKind, Result};
use crate::MAX_ORDER;

/// The operation table of a finite quandle, entry `(i, j)` holding `i ▷ j`.
///
/// All public accessors are 1-indexed. Internally entries are stored
/// row-major and zero-based, one byte each. Ordering compares the order
/// first and then the entries in row-major order, so for a fixed order it is
/// the lexicographic order used for canonical forms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuandleMatrix {
    n: usize,
    entries: Vec<u8>,
}

impl QuandleMatrix {
    /// Builds a matrix from 1-indexed rows. Only the shape and the entry
    /// range are checked; see [`verify_quandle`](crate::verify_quandle).
    pub fn from_rows<R: AsRef<[usize]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n == 0 {
            return Err(Error::ZeroOrder);
        }
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut entries = Vec::with_capacity(n * n);
        for (r, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::NotSquare { n });
            }
            for (c, &value) in row.iter().enumerate() {
                if value == 0 || value > n {
                    return Err(Error::EntryOutOfRange {
                        row: r + 1,
                        column: c + 1,
                        value,
                        n,
                    });
                }
                entries.push((value - 1) as u8);
            }
        }
        Ok(QuandleMatrix { n, entries })
    }

    /// Zero-based constructor; `f(i, j)` must return a value below `n`.
    pub(crate) fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> usize) -> Self {
        assert!(n <= MAX_ORDER);
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let v = f(i, j);
                debug_assert!(v < n);
                entries.push(v as u8);
            }
        }
        QuandleMatrix { n, entries }
    }

    pub(crate) fn from_raw(n: usize, entries: Vec<u8>) -> Self {
        debug_assert_eq!(entries.len(), n * n);
        QuandleMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub(crate) fn at(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.n + j] as usize
    }

    pub(crate) fn raw(&self) -> &[u8] {
        &self.entries
    }

    pub(crate) fn check_index(&self, index: usize) -> Result<usize> {
        if index == 0 || index > self.n {
            Err(Error::IndexOutOfRange { index, n: self.n })
        } else {
            Ok(index - 1)
        }
    }

    /// Entry in row `i`, column `j` (1-indexed). For a standard-form quandle
    /// matrix this is `i ▷ j`.
    pub fn apply(&self, i: usize, j: usize) -> Result<usize> {
        let (i, j) = (self.check_index(i)?, self.check_index(j)?);
        Ok(self.at(i, j) + 1)
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.entries
            .chunks(self.n)
            .map(|row| row.iter().map(|&x| x as usize + 1).collect())
            .collect()
    }

    pub fn diagonal(&self) -> Vec<usize> {
        (0..self.n).map(|i| self.at(i, i) + 1).collect()
    }

    pub fn is_standard_form(&self) -> bool {
        (0..self.n).all(|i| self.at(i, i) == i)
    }

    /// Row-major, comma separated: `trivial(2)` renders as `1,1,2,2`.
    pub fn to_machine_line(&self) -> String {
        let mut out = String::with_capacity(self.entries.len() * 3);
        for (k, &x) in self.entries.iter().enumerate() {
            if k > 0 {
                out.push(',');
            }
            out.push_str(&(x as usize + 1).to_string());
        }
        out
    }
}

/// Reads the matrix text format: `#` comment lines and blank lines are
/// skipped, the first data line fixes `n`, and exactly `n` data lines of `n`
/// integers must follow. Quandle conditions are not checked here.
pub fn parse_matrix(text: &str) -> Result<QuandleMatrix, ParseError> {
    let mut n = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut last_line = 0;

    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        last_line = line_no;

        let mut row = Vec::new();
        let mut cols = Vec::new();
        for (col, tok) in tokens(line) {
            let value: usize = tok.parse().map_err(|_| ParseError {
                line: line_no,
                column: col,
                kind: ParseErrorKind::BadToken(tok.to_string()),
            })?;
            row.push(value);
            cols.push(col);
        }

        let width = *n.get_or_insert(row.len());
        if width > MAX_ORDER {
            return Err(ParseError {
                line: line_no,
                column: 1,
                kind: ParseErrorKind::TooLarge(width),
            });
        }
        if row.len() != width {
            return Err(ParseError {
                line: line_no,
                column: cols.get(width).copied().unwrap_or(line.len() + 1),
                kind: ParseErrorKind::Ragged {
                    expected: width,
                    found: row.len(),
                },
            });
        }
        if rows.len() == width {
            return Err(ParseError {
                line: line_no,
                column: 1,
                kind: ParseErrorKind::RowCount {
                    expected: width,
                    found: width + 1,
                },
            });
        }
        if let Some(k) = row.iter().position(|&v| v == 0 || v > width) {
            return Err(ParseError {
                line: line_no,
                column: cols[k],
                kind: ParseErrorKind::OutOfRange {
                    value: row[k],
                    n: width,
                },
            });
        }
        rows.push(row);
    }

    let Some(n) = n else {
        return Err(ParseError {
            line: 1,
            column: 1,
            kind: ParseErrorKind::Empty,
        });
    };
    if rows.len() != n {
        return Err(ParseError {
            line: last_line + 1,
            column: 1,
            kind: ParseErrorKind::RowCount {
                expected: n,
                found: rows.len(),
            },
        });
    }
    Ok(QuandleMatrix::from_rows(&rows).expect("shape and range checked while parsing"))
}

/// Whitespace-separated tokens with their 1-based character column.
fn tokens(line: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = line.char_indices().peekable();
    std::iter::from_fn(move || {
        while rest.next_if(|(_, c)| c.is_whitespace()).is_some() {}
        let (start, _) = *rest.peek()?;
        let mut end = line.len();
        while let Some(&(pos, c)) = rest.peek() {
            if c.is_whitespace() {
                end = pos;
                break;
            }
            rest.next();
        }
        let column = line[..start].chars().count() + 1;
        Some((column, &line[start..end]))
    })
}

impl FromStr for QuandleMatrix {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_matrix(s)
    }
}

/// Writes the text format: one row per line, entries separated by single
/// spaces.
impl fmt::Display for QuandleMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.entries.chunks(self.n) {
            for (k, &x) in row.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{}", x as usize + 1)?;
            }
            f.write_str("\n")?;
        }
        Ok(())
    }
}

impl fmt::Debug for QuandleMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuandleMatrix{:?}", self.rows())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_trivial_two() {
        let m = parse_matrix("1 1\n2 2").unwrap();
        assert_eq!(m.rows(), vec![vec![1, 1], vec![2, 2]]);
    }

    #[test]
    fn parses_dihedral_three_with_comments() {
        let m = parse_matrix("# dihedral\n1 3 2\n3 2 1\n\n2 1 3\n").unwrap();
        assert_eq!(m.rows(), vec![vec![1, 3, 2], vec![3, 2, 1], vec![2, 1, 3]]);
    }

    #[test]
    fn ragged_row_is_located() {
        let err = parse_matrix("1 2\n2").unwrap_err();
        assert_eq!(err.line, 2);
        assert_eq!(
            err.kind,
            ParseErrorKind::Ragged {
                expected: 2,
                found: 1
            }
        );
    }

    #[test]
    fn other_parse_errors() {
        let err = parse_matrix("1 x\n2 2").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
        assert!(matches!(err.kind, ParseErrorKind::BadToken(_)));

        let err = parse_matrix("1 3\n2 2").unwrap_err();
        assert_eq!((err.line, err.column), (1, 3));
        assert_eq!(err.kind, ParseErrorKind::OutOfRange { value: 3, n: 2 });

        let err = parse_matrix("1 1\n2 2\n1 1").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::RowCount { .. }));

        let err = parse_matrix("1 1").unwrap_err();
        assert!(matches!(
            err.kind,
            ParseErrorKind::RowCount {
                expected: 2,
                found: 1
            }
        ));

        let err = parse_matrix("# only a comment\n").unwrap_err();
        assert_eq!(err.kind, ParseErrorKind::Empty);

        let err = parse_matrix("1 -1\n2 2").unwrap_err();
        assert!(matches!(err.kind, ParseErrorKind::BadToken(_)));
    }

    #[test]
    fn display_and_machine_line() {
        let m = parse_matrix("1 1\n2 2").unwrap();
        assert_eq!(m.to_string(), "1 1\n2 2\n");
        assert_eq!(m.to_machine_line(), "1,1,2,2");
        assert_eq!(parse_matrix(&m.to_string()).unwrap(), m);
    }

    #[test]
    fn apply_checks_range() {
        let m = parse_matrix("1 3 2\n3 2 1\n2 1 3").unwrap();
        assert_eq!(m.apply(1, 2).unwrap(), 3);
        assert!(m.apply(0, 1).is_err());
        assert!(m.apply(1, 4).is_err());
    }

    #[test]
    fn from_rows_checks_shape() {
        assert_eq!(
            QuandleMatrix::from_rows::<Vec<usize>>(&[]).unwrap_err(),
            Error::ZeroOrder
        );
        assert!(QuandleMatrix::from_rows(&[vec![1, 1], vec![2]]).is_err());
        assert!(QuandleMatrix::from_rows(&[vec![1, 1], vec![2, 3]]).is_err());
    }
}
