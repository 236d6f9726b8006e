//! Checks the three conditions that make a matrix the table of a quandle:
//! distinct diagonal entries, columns that are permutations, and right
//! self-distributivity `α[α[i,j],k] = α[α[i,k],α[j,k]]`.

use std::fmt;

use crate::error::{Error, Result};
use crate::matrix::QuandleMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    Diagonal,
    Column,
    Distributivity,
}

/// A violated condition with 1-indexed witnesses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Failure {
    /// Rows `first < second` carry the same diagonal value.
    Diagonal {
        first: usize,
        second: usize,
        value: usize,
    },
    /// `value` appears twice in `column`, at rows `first < second`.
    Column {
        column: usize,
        first: usize,
        second: usize,
        value: usize,
    },
    /// Lexicographically first failing triple, in element labels.
    Distributivity { i: usize, j: usize, k: usize },
}

impl Failure {
    pub fn condition(&self) -> Condition {
        match self {
            Failure::Diagonal { .. } => Condition::Diagonal,
            Failure::Column { .. } => Condition::Column,
            Failure::Distributivity { .. } => Condition::Distributivity,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Failure::Diagonal {
                first,
                second,
                value,
            } => write!(
                f,
                "diagonal: rows {first} and {second} both have diagonal entry {value}"
            ),
            Failure::Column {
                column,
                first,
                second,
                value,
            } => write!(
                f,
                "column: column {column} repeats {value} at rows {first} and {second}"
            ),
            Failure::Distributivity { i, j, k } => write!(
                f,
                "distributivity: (i ▷ j) ▷ k != (i ▷ k) ▷ (j ▷ k) at (i, j, k) = ({i}, {j}, {k})"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    failures: Vec<Failure>,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn failures(&self) -> &[Failure] {
        &self.failures
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.failures.is_empty() {
            return f.write_str("valid");
        }
        for (k, failure) in self.failures.iter().enumerate() {
            if k > 0 {
                f.write_str("; ")?;
            }
            write!(f, "{failure}")?;
        }
        Ok(())
    }
}

/// Runs all three checks. Distributivity is checked on the standardized
/// matrix and only when the diagonal is a permutation; it stops at the first
/// failing triple.
pub fn verify_quandle(m: &QuandleMatrix) -> VerificationReport {
    let n = m.order();
    let mut failures = Vec::new();

    let mut diag_row = vec![usize::MAX; n];
    for i in 0..n {
        let v = m.at(i, i);
        if diag_row[v] != usize::MAX {
            failures.push(Failure::Diagonal {
                first: diag_row[v] + 1,
                second: i + 1,
                value: v + 1,
            });
            break;
        }
        diag_row[v] = i;
    }

    for j in 0..n {
        let mut row_of = vec![usize::MAX; n];
        for i in 0..n {
            let v = m.at(i, j);
            if row_of[v] != usize::MAX {
                failures.push(Failure::Column {
                    column: j + 1,
                    first: row_of[v] + 1,
                    second: i + 1,
                    value: v + 1,
                });
                break;
            }
            row_of[v] = i;
        }
    }

    if failures.is_empty() || failures[0].condition() != Condition::Diagonal {
        let std = standardize(m).expect("diagonal checked above");
        if let Some((i, j, k)) = first_distributivity_failure(&std) {
            failures.push(Failure::Distributivity {
                i: i + 1,
                j: j + 1,
                k: k + 1,
            });
        }
    }

    VerificationReport { failures }
}

pub(crate) fn first_distributivity_failure(m: &QuandleMatrix) -> Option<(usize, usize, usize)> {
    let n = m.order();
    for i in 0..n {
        for j in 0..n {
            let ij = m.at(i, j);
            for k in 0..n {
                if m.at(ij, k) != m.at(m.at(i, k), m.at(j, k)) {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

/// Reorders rows and columns together so the diagonal reads `1, 2, …, n`.
/// Entries are not relabeled; row `x` of the result is the row that had `x`
/// on its diagonal.
pub fn standardize(m: &QuandleMatrix) -> Result<QuandleMatrix> {
    let n = m.order();
    let mut row_of = vec![usize::MAX; n];
    for i in 0..n {
        let v = m.at(i, i);
        if row_of[v] != usize::MAX {
            return Err(Error::DiagonalNotPermutation { n });
        }
        row_of[v] = i;
    }
    Ok(QuandleMatrix::from_fn(n, |a, b| m.at(row_of[a], row_of[b])))
}

impl QuandleMatrix {
    /// Standardizes and verifies, returning the standard-form matrix or the
    /// failure report.
    pub fn validated(&self) -> Result<QuandleMatrix> {
        let report = verify_quandle(self);
        if !report.is_valid() {
            return Err(Error::NotAQuandle(report));
        }
        standardize(self)
    }
}
