use crate::error::{Error, Result};
use crate::matrix::QuandleMatrix;

/// Exact determinant of the matrix of 1-indexed entries, by Bareiss
/// fraction-free elimination. Every division is exact, so all intermediates
/// are minors of the input.
pub fn determinant(m: &QuandleMatrix) -> Result<i128> {
    let n = m.order();
    let overflow = || Error::DeterminantOverflow(n);
    let mut a: Vec<Vec<i128>> = m
        .rows()
        .into_iter()
        .map(|row| row.into_iter().map(|x| x as i128).collect())
        .collect();
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(0),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let lhs = a[i][j].checked_mul(a[k][k]).ok_or_else(overflow)?;
                let rhs = a[i][k].checked_mul(a[k][j]).ok_or_else(overflow)?;
                a[i][j] = lhs.checked_sub(rhs).ok_or_else(overflow)? / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Ok(sign * a[n - 1][n - 1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;

    /// Leibniz expansion over all permutations.
    fn leibniz(m: &QuandleMatrix) -> i128 {
        let n = m.order();
        let rows = m.rows();
        all_permutations(n)
            .map(|p| {
                let sign = if p.cycle_type().iter().filter(|&&l| l % 2 == 0).count() % 2 == 0 {
                    1
                } else {
                    -1
                };
                let images = p.images();
                sign * (0..n)
                    .map(|i| rows[i][images[i] - 1] as i128)
                    .product::<i128>()
            })
            .sum()
    }

    #[test]
    fn worked_pair() {
        let a = QuandleMatrix::from_rows(&[
            [1, 4, 5, 2, 3],
            [3, 2, 1, 5, 4],
            [4, 5, 3, 1, 2],
            [5, 3, 2, 4, 1],
            [2, 1, 4, 3, 5],
        ])
        .unwrap();
        let b = QuandleMatrix::from_rows(&[
            [1, 5, 4, 3, 2],
            [3, 2, 1, 5, 4],
            [5, 4, 3, 2, 1],
            [2, 1, 5, 4, 3],
            [4, 3, 2, 1, 5],
        ])
        .unwrap();
        assert_eq!(leibniz(&a), -825);
        assert_eq!(leibniz(&b), -1875);
        assert_eq!(determinant(&a).unwrap(), -825);
        assert_eq!(determinant(&b).unwrap(), -1875);
    }

    #[test]
    fn small_cases() {
        assert_eq!(
            determinant(&QuandleMatrix::from_rows(&[[1]]).unwrap()).unwrap(),
            1
        );
        let t3 = QuandleMatrix::from_rows(&[[1, 1, 1], [2, 2, 2], [3, 3, 3]]).unwrap();
        assert_eq!(determinant(&t3).unwrap(), 0);
        // Needs a pivot swap.
        let m = QuandleMatrix::from_rows(&[[1, 1, 2], [1, 1, 1], [2, 3, 3]]).unwrap();
        assert_eq!(determinant(&m).unwrap(), leibniz(&m));
    }

    #[test]
    fn agrees_with_leibniz_on_dihedral_quandles() {
        for n in 1..=7 {
            let d = crate::constructors::dihedral(n).unwrap();
            assert_eq!(determinant(&d).unwrap(), leibniz(&d), "n = {n}");
        }
    }
}
