//! The relabeling action of Σ_n on standard-form quandle matrices and
//! everything built on it: isomorphism witnesses, automorphism groups,
//! orbit counts and canonical representatives.
//!
//! A permutation ρ sends `M` to the matrix `M'` with
//! `M'[ρ(i)][ρ(j)] = ρ(M[i][j])`. Two quandle matrices in standard form are
//! tables of isomorphic quandles exactly when some ρ relates them, and the
//! automorphism group is the stabilizer of `M`.

use std::collections::HashSet;
use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::group::PermGroup;
use crate::matrix::QuandleMatrix;
use crate::perm::{all_permutations, factorial, next_lex, Permutation};

pub fn permute(m: &QuandleMatrix, rho: &Permutation) -> Result<QuandleMatrix> {
    let n = m.order();
    if rho.degree() != n {
        return Err(Error::DegreeMismatch {
            left: n,
            right: rho.degree(),
        });
    }
    let mut entries = vec![0u8; n * n];
    for i in 0..n {
        for j in 0..n {
            entries[rho.at(i) * n + rho.at(j)] = rho.at(m.at(i, j)) as u8;
        }
    }
    Ok(QuandleMatrix::from_raw(n, entries))
}

/// Per-element data preserved by every isomorphism: cycle type of the
/// element's column, number of distinct values in its row, and the size of
/// its orbit.
type ElementKey = (Vec<usize>, usize, usize);

fn element_keys(m: &QuandleMatrix) -> Vec<ElementKey> {
    let n = m.order();
    let mut orbit_size = vec![0; n];
    for block in m.orbits() {
        for &x in &block {
            orbit_size[x - 1] = block.len();
        }
    }
    (0..n)
        .map(|x| {
            let mut row: Vec<usize> = (0..n).map(|j| m.at(x, j)).collect();
            row.sort_unstable();
            row.dedup();
            (m.column_perm(x).cycle_type(), row.len(), orbit_size[x])
        })
        .collect()
}

/// Depth-first search over bijections ρ with `permute(a, ρ) = b`, assigning
/// ρ(1), ρ(2), … in increasing order so witnesses arrive in lexicographic
/// order of image arrays. A partial assignment is abandoned as soon as a
/// pair `(i, j)` with `i`, `j` and `a[i][j]` all assigned disagrees.
fn search_isomorphisms<F>(a: &QuandleMatrix, b: &QuandleMatrix, mut visit: F)
where
    F: FnMut(&[u8]) -> ControlFlow<()>,
{
    let n = a.order();
    if b.order() != n {
        return;
    }
    let keys_a = element_keys(a);
    let keys_b = element_keys(b);
    let mut sorted_a = keys_a.clone();
    let mut sorted_b = keys_b.clone();
    sorted_a.sort();
    sorted_b.sort();
    if sorted_a != sorted_b || a.is_latin() != b.is_latin() {
        return;
    }
    let candidates: Vec<Vec<u8>> = keys_a
        .iter()
        .map(|ka| {
            (0..n as u8)
                .filter(|&y| keys_b[y as usize] == *ka)
                .collect()
        })
        .collect();

    struct Search<'m, F> {
        a: &'m QuandleMatrix,
        b: &'m QuandleMatrix,
        candidates: Vec<Vec<u8>>,
        rho: Vec<u8>,
        used: Vec<bool>,
        visit: F,
    }

    impl<F: FnMut(&[u8]) -> ControlFlow<()>> Search<'_, F> {
        fn consistent(&self, d: usize) -> bool {
            let (a, b, rho) = (self.a, self.b, &self.rho);
            for i in 0..=d {
                for j in 0..=d {
                    let k = a.at(i, j);
                    if k > d || (i != d && j != d && k != d) {
                        continue;
                    }
                    if b.at(rho[i] as usize, rho[j] as usize) != rho[k] as usize {
                        return false;
                    }
                }
            }
            true
        }

        fn descend(&mut self, d: usize) -> ControlFlow<()> {
            if d == self.rho.len() {
                return (self.visit)(&self.rho);
            }
            for idx in 0..self.candidates[d].len() {
                let y = self.candidates[d][idx];
                if self.used[y as usize] {
                    continue;
                }
                self.rho[d] = y;
                if !self.consistent(d) {
                    continue;
                }
                self.used[y as usize] = true;
                let flow = self.descend(d + 1);
                self.used[y as usize] = false;
                flow?;
            }
            ControlFlow::Continue(())
        }
    }

    let mut search = Search {
        a,
        b,
        candidates,
        rho: vec![0; n],
        used: vec![false; n],
        visit: &mut visit,
    };
    let _ = search.descend(0);
}

/// Lexicographically least ρ with `permute(a, ρ) = b`, if any.
pub fn are_isomorphic(a: &QuandleMatrix, b: &QuandleMatrix) -> Option<Permutation> {
    let mut found = None;
    search_isomorphisms(a, b, |rho| {
        found = Some(Permutation::from_zero_based(rho.to_vec()));
        ControlFlow::Break(())
    });
    found
}

/// Stabilizer of `m` under the relabeling action.
pub fn automorphism_group(m: &QuandleMatrix) -> PermGroup {
    let mut elements = Vec::new();
    search_isomorphisms(m, m, |rho| {
        elements.push(Permutation::from_zero_based(rho.to_vec()));
        ControlFlow::Continue(())
    });
    PermGroup::from_closed_sorted(m.order(), elements)
}

/// Number of standard-form matrices p-equivalent to `m`, as `n!/|Aut|`.
pub fn np_count(m: &QuandleMatrix) -> u64 {
    factorial(m.order()) / automorphism_group(m).order()
}

/// Same count by listing every `permute(m, ρ)` and counting distinct ones.
pub fn np_count_by_orbit(m: &QuandleMatrix) -> u64 {
    let orbit: HashSet<QuandleMatrix> = all_permutations(m.order())
        .map(|rho| permute(m, &rho).expect("degree matches"))
        .collect();
    orbit.len() as u64
}

/// Least matrix, in row-major order, among all `permute(m, ρ)`.
pub fn canonical_form(m: &QuandleMatrix) -> QuandleMatrix {
    let n = m.order();
    let mut best = m.raw().to_vec();
    let mut rho: Vec<u8> = (0..n as u8).collect();
    let mut inv = vec![0u8; n];
    while next_lex(&mut rho) {
        for (i, &x) in rho.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        let entry = |idx: usize| {
            let (r, c) = (inv[idx / n] as usize, inv[idx % n] as usize);
            rho[m.at(r, c)]
        };
        for idx in 0..n * n {
            let v = entry(idx);
            if v > best[idx] {
                break;
            }
            if v < best[idx] {
                best[idx] = v;
                for (rest, slot) in best.iter_mut().enumerate().skip(idx + 1) {
                    *slot = entry(rest);
                }
                break;
            }
        }
    }
    QuandleMatrix::from_raw(n, best)
}
