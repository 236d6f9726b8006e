use crate::error::Result;
use crate::group::PermGroup;
use crate::matrix::QuandleMatrix;
use crate::perm::Permutation;

impl QuandleMatrix {
    /// The right translation `f_j : i ↦ i ▷ j`, read off column `j`.
    pub fn column_permutation(&self, j: usize) -> Result<Permutation> {
        let j = self.check_index(j)?;
        Ok(self.column_perm(j))
    }

    pub(crate) fn column_perm(&self, j: usize) -> Permutation {
        Permutation::from_zero_based((0..self.order()).map(|i| self.at(i, j) as u8).collect())
    }

    /// Matrix of the dual operation `a ◁ b = f_b⁻¹(a)`.
    pub fn dual(&self) -> QuandleMatrix {
        let n = self.order();
        let mut entries = vec![0u8; n * n];
        for j in 0..n {
            for i in 0..n {
                entries[self.at(i, j) * n + j] = i as u8;
            }
        }
        QuandleMatrix::from_raw(n, entries)
    }

    /// Every row is a permutation too, i.e. the matrix is a latin square.
    pub fn is_latin(&self) -> bool {
        let n = self.order();
        let mut seen = vec![usize::MAX; n];
        (0..n).all(|i| {
            (0..n).all(|j| {
                let v = self.at(i, j);
                let fresh = seen[v] != i;
                seen[v] = i;
                fresh
            })
        })
    }

    /// Group generated by the column permutations and their inverses.
    pub fn inner_group(&self) -> PermGroup {
        let n = self.order();
        let gens = (0..n).flat_map(|j| {
            let f = self.column_perm(j);
            let g = f.inverse();
            [f, g]
        });
        PermGroup::generate(n, gens).expect("columns share the matrix order")
    }

    /// Orbits of the inner group, 1-indexed, each block sorted and blocks
    /// ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for j in 0..n {
            for i in 0..n {
                let (a, b) = (find(&mut parent, i), find(&mut parent, self.at(i, j)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of = vec![usize::MAX; n];
        for x in 0..n {
            let root = find(&mut parent, x);
            if block_of[root] == usize::MAX {
                block_of[root] = blocks.len();
                blocks.push(Vec::new());
            }
            blocks[block_of[root]].push(x + 1);
        }
        blocks
    }

    pub fn is_connected(&self) -> bool {
        self.orbits().len() == 1
    }

    pub fn trace(&self) -> u64 {
        (0..self.order()).map(|i| self.at(i, i) as u64 + 1).sum()
    }
}
