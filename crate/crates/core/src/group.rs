//! Concrete permutation groups and identification of the small groups that
//! occur as automorphism groups of quandles of order at most five.

use std::collections::{BTreeMap, HashSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// A finite group of permutations of `{1..degree}`, elements sorted by image
/// array.
#[derive(Clone, PartialEq, Eq)]
pub struct PermGroup {
    degree: usize,
    elements: Vec<Permutation>,
    generators: Vec<Permutation>,
}

impl PermGroup {
    /// Closure of `generators` under composition, by breadth-first search
    /// from the identity.
    pub fn generate(
        degree: usize,
        generators: impl IntoIterator<Item = Permutation>,
    ) -> Result<Self> {
        let generators: Vec<Permutation> = generators.into_iter().collect();
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let elements = closure(degree, &generators);
        Ok(PermGroup {
            degree,
            elements,
            generators,
        })
    }

    /// Wraps an explicit element list, checking that it is a group.
    pub fn from_elements(degree: usize, elements: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = elements.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        let mut elements = elements;
        elements.sort_unstable();
        elements.dedup();
        let set: HashSet<&Permutation> = elements.iter().collect();
        let closed = set.contains(&Permutation::identity(degree))
            && elements.iter().all(|a| set.contains(&a.inverse()))
            && elements.iter().all(|a| {
                elements
                    .iter()
                    .all(|b| set.contains(&a.compose_unchecked(b)))
            });
        if !closed {
            return Err(Error::GroupNotClosed);
        }
        let generators = greedy_generators(degree, &elements);
        Ok(PermGroup {
            degree,
            elements,
            generators,
        })
    }

    /// For element lists already known to be closed (stabilizers), sorted.
    pub(crate) fn from_closed_sorted(degree: usize, elements: Vec<Permutation>) -> Self {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        let generators = greedy_generators(degree, &elements);
        PermGroup {
            degree,
            elements,
            generators,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> u64 {
        self.elements.len() as u64
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().enumerate().all(|(k, a)| {
            self.generators[k + 1..]
                .iter()
                .all(|b| a.compose_unchecked(b) == b.compose_unchecked(a))
        })
    }

    pub fn center_order(&self) -> u64 {
        self.elements
            .iter()
            .filter(|z| {
                self.generators
                    .iter()
                    .all(|g| z.compose_unchecked(g) == g.compose_unchecked(z))
            })
            .count() as u64
    }

    pub fn fingerprint(&self) -> Fingerprint {
        let mut histogram = BTreeMap::new();
        for e in &self.elements {
            *histogram.entry(e.order()).or_insert(0) += 1;
        }
        Fingerprint {
            order: self.order(),
            order_histogram: histogram,
            abelian: self.is_abelian(),
            center_order: self.center_order(),
        }
    }

    pub fn identify(&self) -> GroupId {
        identify_group(self)
    }
}

impl fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .finish()
    }
}

fn closure(degree: usize, generators: &[Permutation]) -> Vec<Permutation> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(id.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in generators {
            let y = g.compose_unchecked(&x);
            if !seen.contains(&y) {
                seen.insert(y.clone());
                queue.push_back(y);
            }
        }
    }
    let mut elements: Vec<Permutation> = seen.into_iter().collect();
    elements.sort_unstable();
    elements
}

/// Walks the sorted element list, keeping each element not yet generated.
fn greedy_generators(degree: usize, elements: &[Permutation]) -> Vec<Permutation> {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut span: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
    for e in elements {
        if span.contains(e) {
            continue;
        }
        gens.push(e.clone());
        span = closure(degree, &gens).into_iter().collect();
        if span.len() == elements.len() {
            break;
        }
    }
    gens
}

/// Isomorphism invariants used to name a group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: u64,
    /// element order -> number of elements of that order
    pub order_histogram: BTreeMap<u64, u64>,
    pub abelian: bool,
    pub center_order: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    Trivial,
    Cyclic(u64),
    /// Z_2 ⊕ Z_2
    Klein4,
    /// Z_3 ⊕ Z_2, the cyclic group of order 6 written as in the tables.
    Z3xZ2,
    Symmetric(u32),
    Alternating(u32),
    /// Dihedral group of the given order (D_8 has order 8).
    Dihedral(u64),
    /// Σ_3 × Z_2
    S3xZ2,
    /// Z_5 ⋊ Z_4, the affine maps `x ↦ ax + b` of Z_5.
    Frobenius20,
    Unidentified,
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => f.write_str("1"),
            GroupLabel::Cyclic(k) => write!(f, "Z_{k}"),
            GroupLabel::Klein4 => f.write_str("Z_2+Z_2"),
            GroupLabel::Z3xZ2 => f.write_str("Z_3+Z_2"),
            GroupLabel::Symmetric(k) => write!(f, "S_{k}"),
            GroupLabel::Alternating(k) => write!(f, "A_{k}"),
            GroupLabel::Dihedral(k) => write!(f, "D_{k}"),
            GroupLabel::S3xZ2 => f.write_str("S_3xZ_2"),
            GroupLabel::Frobenius20 => f.write_str("F_20"),
            GroupLabel::Unidentified => f.write_str("unidentified"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupId {
    pub label: GroupLabel,
    pub fingerprint: Fingerprint,
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.label, f)
    }
}

struct KnownGroup {
    label: GroupLabel,
    order: u64,
    histogram: &'static [(u64, u64)],
    abelian: bool,
    center_order: u64,
}

const fn known(
    label: GroupLabel,
    order: u64,
    histogram: &'static [(u64, u64)],
    abelian: bool,
    center_order: u64,
) -> KnownGroup {
    KnownGroup {
        label,
        order,
        histogram,
        abelian,
        center_order,
    }
}

const KNOWN_GROUPS: &[KnownGroup] = &[
    known(GroupLabel::Trivial, 1, &[(1, 1)], true, 1),
    known(GroupLabel::Cyclic(2), 2, &[(1, 1), (2, 1)], true, 2),
    known(GroupLabel::Cyclic(3), 3, &[(1, 1), (3, 2)], true, 3),
    known(GroupLabel::Cyclic(4), 4, &[(1, 1), (2, 1), (4, 2)], true, 4),
    known(GroupLabel::Klein4, 4, &[(1, 1), (2, 3)], true, 4),
    known(GroupLabel::Cyclic(5), 5, &[(1, 1), (5, 4)], true, 5),
    known(
        GroupLabel::Z3xZ2,
        6,
        &[(1, 1), (2, 1), (3, 2), (6, 2)],
        true,
        6,
    ),
    known(
        GroupLabel::Symmetric(3),
        6,
        &[(1, 1), (2, 3), (3, 2)],
        false,
        1,
    ),
    known(
        GroupLabel::Dihedral(8),
        8,
        &[(1, 1), (2, 5), (4, 2)],
        false,
        2,
    ),
    known(
        GroupLabel::Alternating(4),
        12,
        &[(1, 1), (2, 3), (3, 8)],
        false,
        1,
    ),
    known(
        GroupLabel::S3xZ2,
        12,
        &[(1, 1), (2, 7), (3, 2), (6, 2)],
        false,
        2,
    ),
    known(
        GroupLabel::Dihedral(20),
        20,
        &[(1, 1), (2, 11), (5, 4), (10, 4)],
        false,
        2,
    ),
    known(
        GroupLabel::Frobenius20,
        20,
        &[(1, 1), (2, 5), (4, 10), (5, 4)],
        false,
        1,
    ),
    known(
        GroupLabel::Symmetric(4),
        24,
        &[(1, 1), (2, 9), (3, 8), (4, 6)],
        false,
        1,
    ),
    known(
        GroupLabel::Symmetric(5),
        120,
        &[(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)],
        false,
        1,
    ),
];

fn known_fingerprint(k: &KnownGroup) -> Fingerprint {
    Fingerprint {
        order: k.order,
        order_histogram: k.histogram.iter().copied().collect(),
        abelian: k.abelian,
        center_order: k.center_order,
    }
}

/// Names a group by matching its fingerprint against a fixed table of the
/// groups appearing in the order ≤ 5 classification.
pub fn identify_group(g: &PermGroup) -> GroupId {
    let fingerprint = g.fingerprint();
    let label = KNOWN_GROUPS
        .iter()
        .find(|k| known_fingerprint(k) == fingerprint)
        .map_or(GroupLabel::Unidentified, |k| k.label);
    GroupId { label, fingerprint }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(degree: usize, cycles: &str) -> Permutation {
        Permutation::parse_cycles(degree, cycles).unwrap()
    }

    fn gen(degree: usize, gens: &[&str]) -> PermGroup {
        PermGroup::generate(degree, gens.iter().map(|c| p(degree, c))).unwrap()
    }

    /// Element order by repeated multiplication, independent of cycle types.
    fn order_by_powers(x: &Permutation) -> u64 {
        let mut acc = x.clone();
        let mut k = 1;
        while !acc.is_identity() {
            acc = acc.compose_unchecked(x);
            k += 1;
        }
        k
    }

    #[test]
    fn table_fingerprints_are_pairwise_distinct() {
        for (a, ka) in KNOWN_GROUPS.iter().enumerate() {
            for kb in &KNOWN_GROUPS[a + 1..] {
                assert_ne!(known_fingerprint(ka), known_fingerprint(kb));
            }
            let total: u64 = ka.histogram.iter().map(|&(_, c)| c).sum();
            assert_eq!(total, ka.order, "{}", ka.label);
        }
    }

    #[test]
    fn every_table_entry_is_recognised_from_a_concrete_group() {
        let cases = [
            (gen(1, &[]), GroupLabel::Trivial),
            (gen(3, &["(2 3)"]), GroupLabel::Cyclic(2)),
            (gen(3, &["(1 2 3)"]), GroupLabel::Cyclic(3)),
            (gen(4, &["(1 2 3 4)"]), GroupLabel::Cyclic(4)),
            (gen(4, &["(1 2)", "(3 4)"]), GroupLabel::Klein4),
            (gen(5, &["(1 2 3 4 5)"]), GroupLabel::Cyclic(5)),
            (gen(5, &["(1 2 3)", "(4 5)"]), GroupLabel::Z3xZ2),
            (gen(3, &["(1 2)", "(1 2 3)"]), GroupLabel::Symmetric(3)),
            (gen(4, &["(1 2 3 4)", "(1 3)"]), GroupLabel::Dihedral(8)),
            (
                gen(4, &["(1 2 3)", "(1 2)(3 4)"]),
                GroupLabel::Alternating(4),
            ),
            (gen(5, &["(1 2)", "(1 2 3)", "(4 5)"]), GroupLabel::S3xZ2),
            (
                gen(5, &["(1 2 3 4 5)", "(2 3 5 4)"]),
                GroupLabel::Frobenius20,
            ),
            // D_10 is outside the table.
            (
                gen(5, &["(1 2 3 4 5)", "(2 5)(3 4)"]),
                GroupLabel::Unidentified,
            ),
            (gen(4, &["(1 2)", "(1 2 3 4)"]), GroupLabel::Symmetric(4)),
            (gen(5, &["(1 2)", "(1 2 3 4 5)"]), GroupLabel::Symmetric(5)),
        ];
        for (group, expected) in cases {
            let id = identify_group(&group);
            assert_eq!(id.label, expected, "{:?}", id.fingerprint);
        }
    }

    #[test]
    fn dihedral_twenty_from_two_copies() {
        // D_20 ≅ D_10 × Z_2 acting on 7 points.
        let g = gen(7, &["(1 2 3 4 5)", "(2 5)(3 4)", "(6 7)"]);
        assert_eq!(g.order(), 20);
        assert_eq!(identify_group(&g).label, GroupLabel::Dihedral(20));
    }

    #[test]
    fn affine_group_of_z5_from_its_maps() {
        // Every map x ↦ ax + b with a ≠ 0, on labels x + 1.
        let mut maps = Vec::new();
        for a in 1..5 {
            for b in 0..5 {
                let images: Vec<usize> = (0..5).map(|x| (a * x + b) % 5 + 1).collect();
                maps.push(Permutation::from_images(&images).unwrap());
            }
        }
        maps.sort();
        let g = PermGroup::from_elements(5, maps).unwrap();
        let mut hist = BTreeMap::new();
        for x in g.elements() {
            *hist.entry(order_by_powers(x)).or_insert(0u64) += 1;
        }
        assert_eq!(hist, BTreeMap::from([(1, 1), (2, 5), (4, 10), (5, 4)]));
        assert_eq!(g.fingerprint().order_histogram, hist);
        assert_eq!(identify_group(&g).label, GroupLabel::Frobenius20);
    }

    #[test]
    fn alternating_four_histogram_by_enumeration() {
        let a4 = gen(4, &["(1 2 3)", "(1 2)(3 4)"]);
        let mut hist = BTreeMap::new();
        for x in a4.elements() {
            *hist.entry(order_by_powers(x)).or_insert(0u64) += 1;
        }
        assert_eq!(hist, BTreeMap::from([(1, 1), (2, 3), (3, 8)]));
        assert_eq!(a4.fingerprint().order_histogram, hist);
    }

    #[test]
    fn from_elements_checks_closure() {
        let id = Permutation::identity(3);
        let t = p(3, "(1 2)");
        assert!(PermGroup::from_elements(3, vec![id.clone(), t.clone()]).is_ok());
        assert_eq!(
            PermGroup::from_elements(3, vec![id, t, p(3, "(2 3)")]).unwrap_err(),
            Error::GroupNotClosed
        );
        let c = p(3, "(1 2 3)");
        assert_eq!(
            PermGroup::from_elements(3, vec![Permutation::identity(3), c]).unwrap_err(),
            Error::GroupNotClosed
        );
    }

    #[test]
    fn closure_orders() {
        assert_eq!(gen(3, &["(2 3)", "(1 3)", "(1 2)"]).order(), 6);
        assert_eq!(gen(6, &["(1 2)", "(1 2 3 4 5 6)"]).order(), 720);
        let s4 = gen(4, &["(1 2)", "(1 2 3 4)"]);
        assert!(s4.elements().windows(2).all(|w| w[0] < w[1]));
        assert!(s4.contains(&p(4, "(1 3)(2 4)")));
        assert!(!s4.is_abelian());
        assert_eq!(s4.center_order(), 1);
    }
}
