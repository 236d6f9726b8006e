use std::fmt;

use crate::error::{Error, Result};
use crate::MAX_ORDER;

/// A bijection of `{1..n}`, stored as its zero-based image array.
///
/// Ordering is lexicographic on the image array, which is the order used
/// whenever permutations are listed or a least witness is chosen.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "degree {n} exceeds {MAX_ORDER}");
        Permutation {
            images: (0..n as u8).collect(),
        }
    }

    /// Builds a permutation from 1-indexed images, `images[i - 1] = ρ(i)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_ORDER {
            return Err(Error::OrderTooLarge(n));
        }
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} outside 1..={n}"
                )));
            }
            if std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidPermutation(format!("image {x} repeated")));
            }
            out.push((x - 1) as u8);
        }
        Ok(Permutation { images: out })
    }

    pub(crate) fn from_zero_based(images: Vec<u8>) -> Self {
        debug_assert!(is_bijection(&images));
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-indexed point `i`.
    pub fn image(&self, i: usize) -> Result<usize> {
        match self.images.get(i.wrapping_sub(1)) {
            Some(&x) => Ok(x as usize + 1),
            None => Err(Error::IndexOutOfRange {
                index: i,
                n: self.degree(),
            }),
        }
    }

    #[inline]
    pub(crate) fn at(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    /// 1-indexed image array.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other
                .images
                .iter()
                .map(|&x| self.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, exponent: i64) -> Permutation {
        let base = if exponent < 0 {
            self.inverse()
        } else {
            self.clone()
        };
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..exponent.unsigned_abs() {
            acc = acc.compose_unchecked(&base);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// Non-trivial cycles, 1-indexed, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.at(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths including fixed points, sorted ascending.
    pub fn cycle_type(&self) -> Vec<usize> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lens = Vec::new();
        for start in 0..n {
            let mut len = 0;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                len += 1;
                x = self.at(x);
            }
            if len > 0 {
                lens.push(len);
            }
        }
        lens.sort_unstable();
        lens
    }

    pub fn order(&self) -> u64 {
        self.cycle_type()
            .into_iter()
            .fold(1u64, |acc, len| lcm(acc, len as u64))
    }

    /// Parses disjoint-cycle notation such as `(1 4 3 2)`, `(1,5,3)(2,4)` or
    /// the compact `(153)(24)`. Compact cycles (no separators) read one
    /// digit per point and are only accepted for degree at most 9.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
        let bad = |why: String| Error::InvalidPermutation(format!("{text:?}: {why}"));
        if degree > MAX_ORDER {
            return Err(Error::OrderTooLarge(degree));
        }
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut moved = vec![false; degree];
        let mut rest = text.trim();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| bad("expected '('".into()))?;
            let close = body.find(')').ok_or_else(|| bad("unclosed cycle".into()))?;
            let inner = body[..close].trim();
            rest = body[close + 1..].trim_start();

            let points: Vec<usize> = if inner.is_empty() {
                Vec::new()
            } else if inner.contains(|c: char| c == ',' || c.is_whitespace()) {
                inner
                    .split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| bad(format!("bad point {t:?}")))
                    })
                    .collect::<Result<_>>()?
            } else if inner.len() > 1 && degree > 9 {
                return Err(bad("compact cycles need degree at most 9".into()));
            } else {
                inner
                    .chars()
                    .map(|c| {
                        c.to_digit(10)
                            .map(|d| d as usize)
                            .ok_or_else(|| bad(format!("bad point {c:?}")))
                    })
                    .collect::<Result<_>>()?
            };

            for (idx, &p) in points.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(bad(format!("point {p} outside 1..={degree}")));
                }
                if std::mem::replace(&mut moved[p - 1], true) {
                    return Err(bad(format!("point {p} appears twice")));
                }
                let next = points[(idx + 1) % points.len()];
                images[p - 1] = (next - 1) as u8;
            }
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (k, p) in cycle.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images())
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

pub(crate) fn is_bijection(images: &[u8]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&x| (x as usize) < images.len() && !std::mem::replace(&mut seen[x as usize], true))
}

/// Advances `a` to the next permutation in lexicographic order. Returns
/// false (leaving `a` sorted ascending) after the last one.
pub(crate) fn next_lex(a: &mut [u8]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let mut i = a.len() - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = a.len() - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// All permutations of degree `n` in lexicographic order of image arrays.
pub fn all_permutations(n: usize) -> impl Iterator<Item = Permutation> {
    let mut current: Option<Vec<u8>> = Some((0..n as u8).collect());
    std::iter::from_fn(move || {
        let out = current.take()?;
        let mut next = out.clone();
        if next_lex(&mut next) {
            current = Some(next);
        }
        Some(Permutation { images: out })
    })
}

pub(crate) fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn cycle_reading_of_1432() {
        let p = Permutation::parse_cycles(4, "(1432)").unwrap();
        assert_eq!(p.images(), vec![4, 1, 2, 3]);
        assert_eq!(p.to_string(), "(1 4 3 2)");
    }

    #[test]
    fn parse_spaced_and_comma_forms() {
        let a = Permutation::parse_cycles(5, "(1 5 3)(2 4)").unwrap();
        let b = Permutation::parse_cycles(5, "(1,5,3)(2,4)").unwrap();
        let c = Permutation::parse_cycles(5, "(153)(24)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.to_string(), "(1 5 3)(2 4)");
        assert_eq!(
            Permutation::parse_cycles(3, "()").unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse_cycles(3, "(1 4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2)(2 3)").is_err());
        assert!(Permutation::parse_cycles(3, "1 2").is_err());
        assert!(Permutation::parse_cycles(3, "(1 2").is_err());
        assert!(Permutation::parse_cycles(12, "(12)").is_err());
        assert!(Permutation::parse_cycles(12, "(1 12)").is_ok());
    }

    #[test]
    fn from_images_validates() {
        assert!(Permutation::from_images(&[1, 1]).is_err());
        assert!(Permutation::from_images(&[0, 1]).is_err());
        assert!(Permutation::from_images(&[2, 3, 1]).is_ok());
    }

    #[test]
    fn order_and_cycle_type() {
        let p = Permutation::parse_cycles(5, "(1 2)(3 4 5)").unwrap();
        assert_eq!(p.cycle_type(), vec![2, 3]);
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::identity(4).cycle_type(), vec![1, 1, 1, 1]);
    }

    #[test]
    fn lex_enumeration_is_complete_and_sorted() {
        let all: Vec<_> = all_permutations(4).collect();
        assert_eq!(all.len(), 24);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(all_permutations(0).count(), 1);
        assert_eq!(all_permutations(1).count(), 1);
    }

    fn perm_strategy(n: usize) -> impl Strategy<Value = Permutation> {
        Just((0..n as u8).collect::<Vec<_>>())
            .prop_shuffle()
            .prop_map(Permutation::from_zero_based)
    }

    proptest! {
        #[test]
        fn inverse_composes_to_identity(p in perm_strategy(7)) {
            prop_assert!(p.compose(&p.inverse()).unwrap().is_identity());
            prop_assert!(p.inverse().compose(&p).unwrap().is_identity());
        }

        #[test]
        fn display_parse_roundtrip(p in perm_strategy(11)) {
            let text = p.to_string();
            prop_assert_eq!(Permutation::parse_cycles(11, &text).unwrap(), p);
        }

        #[test]
        fn pow_of_order_is_identity(p in perm_strategy(8)) {
            prop_assert!(p.pow(p.order() as i64).is_identity());
            prop_assert_eq!(p.pow(-1), p.inverse());
        }
    }
}
