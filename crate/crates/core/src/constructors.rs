//! Standard-form matrices for the named families: trivial, dihedral,
//! finite Alexander quandles `Z_m[t]/(p(t))` and conjugation quandles.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::matrix::QuandleMatrix;
use crate::perm::Permutation;
use crate::MAX_ORDER;

fn check_order(n: usize) -> Result<()> {
    match n {
        0 => Err(Error::ZeroOrder),
        n if n > MAX_ORDER => Err(Error::OrderTooLarge(n)),
        _ => Ok(()),
    }
}

/// `i ▷ j = i`.
pub fn trivial(n: usize) -> Result<QuandleMatrix> {
    check_order(n)?;
    Ok(QuandleMatrix::from_fn(n, |i, _| i))
}

/// `a ▷ b = 2b − a mod n`, elements `0..n` labeled `1..=n`.
pub fn dihedral(n: usize) -> Result<QuandleMatrix> {
    check_order(n)?;
    Ok(QuandleMatrix::from_fn(n, |i, j| (2 * j + n - i) % n))
}

/// `Z_m[t]/(p)` for a monic `p`, coefficients listed constant term first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlexanderPresentation {
    pub modulus: u64,
    pub coefficients: Vec<u64>,
}

impl AlexanderPresentation {
    pub fn new(modulus: u64, coefficients: Vec<u64>) -> Self {
        AlexanderPresentation {
            modulus,
            coefficients,
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len().saturating_sub(1)
    }

    /// Number of elements, `m^deg`.
    pub fn size(&self) -> u128 {
        (self.modulus as u128).saturating_pow(self.degree() as u32)
    }

    fn check(&self) -> Result<()> {
        let m = self.modulus;
        if m < 2 {
            return Err(Error::BadModulus(m));
        }
        match self.coefficients.last() {
            Some(&lead) if self.degree() >= 1 && lead % m == 1 => {}
            _ => return Err(Error::NotMonic),
        }
        let constant = self.coefficients[0] % m;
        if gcd(constant, m) != 1 {
            return Err(Error::TNotInvertible {
                constant,
                modulus: m,
            });
        }
        if self.size() > MAX_ORDER as u128 {
            return Err(Error::AlexanderTooLarge(self.size()));
        }
        Ok(())
    }
}

impl fmt::Display for AlexanderPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}[t]/(", self.modulus)?;
        let mut first = true;
        for (k, &c) in self.coefficients.iter().enumerate().rev() {
            if c % self.modulus == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("t")?,
                (1, c) => write!(f, "{c}t")?,
                (k, 1) => write!(f, "t^{k}")?,
                (k, c) => write!(f, "{c}t^{k}")?,
            }
        }
        f.write_str(")")
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Alexander quandle `a ▷ b = t·a + (1 − t)·b` on `Z_m[t]/(p)`.
///
/// Ring elements are numbered by their coefficient vectors in
/// lexicographic order with the constant coefficient most significant, so
/// the zero polynomial is element 1.
pub fn alexander(p: &AlexanderPresentation) -> Result<QuandleMatrix> {
    p.check()?;
    let m = p.modulus;
    let d = p.degree();
    let size = p.size() as usize;
    let reduction: Vec<u64> = p.coefficients[..d].iter().map(|c| c % m).collect();

    let decode = |mut idx: usize| {
        let mut coeffs = vec![0u64; d];
        for k in (0..d).rev() {
            coeffs[k] = idx as u64 % m;
            idx /= m as usize;
        }
        coeffs
    };
    let encode = |coeffs: &[u64]| {
        coeffs
            .iter()
            .fold(0usize, |acc, &c| acc * m as usize + c as usize)
    };
    let times_t = |a: &[u64]| {
        let top = a[d - 1];
        let mut out = vec![0u64; d];
        for k in (1..d).rev() {
            out[k] = a[k - 1];
        }
        // t^d = −(p_0 + p_1 t + … + p_{d−1} t^{d−1})
        for k in 0..d {
            out[k] = (out[k] + (m - reduction[k]) * top) % m;
        }
        out
    };

    let elements: Vec<Vec<u64>> = (0..size).map(decode).collect();
    Ok(QuandleMatrix::from_fn(size, |i, j| {
        let (a, b) = (&elements[i], &elements[j]);
        let diff: Vec<u64> = a.iter().zip(b).map(|(&x, &y)| (x + m - y) % m).collect();
        let sum: Vec<u64> = times_t(&diff)
            .iter()
            .zip(b)
            .map(|(&x, &y)| (x + y) % m)
            .collect();
        encode(&sum)
    }))
}

/// Conjugation quandle `a ▷ b = b^{-e} a b^{e}` on an explicit list of
/// permutations, labeled in list order. Products compose right to left, so
/// `a b` means `a ∘ b`.
pub fn conjugation(elements: &[Permutation], exponent: i64) -> Result<QuandleMatrix> {
    let n = elements.len();
    check_order(n).map_err(|e| match e {
        Error::ZeroOrder => Error::EmptyElementSet,
        other => other,
    })?;
    let degree = elements[0].degree();
    if let Some(bad) = elements.iter().find(|e| e.degree() != degree) {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: bad.degree(),
        });
    }
    let mut index: HashMap<&Permutation, usize> = HashMap::with_capacity(n);
    for (k, e) in elements.iter().enumerate() {
        if let Some(first) = index.insert(e, k) {
            return Err(Error::DuplicateElement {
                first: first + 1,
                second: k + 1,
            });
        }
    }
    let powers: Vec<(Permutation, Permutation)> = elements
        .iter()
        .map(|b| (b.pow(-exponent), b.pow(exponent)))
        .collect();

    let mut entries = Vec::with_capacity(n * n);
    for (i, a) in elements.iter().enumerate() {
        for (j, (b_neg, b_pos)) in powers.iter().enumerate() {
            let c = b_neg.compose_unchecked(a).compose_unchecked(b_pos);
            match index.get(&c) {
                Some(&k) => entries.push(k as u8),
                None => return Err(Error::NotClosed { a: i + 1, b: j + 1 }),
            }
        }
    }
    Ok(QuandleMatrix::from_raw(n, entries))
}

/// Conjugacy class of `representative` in the group generated by
/// `generators`, sorted by image array, and its conjugation quandle.
pub fn conjugation_class(
    generators: &[Permutation],
    representative: &Permutation,
    exponent: i64,
) -> Result<(Vec<Permutation>, QuandleMatrix)> {
    let degree = representative.degree();
    if let Some(bad) = generators.iter().find(|g| g.degree() != degree) {
        return Err(Error::DegreeMismatch {
            left: degree,
            right: bad.degree(),
        });
    }
    let mut class = vec![representative.clone()];
    let mut seen: std::collections::HashSet<Permutation> = class.iter().cloned().collect();
    let mut next = 0;
    while next < class.len() {
        let x = class[next].clone();
        next += 1;
        for g in generators {
            let y = g.inverse().compose_unchecked(&x).compose_unchecked(g);
            if seen.insert(y.clone()) {
                class.push(y);
            }
        }
    }
    class.sort_unstable();
    let q = conjugation(&class, exponent)?;
    Ok((class, q))
}

/// Command-line constructor syntax: `trivial:<n>`, `dihedral:<n>`,
/// `alexander:<m>:<c0,c1,…>` and `conj:<degree>:<cycles;cycles;…>[:<e>]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructorSpec {
    Trivial(usize),
    Dihedral(usize),
    Alexander(AlexanderPresentation),
    Conjugation {
        elements: Vec<Permutation>,
        exponent: i64,
    },
}

impl ConstructorSpec {
    pub fn build(&self) -> Result<QuandleMatrix> {
        match self {
            ConstructorSpec::Trivial(n) => trivial(*n),
            ConstructorSpec::Dihedral(n) => dihedral(*n),
            ConstructorSpec::Alexander(p) => alexander(p),
            ConstructorSpec::Conjugation { elements, exponent } => conjugation(elements, *exponent),
        }
    }
}

impl FromStr for ConstructorSpec {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = |reason: &str| Error::ConstructorSpec {
            spec: spec.to_string(),
            reason: reason.to_string(),
        };
        let int = |s: &str| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| bad("expected an integer"))
        };
        let parts: Vec<&str> = spec.split(':').collect();
        match parts.as_slice() {
            ["trivial", n] => Ok(ConstructorSpec::Trivial(int(n)?)),
            ["dihedral", n] => Ok(ConstructorSpec::Dihedral(int(n)?)),
            ["alexander", m, coeffs] => {
                let coefficients = coeffs
                    .split(',')
                    .map(|c| int(c).map(|c| c as u64))
                    .collect::<Result<Vec<_>>>()?;
                Ok(ConstructorSpec::Alexander(AlexanderPresentation::new(
                    int(m)? as u64,
                    coefficients,
                )))
            }
            ["conj", degree, elements, rest @ ..] if rest.len() <= 1 => {
                let degree = int(degree)?;
                let exponent = match rest {
                    [e] => e.trim().parse::<i64>().map_err(|_| bad("bad exponent"))?,
                    _ => 1,
                };
                let elements = elements
                    .split(';')
                    .map(|c| Permutation::parse_cycles(degree, c))
                    .collect::<Result<Vec<_>>>()?;
                Ok(ConstructorSpec::Conjugation { elements, exponent })
            }
            _ => Err(bad(
                "expected trivial:<n>, dihedral:<n>, alexander:<m>:<coeffs> or conj:<degree>:<elements>[:<exponent>]",
            )),
        }
    }
}
