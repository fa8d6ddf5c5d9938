//! Monomial bases of the mod 2 homology of `BO(q)`.
//!
//! `H̃_*(BO(q))` has basis the monomials `b_{i_1}···b_{i_k}` with
//! `0 < i_1 ≤ … ≤ i_k` and `k ≤ q`. Steenrod operations preserve the number
//! of factors, so the length-`j` monomials span a summand `M_j`, and
//! `M_q = H_*(MO(q))`.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions;

/// A monomial `b_{i_1}···b_{i_k}` in `H_*(BO)`, stored as its sorted index
/// multiset. Degrees are homological: `b_i` has degree `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BMonomial {
    indices: Vec<u32>,
}

impl BMonomial {
    pub fn new(mut indices: Vec<u32>) -> Result<Self> {
        if indices.is_empty() {
            return Err(Error::Domain("a b-monomial needs at least one factor".into()));
        }
        if indices.contains(&0) {
            return Err(Error::Domain("b_0 is not a generator".into()));
        }
        indices.sort_unstable();
        Ok(Self { indices })
    }

    /// Wraps an already sorted, zero-free, nonempty index list.
    pub(crate) fn from_sorted(indices: Vec<u32>) -> Self {
        debug_assert!(!indices.is_empty());
        debug_assert!(indices.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(indices[0] > 0);
        Self { indices }
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn degree(&self) -> u32 {
        self.indices.iter().sum()
    }

    /// Number of factors.
    pub fn length(&self) -> usize {
        self.indices.len()
    }
}

/// Shorter monomials first, then lexicographic on the index sequence.
impl Ord for BMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.indices
            .len()
            .cmp(&other.indices.len())
            .then_with(|| self.indices.cmp(&other.indices))
    }
}

impl PartialOrd for BMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, i) in self.indices.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "b{i}")?;
        }
        Ok(())
    }
}

/// The monomial basis of one degree of `M_q` (`exact_length`) or of
/// `H̃_*(BO(q))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSlice {
    pub q: usize,
    pub degree: u32,
    pub exact_length: bool,
    basis: Vec<BMonomial>,
}

impl DegreeSlice {
    pub fn basis(&self) -> &[BMonomial] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Column index of `m` in this slice.
    pub fn index_of(&self, m: &BMonomial) -> Option<usize> {
        self.basis.binary_search(m).ok()
    }
}

fn push_length(out: &mut Vec<BMonomial>, length: usize, degree: u32) {
    partitions::for_each_bounded(degree, length, 1, u32::MAX, &mut |p| {
        out.push(BMonomial::from_sorted(p.to_vec()))
    });
}

/// Basis of `M_q` in degree `d`: partitions of `d` into exactly `q` parts.
pub fn enumerate_m(q: usize, d: u32) -> DegreeSlice {
    let mut basis = Vec::new();
    if q >= 1 {
        push_length(&mut basis, q, d);
    }
    DegreeSlice {
        q,
        degree: d,
        exact_length: true,
        basis,
    }
}

/// Basis of `H̃_d(BO(q)) = ⊕_{j ≤ q} M_j` in degree `d`.
pub fn enumerate_bo(q: usize, d: u32) -> DegreeSlice {
    let mut basis = Vec::new();
    for j in 1..=q {
        push_length(&mut basis, j, d);
    }
    DegreeSlice {
        q,
        degree: d,
        exact_length: false,
        basis,
    }
}

pub fn slice(q: usize, d: u32, exact_length: bool) -> DegreeSlice {
    if exact_length {
        enumerate_m(q, d)
    } else {
        enumerate_bo(q, d)
    }
}

/// Maps a length-`q` monomial `b_{i_1}···b_{i_q}` to the exponents
/// `(e_q, e_{q-1}, …, e_1)` of the Stiefel-Whitney monomial
/// `w_q^{i_1} w_{q-1}^{i_2-i_1} ··· w_1^{i_q-i_{q-1}}`.
pub fn sw_correspondence(m: &BMonomial, q: usize) -> Result<Vec<u32>> {
    if m.length() != q {
        return Err(Error::Arity {
            expected: q,
            found: m.length(),
        });
    }
    let mut prev = 0;
    Ok(m
        .indices
        .iter()
        .map(|&i| {
            let e = i - prev;
            prev = i;
            e
        })
        .collect())
}

/// Inverse of [`sw_correspondence`]. `exponents[0]` is the exponent of
/// `w_q` and must be positive.
pub fn from_sw_exponents(exponents: &[u32]) -> Result<BMonomial> {
    match exponents.first() {
        None => Err(Error::Domain("empty exponent vector".into())),
        Some(0) => Err(Error::Domain(
            "the top Stiefel-Whitney class must divide the monomial".into(),
        )),
        Some(_) => {
            let mut acc = 0;
            Ok(BMonomial::from_sorted(
                exponents
                    .iter()
                    .map(|e| {
                        acc += e;
                        acc
                    })
                    .collect(),
            ))
        }
    }
}

/// Cohomological degree `Σ k·e_k` of a Stiefel-Whitney exponent vector
/// ordered `(e_q, …, e_1)`.
pub fn sw_degree(exponents: &[u32]) -> u32 {
    let q = exponents.len() as u32;
    exponents
        .iter()
        .enumerate()
        .map(|(pos, e)| (q - pos as u32) * e)
        .sum()
}
