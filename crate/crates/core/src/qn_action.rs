//! The Milnor primitive `Q_n` on `H_*(BO(q))` and its homology.
//!
//! In `H_*(BO(1))`, `Q_n` lowers degree by `2^{n+1} - 1` and sends `b_{2k}`
//! to `b_{2k+1-2^{n+1}}` whenever `2k > 2^{n+1} - 1`. Odd generators are
//! cycles. `Q_n` is primitive, so it acts on products as a derivation, and it
//! never changes the number of factors.
//!
//! The `Q_n`-homology in degree `d` is the `E^∞` term of the
//! Atiyah-Hirzebruch spectral sequence for `K(n)_*` in that degree, counted
//! in `K(n)_*`-module generators.

use std::collections::BTreeMap;

use crate::bo_homology::{self, BMonomial, DegreeSlice};
use crate::error::{Error, Result};
use crate::f2linalg::{Echelon, F2Matrix, F2Vector};
use crate::f2sum::F2Sum;
use crate::partitions;

/// The height `n` of the Morava K-theory `K(n)` at the prime 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoravaParams {
    n: u32,
}

impl MoravaParams {
    /// Largest supported height; keeps every degree shift well inside `u32`.
    pub const MAX_N: u32 = 20;

    pub fn new(n: u32) -> Result<Self> {
        if n == 0 || n > Self::MAX_N {
            return Err(Error::InvalidParams(format!(
                "n must satisfy 1 <= n <= {}, got {n}",
                Self::MAX_N
            )));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// `2^n`, the first index that is not a `b`-generator of `K(n)_*(BO(1))`.
    pub fn two_pow_n(&self) -> u32 {
        1 << self.n
    }

    /// Degree drop of `Q_n` in homology, `2^{n+1} - 1`.
    pub fn shift(&self) -> u32 {
        (1 << (self.n + 1)) - 1
    }

    /// Degree of `v_n`, `2(2^n - 1)`.
    pub fn v_degree(&self) -> u32 {
        2 * (self.two_pow_n() - 1)
    }
}

/// Image of the generator `b_i` under `Q_n`, or `None` for zero.
pub fn qn_on_generator(params: MoravaParams, i: u32) -> Option<u32> {
    let shift = params.shift();
    (i.is_multiple_of(2) && i > shift).then(|| i - shift)
}

/// `Q_n` applied to a monomial, extended as a derivation.
pub fn qn_derivation(params: MoravaParams, m: &BMonomial) -> F2Sum<BMonomial> {
    QnOperator::milnor(params).apply(m)
}

/// Matrix of `Q_n` from degree `d` to degree `d - shift`.
pub fn qn_matrix(params: MoravaParams, q: usize, d: u32, exact_length: bool) -> F2Matrix {
    QnOperator::milnor(params).matrix(q, d, exact_length)
}

pub fn qn_homology(params: MoravaParams, q: usize, d: u32, exact_length: bool) -> HomologyReport {
    QnOperator::milnor(params).homology(q, d, exact_length)
}

/// `Q_n`-homology of one degree slice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomologyReport {
    pub params: MoravaParams,
    pub q: usize,
    pub degree: u32,
    pub exact_length: bool,
    pub kernel_dim: usize,
    pub image_dim: usize,
    pub homology_dim: usize,
    /// Cycles whose classes form a basis of the homology, each in normal
    /// form modulo the boundaries.
    pub representatives: Vec<F2Sum<BMonomial>>,
}

/// `Q_n` with an optional table of replaced generator images.
///
/// The replacement table exists so that the verification driver can be run
/// against a deliberately wrong operator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QnOperator {
    params: MoravaParams,
    overrides: BTreeMap<u32, Option<u32>>,
}

impl QnOperator {
    pub fn milnor(params: MoravaParams) -> Self {
        Self {
            params,
            overrides: BTreeMap::new(),
        }
    }

    /// Replaces the image of `b_generator`. A nonzero image must still have
    /// degree `generator - shift`.
    pub fn with_override(mut self, generator: u32, image: Option<u32>) -> Result<Self> {
        if generator == 0 {
            return Err(Error::Domain("b_0 is not a generator".into()));
        }
        if let Some(t) = image {
            if t == 0 || generator.checked_sub(self.params.shift()) != Some(t) {
                return Err(Error::Domain(format!(
                    "Q_n must lower degree by {}: cannot send b{generator} to b{t}",
                    self.params.shift()
                )));
            }
        }
        self.overrides.insert(generator, image);
        Ok(self)
    }

    pub fn params(&self) -> MoravaParams {
        self.params
    }

    pub fn is_milnor(&self) -> bool {
        self.overrides.is_empty()
    }

    pub fn on_generator(&self, i: u32) -> Option<u32> {
        match self.overrides.get(&i) {
            Some(&image) => image,
            None => qn_on_generator(self.params, i),
        }
    }

    /// Applies the derivation to one monomial.
    pub fn apply(&self, m: &BMonomial) -> F2Sum<BMonomial> {
        let ix = m.indices();
        let mut out = F2Sum::zero();
        let mut start = 0;
        while start < ix.len() {
            let i = ix[start];
            let end = start + ix[start..].iter().take_while(|&&x| x == i).count();
            // a run of r equal factors contributes r equal terms
            if (end - start) % 2 == 1 {
                if let Some(t) = self.on_generator(i) {
                    let mut next = Vec::with_capacity(ix.len());
                    next.extend_from_slice(&ix[..start]);
                    next.extend_from_slice(&ix[start + 1..]);
                    let at = next.partition_point(|&x| x < t);
                    next.insert(at, t);
                    out.toggle(BMonomial::from_sorted(next));
                }
            }
            start = end;
        }
        out
    }

    pub fn apply_sum(&self, s: &F2Sum<BMonomial>) -> F2Sum<BMonomial> {
        let mut out = F2Sum::zero();
        for m in s {
            out.add_assign(self.apply(m));
        }
        out
    }

    fn matrix_between(&self, source: &DegreeSlice, target: &DegreeSlice) -> F2Matrix {
        let mut m = F2Matrix::zeros(target.len(), source.len());
        for (col, mono) in source.basis().iter().enumerate() {
            for image in &self.apply(mono) {
                let row = target
                    .index_of(image)
                    .expect("Q_n preserves length and lowers degree by the shift");
                m.flip(row, col).expect("indices come from the slices");
            }
        }
        m
    }

    /// Matrix of `Q_n` from the `(q, d)` slice to the `(q, d - shift)`
    /// slice; rows index the target, columns the source, both in canonical
    /// monomial order.
    pub fn matrix(&self, q: usize, d: u32, exact_length: bool) -> F2Matrix {
        let source = bo_homology::slice(q, d, exact_length);
        let target = self.target_slice(q, d, exact_length);
        self.matrix_between(&source, &target)
    }

    fn target_slice(&self, q: usize, d: u32, exact_length: bool) -> DegreeSlice {
        match d.checked_sub(self.params.shift()) {
            Some(t) => bo_homology::slice(q, t, exact_length),
            None => bo_homology::slice(q, 0, exact_length),
        }
    }

    /// Boundaries landing in degree `d`, as vectors in the `(q, d)` slice.
    pub fn boundaries(&self, q: usize, d: u32, exact_length: bool) -> (DegreeSlice, Vec<F2Vector>) {
        let here = bo_homology::slice(q, d, exact_length);
        let above = bo_homology::slice(q, d + self.params.shift(), exact_length);
        let incoming = self.matrix_between(&above, &here).transpose();
        let vectors = (0..incoming.rows())
            .map(|r| incoming.row(r).expect("row in range").clone())
            .collect();
        (here, vectors)
    }

    pub fn homology(&self, q: usize, d: u32, exact_length: bool) -> HomologyReport {
        let outgoing = self.matrix(q, d, exact_length);
        let cycles = outgoing.kernel_basis();
        let (slice, boundaries) = self.boundaries(q, d, exact_length);

        let mut image = Echelon::new(slice.len());
        for b in boundaries {
            image.insert(b).expect("boundary vectors live in the slice");
        }
        let image_dim = image.rank();

        let mut classes = image.clone();
        let mut representatives = Vec::new();
        for z in cycles.iter() {
            if classes.insert(z.clone()).expect("cycle lives in the slice") {
                let normal = image.reduce(z).expect("same slice").remainder;
                representatives.push(to_sum(&slice, &normal));
            }
        }

        HomologyReport {
            params: self.params,
            q,
            degree: d,
            exact_length,
            kernel_dim: cycles.len(),
            image_dim,
            homology_dim: cycles.len() - image_dim,
            representatives,
        }
    }
}

/// Coordinates of a combination of monomials in a slice.
pub fn coordinates(slice: &DegreeSlice, s: &F2Sum<BMonomial>) -> Result<F2Vector> {
    let mut v = F2Vector::zeros(slice.len());
    for m in s {
        let i = slice
            .index_of(m)
            .ok_or_else(|| Error::Domain(format!("{m} is not in the degree {} slice", slice.degree)))?;
        v.flip(i)?;
    }
    Ok(v)
}

/// The combination of monomials with the given coordinates.
pub fn to_sum(slice: &DegreeSlice, v: &F2Vector) -> F2Sum<BMonomial> {
    v.ones().map(|i| slice.basis()[i].clone()).collect()
}

/// Outcome of checking `Q_n ∘ Q_n = 0` on every monomial up to a degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareZeroReport {
    pub max_degree: u32,
    pub checked: usize,
    pub failures: Vec<BMonomial>,
}

impl SquareZeroReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `Q_n ∘ Q_n = 0` on every monomial (any length) of degree at most
/// `max_degree`.
pub fn check_square_zero(op: &QnOperator, max_degree: u32) -> SquareZeroReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for d in 1..=max_degree {
        for len in 1..=d as usize {
            partitions::for_each_bounded(d, len, 1, u32::MAX, &mut |p| {
                let m = BMonomial::from_sorted(p.to_vec());
                checked += 1;
                if !op.apply_sum(&op.apply(&m)).is_zero() {
                    failures.push(m);
                }
            });
        }
    }
    SquareZeroReport {
        max_degree,
        checked,
        failures,
    }
}
