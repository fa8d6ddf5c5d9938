//! Dense linear algebra over the two-element field.
//!
//! Vectors are bit-packed into `u64` words and elimination works by
//! word-wide XOR. Row reduction is deterministic: pivots are taken in the
//! first nonzero column, from the lowest-index row that has one. The reduced
//! row echelon form of a subspace is unique, so normal forms and membership
//! certificates are reproducible across runs.

use std::fmt;

use crate::error::{Error, Result};
use crate::f2sum::F2Sum;

const WORD: usize = 64;

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// A fixed-length vector over F_2.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        Self {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The standard basis vector `e_index`.
    pub fn unit(len: usize, index: usize) -> Result<Self> {
        let mut v = Self::zeros(len);
        v.set(index, true)?;
        Ok(v)
    }

    /// Builds a vector from 0/1 entries; any nonzero byte counts as 1.
    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b != 0 {
                v.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        v
    }

    /// Builds a vector with ones at the given positions. Repeated positions
    /// cancel in pairs.
    pub fn from_support(len: usize, support: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v = Self::zeros(len);
        for i in support {
            v.flip(i)?;
        }
        Ok(v)
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    fn check(&self, index: usize) -> Result<()> {
        if index >= self.len {
            return Err(Error::IndexOutOfRange {
                index,
                len: self.len,
            });
        }
        Ok(())
    }

    pub fn get(&self, index: usize) -> Result<bool> {
        self.check(index)?;
        Ok(self.bit(index))
    }

    #[inline]
    fn bit(&self, index: usize) -> bool {
        (self.words[index / WORD] >> (index % WORD)) & 1 == 1
    }

    pub fn set(&mut self, index: usize, value: bool) -> Result<()> {
        self.check(index)?;
        let mask = 1u64 << (index % WORD);
        if value {
            self.words[index / WORD] |= mask;
        } else {
            self.words[index / WORD] &= !mask;
        }
        Ok(())
    }

    pub fn flip(&mut self, index: usize) -> Result<()> {
        self.check(index)?;
        self.words[index / WORD] ^= 1 << (index % WORD);
        Ok(())
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Position of the first nonzero entry.
    pub fn first_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Positions of the nonzero entries, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut rest = w;
            std::iter::from_fn(move || {
                if rest == 0 {
                    return None;
                }
                let tz = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(wi * WORD + tz)
            })
        })
    }

    pub fn try_add_assign(&mut self, other: &F2Vector) -> Result<()> {
        if self.len != other.len {
            return Err(Error::Dimension {
                expected: self.len,
                found: other.len,
            });
        }
        self.xor(other);
        Ok(())
    }

    #[inline]
    fn xor(&mut self, other: &F2Vector) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn dot(&self, other: &F2Vector) -> Result<bool> {
        if self.len != other.len {
            return Err(Error::Dimension {
                expected: self.len,
                found: other.len,
            });
        }
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        Ok(ones % 2 == 1)
    }

    fn grow(&mut self, len: usize) {
        debug_assert!(len >= self.len);
        self.len = len;
        self.words.resize(words_for(len), 0);
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F2Vector(")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.bit(i)))?;
        }
        write!(f, ")")
    }
}

/// A dense matrix over F_2, stored as bit-packed rows.
#[derive(Clone, PartialEq, Eq)]
pub struct F2Matrix {
    cols: usize,
    rows: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            cols,
            rows: vec![F2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zeros(size, size);
        for i in 0..size {
            m.rows[i].words[i / WORD] |= 1 << (i % WORD);
        }
        m
    }

    /// Builds a matrix from rows that must all have length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<F2Vector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    /// Builds a matrix from 0/1 rows of equal length.
    pub fn from_bits(rows: &[&[u8]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_rows(cols, rows.iter().map(|r| F2Vector::from_bits(r)).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> Result<&F2Vector> {
        self.rows.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: self.rows.len(),
        })
    }

    pub fn get(&self, row: usize, col: usize) -> Result<bool> {
        self.row(row)?.get(col)
    }

    pub fn set(&mut self, row: usize, col: usize, value: bool) -> Result<()> {
        let len = self.rows.len();
        self.rows
            .get_mut(row)
            .ok_or(Error::IndexOutOfRange { index: row, len })?
            .set(col, value)
    }

    pub fn flip(&mut self, row: usize, col: usize) -> Result<()> {
        let len = self.rows.len();
        self.rows
            .get_mut(row)
            .ok_or(Error::IndexOutOfRange { index: row, len })?
            .flip(col)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(F2Vector::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            for j in r.ones() {
                t.rows[j].words[i / WORD] |= 1 << (i % WORD);
            }
        }
        t
    }

    /// Computes `self · v`.
    pub fn mul_vec(&self, v: &F2Vector) -> Result<F2Vector> {
        if v.len() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: v.len(),
            });
        }
        let mut out = F2Vector::zeros(self.rows.len());
        for (i, r) in self.rows.iter().enumerate() {
            if r.dot(v)? {
                out.words[i / WORD] |= 1 << (i % WORD);
            }
        }
        Ok(out)
    }

    pub fn mul(&self, other: &F2Matrix) -> Result<F2Matrix> {
        if other.rows() != self.cols {
            return Err(Error::Dimension {
                expected: self.cols,
                found: other.rows(),
            });
        }
        let mut out = F2Matrix::zeros(self.rows(), other.cols);
        for (i, r) in self.rows.iter().enumerate() {
            for k in r.ones() {
                out.rows[i].xor(&other.rows[k]);
            }
        }
        Ok(out)
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.cols);
        for r in &self.rows {
            e.insert_unchecked(r.clone());
        }
        e
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// A basis of `{v : self · v = 0}`, one vector per free column of the
    /// reduced row echelon form, ordered by that column.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        self.echelon().null_space()
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{} [", self.rows(), self.cols)?;
        for r in &self.rows {
            writeln!(f, "  {r:?}")?;
        }
        write!(f, "]")
    }
}

#[derive(Clone)]
struct EchelonRow {
    vec: F2Vector,
    pivot: usize,
    // which inserted vectors sum to `vec`
    combo: F2Vector,
}

/// An incrementally built reduced row echelon basis of a subspace of F_2^len.
///
/// Each row remembers which inserted vectors it is the sum of, so reduction
/// can return a certificate in terms of the original inputs.
#[derive(Clone)]
pub struct Echelon {
    len: usize,
    inserted: usize,
    combo_len: usize,
    rows: Vec<EchelonRow>,
}

/// Result of reducing a vector against an [`Echelon`] basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    /// The unique normal form of the vector modulo the span.
    pub remainder: F2Vector,
    /// Indices of inserted vectors whose sum is `vector - remainder`.
    pub combination: Vec<usize>,
}

impl Echelon {
    pub fn new(len: usize) -> Self {
        Self {
            len,
            inserted: 0,
            combo_len: 0,
            rows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Number of vectors inserted so far, dependent ones included.
    pub fn inserted(&self) -> usize {
        self.inserted
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r.pivot)
    }

    fn check_len(&self, v: &F2Vector) -> Result<()> {
        if v.len() != self.len {
            return Err(Error::Dimension {
                expected: self.len,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Inserts `v`; returns whether it enlarged the span.
    pub fn insert(&mut self, v: F2Vector) -> Result<bool> {
        self.check_len(&v)?;
        Ok(self.insert_unchecked(v))
    }

    fn insert_unchecked(&mut self, v: F2Vector) -> bool {
        let index = self.inserted;
        self.inserted += 1;
        if self.inserted > self.combo_len {
            self.combo_len = (self.combo_len * 2).max(WORD);
            for r in &mut self.rows {
                r.combo.grow(self.combo_len);
            }
        }

        let mut vec = v;
        let mut combo = F2Vector::zeros(self.combo_len);
        combo.words[index / WORD] |= 1 << (index % WORD);
        for r in &self.rows {
            if vec.bit(r.pivot) {
                vec.xor(&r.vec);
                combo.xor(&r.combo);
            }
        }
        let Some(pivot) = vec.first_one() else {
            return false;
        };
        // keep the basis fully reduced
        for r in &mut self.rows {
            if r.vec.bit(pivot) {
                r.vec.xor(&vec);
                r.combo.xor(&combo);
            }
        }
        let at = self.rows.partition_point(|r| r.pivot < pivot);
        self.rows.insert(at, EchelonRow { vec, pivot, combo });
        true
    }

    /// Reduces `v` to its normal form modulo the span.
    pub fn reduce(&self, v: &F2Vector) -> Result<Reduction> {
        self.check_len(v)?;
        let mut remainder = v.clone();
        let mut combo = F2Vector::zeros(self.combo_len);
        for r in &self.rows {
            if remainder.bit(r.pivot) {
                remainder.xor(&r.vec);
                combo.xor(&r.combo);
            }
        }
        Ok(Reduction {
            remainder,
            combination: combo.ones().collect(),
        })
    }

    pub fn contains(&self, v: &F2Vector) -> Result<bool> {
        Ok(self.reduce(v)?.remainder.is_zero())
    }

    /// The reduced basis rows, ordered by pivot.
    pub fn basis(&self) -> impl Iterator<Item = &F2Vector> {
        self.rows.iter().map(|r| &r.vec)
    }

    fn null_space(&self) -> Vec<F2Vector> {
        let mut is_pivot = vec![false; self.len];
        for r in &self.rows {
            is_pivot[r.pivot] = true;
        }
        (0..self.len)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = F2Vector::zeros(self.len);
                v.words[free / WORD] |= 1 << (free % WORD);
                for r in &self.rows {
                    if r.vec.bit(free) {
                        v.words[r.pivot / WORD] |= 1 << (r.pivot % WORD);
                    }
                }
                v
            })
            .collect()
    }
}

/// Rank of a matrix.
pub fn rank(m: &F2Matrix) -> usize {
    m.rank()
}

/// A spanning set of the right kernel of `m`.
pub fn kernel_basis(m: &F2Matrix) -> Vec<F2Vector> {
    m.kernel_basis()
}

/// Tests whether `v` lies in the span of `space`. On success returns the
/// indices of a subset of `space` summing to `v`.
pub fn member(space: &[F2Vector], v: &F2Vector) -> Result<Option<Vec<usize>>> {
    let mut e = Echelon::new(v.len());
    for s in space {
        e.insert(s.clone())?;
    }
    let r = e.reduce(v)?;
    Ok(r.remainder.is_zero().then_some(r.combination))
}

/// Sums the vectors of `space` selected by `indices`, as an [`F2Sum`] check
/// helper for membership certificates.
pub fn sum_of(space: &[F2Vector], indices: &[usize], len: usize) -> Result<F2Vector> {
    let mut out = F2Vector::zeros(len);
    let picked: F2Sum<usize> = indices.iter().copied().collect();
    for &i in &picked {
        let v = space.get(i).ok_or(Error::IndexOutOfRange {
            index: i,
            len: space.len(),
        })?;
        out.try_add_assign(v)?;
    }
    Ok(out)
}

/// `space_dim - rank(sub)`.
pub fn quotient_dim(space_dim: usize, sub: &[F2Vector]) -> Result<usize> {
    let mut e = Echelon::new(space_dim);
    for s in sub {
        e.insert(s.clone())?;
    }
    Ok(space_dim - e.rank())
}
