//! The explicit basis of `K̃(n)_*(BO(q))` and `K̃(n)_*(MO(q))`.
//!
//! Basis elements are products `b_{2i_1}···b_{2i_k} c_{4j_1}···c_{4j_m}`
//! with `0 < i_s < 2^n ≤ j_t`, of width `k + 2m`. `BO(q)` takes all widths
//! `1..=q`, `MO(q)` exactly width `q`. The class `c_{4j}` is detected by
//! `b_{2j}^2` in the spectral sequence but is not a product in K-theory, so
//! it is kept as its own index here.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::partitions;
use crate::qn_action::MoravaParams;

/// A basis monomial. `b_part` holds the `i` of each `b_{2i}`, `c_part` the
/// `j` of each `c_{4j}`. The empty monomial is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BcMonomial {
    b_part: Vec<u32>,
    c_part: Vec<u32>,
}

impl BcMonomial {
    pub fn new(params: MoravaParams, mut b_part: Vec<u32>, mut c_part: Vec<u32>) -> Result<Self> {
        b_part.sort_unstable();
        c_part.sort_unstable();
        let m = Self { b_part, c_part };
        if m.is_unit() {
            return Err(Error::Domain("a basis monomial needs width at least 1".into()));
        }
        m.validate(params)?;
        Ok(m)
    }

    pub fn unit() -> Self {
        Self {
            b_part: Vec::new(),
            c_part: Vec::new(),
        }
    }

    pub(crate) fn from_sorted(b_part: Vec<u32>, c_part: Vec<u32>) -> Self {
        debug_assert!(b_part.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(c_part.windows(2).all(|w| w[0] <= w[1]));
        Self { b_part, c_part }
    }

    /// Checks the index bounds `0 < i < 2^n ≤ j`.
    pub fn validate(&self, params: MoravaParams) -> Result<()> {
        let top = params.two_pow_n();
        if let Some(i) = self.b_part.iter().find(|&&i| i == 0 || i >= top) {
            return Err(Error::Domain(format!(
                "b_{} is not a generator for n = {} (need 0 < i < {top})",
                2 * i,
                params.n()
            )));
        }
        if let Some(j) = self.c_part.iter().find(|&&j| j < top) {
            return Err(Error::Domain(format!(
                "c_{} is not a generator for n = {} (need j >= {top})",
                4 * j,
                params.n()
            )));
        }
        Ok(())
    }

    pub fn b_part(&self) -> &[u32] {
        &self.b_part
    }

    pub fn c_part(&self) -> &[u32] {
        &self.c_part
    }

    pub fn is_unit(&self) -> bool {
        self.b_part.is_empty() && self.c_part.is_empty()
    }

    pub fn degree(&self) -> u32 {
        2 * self.b_part.iter().sum::<u32>() + 4 * self.c_part.iter().sum::<u32>()
    }

    /// `k + 2m`: the number of `b`-factors a representative has in
    /// `H_*(BO)`.
    pub fn width(&self) -> usize {
        self.b_part.len() + 2 * self.c_part.len()
    }

    /// Multiset union of the indices.
    pub fn mul(&self, other: &Self) -> Self {
        Self {
            b_part: merge(&self.b_part, &other.b_part),
            c_part: merge(&self.c_part, &other.c_part),
        }
    }
}

fn merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        if a[i] <= b[j] {
            out.push(a[i]);
            i += 1;
        } else {
            out.push(b[j]);
            j += 1;
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Ordered by width, then the `b` indices, then the `c` indices.
impl Ord for BcMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.width()
            .cmp(&other.width())
            .then_with(|| self.b_part.cmp(&other.b_part))
            .then_with(|| self.c_part.cmp(&other.c_part))
    }
}

impl PartialOrd for BcMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BcMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return write!(f, "1");
        }
        let factors = self
            .b_part
            .iter()
            .map(|i| format!("b{}", 2 * i))
            .chain(self.c_part.iter().map(|j| format!("c{}", 4 * j)));
        for (k, s) in factors.enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

fn push_width(params: MoravaParams, width: usize, d: u32, out: &mut Vec<BcMonomial>) {
    let top = params.two_pow_n();
    for m in 0..=width / 2 {
        let k = width - 2 * m;
        let max_c_sum = d / 4;
        let min_c_sum = m as u32 * top;
        if m > 0 && min_c_sum > max_c_sum {
            continue;
        }
        let c_sums = if m == 0 { 0..=0 } else { min_c_sum..=max_c_sum };
        for c_sum in c_sums {
            let b_sum = (d - 4 * c_sum) / 2;
            let mut cs = Vec::new();
            partitions::for_each_bounded(c_sum, m, top, u32::MAX, &mut |p| cs.push(p.to_vec()));
            if cs.is_empty() {
                continue;
            }
            let mut bs = Vec::new();
            partitions::for_each_bounded(b_sum, k, 1, top - 1, &mut |p| bs.push(p.to_vec()));
            for b in &bs {
                for c in &cs {
                    out.push(BcMonomial::from_sorted(b.clone(), c.clone()));
                }
            }
        }
    }
}

/// All basis monomials of degree `d` and width exactly `q` (`exact`, the
/// `MO(q)` case) or width `1..=q` (`BO(q)`), in canonical order. Odd
/// degrees are empty.
pub fn enumerate_basis(params: MoravaParams, q: usize, d: u32, exact: bool) -> Vec<BcMonomial> {
    let mut out = Vec::new();
    if d % 2 == 1 || q == 0 {
        return out;
    }
    let widths = if exact { q..=q } else { 1..=q };
    for w in widths {
        push_width(params, w, d, &mut out);
    }
    out.sort();
    out
}

/// Number of basis monomials in each even degree `2..=max_degree`.
pub fn poincare_counts(
    params: MoravaParams,
    q: usize,
    max_degree: u32,
    exact: bool,
) -> BTreeMap<u32, usize> {
    (2..=max_degree)
        .step_by(2)
        .map(|d| (d, enumerate_basis(params, q, d, exact).len()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32) -> MoravaParams {
        MoravaParams::new(n).unwrap()
    }

    fn names(v: &[BcMonomial]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn basis_examples() {
        assert_eq!(names(&enumerate_basis(p(1), 2, 4, true)), ["b2*b2"]);
        assert_eq!(names(&enumerate_basis(p(1), 2, 8, true)), ["c8"]);
        assert_eq!(names(&enumerate_basis(p(2), 1, 6, false)), ["b6"]);
        assert!(enumerate_basis(p(1), 3, 7, false).is_empty());
    }

    #[test]
    fn poincare_examples() {
        let c = poincare_counts(p(1), 1, 6, false);
        assert_eq!(c, BTreeMap::from([(2, 1), (4, 0), (6, 0)]));
        let c = poincare_counts(p(1), 2, 8, true);
        assert_eq!(c, BTreeMap::from([(2, 0), (4, 1), (6, 0), (8, 1)]));
        assert!(poincare_counts(p(2), 3, 0, false).is_empty());
    }

    /// Coefficients of `Π_{0<i<2^n} 1/(1 - t^{2i} y) · Π_{j≥2^n} 1/(1 - t^{4j} y^2)`
    /// up to t^max and y^q, indexed `[degree][width]`.
    fn generating_function(params: MoravaParams, q: usize, max: usize) -> Vec<Vec<u64>> {
        let mut series = vec![vec![0u64; q + 1]; max + 1];
        series[0][0] = 1;
        let top = params.two_pow_n() as usize;
        let mut factors: Vec<(usize, usize)> = (1..top).map(|i| (2 * i, 1)).collect();
        factors.extend((top..).map(|j| (4 * j, 2)).take_while(|&(deg, _)| deg <= max));
        for (deg, wid) in factors {
            if deg > max {
                continue;
            }
            // multiply by the geometric series in t^deg y^wid
            for d in deg..=max {
                for w in wid..=q {
                    series[d][w] += series[d - deg][w - wid];
                }
            }
        }
        series
    }

    #[test]
    fn counts_match_generating_function() {
        for n in 1..=3 {
            let k = p(n);
            for q in 1..=5 {
                let gf = generating_function(k, q, 60);
                for d in (2..=60u32).step_by(2) {
                    let row = &gf[d as usize];
                    assert_eq!(enumerate_basis(k, q, d, true).len() as u64, row[q]);
                    let cumulative: u64 = row[1..=q].iter().sum();
                    assert_eq!(enumerate_basis(k, q, d, false).len() as u64, cumulative);
                }
            }
        }
    }

    #[test]
    fn cumulative_is_union_of_exact() {
        let k = p(2);
        for d in (2..=40).step_by(2) {
            let mut union: Vec<BcMonomial> =
                (1..=4).flat_map(|w| enumerate_basis(k, w, d, true)).collect();
            union.sort();
            assert_eq!(union, enumerate_basis(k, 4, d, false));
        }
    }

    #[test]
    fn width_one_is_bo1() {
        for n in 1..=4 {
            let k = p(n);
            for d in (2..=(4 * k.two_pow_n())).step_by(2) {
                let b = enumerate_basis(k, 1, d, true);
                let expected = usize::from(d < 2 * k.two_pow_n());
                assert_eq!(b.len(), expected);
                assert!(b.iter().all(|m| m.c_part().is_empty()));
            }
        }
    }

    #[test]
    fn elements_are_valid_and_sorted() {
        let k = p(1);
        let v = enumerate_basis(k, 4, 24, false);
        assert!(v.windows(2).all(|w| w[0] < w[1]));
        for m in &v {
            m.validate(k).unwrap();
            assert_eq!(m.degree(), 24);
            assert!((1..=4).contains(&m.width()));
        }
    }

    #[test]
    fn construction_checks_bounds() {
        assert!(BcMonomial::new(p(1), vec![2], vec![]).is_err());
        assert!(BcMonomial::new(p(1), vec![], vec![1]).is_err());
        assert!(BcMonomial::new(p(1), vec![], vec![]).is_err());
        let m = BcMonomial::new(p(2), vec![3, 1], vec![5]).unwrap();
        assert_eq!(m.to_string(), "b2*b6*c20");
        assert_eq!(m.degree(), 28);
        assert_eq!(m.width(), 4);
        assert_eq!(BcMonomial::unit().to_string(), "1");
    }
}
