//! Monomial symmetric functions over F_2 and the relation ideal of the
//! cohomology quotient ring.
//!
//! `m_λ` is the sum of all distinct monomials `x^α` in `q` variables whose
//! exponent vector `α` is a rearrangement of `λ` padded with zeros. The
//! elementary symmetric functions are `c_k = m_(1^k)`.
//!
//! Modulo `v_n^2` the relation `c_k - c_k^*` has `v_n`-coefficient
//! `m_(2^n, 1^(k-1))`. Everything in this module works with those leading
//! terms: they generate a homogeneous ideal of the ring of symmetric
//! polynomials whose quotient has, weight by weight, the same dimension as
//! the actual (completed, filtered) quotient ring. Higher-order tails of the
//! relations move representatives around but not dimensions.
//!
//! A partition is canonical when every value of odd multiplicity is below
//! `2^n`: split off the equal pairs as `J`, and the distinct leftover values
//! form `I`. Canonical partitions with at most `q` parts are a basis of the
//! quotient in each weight. Partitions with fewer than `q` parts stand for
//! exponent vectors with zero entries.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::f2linalg::{self, Echelon, F2Vector};
use crate::f2sum::F2Sum;
use crate::partitions;
use crate::qn_action::MoravaParams;

/// A partition, stored with parts in nonincreasing order. The empty
/// partition indexes the constant `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Builds a partition from exponents in any order; zero exponents are
    /// dropped.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self { parts: Vec::new() }
    }

    /// `(1^k)`, indexing the elementary symmetric function `c_k`.
    pub fn ones(k: usize) -> Self {
        Self { parts: vec![1; k] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `(value, multiplicity)` pairs, largest value first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    fn padded(&self, q: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(q, 0);
        v
    }
}

/// Partitions with the larger leading part come first:
/// `(5) < (4,1) < (3,2) < (3,1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        other.parts.cmp(&self.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "1");
        }
        write!(f, "m(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// An F_2-combination of monomial symmetric functions in `q` variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymPoly {
    q: usize,
    terms: F2Sum<Partition>,
}

impl SymPoly {
    pub fn zero(q: usize) -> Self {
        Self {
            q,
            terms: F2Sum::zero(),
        }
    }

    pub fn monomial(q: usize, lam: Partition) -> Result<Self> {
        Self::from_terms(q, [lam])
    }

    pub fn from_terms(q: usize, terms: impl IntoIterator<Item = Partition>) -> Result<Self> {
        let terms: F2Sum<Partition> = terms.into_iter().collect();
        if let Some(t) = terms.iter().find(|t| t.len() > q) {
            return Err(Error::Domain(format!("{t} has more than {q} parts")));
        }
        Ok(Self { q, terms })
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn terms(&self) -> &F2Sum<Partition> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_zero()
    }

    /// The common weight of all terms; `None` for zero. Errors if the terms
    /// have different weights.
    pub fn homogeneous_weight(&self) -> Result<Option<u32>> {
        let mut weights = self.terms.iter().map(Partition::weight);
        let Some(w) = weights.next() else {
            return Ok(None);
        };
        if weights.any(|x| x != w) {
            return Err(Error::Domain(format!("{self} is not homogeneous")));
        }
        Ok(Some(w))
    }

    pub fn add(&self, other: &SymPoly) -> Result<SymPoly> {
        self.same_ring(other)?;
        let mut terms = self.terms.clone();
        terms.add_assign(other.terms.clone());
        Ok(Self { q: self.q, terms })
    }

    pub fn mul(&self, other: &SymPoly) -> Result<SymPoly> {
        self.same_ring(other)?;
        let mut out = F2Sum::zero();
        for a in &self.terms {
            for b in &other.terms {
                out.add_assign(product_terms(self.q, a, b));
            }
        }
        Ok(Self {
            q: self.q,
            terms: out,
        })
    }

    fn same_ring(&self, other: &SymPoly) -> Result<()> {
        if self.q != other.q {
            return Err(Error::Domain(format!(
                "symmetric functions in {} and {} variables do not mix",
                self.q, other.q
            )));
        }
        Ok(())
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.terms)
    }
}

/// Advances `v` to the next lexicographic permutation; false when `v` was
/// the last one.
fn next_permutation(v: &mut [u32]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Counts, for `λ` the sorted sum, the pairs (α, β) of rearrangements of `a`
/// and `b` with `α + β = λ` exactly; only the parity matters.
fn product_terms(q: usize, a: &Partition, b: &Partition) -> F2Sum<Partition> {
    let mut alpha = a.padded(q);
    alpha.sort_unstable();

    // b's values and their multiplicities, zeros included
    let mut b_counts: Vec<(u32, usize)> = Vec::new();
    let mut bp = b.padded(q);
    bp.sort_unstable();
    for v in bp {
        match b_counts.last_mut() {
            Some((x, c)) if *x == v => *c += 1,
            _ => b_counts.push((v, 1)),
        }
    }

    let mut parity: HashMap<Vec<u32>, bool> = HashMap::new();
    let mut gamma = Vec::with_capacity(q);
    loop {
        fill(&alpha, &mut b_counts, &mut gamma, &mut parity);
        if !next_permutation(&mut alpha) {
            break;
        }
    }
    parity
        .into_iter()
        .filter(|&(_, odd)| odd)
        .map(|(g, _)| Partition::new(g))
        .collect()
}

fn fill(
    alpha: &[u32],
    b_counts: &mut [(u32, usize)],
    gamma: &mut Vec<u32>,
    parity: &mut HashMap<Vec<u32>, bool>,
) {
    let pos = gamma.len();
    if pos == alpha.len() {
        let e = parity.entry(gamma.clone()).or_insert(false);
        *e = !*e;
        return;
    }
    for k in 0..b_counts.len() {
        if b_counts[k].1 == 0 {
            continue;
        }
        let g = alpha[pos] + b_counts[k].0;
        // only nonincreasing sums are the leading representatives
        if pos > 0 && g > gamma[pos - 1] {
            continue;
        }
        b_counts[k].1 -= 1;
        gamma.push(g);
        fill(alpha, b_counts, gamma, parity);
        gamma.pop();
        b_counts[k].1 += 1;
    }
}

/// `m_a · m_b` in `q` variables, collected into monomial symmetric
/// functions mod 2.
pub fn msym_product(q: usize, a: &Partition, b: &Partition) -> Result<SymPoly> {
    for x in [a, b] {
        if x.len() > q {
            return Err(Error::Domain(format!("{x} has more than {q} parts")));
        }
    }
    Ok(SymPoly {
        q,
        terms: product_terms(q, a, b),
    })
}

/// The `v_n`-coefficient `(2^n, 1^(k-1))` of `c_k - c_k^*` modulo `v_n^2`.
pub fn relation_element(params: MoravaParams, k: usize, q: usize) -> Result<Partition> {
    if k == 0 || k > q {
        return Err(Error::Domain(format!("relation index k = {k} must satisfy 1 <= k <= q = {q}")));
    }
    let mut parts = vec![1; k];
    parts[0] = params.two_pow_n();
    Ok(Partition { parts })
}

/// Checks `m_(2^n, 1^(q-1)) = c_q · m_(2^n - 1)` in `q` variables.
pub fn factor_check(params: MoravaParams, q: usize) -> bool {
    if q == 0 {
        return false;
    }
    let lhs = Partition::new(vec![params.two_pow_n() - 1]);
    let Ok(prod) = msym_product(q, &Partition::ones(q), &lhs) else {
        return false;
    };
    let Ok(rel) = relation_element(params, q, q) else {
        return false;
    };
    prod.terms == F2Sum::single(rel)
}

/// Every value of odd multiplicity is below `2^n`.
pub fn is_canonical(params: MoravaParams, lam: &Partition) -> bool {
    lam.multiplicities()
        .iter()
        .all(|&(v, c)| c % 2 == 0 || v < params.two_pow_n())
}

/// All partitions of `w` with at most `q` parts, in canonical order. These
/// index the coordinates of the weight-`w` slice.
pub fn weight_slice(q: usize, w: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    if w == 0 {
        out.push(Partition::empty());
        return out;
    }
    for len in 1..=q.min(w as usize) {
        partitions::for_each_bounded(w, len, 1, u32::MAX, &mut |p| {
            let mut parts = p.to_vec();
            parts.reverse();
            out.push(Partition { parts });
        });
    }
    out.sort();
    out
}

pub fn enumerate_canonical(params: MoravaParams, q: usize, w: u32) -> Vec<Partition> {
    weight_slice(q, w)
        .into_iter()
        .filter(|lam| is_canonical(params, lam))
        .collect()
}

/// One spanning element `m_μ · g_k` of a weight slice of the ideal, where
/// `g_k` is [`relation_element`] `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealProduct {
    pub k: usize,
    pub multiplier: Partition,
    pub product: SymPoly,
}

impl fmt::Display for IdealProduct {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.multiplier.is_empty() {
            write!(f, "g{}", self.k)
        } else {
            write!(f, "g{}*{}", self.k, self.multiplier)
        }
    }
}

/// The products `m_μ · g_k` of weight `w`, for `k = 1..=q` and every `μ`
/// with at most `q` parts, ordered by `k` and then `μ`.
pub fn ideal_products(params: MoravaParams, q: usize, w: u32) -> Vec<IdealProduct> {
    let mut out = Vec::new();
    for k in 1..=q {
        let g = relation_element(params, k, q).expect("k in range");
        let Some(rest) = w.checked_sub(g.weight()) else {
            continue;
        };
        for mu in weight_slice(q, rest) {
            let product = msym_product(q, &mu, &g).expect("both factors fit in q variables");
            out.push(IdealProduct {
                k,
                multiplier: mu,
                product,
            });
        }
    }
    out
}

fn coordinates(slice: &[Partition], p: &SymPoly) -> Result<F2Vector> {
    F2Vector::from_support(
        slice.len(),
        p.terms.iter().map(|t| {
            slice
                .binary_search(t)
                .expect("terms of a homogeneous poly lie in its weight slice")
        }),
    )
}

/// Spanning vectors of the weight-`w` slice of the ideal, in the
/// coordinates of [`weight_slice`].
pub fn ideal_slice(params: MoravaParams, q: usize, w: u32) -> Vec<F2Vector> {
    let slice = weight_slice(q, w);
    ideal_products(params, q, w)
        .iter()
        .map(|g| coordinates(&slice, &g.product).expect("slice coordinates"))
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientReport {
    pub weight: u32,
    pub slice_dim: usize,
    pub ideal_rank: usize,
    pub quotient_dim: usize,
}

pub fn quotient_report(params: MoravaParams, q: usize, w: u32) -> QuotientReport {
    let slice_dim = weight_slice(q, w).len();
    let quotient_dim =
        f2linalg::quotient_dim(slice_dim, &ideal_slice(params, q, w)).expect("slice coordinates");
    QuotientReport {
        weight: w,
        slice_dim,
        ideal_rank: slice_dim - quotient_dim,
        quotient_dim,
    }
}

/// `p = canonical + (sum of certificate products)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalReduction {
    pub canonical: SymPoly,
    pub certificate: Vec<IdealProduct>,
}

/// Order in which the spanning set is fed to the elimination.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpanOrder {
    Natural,
    Reversed,
}

/// Writes a homogeneous `p` as a combination of canonical monomial
/// symmetric functions plus an element of the ideal, with the ideal part
/// certified by a subset of [`ideal_products`].
pub fn reduce_to_canonical(params: MoravaParams, q: usize, p: &SymPoly) -> Result<CanonicalReduction> {
    reduce_to_canonical_with(params, q, p, SpanOrder::Natural)
}

pub fn reduce_to_canonical_with(
    params: MoravaParams,
    q: usize,
    p: &SymPoly,
    order: SpanOrder,
) -> Result<CanonicalReduction> {
    if p.q != q {
        return Err(Error::Domain(format!(
            "polynomial is in {} variables, expected {q}",
            p.q
        )));
    }
    let Some(w) = p.homogeneous_weight()? else {
        return Ok(CanonicalReduction {
            canonical: SymPoly::zero(q),
            certificate: Vec::new(),
        });
    };
    let slice = weight_slice(q, w);
    let products = ideal_products(params, q, w);
    let canon: Vec<Partition> = slice
        .iter()
        .filter(|lam| is_canonical(params, lam))
        .cloned()
        .collect();

    // spanning set: ideal products, then canonical unit vectors
    let mut span: Vec<(Option<usize>, F2Vector)> = products
        .iter()
        .enumerate()
        .map(|(i, g)| Ok((Some(i), coordinates(&slice, &g.product)?)))
        .collect::<Result<_>>()?;
    for lam in &canon {
        let at = slice.binary_search(lam).expect("canonical partitions are in the slice");
        span.push((None, F2Vector::unit(slice.len(), at)?));
    }
    let labels: Vec<Option<usize>> = {
        if order == SpanOrder::Reversed {
            span.reverse();
        }
        span.iter().map(|(l, _)| *l).collect()
    };
    let mut e = Echelon::new(slice.len());
    for (_, v) in span.iter() {
        e.insert(v.clone())?;
    }
    let target = coordinates(&slice, p)?;
    let red = e.reduce(&target)?;
    if !red.remainder.is_zero() {
        return Err(Error::Domain(format!(
            "{p} is not spanned by canonical functions and the ideal in weight {w}"
        )));
    }

    let mut canonical = F2Sum::zero();
    let mut certificate = Vec::new();
    for i in red.combination {
        match labels[i] {
            Some(g) => certificate.push(products[g].clone()),
            None => canonical.toggle(slice[span[i].1.first_one().expect("unit vector")].clone()),
        }
    }
    certificate.sort_by(|a, b| (a.k, &a.multiplier).cmp(&(b.k, &b.multiplier)));
    Ok(CanonicalReduction {
        canonical: SymPoly {
            q,
            terms: canonical,
        },
        certificate,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: u32) -> MoravaParams {
        MoravaParams::new(n).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec())
    }

    fn names(s: &SymPoly) -> Vec<String> {
        s.terms().iter().map(ToString::to_string).collect()
    }

    fn names_of(v: &[Partition]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn partition_basics() {
        let lam = part(&[1, 0, 3, 1]);
        assert_eq!(lam.parts(), &[3, 1, 1]);
        assert_eq!(lam.weight(), 5);
        assert_eq!(lam.multiplicities(), vec![(3, 1), (1, 2)]);
        assert_eq!(lam.to_string(), "m(3,1,1)");
        assert_eq!(Partition::empty().to_string(), "1");
        let mut v = vec![part(&[3, 2]), part(&[5]), part(&[4, 1])];
        v.sort();
        assert_eq!(names_of(&v), ["m(5)", "m(4,1)", "m(3,2)"]);
    }

    #[test]
    fn product_examples() {
        let r = msym_product(2, &part(&[2]), &part(&[1])).unwrap();
        assert_eq!(names(&r), ["m(3)", "m(2,1)"]);
        let r = msym_product(2, &part(&[2]), &part(&[2])).unwrap();
        assert_eq!(names(&r), ["m(4)"]);
        for q in 1..=4 {
            let a = part(&[3, 1]);
            if a.len() <= q {
                assert_eq!(names(&msym_product(q, &a, &Partition::empty()).unwrap()), ["m(3,1)"]);
            }
        }
        assert!(msym_product(1, &part(&[1, 1]), &part(&[1])).is_err());
    }

    #[test]
    fn relation_examples() {
        assert_eq!(relation_element(p(1), 2, 2).unwrap(), part(&[2, 1]));
        assert_eq!(relation_element(p(1), 1, 1).unwrap(), part(&[2]));
        assert_eq!(relation_element(p(2), 3, 3).unwrap(), part(&[4, 1, 1]));
        assert!(relation_element(p(1), 3, 2).is_err());
        assert!(relation_element(p(1), 0, 2).is_err());
    }

    #[test]
    fn factor_examples() {
        assert!(factor_check(p(1), 2));
        assert!(factor_check(p(1), 1));
        assert!(factor_check(p(2), 2));
        assert!(!factor_check(p(1), 0));
    }

    #[test]
    fn canonical_examples() {
        assert!(is_canonical(p(1), &part(&[2, 2])));
        assert!(!is_canonical(p(1), &part(&[2, 1])));
        for n in 1..=4 {
            assert!(is_canonical(p(n), &part(&[1])));
        }
        assert_eq!(names_of(&enumerate_canonical(p(1), 2, 2)), ["m(1,1)"]);
        assert_eq!(names_of(&enumerate_canonical(p(1), 2, 4)), ["m(2,2)"]);
        assert!(enumerate_canonical(p(1), 2, 3).is_empty());
    }

    #[test]
    fn ideal_slice_examples() {
        // one variable, weight 3: m(1)·m(2) = m(3)
        let s = ideal_slice(p(1), 1, 3);
        assert_eq!(s, vec![F2Vector::from_bits(&[1])]);

        assert_eq!(names_of(&weight_slice(2, 2)), ["m(2)", "m(1,1)"]);
        let s = ideal_slice(p(1), 2, 2);
        assert_eq!(s, vec![F2Vector::from_bits(&[1, 0])]);

        assert_eq!(names_of(&weight_slice(2, 5)), ["m(5)", "m(4,1)", "m(3,2)"]);
        let s = ideal_slice(p(1), 2, 5);
        assert_eq!(s.len(), 4);
        assert_eq!(f2linalg::quotient_dim(3, &s).unwrap(), 0);
    }

    #[test]
    fn quotient_examples() {
        let r = quotient_report(p(1), 2, 4);
        assert_eq!((r.slice_dim, r.ideal_rank, r.quotient_dim), (3, 2, 1));
        let r = quotient_report(p(1), 1, 1);
        assert_eq!((r.slice_dim, r.ideal_rank, r.quotient_dim), (1, 0, 1));
        let r = quotient_report(p(1), 2, 3);
        assert_eq!((r.slice_dim, r.ideal_rank, r.quotient_dim), (2, 2, 0));
    }

    #[test]
    fn reduction_examples() {
        let k = p(1);
        let r = reduce_to_canonical(k, 2, &SymPoly::monomial(2, part(&[2, 1])).unwrap()).unwrap();
        assert!(r.canonical.is_zero());
        assert_eq!(r.certificate.len(), 1);
        assert_eq!(r.certificate[0].to_string(), "g2");

        let r = reduce_to_canonical(k, 2, &SymPoly::monomial(2, part(&[2, 2])).unwrap()).unwrap();
        assert_eq!(names(&r.canonical), ["m(2,2)"]);
        assert!(r.certificate.is_empty());

        let r = reduce_to_canonical(k, 2, &SymPoly::monomial(2, part(&[4])).unwrap()).unwrap();
        assert!(r.canonical.is_zero());
        assert_eq!(r.certificate.len(), 1);
        assert_eq!(r.certificate[0].to_string(), "g1*m(2)");
    }

    #[test]
    fn reduction_rejects_bad_input() {
        let k = p(1);
        let mixed = SymPoly::from_terms(2, [part(&[2]), part(&[1])]).unwrap();
        assert!(reduce_to_canonical(k, 2, &mixed).is_err());
        let wrong_q = SymPoly::monomial(3, part(&[2])).unwrap();
        assert!(reduce_to_canonical(k, 2, &wrong_q).is_err());
        assert!(SymPoly::monomial(1, part(&[1, 1])).is_err());
    }

    #[test]
    fn next_permutation_visits_distinct_arrangements() {
        let mut v = vec![0, 1, 1];
        let mut seen = vec![v.clone()];
        while next_permutation(&mut v) {
            seen.push(v.clone());
        }
        assert_eq!(seen, vec![vec![0, 1, 1], vec![1, 0, 1], vec![1, 1, 0]]);
    }
}
