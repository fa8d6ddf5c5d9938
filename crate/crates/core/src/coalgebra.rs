//! The coproduct on the `b_{2i}`/`c_{4j}` basis, modulo `v_n`.
//!
//! On generators:
//!
//! - `ψ(b_{2p}) = Σ_{i+j=p} b_{2i} ⊗ b_{2j}` for `p < 2^n`, with `b_0 = 1`;
//! - `ψ(c_{4p}) = Σ_{i+j=p} b_{2i}^2 ⊗ b_{2j}^2`, where a square with
//!   `i ≥ 2^n` is renamed `c_{4i}` and a square with `0 < i < 2^n` is the
//!   product `b_{2i} b_{2i}`.
//!
//! The coproduct is extended multiplicatively. Only the reduction mod `v_n`
//! is known, so nothing here claims more than that.

use std::fmt;

use crate::error::Result;
use crate::f2sum::F2Sum;
use crate::morava_basis::{self, BcMonomial};
use crate::qn_action::MoravaParams;

/// `left ⊗ right`; either side may be the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorTerm {
    pub left: BcMonomial,
    pub right: BcMonomial,
}

impl TensorTerm {
    pub fn new(left: BcMonomial, right: BcMonomial) -> Self {
        Self { left, right }
    }

    pub fn swap(&self) -> Self {
        Self::new(self.right.clone(), self.left.clone())
    }

    fn mul(&self, other: &Self) -> Self {
        Self::new(self.left.mul(&other.left), self.right.mul(&other.right))
    }
}

impl fmt::Display for TensorTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.left, self.right)
    }
}

/// `b_{2i}^2` written in the basis.
fn square(params: MoravaParams, i: u32) -> BcMonomial {
    if i == 0 {
        BcMonomial::unit()
    } else if i < params.two_pow_n() {
        BcMonomial::from_sorted(vec![i, i], Vec::new())
    } else {
        BcMonomial::from_sorted(Vec::new(), vec![i])
    }
}

fn b_power(i: u32) -> BcMonomial {
    if i == 0 {
        BcMonomial::unit()
    } else {
        BcMonomial::from_sorted(vec![i], Vec::new())
    }
}

fn psi_b(params: MoravaParams, p: u32) -> F2Sum<TensorTerm> {
    let top = params.two_pow_n();
    (0..=p)
        // an index at or past 2^n on a bare b carries a factor of v_n
        .filter(|&i| i < top && p - i < top)
        .map(|i| TensorTerm::new(b_power(i), b_power(p - i)))
        .collect()
}

fn psi_c(params: MoravaParams, p: u32) -> F2Sum<TensorTerm> {
    (0..=p)
        .map(|i| TensorTerm::new(square(params, i), square(params, p - i)))
        .collect()
}

fn product(a: &F2Sum<TensorTerm>, b: &F2Sum<TensorTerm>) -> F2Sum<TensorTerm> {
    let mut out = F2Sum::zero();
    for x in a {
        for y in b {
            out.toggle(x.mul(y));
        }
    }
    out
}

/// `ψ(m)` modulo `v_n`, reduced mod 2. The unit maps to `1 ⊗ 1`.
pub fn coproduct(params: MoravaParams, m: &BcMonomial) -> Result<F2Sum<TensorTerm>> {
    m.validate(params)?;
    let mut acc = F2Sum::single(TensorTerm::new(BcMonomial::unit(), BcMonomial::unit()));
    for &i in m.b_part() {
        acc = product(&acc, &psi_b(params, i));
    }
    for &j in m.c_part() {
        acc = product(&acc, &psi_c(params, j));
    }
    Ok(acc)
}

type Triple = (BcMonomial, BcMonomial, BcMonomial);

fn psi_left(params: MoravaParams, s: &F2Sum<TensorTerm>) -> Result<F2Sum<Triple>> {
    let mut out = F2Sum::zero();
    for t in s {
        for u in &coproduct(params, &t.left)? {
            out.toggle((u.left.clone(), u.right.clone(), t.right.clone()));
        }
    }
    Ok(out)
}

fn psi_right(params: MoravaParams, s: &F2Sum<TensorTerm>) -> Result<F2Sum<Triple>> {
    let mut out = F2Sum::zero();
    for t in s {
        for u in &coproduct(params, &t.right)? {
            out.toggle((t.left.clone(), u.left.clone(), u.right.clone()));
        }
    }
    Ok(out)
}

/// Which structural law failed on which element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LawFailure {
    pub element: BcMonomial,
    pub law: &'static str,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraReport {
    pub q: usize,
    pub max_degree: u32,
    pub checked: usize,
    pub failures: Vec<LawFailure>,
}

impl CoalgebraReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks the coalgebra laws on one element: coassociativity, both counit
/// laws, cocommutativity, preservation of degree, and that neither tensor
/// factor is wider than the element.
pub fn check_element(params: MoravaParams, m: &BcMonomial) -> Result<Vec<&'static str>> {
    let psi = coproduct(params, m)?;
    let mut broken = Vec::new();

    if psi_left(params, &psi)? != psi_right(params, &psi)? {
        broken.push("coassociativity");
    }
    let unit = BcMonomial::unit();
    let left_counit: F2Sum<BcMonomial> = psi
        .iter()
        .filter(|t| t.left == unit)
        .map(|t| t.right.clone())
        .collect();
    let right_counit: F2Sum<BcMonomial> = psi
        .iter()
        .filter(|t| t.right == unit)
        .map(|t| t.left.clone())
        .collect();
    let expected = F2Sum::single(m.clone());
    if left_counit != expected {
        broken.push("left counit");
    }
    if right_counit != expected {
        broken.push("right counit");
    }
    if psi.map(TensorTerm::swap) != psi {
        broken.push("cocommutativity");
    }
    // the diagonal of BO(w) lands in BO(w) x BO(w)
    if psi
        .iter()
        .any(|t| t.left.width() > m.width() || t.right.width() > m.width())
    {
        broken.push("width");
    }
    if psi.iter().any(|t| t.left.degree() + t.right.degree() != m.degree()) {
        broken.push("degree");
    }
    Ok(broken)
}

/// Runs [`check_element`] on every basis element of `K̃(n)_*(BO(q))` of
/// degree at most `max_degree`.
pub fn check_coassociativity(params: MoravaParams, q: usize, max_degree: u32) -> CoalgebraReport {
    let mut checked = 0;
    let mut failures = Vec::new();
    for d in (2..=max_degree).step_by(2) {
        for m in morava_basis::enumerate_basis(params, q, d, false) {
            checked += 1;
            let laws = check_element(params, &m).expect("enumerated elements are valid");
            failures.extend(laws.into_iter().map(|law| LawFailure {
                element: m.clone(),
                law,
            }));
        }
    }
    CoalgebraReport {
        q,
        max_degree,
        checked,
        failures,
    }
}
