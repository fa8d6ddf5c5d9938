//! Degree-by-degree comparison of the three descriptions of
//! `K(n)_*(BO(q))`: the `Q_n`-homology of mod 2 homology, the
//! `b_{2i}`/`c_{4j}` basis, and the canonical basis of the symmetric
//! function quotient.
//!
//! Degree dictionary: homological degree `d` corresponds to symmetric
//! function weight `d / 2`, since each `x_i` has cohomological degree 2.
//! The homology side is reduced and the quotient ring is not, so weight 0
//! (the constant 1) is dropped; [`reduced_quotient_dim`] is the only place
//! where that happens.

use crate::error::{Error, Result};
use crate::morava_basis::{self, BcMonomial};
use crate::qn_action::{MoravaParams, QnOperator};
use crate::symfun::{self, Partition};

/// `b_{2i}` becomes a part `i`, `c_{4j}` becomes two parts `j, j`.
pub fn to_partition(m: &BcMonomial) -> Partition {
    let mut parts = m.b_part().to_vec();
    for &j in m.c_part() {
        parts.push(j);
        parts.push(j);
    }
    Partition::new(parts)
}

/// Inverse of [`to_partition`] on canonical partitions: values below `2^n`
/// stay `b`s, equal pairs of values at or above `2^n` become `c`s.
pub fn from_partition(params: MoravaParams, lam: &Partition) -> Result<BcMonomial> {
    if !symfun::is_canonical(params, lam) {
        return Err(Error::Domain(format!(
            "{lam} is not canonical for n = {}",
            params.n()
        )));
    }
    let top = params.two_pow_n();
    let mut b = Vec::new();
    let mut c = Vec::new();
    for (value, mult) in lam.multiplicities() {
        if value < top {
            b.extend(std::iter::repeat_n(value, mult));
        } else {
            c.extend(std::iter::repeat_n(value, mult / 2));
        }
    }
    b.sort_unstable();
    c.sort_unstable();
    Ok(BcMonomial::from_sorted(b, c))
}

/// Images under [`to_partition`] of the `BO(q)` basis in degree `2w`,
/// sorted in canonical partition order.
pub fn partition_image(params: MoravaParams, q: usize, w: u32) -> Vec<Partition> {
    let mut v: Vec<Partition> = morava_basis::enumerate_basis(params, q, 2 * w, false)
        .iter()
        .map(to_partition)
        .collect();
    v.sort();
    v
}

/// Quotient dimension in weight `w` with the unit removed at weight 0.
pub fn reduced_quotient_dim(params: MoravaParams, q: usize, w: u32) -> usize {
    let dim = symfun::quotient_report(params, q, w).quotient_dim;
    if w == 0 {
        dim.saturating_sub(1)
    } else {
        dim
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReconcileRow {
    pub degree: u32,
    pub qn_homology_dim: usize,
    pub theorem12_count: usize,
    pub canonical_count: usize,
}

impl ReconcileRow {
    pub fn passed(&self) -> bool {
        self.qn_homology_dim == self.theorem12_count && self.theorem12_count == self.canonical_count
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconcileReport {
    pub params: MoravaParams,
    pub q: usize,
    pub max_degree: u32,
    pub rows: Vec<ReconcileRow>,
}

impl ReconcileReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(ReconcileRow::passed)
    }

    pub fn failing_degrees(&self) -> Vec<u32> {
        self.rows
            .iter()
            .filter(|r| !r.passed())
            .map(|r| r.degree)
            .collect()
    }
}

/// One row of the comparison for an even degree `d`.
pub fn reconcile_row(op: &QnOperator, q: usize, d: u32) -> ReconcileRow {
    let params = op.params();
    ReconcileRow {
        degree: d,
        qn_homology_dim: op.homology(q, d, false).homology_dim,
        theorem12_count: morava_basis::enumerate_basis(params, q, d, false).len(),
        canonical_count: reduced_quotient_dim(params, q, d / 2),
    }
}

/// Compares the three counts in every even degree `2..=max_degree`.
pub fn verify_all(params: MoravaParams, q: usize, max_degree: u32) -> ReconcileReport {
    verify_with(&QnOperator::milnor(params), q, max_degree)
}

/// [`verify_all`] with an arbitrary (possibly wrong) `Q_n` table.
pub fn verify_with(op: &QnOperator, q: usize, max_degree: u32) -> ReconcileReport {
    ReconcileReport {
        params: op.params(),
        q,
        max_degree,
        rows: (2..=max_degree)
            .step_by(2)
            .map(|d| reconcile_row(op, q, d))
            .collect(),
    }
}
