use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;

use morava_bo::f2linalg::{self, F2Matrix, F2Vector};
use morava_bo::qn_action::MoravaParams;
use morava_bo::reconcile;
use morava_bo::symfun::{self, Partition, SpanOrder, SymPoly};

fn matrix() -> impl Strategy<Value = F2Matrix> {
    (0usize..10, 0usize..90).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(0u8..2, c), r).prop_map(move |rows| {
            let refs: Vec<&[u8]> = rows.iter().map(Vec::as_slice).collect();
            if refs.is_empty() {
                F2Matrix::zeros(0, c)
            } else {
                F2Matrix::from_bits(&refs).unwrap()
            }
        })
    })
}

fn partition(q: usize, max_weight: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=max_weight, q)
        .prop_filter("weight bound", move |v| v.iter().sum::<u32>() <= max_weight)
        .prop_map(Partition::new)
}

/// Every distinct exponent vector obtained by permuting `lam` padded to `q`.
fn monomials(q: usize, lam: &Partition) -> BTreeSet<Vec<u32>> {
    let mut v = lam.parts().to_vec();
    v.resize(q, 0);
    let mut out = BTreeSet::new();
    permute(&mut v, 0, &mut out);
    out
}

fn permute(v: &mut Vec<u32>, k: usize, out: &mut BTreeSet<Vec<u32>>) {
    if k == v.len() {
        out.insert(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permute(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Multiplies the expanded polynomials and reads off the coefficient of
/// each sorted exponent vector.
fn brute_product(q: usize, a: &Partition, b: &Partition) -> BTreeSet<Partition> {
    let mut coeff: BTreeMap<Vec<u32>, u32> = BTreeMap::new();
    for x in monomials(q, a) {
        for y in monomials(q, b) {
            let z: Vec<u32> = x.iter().zip(&y).map(|(s, t)| s + t).collect();
            *coeff.entry(z).or_default() += 1;
        }
    }
    coeff
        .into_iter()
        .filter(|(e, c)| c % 2 == 1 && e.windows(2).all(|w| w[0] >= w[1]))
        .map(|(e, _)| Partition::new(e))
        .collect()
}

fn terms(p: &SymPoly) -> BTreeSet<Partition> {
    p.terms().iter().cloned().collect()
}

fn sym(q: usize, lam: &Partition) -> SymPoly {
    SymPoly::monomial(q, lam.clone()).unwrap()
}

proptest! {
    #[test]
    fn rank_of_transpose(m in matrix()) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn rank_nullity(m in matrix()) {
        let kernel = m.kernel_basis();
        prop_assert_eq!(kernel.len() + m.rank(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn subset_sums_are_members(m in matrix(), picks in prop::collection::vec(any::<bool>(), 10)) {
        let rows: Vec<F2Vector> = (0..m.rows()).map(|i| m.row(i).unwrap().clone()).collect();
        let chosen: Vec<usize> = (0..rows.len()).filter(|&i| picks[i]).collect();
        let v = f2linalg::sum_of(&rows, &chosen, m.cols()).unwrap();
        let cert = f2linalg::member(&rows, &v).unwrap();
        prop_assert!(cert.is_some());
        let back = f2linalg::sum_of(&rows, &cert.unwrap(), m.cols()).unwrap();
        prop_assert_eq!(back, v);
    }

    #[test]
    fn product_matches_expansion(q in 1usize..=3, a in partition(3, 6), b in partition(3, 6)) {
        prop_assume!(a.len() <= q && b.len() <= q);
        let p = symfun::msym_product(q, &a, &b).unwrap();
        prop_assert_eq!(terms(&p), brute_product(q, &a, &b));
    }

    #[test]
    fn product_is_commutative_and_unital(q in 1usize..=3, a in partition(3, 6), b in partition(3, 6)) {
        prop_assume!(a.len() <= q && b.len() <= q);
        prop_assert_eq!(
            symfun::msym_product(q, &a, &b).unwrap(),
            symfun::msym_product(q, &b, &a).unwrap()
        );
        prop_assert_eq!(symfun::msym_product(q, &a, &Partition::empty()).unwrap(), sym(q, &a));
    }

    #[test]
    fn product_is_associative(
        q in 1usize..=3,
        a in partition(3, 4),
        b in partition(3, 4),
        c in partition(3, 4),
    ) {
        prop_assume!(a.len() <= q && b.len() <= q && c.len() <= q);
        let (a, b, c) = (sym(q, &a), sym(q, &b), sym(q, &c));
        prop_assert_eq!(a.mul(&b).unwrap().mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
    }

    #[test]
    fn canonical_form_ignores_span_order(n in 1u32..=2, q in 1usize..=3, lam in partition(3, 10)) {
        prop_assume!(lam.len() <= q && lam.weight() > 0);
        let params = MoravaParams::new(n).unwrap();
        let p = sym(q, &lam);
        let fwd = symfun::reduce_to_canonical_with(params, q, &p, SpanOrder::Natural).unwrap();
        let rev = symfun::reduce_to_canonical_with(params, q, &p, SpanOrder::Reversed).unwrap();
        prop_assert_eq!(&fwd.canonical, &rev.canonical);
        for t in fwd.canonical.terms().iter() {
            prop_assert!(symfun::is_canonical(params, t));
        }
        // p minus its canonical part is the certified ideal element
        let mut ideal = SymPoly::zero(q);
        for g in &fwd.certificate {
            ideal = ideal.add(&g.product).unwrap();
        }
        prop_assert_eq!(ideal.add(&fwd.canonical).unwrap(), p);
    }
}

#[test]
fn verify_all_passes_past_the_onset() {
    for n in 1..=2 {
        let params = MoravaParams::new(n).unwrap();
        let max = (1u32 << (n + 2)) + 16;
        for q in 1..=4 {
            let r = reconcile::verify_all(params, q, max);
            assert!(r.passed(), "n={n} q={q} fails at {:?}", r.failing_degrees());
        }
    }
}

#[test]
fn partition_image_is_the_canonical_set() {
    for n in 1..=2 {
        let params = MoravaParams::new(n).unwrap();
        for q in 1..=4 {
            for w in 1..=14 {
                assert_eq!(
                    reconcile::partition_image(params, q, w),
                    symfun::enumerate_canonical(params, q, w),
                    "n={n} q={q} w={w}"
                );
            }
        }
    }
}
