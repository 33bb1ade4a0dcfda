use num_bigint::BigInt;
use proptest::prelude::*;
use spin_decomp::blocks::content;
use spin_decomp::partition::enumerate_strict;
use spin_decomp::superchar::{dimension_additivity, ind_i, SuperVec};
use spin_decomp::{OddPrime, StrictPartition};

fn pr(p: u32) -> OddPrime {
    OddPrime::new(p).unwrap()
}

#[test]
fn dimension_additivity_small() {
    for p in [3, 5, 7, 11].map(pr) {
        for n in 0..=12 {
            let r = dimension_additivity(n, p);
            assert!(r.pass(), "{:?}", r.failures().next());
            assert_eq!(r.len(), enumerate_strict(n).len());
        }
    }
}

/// A random integer combination of strict partitions of `n`.
fn vector(n: u32) -> impl Strategy<Value = SuperVec> {
    let basis = enumerate_strict(n);
    let len = basis.len();
    prop::collection::vec((0..len, -5i64..6), 0..5).prop_map(move |terms| {
        SuperVec::from_terms(n, terms.into_iter().map(|(i, c)| (basis[i].clone(), c))).unwrap()
    })
}

fn sized_vector() -> impl Strategy<Value = (SuperVec, SuperVec)> {
    (1u32..=15).prop_flat_map(|n| (vector(n), vector(n)))
}

fn prime_strategy() -> impl Strategy<Value = OddPrime> {
    prop::sample::select(vec![3u32, 5, 7, 11]).prop_map(pr)
}

proptest! {
    #[test]
    fn induction_is_linear((v, w) in sized_vector(), p in prime_strategy(), i in 0u32..6, c in -4i64..5) {
        let i = i % (p.ell() + 1);
        prop_assert_eq!(ind_i(&(&v + &w), i, p), &ind_i(&v, i, p) + &ind_i(&w, i, p));
        let c = BigInt::from(c);
        prop_assert_eq!(ind_i(&v.scale(&c), i, p), ind_i(&v, i, p).scale(&c));
    }

    #[test]
    fn induction_stays_in_block((v, _) in sized_vector(), p in prime_strategy(), i in 0u32..6) {
        let i = i % (p.ell() + 1);
        for src in v.keys() {
            let out = ind_i(&SuperVec::basis(src.clone()), i, p);
            let want = content(src, p).with(i);
            for key in out.keys() {
                prop_assert_eq!(content(key, p), want.clone());
            }
        }
    }

    #[test]
    fn distant_residues_commute((v, _) in sized_vector(), p in prop::sample::select(vec![7u32, 11]).prop_map(pr), i in 0u32..6, j in 0u32..6) {
        let (i, j) = (i % (p.ell() + 1), j % (p.ell() + 1));
        prop_assume!(i.abs_diff(j) >= 2);
        prop_assert_eq!(ind_i(&ind_i(&v, i, p), j, p), ind_i(&ind_i(&v, j, p), i, p));
    }
}

#[test]
fn worked_trace_dimensions() {
    // [S(4,2)] has dimension 2^2 * g(4,2) = 4 * 5
    let lambda: StrictPartition = "4,2".parse().unwrap();
    assert_eq!(spin_decomp::superchar::dim_super(&lambda), 20u32.into());
}
