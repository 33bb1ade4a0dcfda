use std::collections::HashMap;

use proptest::prelude::*;
use spin_decomp::partition::{
    beta, beta_sum, dominates, enumerate_bar_separated, enumerate_partitions, enumerate_rp,
    enumerate_strict, is_p_strict_restricted, Partition,
};
use spin_decomp::OddPrime;

fn pr(p: u32) -> OddPrime {
    OddPrime::new(p).unwrap()
}

/// Restricted-label test written straight from the definition, on a plain
/// slice padded with a trailing zero.
fn brute_rp(parts: &[u32], p: u32) -> bool {
    let mut padded = parts.to_vec();
    padded.push(0);
    padded.windows(2).all(|w| {
        let (a, b) = (w[0], w[1]);
        let repeat_ok = a != b || a % p == 0;
        let bound = if a % p == 0 { p - 1 } else { p };
        repeat_ok && a - b <= bound
    })
}

#[test]
fn beta_is_restricted() {
    for p in [3, 5, 7, 11] {
        for n in 0..=40 {
            let b = beta(n, pr(p));
            assert_eq!(b.size(), n);
            assert!(is_p_strict_restricted(&b, pr(p)), "β_{n} = {b} at p = {p}");
        }
    }
}

#[test]
fn rp_counts_match_brute_force() {
    for p in [3, 5, 7] {
        for n in 0..=25 {
            let brute = enumerate_partitions(n)
                .iter()
                .filter(|l| brute_rp(l.parts(), p))
                .count();
            assert_eq!(enumerate_rp(n, pr(p)).len(), brute, "n={n} p={p}");
        }
    }
}

#[test]
fn rp_enumeration_is_sorted_and_distinct() {
    let all = enumerate_rp(20, pr(5));
    assert!(all.windows(2).all(|w| w[0] > w[1]));
}

#[test]
fn beta_sums_biject_onto_rp_at_three() {
    let p = pr(3);
    for n in 1..=30 {
        let mut seen: HashMap<Partition, Partition> = HashMap::new();
        for nu in enumerate_bar_separated(n, p) {
            let s = beta_sum(nu.parts(), p);
            assert!(is_p_strict_restricted(&s, p), "{nu} -> {s}");
            if let Some(prev) = seen.insert(s.clone(), nu.clone()) {
                panic!("{s} has two preimages {prev} and {nu}");
            }
        }
        let rp = enumerate_rp(n, p);
        assert_eq!(seen.len(), rp.len(), "n={n}");
        assert!(rp.iter().all(|mu| seen.contains_key(mu.as_partition())));
    }
}

#[test]
fn dominance_reverses_under_beta_sums_at_three() {
    let p = pr(3);
    for n in 1..=30 {
        let nus = enumerate_bar_separated(n, p);
        let sums: Vec<Partition> = nus.iter().map(|nu| beta_sum(nu.parts(), p)).collect();
        for (a, sa) in nus.iter().zip(&sums) {
            for (b, sb) in nus.iter().zip(&sums) {
                assert_eq!(
                    dominates(sa, sb).unwrap(),
                    dominates(b, a).unwrap(),
                    "{a} vs {b}"
                );
            }
        }
    }
}

#[test]
fn dominance_is_a_partial_order() {
    for n in 0..=20 {
        let all: Vec<Partition> = enumerate_strict(n)
            .into_iter()
            .map(|s| s.into_inner())
            .collect();
        let d = |a: &Partition, b: &Partition| dominates(a, b).unwrap();
        for a in &all {
            assert!(d(a, a));
            for b in &all {
                if d(a, b) && d(b, a) {
                    assert_eq!(a, b);
                }
                if !d(a, b) {
                    continue;
                }
                for c in &all {
                    if d(b, c) {
                        assert!(d(a, c), "{a} ⊴ {b} ⊴ {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn dominance_examples() {
    let pt = |s: &str| s.parse::<Partition>().unwrap();
    assert!(dominates(&pt("5,4,3"), &pt("5,5,2")).unwrap());
    assert!(!dominates(&pt("5,5,2"), &pt("5,4,3")).unwrap());
    assert!(dominates(&pt("3,2"), &pt("3,3")).is_err());
}

fn partition_strategy() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..12, 0..8).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #[test]
    fn membership_matches_definition(l in partition_strategy(), p in prop::sample::select(vec![3u32, 5, 7, 11])) {
        prop_assert_eq!(is_p_strict_restricted(&l, pr(p)), brute_rp(l.parts(), p));
    }

    #[test]
    fn display_round_trips(l in partition_strategy()) {
        let back: Partition = l.to_string().parse().unwrap();
        prop_assert_eq!(back, l);
    }
}
