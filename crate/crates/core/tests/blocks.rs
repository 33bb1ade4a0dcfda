use proptest::prelude::*;
use spin_decomp::blocks::{
    addable_nodes_strict, bar_core_strict, bar_core_strict_with, content, node_lists_pstrict,
    normal_nodes, residue, BarRemovalPolicy,
};
use spin_decomp::partition::{enumerate_rp, enumerate_strict};
use spin_decomp::{OddPrime, PStrictRestricted, Partition, StrictPartition};

fn pr(p: u32) -> OddPrime {
    OddPrime::new(p).unwrap()
}

#[test]
fn content_iff_bar_core_small() {
    for p in [3, 5, 7].map(pr) {
        for n in 0..=14 {
            let all = enumerate_strict(n);
            let keys: Vec<_> = all
                .iter()
                .map(|l| (content(l, p), bar_core_strict(l, p)))
                .collect();
            for (a, ka) in all.iter().zip(&keys) {
                for (b, kb) in all.iter().zip(&keys) {
                    assert_eq!(ka.0 == kb.0, ka.1 == kb.1, "{a} {b} p={p}");
                }
            }
        }
    }
}

#[test]
fn bar_cores_are_cores() {
    for p in [3, 5, 7].map(pr) {
        for l in (0..=16).flat_map(enumerate_strict) {
            let core = bar_core_strict(&l, p);
            assert_eq!(bar_core_strict(&core, p), core);
            assert_eq!((l.size() - core.size()) % p.get(), 0);
        }
    }
}

fn strict_strategy() -> impl Strategy<Value = StrictPartition> {
    prop::collection::btree_set(1u32..30, 0..7)
        .prop_map(|s| StrictPartition::new(s.into_iter().rev().collect()).unwrap())
}

fn prime_strategy() -> impl Strategy<Value = OddPrime> {
    prop::sample::select(vec![3u32, 5, 7, 11]).prop_map(pr)
}

proptest! {
    #[test]
    fn removal_policies_agree(l in strict_strategy(), p in prime_strategy()) {
        prop_assert_eq!(
            bar_core_strict_with(&l, p, BarRemovalPolicy::LargestFirst),
            bar_core_strict_with(&l, p, BarRemovalPolicy::PairsFirst)
        );
    }

    #[test]
    fn content_counts_boxes(l in strict_strategy(), p in prime_strategy()) {
        prop_assert_eq!(content(&l, p).total(), l.size());
    }

    #[test]
    fn addable_nodes_extend_content(l in strict_strategy(), p in prime_strategy()) {
        for (node, res) in addable_nodes_strict(&l, p) {
            prop_assert_eq!(res, residue(node.col, p));
            let row = node.row as usize - 1;
            let bigger = l.with_box_added(row).unwrap();
            prop_assert!(bigger.is_strict());
            prop_assert_eq!(content(&bigger, p), content(&l, p).with(res));
            prop_assert_eq!(&bigger.with_box_removed(row).unwrap(), l.as_partition());
        }
    }
}

#[test]
fn normal_nodes_are_removable() {
    for p in [3, 5, 7].map(pr) {
        for n in 1..=18 {
            for l in enumerate_rp(n, p) {
                for i in 0..=p.ell() {
                    let removable: Vec<_> = node_lists_pstrict(&l, i)
                        .removable
                        .iter()
                        .map(|s| s.node)
                        .collect();
                    for node in normal_nodes(&l, p, i) {
                        assert!(removable.contains(&node), "{l} i={i} {node}");
                    }
                }
            }
        }
    }
}

#[test]
fn normal_node_anchor_shapes() {
    for p in [5u32, 7] {
        for k in [1usize, 2] {
            let mut parts = vec![p; k];
            parts.extend([p - 1, p - 2, 2, 1]);
            let l = PStrictRestricted::new(Partition::new(parts.clone()).unwrap(), pr(p)).unwrap();
            let normal = normal_nodes(&l, pr(p), 0);
            assert_eq!(normal.len(), 1, "{l}");
            let smaller = l.with_box_removed(normal[0].row as usize - 1).unwrap();
            parts.pop();
            assert_eq!(smaller, Partition::new(parts).unwrap());
        }
    }
}
