//! Residues, contents, p-bar cores and normal nodes.
//!
//! The residue of a node depends only on its column: within each period of
//! `p` columns the residues read `0, 1, …, ℓ-1, ℓ, ℓ-1, …, 1, 0`.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{PStrictRestricted, Partition, StrictPartition};
use crate::prime::OddPrime;

/// A box of a Young diagram, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Node {
    pub row: u32,
    pub col: u32,
}

impl Node {
    pub fn new(row: u32, col: u32) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Node { row, col }
    }
}

impl fmt::Display for Node {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// Residue of column `col`: `min(c - 1, p - c)` with `c ≡ col (mod p)`, `1 ≤ c ≤ p`.
#[inline]
pub fn residue(col: u32, p: OddPrime) -> u32 {
    debug_assert!(col >= 1);
    let c = (col - 1) % p.get() + 1;
    (c - 1).min(p.get() - c)
}

/// Residues of the nodes `(1, from), …, (1, to)` of a row.
pub fn row_residues(from: u32, to: u32, p: OddPrime) -> impl Iterator<Item = u32> {
    (from..=to).map(move |s| residue(s, p))
}

/// Number of nodes of each residue `0..=ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ContentMultiset {
    counts: Vec<u32>,
}

impl ContentMultiset {
    pub fn zero(p: OddPrime) -> Self {
        ContentMultiset {
            counts: vec![0; p.ell() as usize + 1],
        }
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }

    pub fn add(&mut self, residue: u32) {
        self.counts[residue as usize] += 1;
    }

    pub fn with(mut self, residue: u32) -> Self {
        self.add(residue);
        self
    }
}

impl fmt::Display for ContentMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{i}:{c}")?;
        }
        Ok(())
    }
}

impl Serialize for ContentMultiset {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

pub fn content(lambda: &Partition, p: OddPrime) -> ContentMultiset {
    let mut c = ContentMultiset::zero(p);
    for &len in lambda.parts() {
        for col in 1..=len {
            c.add(residue(col, p));
        }
    }
    c
}

/// Same content, i.e. same block.
pub fn same_block(lambda: &Partition, mu: &Partition, p: OddPrime) -> Result<bool> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch {
            left: lambda.to_string(),
            left_size: lambda.size(),
            right: mu.to_string(),
            right_size: mu.size(),
        });
    }
    Ok(content(lambda, p) == content(mu, p))
}

/// Order in which bar removals are attempted. Any order reaches the same core.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BarRemovalPolicy {
    /// Shorten the largest movable part first, then delete `p`, then pairs.
    #[default]
    LargestFirst,
    /// Delete pairs summing to `p` first, then `p`, then shorten the smallest
    /// movable part.
    PairsFirst,
}

/// The p-bar core of a strict partition.
pub fn bar_core_strict(lambda: &StrictPartition, p: OddPrime) -> StrictPartition {
    bar_core_strict_with(lambda, p, BarRemovalPolicy::LargestFirst)
}

pub fn bar_core_strict_with(
    lambda: &StrictPartition,
    p: OddPrime,
    policy: BarRemovalPolicy,
) -> StrictPartition {
    let p = p.get();
    let mut parts: Vec<u32> = lambda.parts().to_vec();

    let shorten = |parts: &[u32], rev: bool| -> Option<usize> {
        let movable = |&(_, &a): &(usize, &u32)| a > p && !parts.contains(&(a - p));
        if rev {
            parts.iter().enumerate().rev().find(movable).map(|(r, _)| r)
        } else {
            parts.iter().enumerate().find(movable).map(|(r, _)| r)
        }
    };
    let pair = |parts: &[u32]| -> Option<(u32, u32)> {
        parts
            .iter()
            .find(|&&a| 2 * a > p && a < p && parts.contains(&(p - a)))
            .map(|&a| (a, p - a))
    };

    loop {
        let moved = match policy {
            BarRemovalPolicy::LargestFirst => {
                if let Some(r) = shorten(&parts, false) {
                    parts[r] -= p;
                    true
                } else if let Some(r) = parts.iter().position(|&a| a == p) {
                    parts.remove(r);
                    true
                } else if let Some((a, b)) = pair(&parts) {
                    parts.retain(|&x| x != a && x != b);
                    true
                } else {
                    false
                }
            }
            BarRemovalPolicy::PairsFirst => {
                if let Some((a, b)) = pair(&parts) {
                    parts.retain(|&x| x != a && x != b);
                    true
                } else if let Some(r) = parts.iter().position(|&a| a == p) {
                    parts.remove(r);
                    true
                } else if let Some(r) = shorten(&parts, true) {
                    parts[r] -= p;
                    true
                } else {
                    false
                }
            }
        };
        if !moved {
            break;
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
    }
    StrictPartition::from_parts_unchecked(parts)
}

/// Nodes whose addition keeps `λ` strict, with their residues, by row.
pub fn addable_nodes_strict(lambda: &StrictPartition, p: OddPrime) -> Vec<(Node, u32)> {
    (0..=lambda.len())
        .filter_map(|r| {
            let bigger = lambda.with_box_added(r)?;
            bigger.is_strict().then(|| {
                let col = lambda.part(r) + 1;
                (Node::new(r as u32 + 1, col), residue(col, p))
            })
        })
        .collect()
}

/// Whether a node is addable/removable on its own or only as part of a
/// horizontal domino of two residue-0 nodes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum NodeRule {
    Single,
    Paired,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SignedNode {
    pub node: Node,
    pub residue: u32,
    pub rule: NodeRule,
    /// The partition obtained by adding or removing this node alone is in
    /// `RP_p`. Always false for paired nodes.
    pub restricted: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct NodeLists {
    pub addable: Vec<SignedNode>,
    pub removable: Vec<SignedNode>,
}

/// The `i`-addable and `i`-removable nodes of a p-strict partition, each list
/// sorted top to bottom.
pub fn node_lists_pstrict(lambda: &PStrictRestricted, i: u32) -> NodeLists {
    node_lists(lambda.as_partition(), lambda.prime(), i)
}

pub(crate) fn node_lists(lambda: &Partition, p: OddPrime, i: u32) -> NodeLists {
    let pstrict = |x: &Option<Partition>| x.as_ref().is_some_and(|x| x.is_p_strict(p));
    let restricted = |x: &Partition| crate::partition::is_p_strict_restricted(x, p);
    let mut out = NodeLists::default();

    for r in 0..=lambda.len() {
        let row = r as u32 + 1;
        let len = lambda.part(r);

        let plus_one = lambda.with_box_added(r);
        if residue(len + 1, p) == i && pstrict(&plus_one) {
            out.addable.push(SignedNode {
                node: Node::new(row, len + 1),
                residue: i,
                rule: NodeRule::Single,
                restricted: restricted(plus_one.as_ref().unwrap()),
            });
        }
        let plus_two = plus_one.as_ref().and_then(|x| x.with_box_added(r));
        if residue(len + 1, p) == i
            && residue(len + 2, p) == i
            && pstrict(&plus_one)
            && pstrict(&plus_two)
        {
            out.addable.push(SignedNode {
                node: Node::new(row, len + 2),
                residue: i,
                rule: NodeRule::Paired,
                restricted: false,
            });
        }

        if len == 0 {
            continue;
        }
        let minus_one = lambda.with_box_removed(r);
        if residue(len, p) == i && pstrict(&minus_one) {
            out.removable.push(SignedNode {
                node: Node::new(row, len),
                residue: i,
                rule: NodeRule::Single,
                restricted: restricted(minus_one.as_ref().unwrap()),
            });
        }
        let minus_two = minus_one.as_ref().and_then(|x| x.with_box_removed(r));
        if len >= 2
            && residue(len, p) == i
            && residue(len - 1, p) == i
            && pstrict(&minus_one)
            && pstrict(&minus_two)
        {
            out.removable.push(SignedNode {
                node: Node::new(row, len - 1),
                residue: i,
                rule: NodeRule::Paired,
                restricted: false,
            });
        }
    }
    let top_to_bottom = |a: &SignedNode, b: &SignedNode| {
        a.node
            .row
            .cmp(&b.node.row)
            .then(b.node.col.cmp(&a.node.col))
    };
    out.addable.sort_by(top_to_bottom);
    out.removable.sort_by(top_to_bottom);
    out
}

/// The `i`-normal nodes of `λ`, top to bottom.
///
/// Reading the `i`-addable (`+`) and `i`-removable (`-`) nodes from the top
/// row down, adjacent pairs `-` then `+` (a removable node above an addable
/// one) are cancelled repeatedly; the surviving removable nodes are normal.
pub fn normal_nodes(lambda: &PStrictRestricted, p: OddPrime, i: u32) -> Vec<Node> {
    normal_nodes_of(lambda.as_partition(), p, i)
}

pub(crate) fn normal_nodes_of(lambda: &Partition, p: OddPrime, i: u32) -> Vec<Node> {
    let lists = node_lists(lambda, p, i);
    let mut signature: Vec<(Node, bool)> = lists
        .addable
        .iter()
        .map(|a| (a.node, true))
        .chain(lists.removable.iter().map(|a| (a.node, false)))
        .collect();
    signature.sort_by(|a, b| a.0.row.cmp(&b.0.row).then(b.0.col.cmp(&a.0.col)));

    // stack-based cancellation; each `+` cancels the nearest surviving `-` above it
    let mut stack: Vec<(Node, bool)> = Vec::with_capacity(signature.len());
    for entry in signature {
        if entry.1 && stack.last().is_some_and(|top| !top.1) {
            stack.pop();
        } else {
            stack.push(entry);
        }
    }
    stack.into_iter().filter(|e| !e.1).map(|e| e.0).collect()
}
