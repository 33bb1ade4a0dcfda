//! Partitions and the label sets `RP_0(n)` (strict partitions) and `RP_p(n)`
//! (p-strict restricted partitions).

use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::prime::OddPrime;

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic on the parts, so for partitions of the same
/// size "greater" means "earlier in descending lexicographic order".
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
    n: u32,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be positive",
            });
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition {
                parts,
                reason: "parts must be weakly decreasing",
            });
        }
        Ok(Self::from_parts_unchecked(parts))
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&x| x > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        let n = parts.iter().sum();
        Partition { parts, n }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> u32 {
        self.n
    }

    /// Number of parts, `h(λ)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `r`-th part (0-based), with `0` past the last row.
    #[inline]
    pub fn part(&self, r: usize) -> u32 {
        self.parts.get(r).copied().unwrap_or(0)
    }

    pub fn is_strict(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    pub fn is_p_strict(&self, p: OddPrime) -> bool {
        self.parts
            .windows(2)
            .all(|w| w[0] > w[1] || p.divides(w[0]))
    }

    /// Adds one box to row `row` (0-based); `row == len()` opens a new row.
    /// Returns `None` if the result is not a partition.
    pub fn with_box_added(&self, row: usize) -> Option<Partition> {
        if row > self.parts.len() || (row > 0 && self.part(row - 1) == self.part(row)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition::from_parts_unchecked(parts))
    }

    /// Removes the last box of row `row` (0-based).
    /// Returns `None` if the result is not a partition.
    pub fn with_box_removed(&self, row: usize) -> Option<Partition> {
        if row >= self.parts.len() || self.part(row + 1) == self.part(row) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Partition::from_parts_unchecked(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return f.write_str("-");
        }
        for (r, x) in self.parts.iter().enumerate() {
            if r > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s
            .trim()
            .trim_start_matches('(')
            .trim_end_matches(')')
            .trim();
        if s == "-" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("partition part {x:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A partition with strictly decreasing parts; labels `S(λ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition(Partition);

impl StrictPartition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)?.try_into()
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<u32>) -> Self {
        let p = Partition::from_parts_unchecked(parts);
        debug_assert!(p.is_strict());
        StrictPartition(p)
    }

    pub fn empty() -> Self {
        StrictPartition::default()
    }

    pub fn as_partition(&self) -> &Partition {
        &self.0
    }

    pub fn into_inner(self) -> Partition {
        self.0
    }
}

impl TryFrom<Partition> for StrictPartition {
    type Error = Error;

    fn try_from(p: Partition) -> Result<Self> {
        if p.is_strict() {
            Ok(StrictPartition(p))
        } else {
            Err(Error::NotStrict(p.to_string()))
        }
    }
}

impl Deref for StrictPartition {
    type Target = Partition;

    fn deref(&self) -> &Partition {
        &self.0
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl FromStr for StrictPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Partition>()?.try_into()
    }
}

impl Serialize for StrictPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// Which bound applies to the gap `λ_r - λ_{r+1}` in the restriction
/// condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GapConvention {
    /// Gap at most `p - 1` when `p | λ_r`, at most `p` otherwise.
    #[default]
    Standard,
    /// Gap at most `p` when `p | λ_r`, at most `p - 1` otherwise. Kept only
    /// for auditing; it admits `(p)` and breaks the `β`-sum characterization
    /// at `p = 3`.
    Swapped,
}

impl GapConvention {
    #[inline]
    fn bound(self, part: u32, p: OddPrime) -> u32 {
        let divisible = p.divides(part);
        match self {
            GapConvention::Standard => p.get() - u32::from(divisible),
            GapConvention::Swapped => p.get() - u32::from(!divisible),
        }
    }
}

/// A member of `RP_p(n)`: p-strict and restricted, the label of `D(μ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PStrictRestricted {
    partition: Partition,
    p: OddPrime,
}

impl PStrictRestricted {
    pub fn new(partition: Partition, p: OddPrime) -> Result<Self> {
        if is_p_strict_restricted(&partition, p) {
            Ok(PStrictRestricted { partition, p })
        } else {
            Err(Error::NotRestricted {
                partition: partition.to_string(),
                p: p.get(),
            })
        }
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    pub fn as_partition(&self) -> &Partition {
        &self.partition
    }

    pub fn into_inner(self) -> Partition {
        self.partition
    }
}

impl Deref for PStrictRestricted {
    type Target = Partition;

    fn deref(&self) -> &Partition {
        &self.partition
    }
}

impl fmt::Display for PStrictRestricted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.partition.fmt(f)
    }
}

impl Serialize for PStrictRestricted {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.partition.serialize(s)
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_parts_unchecked(cur.clone()));
            return;
        }
        for x in (1..=rest.min(max)).rev() {
            cur.push(x);
            go(rest - x, x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All strict partitions of `n` (`RP_0(n)`) in descending lexicographic order.
pub fn enumerate_strict(n: u32) -> Vec<StrictPartition> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<StrictPartition>) {
        if rest == 0 {
            out.push(StrictPartition::from_parts_unchecked(cur.clone()));
            return;
        }
        // the remaining parts are distinct and at most `x`, so `x(x+1)/2 ≥ rest`
        for x in (1..=rest.min(max)).rev() {
            if x * (x + 1) / 2 < rest {
                break;
            }
            cur.push(x);
            go(rest - x, x - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// `λ ∈ RP_p(n)` under the standard gap convention.
pub fn is_p_strict_restricted(lambda: &Partition, p: OddPrime) -> bool {
    is_p_strict_restricted_with(lambda, p, GapConvention::Standard)
}

pub fn is_p_strict_restricted_with(lambda: &Partition, p: OddPrime, conv: GapConvention) -> bool {
    (0..lambda.len()).all(|r| {
        let (a, b) = (lambda.part(r), lambda.part(r + 1));
        (a != b || p.divides(a)) && a - b <= conv.bound(a, p)
    })
}

/// All of `RP_p(n)` in descending lexicographic order.
pub fn enumerate_rp(n: u32, p: OddPrime) -> Vec<PStrictRestricted> {
    enumerate_rp_with(n, p, GapConvention::Standard)
}

pub fn enumerate_rp_with(n: u32, p: OddPrime, conv: GapConvention) -> Vec<PStrictRestricted> {
    fn go(
        rest: u32,
        prev: Option<u32>,
        p: OddPrime,
        conv: GapConvention,
        cur: &mut Vec<u32>,
        out: &mut Vec<PStrictRestricted>,
    ) {
        if rest == 0 {
            // trailing gap against the virtual part 0
            if prev.is_none_or(|a| a <= conv.bound(a, p)) {
                out.push(PStrictRestricted {
                    partition: Partition::from_parts_unchecked(cur.clone()),
                    p,
                });
            }
            return;
        }
        let (hi, lo) = match prev {
            None => (rest, 1),
            Some(a) => {
                let hi = if p.divides(a) { a } else { a - 1 };
                (hi.min(rest), a.saturating_sub(conv.bound(a, p)).max(1))
            }
        };
        for x in (lo..=hi).rev() {
            cur.push(x);
            go(rest - x, Some(x), p, conv, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, None, p, conv, &mut Vec::new(), &mut out);
    out
}

/// `h_{p'}(λ)`: the number of parts not divisible by `p`. With `p = 0`
/// every part counts, so `h_{0'}(λ) = h(λ)`.
pub fn h_prime(lambda: &Partition, p: u32) -> u32 {
    lambda
        .parts()
        .iter()
        .filter(|&&x| p == 0 || x % p != 0)
        .count() as u32
}

/// `a_p(λ)`: parity of `n - h_{p'}(λ)`.
pub fn a_par(lambda: &Partition, p: u32) -> u32 {
    (lambda.size() - h_prime(lambda, p)) % 2
}

/// Dominance `μ ⊴ λ`.
pub fn dominates(mu: &Partition, lambda: &Partition) -> Result<bool> {
    if mu.size() != lambda.size() {
        return Err(Error::SizeMismatch {
            left: mu.to_string(),
            left_size: mu.size(),
            right: lambda.to_string(),
            right_size: lambda.size(),
        });
    }
    let (mut s, mut t) = (0u32, 0u32);
    for r in 0..mu.len().max(lambda.len()) {
        s += mu.part(r);
        t += lambda.part(r);
        if s > t {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The basic spin label `β_n`: `(p^b, c)` if `c > 0`, else `(p^{b-1}, p-1, 1)`,
/// where `n = bp + c`.
pub fn beta(n: u32, p: OddPrime) -> Partition {
    if n == 0 {
        return Partition::empty();
    }
    let (b, c) = (n / p.get(), n % p.get());
    let mut parts = Vec::with_capacity(b as usize + 2);
    if c > 0 {
        parts.extend(std::iter::repeat_n(p.get(), b as usize));
        parts.push(c);
    } else {
        parts.extend(std::iter::repeat_n(p.get(), b as usize - 1));
        parts.extend([p.get() - 1, 1]);
    }
    Partition::from_parts_unchecked(parts)
}

/// Componentwise sum, padding the shorter partition with zeros.
pub fn pointwise_sum(lambda: &Partition, mu: &Partition) -> Partition {
    let parts = (0..lambda.len().max(mu.len()))
        .map(|r| lambda.part(r) + mu.part(r))
        .collect();
    Partition::from_parts_unchecked(parts)
}

/// `β_{ν_1} + … + β_{ν_h}`.
pub fn beta_sum(nu: &[u32], p: OddPrime) -> Partition {
    nu.iter().fold(Partition::empty(), |acc, &x| {
        pointwise_sum(&acc, &beta(x, p))
    })
}

/// True when consecutive parts satisfy `ν_r - ν_{r+1} ≥ p + δ_{p|ν_r}`.
pub fn is_bar_separated(nu: &Partition, p: OddPrime) -> bool {
    nu.parts()
        .windows(2)
        .all(|w| w[0] >= w[1] + p.get() + u32::from(p.divides(w[0])))
}

/// All partitions of `n` with consecutive gaps `≥ p + δ_{p|ν_r}`.
pub fn enumerate_bar_separated(n: u32, p: OddPrime) -> Vec<Partition> {
    enumerate_partitions(n)
        .into_iter()
        .filter(|nu| is_bar_separated(nu, p))
        .collect()
}

/// `λ^R` for strict `λ` with at most two parts, in the two cases where it is
/// known in closed form: the parts are bar-separated (then `λ^R` is the sum of
/// the `β`s), or `λ` is already in `RP_p(n)` (then `λ^R = λ`). Other shapes
/// return `Ok(None)`.
pub fn regularize_2row(lambda: &StrictPartition, p: OddPrime) -> Result<Option<PStrictRestricted>> {
    if lambda.len() > 2 {
        return Err(Error::TooManyParts {
            partition: lambda.to_string(),
        });
    }
    if is_bar_separated(lambda, p) {
        let r = beta_sum(lambda.parts(), p);
        debug_assert!(is_p_strict_restricted(&r, p));
        return Ok(Some(PStrictRestricted { partition: r, p }));
    }
    if is_p_strict_restricted(lambda, p) {
        return Ok(Some(PStrictRestricted {
            partition: lambda.as_partition().clone(),
            p,
        }));
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sp(s: &str) -> StrictPartition {
        s.parse().unwrap()
    }

    fn pr(p: u32) -> OddPrime {
        OddPrime::new(p).unwrap()
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(pt("5,4,2,1").parts(), &[5, 4, 2, 1]);
        assert_eq!(pt("-"), Partition::empty());
        assert_eq!(pt("(3, 1)").to_string(), "3,1");
        assert_eq!(Partition::empty().to_string(), "-");
        assert!("1,2".parse::<Partition>().is_err());
        assert!("2,0".parse::<Partition>().is_err());
        assert!("2,2".parse::<StrictPartition>().is_err());
    }

    #[test]
    fn strict_enumeration() {
        assert_eq!(enumerate_strict(0), vec![StrictPartition::empty()]);
        assert_eq!(enumerate_strict(4), vec![sp("4"), sp("3,1")]);
        assert_eq!(enumerate_strict(10).len(), 10);
        let all = enumerate_strict(15);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn restricted_membership() {
        assert!(is_p_strict_restricted(&pt("5,4,2,1"), pr(5)));
        assert!(is_p_strict_restricted(&pt("5,4,1"), pr(3)));
        assert!(!is_p_strict_restricted(&pt("7,1"), pr(5)));
        assert!(!is_p_strict_restricted_with(
            &pt("7,1"),
            pr(5),
            GapConvention::Swapped
        ));
        // gap p at a part divisible by p
        assert!(!is_p_strict_restricted(&pt("6,3,1"), pr(3)));
        assert!(is_p_strict_restricted_with(
            &pt("6,3,1"),
            pr(3),
            GapConvention::Swapped
        ));
        // (p) alone is the one-row case the conventions disagree on
        assert!(!is_p_strict_restricted(&pt("5"), pr(5)));
        assert!(is_p_strict_restricted_with(
            &pt("5"),
            pr(5),
            GapConvention::Swapped
        ));
        // repeated parts need divisibility
        assert!(is_p_strict_restricted(&pt("5,5,2"), pr(5)));
        assert!(!is_p_strict_restricted(&pt("4,4,2"), pr(5)));
    }

    #[test]
    fn rp_enumeration() {
        assert_eq!(enumerate_rp(0, pr(7)).len(), 1);
        let five: Vec<String> = enumerate_rp(5, pr(5))
            .iter()
            .map(|x| x.to_string())
            .collect();
        assert!(five.contains(&"4,1".to_string()));
        assert!(five.contains(&"3,2".to_string()));
        let twelve: Vec<String> = enumerate_rp(12, pr(5))
            .iter()
            .map(|x| x.to_string())
            .collect();
        for want in ["5,5,2", "5,4,3", "5,4,2,1"] {
            assert!(twelve.contains(&want.to_string()), "{want}");
        }
    }

    #[test]
    fn parity_statistics() {
        assert_eq!(h_prime(&pt("5,2"), 5), 1);
        assert_eq!(h_prime(&pt("5,4,3,2,1"), 5), 4);
        assert_eq!(h_prime(&pt("3,1"), 0), 2);
        assert_eq!(a_par(&pt("5,2"), 5), 0);
        assert_eq!(a_par(&pt("10,5"), 0), 1);
        assert_eq!(a_par(&Partition::empty(), 7), 0);
        assert_eq!(a_par(&pt("5,4,3,2,1"), 5), 1);
    }

    #[test]
    fn dominance() {
        assert!(dominates(&pt("5,4,3"), &pt("5,5,2")).unwrap());
        assert!(dominates(&pt("5,5,2"), &pt("5,5,2")).unwrap());
        assert!(!dominates(&pt("5,5,2"), &pt("5,4,3")).unwrap());
        assert!(matches!(
            dominates(&pt("3"), &pt("2,1,1")),
            Err(Error::SizeMismatch { .. })
        ));
    }

    #[test]
    fn basic_spin_labels() {
        assert_eq!(beta(0, pr(5)), Partition::empty());
        assert_eq!(beta(7, pr(5)), pt("5,2"));
        assert_eq!(beta(10, pr(5)), pt("5,4,1"));
        assert_eq!(beta(6, pr(3)), pt("3,2,1"));
        assert_eq!(beta(3, pr(3)), pt("2,1"));
        assert_eq!(beta(5, pr(5)), pt("4,1"));
    }

    #[test]
    fn sums_of_betas() {
        assert_eq!(
            pointwise_sum(&beta(11, pr(5)), &beta(1, pr(5))),
            pt("6,5,1")
        );
        assert_eq!(pointwise_sum(&beta(7, pr(3)), &beta(3, pr(3))), pt("5,4,1"));
        assert_eq!(pointwise_sum(&pt("4,2"), &Partition::empty()), pt("4,2"));
        assert_eq!(beta_sum(&[7, 3], pr(3)), pt("5,4,1"));
    }

    #[test]
    fn two_row_regularization() {
        let r = regularize_2row(&sp("10,2"), pr(5)).unwrap().unwrap();
        assert_eq!(r.as_partition(), &pt("7,4,1"));
        let r = regularize_2row(&sp("4,3"), pr(5)).unwrap().unwrap();
        assert_eq!(r.as_partition(), &pt("4,3"));
        assert_eq!(regularize_2row(&sp("7,6"), pr(5)).unwrap(), None);
        // one row: the separation condition is vacuous
        let r = regularize_2row(&sp("5"), pr(5)).unwrap().unwrap();
        assert_eq!(r.as_partition(), &pt("4,1"));
        let r = regularize_2row(&sp("12"), pr(5)).unwrap().unwrap();
        assert_eq!(r.as_partition(), &pt("5,5,2"));
        assert!(matches!(
            regularize_2row(&sp("4,2,1"), pr(5)),
            Err(Error::TooManyParts { .. })
        ));
    }

    #[test]
    fn box_moves() {
        let l = pt("3,1");
        assert_eq!(l.with_box_added(0), Some(pt("4,1")));
        assert_eq!(l.with_box_added(1), Some(pt("3,2")));
        assert_eq!(l.with_box_added(2), Some(pt("3,1,1")));
        assert_eq!(l.with_box_added(3), None);
        assert_eq!(pt("2,2").with_box_added(1), None);
        assert_eq!(pt("2,2").with_box_removed(0), None);
        assert_eq!(pt("2,2").with_box_removed(1), Some(pt("2,1")));
        assert_eq!(pt("1").with_box_removed(0), Some(Partition::empty()));
    }
}
