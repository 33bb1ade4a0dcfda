//! The Grothendieck group of characteristic-0 spin supermodules: integer
//! combinations of `[S(λ)]` over strict partitions of a fixed `n`, and
//! block-refined induction `Ind_i`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::blocks::addable_nodes_strict;
use crate::error::{Error, Result};
use crate::partition::{a_par, enumerate_strict, StrictPartition};
use crate::prime::OddPrime;
use crate::report::Report;

/// A finitely supported integer vector indexed by strict partitions of `n`.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperVec {
    n: u32,
    coeffs: BTreeMap<StrictPartition, BigInt>,
}

impl SuperVec {
    pub fn zero(n: u32) -> Self {
        SuperVec {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// `[S(())]`, the unit in degree 0.
    pub fn unit_empty() -> Self {
        SuperVec::basis(StrictPartition::empty())
    }

    /// `[S(λ)]`.
    pub fn basis(lambda: StrictPartition) -> Self {
        let mut v = SuperVec::zero(lambda.size());
        v.coeffs.insert(lambda, BigInt::one());
        v
    }

    pub fn from_terms<I, C>(n: u32, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (StrictPartition, C)>,
        C: Into<BigInt>,
    {
        let mut v = SuperVec::zero(n);
        for (k, c) in terms {
            if k.size() != n {
                return Err(Error::SizeMismatch {
                    left: k.to_string(),
                    left_size: k.size(),
                    right: format!("vector of degree {n}"),
                    right_size: n,
                });
            }
            v.add_term(k, c.into());
        }
        Ok(v)
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Number of non-zero coefficients.
    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of `[S(λ)]`, zero when absent.
    pub fn coeff(&self, lambda: &StrictPartition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    /// Terms in descending lexicographic order of the key.
    pub fn iter(&self) -> impl Iterator<Item = (&StrictPartition, &BigInt)> {
        self.coeffs.iter().rev()
    }

    pub fn keys(&self) -> impl Iterator<Item = &StrictPartition> {
        self.coeffs.keys().rev()
    }

    fn add_term(&mut self, key: StrictPartition, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(key) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &BigInt) -> SuperVec {
        if c.is_zero() {
            return SuperVec::zero(self.n);
        }
        SuperVec {
            n: self.n,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (k.clone(), v * c))
                .collect(),
        }
    }

    /// Divides every coefficient by `k`, failing on the first key (in
    /// descending order) whose coefficient is not a multiple of `k`.
    pub fn div_exact(&self, k: &BigInt) -> Result<SuperVec> {
        let mut out = SuperVec::zero(self.n);
        for (key, c) in self.iter() {
            if k.is_zero() || !(c % k).is_zero() {
                return Err(Error::Indivisible {
                    key: key.to_string(),
                    coefficient: c.to_string(),
                    divisor: k.to_string(),
                });
            }
            out.coeffs.insert(key.clone(), c / k);
        }
        Ok(out)
    }

    /// `Σ coeff · dim S(key)`.
    pub fn dimension(&self, counter: &mut ShiftedTableauxCounter) -> BigInt {
        self.coeffs
            .iter()
            .map(|(k, c)| c * BigInt::from(counter.dim_super(k)))
            .sum()
    }

    fn assert_same_degree(&self, other: &SuperVec) {
        assert_eq!(self.n, other.n, "adding vectors of different degrees");
    }
}

impl Add for &SuperVec {
    type Output = SuperVec;

    fn add(self, rhs: &SuperVec) -> SuperVec {
        self.assert_same_degree(rhs);
        let mut out = self.clone();
        for (k, c) in &rhs.coeffs {
            out.add_term(k.clone(), c.clone());
        }
        out
    }
}

impl Sub for &SuperVec {
    type Output = SuperVec;

    fn sub(self, rhs: &SuperVec) -> SuperVec {
        self + &(-rhs)
    }
}

impl Neg for &SuperVec {
    type Output = SuperVec;

    fn neg(self) -> SuperVec {
        SuperVec {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, c)| (k.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for SuperVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (t, (k, c)) in self.iter().enumerate() {
            if t > 0 {
                f.write_str(" + ")?;
            }
            if c.is_one() {
                write!(f, "[S({k})]")?;
            } else {
                write!(f, "{c}[S({k})]")?;
            }
        }
        Ok(())
    }
}

/// Serializes an integer as a JSON number when it fits in 128 bits, otherwise
/// as a decimal string.
pub(crate) fn serialize_bigint<S: Serializer>(
    c: &BigInt,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match c.to_i128() {
        Some(x) => s.serialize_i128(x),
        None => s.collect_str(c),
    }
}

impl Serialize for SuperVec {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Term<'a> {
            partition: &'a StrictPartition,
            #[serde(serialize_with = "serialize_bigint")]
            coefficient: &'a BigInt,
        }
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for (partition, coefficient) in self.iter() {
            seq.serialize_element(&Term {
                partition,
                coefficient,
            })?;
        }
        seq.end()
    }
}

/// `Ind_i`: adds every addable `i`-node to every key. The coefficient doubles
/// exactly when the step moves from `a_0 = 1` to `a_0 = 0`, i.e. when the node
/// extends an existing row of a partition with `n - h` odd.
pub fn ind_i(v: &SuperVec, i: u32, p: OddPrime) -> SuperVec {
    let mut out = SuperVec::zero(v.n + 1);
    for (nu, c) in &v.coeffs {
        let odd = a_par(nu, 0) == 1;
        for (node, res) in addable_nodes_strict(nu, p) {
            if res != i {
                continue;
            }
            let row = node.row as usize - 1;
            let bigger = nu.with_box_added(row).expect("addable node");
            let doubled = odd && a_par(&bigger, 0) == 0;
            let coeff = if doubled { c << 1usize } else { c.clone() };
            out.add_term(
                StrictPartition::from_parts_unchecked(bigger.parts().to_vec()),
                coeff,
            );
        }
    }
    out
}

/// Folds `Ind_{i_1}, Ind_{i_2}, …` over `[S(())]`.
pub fn ind_seq(seq: &[u32], p: OddPrime) -> SuperVec {
    seq.iter()
        .fold(SuperVec::unit_empty(), |v, &i| ind_i(&v, i, p))
}

/// Every intermediate vector of the fold, starting with `[S(())]`.
pub fn ind_seq_trace(seq: &[u32], p: OddPrime) -> Vec<SuperVec> {
    let mut out = Vec::with_capacity(seq.len() + 1);
    out.push(SuperVec::unit_empty());
    for &i in seq {
        let next = ind_i(out.last().unwrap(), i, p);
        out.push(next);
    }
    out
}

/// Memoised count of standard shifted tableaux. Not shared between threads;
/// each sweep task owns one.
#[derive(Debug, Default)]
pub struct ShiftedTableauxCounter {
    memo: HashMap<StrictPartition, BigUint>,
}

impl ShiftedTableauxCounter {
    pub fn new() -> Self {
        Self::default()
    }

    /// `g(λ) = Σ g(λ ∖ B)` over removable `B` with `λ ∖ B` strict; `g(()) = 1`.
    pub fn count(&mut self, lambda: &StrictPartition) -> BigUint {
        if lambda.is_empty() {
            return BigUint::one();
        }
        if let Some(g) = self.memo.get(lambda) {
            return g.clone();
        }
        let mut total = BigUint::zero();
        for r in 0..lambda.len() {
            if let Some(smaller) = lambda.with_box_removed(r) {
                if let Ok(smaller) = StrictPartition::try_from(smaller) {
                    total += self.count(&smaller);
                }
            }
        }
        self.memo.insert(lambda.clone(), total.clone());
        total
    }

    /// `2^{⌈(n - h)/2⌉} g(λ)`, the dimension of `S(λ)` with both associates
    /// counted when they split.
    pub fn dim_super(&mut self, lambda: &StrictPartition) -> BigUint {
        let e = (lambda.size() - lambda.len() as u32).div_ceil(2);
        self.count(lambda) << e as usize
    }
}

pub fn g_shifted(lambda: &StrictPartition) -> BigUint {
    ShiftedTableauxCounter::new().count(lambda)
}

pub fn dim_super(lambda: &StrictPartition) -> BigUint {
    ShiftedTableauxCounter::new().dim_super(lambda)
}

/// Checks `Σ_i dim Ind_i [S(ν)] = (n + 1) dim S(ν)` for every strict `ν` of `n`.
pub fn dimension_additivity(n: u32, p: OddPrime) -> Report {
    let mut counter = ShiftedTableauxCounter::new();
    let mut report = Report::new();
    for nu in enumerate_strict(n) {
        let v = SuperVec::basis(nu.clone());
        let lhs: BigInt = (0..=p.ell())
            .map(|i| ind_i(&v, i, p).dimension(&mut counter))
            .sum();
        let rhs = BigInt::from(n + 1) * BigInt::from(counter.dim_super(&nu));
        report.check(
            format!("dimension/p={p}/n={n:02}/{nu}"),
            lhs == rhs,
            format!("sum of induced dimensions {lhs}, expected {rhs}"),
        );
    }
    report
}
