//! Projective characters built by inducing along residue sequences.
//!
//! For `p ≥ 5` and `0 ≤ j ≤ m` a residue sequence `I_j` and a power of two
//! `k_j` are chosen so that `[P_{I_j}] / k_j` is an integral projective
//! character whose top two-row constituent is `S((n-j, j))` with multiplicity
//! `2^a`.
//!
//! Writing `(n-j, j) = (bp + c, dp + e)` with `2 ≤ c ≤ p+1`, `1 ≤ e ≤ p`, a
//! sequence for `j ≥ 1` is the prefix `(0,1,0)`, then `d` copies of a block of
//! `2p` residues filling `p` columns in both rows, then a tail chosen by
//! comparing `b` with `d` and locating `c` and `e`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::blocks::row_residues;
use crate::error::{Error, Result};
use crate::partition::StrictPartition;
use crate::prime::OddPrime;
use crate::report::Report;
use crate::superchar::{ind_seq, serialize_bigint, SuperVec};

/// A sequence of residues in `0..=ℓ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ResidueSeq {
    entries: Vec<u32>,
    p: OddPrime,
}

impl ResidueSeq {
    pub fn new(entries: Vec<u32>, p: OddPrime) -> Result<Self> {
        if let Some(&bad) = entries.iter().find(|&&i| i > p.ell()) {
            return Err(Error::out_of_range(
                "residue",
                bad,
                format!("0..={}", p.ell()),
            ));
        }
        Ok(ResidueSeq { entries, p })
    }

    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn prime(&self) -> OddPrime {
        self.p
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

impl Serialize for ResidueSeq {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.entries.serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// `j = 0`: the residues of the single row `(n)`.
    OneRow,
    /// `b > d`, `1 ≤ e ≤ ℓ`.
    C2_1,
    /// `b > d`, `ℓ+1 ≤ e ≤ p-1`.
    C2_2,
    /// `b > d`, `e = p`.
    C2_3,
    /// `b = d`, `1 ≤ e ≤ ℓ-1`, `e < c ≤ ℓ+1`.
    C2_4,
    /// `b = d`, `1 ≤ e ≤ ℓ`, `ℓ+2 ≤ c ≤ p+1`.
    C2_5,
    /// `b = d`, `ℓ+1 ≤ e ≤ p-1`, `e < c ≤ p`.
    C2_6,
    /// `b = d`, `ℓ+1 ≤ e ≤ p-2`, `c = p+1`.
    C2_7,
    /// `b = d`, `p-1 ≤ e ≤ p`, `c = p+1`.
    C2_8,
}

impl Case {
    pub fn tag(self) -> &'static str {
        match self {
            Case::OneRow => "1",
            Case::C2_1 => "2.1",
            Case::C2_2 => "2.2",
            Case::C2_3 => "2.3",
            Case::C2_4 => "2.4",
            Case::C2_5 => "2.5",
            Case::C2_6 => "2.6",
            Case::C2_7 => "2.7",
            Case::C2_8 => "2.8",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl Serialize for Case {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.tag())
    }
}

/// A residue sequence `I_j` with its divisor `k_j = 2^{k_exponent}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProjectiveRecipe {
    pub n: u32,
    pub j: u32,
    pub p: OddPrime,
    pub case: Case,
    #[serde(rename = "I")]
    pub seq: ResidueSeq,
    #[serde(rename = "k", serialize_with = "serialize_k")]
    pub k_exponent: u32,
    pub a: u32,
}

fn serialize_k<S: Serializer>(e: &u32, s: S) -> std::result::Result<S::Ok, S::Error> {
    serialize_bigint(&(BigInt::one() << *e as usize), s)
}

impl ProjectiveRecipe {
    pub fn k(&self) -> BigInt {
        BigInt::one() << self.k_exponent as usize
    }

    /// The two-row partition `(n-j, j)` whose multiplicity the recipe pins.
    pub fn top(&self) -> StrictPartition {
        two_row(self.n, self.j)
    }
}

pub(crate) fn two_row(n: u32, j: u32) -> StrictPartition {
    if j == 0 {
        StrictPartition::from_parts_unchecked(if n == 0 { vec![] } else { vec![n] })
    } else {
        StrictPartition::from_parts_unchecked(vec![n - j, j])
    }
}

/// Largest admissible `j`: `⌊(n-1)/2⌋ - δ_{n ≡ p (mod 2p)}`.
pub fn lemma_m(n: u32, p: OddPrime) -> u32 {
    debug_assert!(n >= 1);
    let p = p.get();
    (n - 1) / 2 - u32::from(n % (2 * p) == p)
}

/// The exponent `a ∈ {0, 1}` of the top multiplicity `2^a`.
pub fn a_lemma(n: u32, j: u32, p: OddPrime) -> u32 {
    let (x, y) = (n - j, j);
    let div = |t: u32| p.divides(t);
    let two_rows = x > y && y > 0;
    let hit = (two_rows && div(x) && div(y))
        || (two_rows && (div(x) || div(y)) && n.is_multiple_of(2))
        || (j == 0 && n % 2 == 1 && div(n))
        || (n.is_multiple_of(2 * p.get()) && x == n / 2 + 1 && y + 1 == n / 2);
    u32::from(hit)
}

fn up(from: i64, to: i64) -> impl Iterator<Item = u32> {
    (from..=to).map(|x| x as u32)
}

fn down(from: i64, to: i64) -> impl Iterator<Item = u32> {
    (to..=from).rev().map(|x| x as u32)
}

/// Builds `I_j`, `k_j`, the case and `a` for `(n, j, p)`.
pub fn residue_seq(n: u32, j: u32, p: OddPrime) -> Result<ProjectiveRecipe> {
    if p.get() < 5 {
        return Err(Error::out_of_range("p", p.get(), "p >= 5"));
    }
    if n < p.get() {
        return Err(Error::out_of_range("n", n, format!("n >= p = {p}")));
    }
    let m = lemma_m(n, p);
    if j > m {
        return Err(Error::out_of_range("j", j, format!("0..={m}")));
    }
    let a = a_lemma(n, j, p);
    let pl = i64::from(p.get());
    let ell = i64::from(p.ell());
    let mut seq: Vec<u32> = Vec::with_capacity(n as usize);

    if j == 0 {
        seq.extend(row_residues(1, n, p));
        let k = i64::from((n - 1) / 2) - i64::from(a);
        return finish(n, j, p, Case::OneRow, seq, k, a);
    }

    let (b, c) = ((n - j - 2) / p.get(), (n - j - 2) % p.get() + 2);
    let (d, e) = ((j - 1) / p.get(), (j - 1) % p.get() + 1);
    let (c, e, dd) = (i64::from(c), i64::from(e), i64::from(d));
    debug_assert!(!(b == d && c == ell + 1 && e == ell));

    seq.extend([0, 1, 0]);
    for _ in 0..d {
        seq.extend(up(2, ell));
        seq.extend(up(1, ell - 1));
        seq.extend([p.ell() - 1, p.ell()]);
        seq.extend(down(ell - 2, 0));
        seq.push(0);
        seq.extend(down(ell - 1, 1));
        seq.extend([1, 0, 0]);
    }
    // row-one residues of (n-j) from column `from` to the end
    let row_tail = |seq: &mut Vec<u32>, from: i64| seq.extend(row_residues(from as u32, n - j, p));
    // the full second-row sweep shared by cases 2.2, 2.3, 2.6, 2.7, 2.8
    let sweep = |seq: &mut Vec<u32>| {
        seq.extend(up(2, ell));
        seq.extend(up(1, ell - 1));
        seq.extend([p.ell() - 1, p.ell()]);
    };

    let base = i64::from((n - 2) / 2) + 2 * dd;
    let a_ = i64::from(a);
    let (case, k) = if b > d {
        if e <= ell {
            seq.extend(up(2, ell));
            seq.extend(up(1, e - 1));
            row_tail(&mut seq, dd * pl + (pl + 3) / 2);
            (Case::C2_1, base + i64::from(e == ell) - a_)
        } else if e < pl {
            sweep(&mut seq);
            seq.extend(down(ell - 2, 0));
            seq.push(0);
            seq.extend(down(ell - 1, pl - e));
            row_tail(&mut seq, (dd + 1) * pl + 2);
            (Case::C2_2, base + 1 + i64::from(e == pl - 1) - a_)
        } else {
            sweep(&mut seq);
            seq.extend(down(ell - 2, 0));
            seq.push(0);
            seq.extend(down(ell - 1, 1));
            seq.extend([1, 0]);
            row_tail(&mut seq, (dd + 1) * pl + 3);
            (Case::C2_3, base + 2 - a_)
        }
    } else if e < ell && e < c && c <= ell + 1 {
        seq.extend(up(2, c - 1));
        seq.extend(up(1, e - 1));
        (Case::C2_4, base)
    } else if e <= ell && ell + 2 <= c {
        seq.extend(up(2, ell));
        seq.extend(up(1, e - 1));
        row_tail(&mut seq, dd * pl + (pl + 3) / 2);
        (Case::C2_5, base + i64::from(e == ell) - a_)
    } else if ell < e && e < pl && e < c && c <= pl {
        sweep(&mut seq);
        seq.extend(down(ell - 2, pl - c));
        seq.extend(down(ell - 1, pl - e));
        (Case::C2_6, base + 1 - a_)
    } else if ell < e && e <= pl - 2 && c == pl + 1 {
        sweep(&mut seq);
        seq.extend(down(ell - 2, 0));
        seq.push(0);
        seq.extend(down(ell - 1, pl - e));
        (Case::C2_7, base + 1)
    } else if pl - 1 <= e && c == pl + 1 {
        sweep(&mut seq);
        seq.extend(down(ell - 2, 0));
        seq.extend(down(ell - 1, pl - e));
        seq.push(0);
        (Case::C2_8, base + 1 - a_)
    } else {
        return Err(Error::out_of_range(
            "j",
            j,
            format!("no recipe for (n-j, j) = ({b}p+{c}, {d}p+{e})"),
        ));
    };
    finish(n, j, p, case, seq, k, a)
}

fn finish(
    n: u32,
    j: u32,
    p: OddPrime,
    case: Case,
    seq: Vec<u32>,
    k: i64,
    a: u32,
) -> Result<ProjectiveRecipe> {
    if k < 0 {
        return Err(Error::out_of_range("k exponent", k, "k >= 0"));
    }
    Ok(ProjectiveRecipe {
        n,
        j,
        p,
        case,
        seq: ResidueSeq::new(seq, p)?,
        k_exponent: k as u32,
        a,
    })
}

/// `[P_{I_j}]`.
pub fn projective_char(recipe: &ProjectiveRecipe) -> SuperVec {
    ind_seq(recipe.seq.entries(), recipe.p)
}

/// `[P_{I_j}] / k_j`.
pub fn reduced_projective(n: u32, j: u32, p: OddPrime) -> Result<SuperVec> {
    let recipe = residue_seq(n, j, p)?;
    projective_char(&recipe).div_exact(&recipe.k())
}

/// `(x, y)`: the number of adjacent equal pairs `(1,1)` or `(ℓ-1,ℓ-1)`, and the
/// number of zeros with no zero neighbour.
pub fn signature_counts(seq: &ResidueSeq) -> (u32, u32) {
    let s = seq.entries();
    let ell = seq.prime().ell();
    let x = s
        .windows(2)
        .filter(|w| w[0] == w[1] && (w[0] == 1 || w[0] + 1 == ell))
        .count();
    let y = (0..s.len())
        .filter(|&r| s[r] == 0 && (r == 0 || s[r - 1] != 0) && s.get(r + 1).is_none_or(|&t| t != 0))
        .count();
    (x as u32, y as u32)
}

/// A recipe together with its raw and reduced characters and the checked
/// claims.
#[derive(Debug, Clone, Serialize)]
pub struct ProjectiveAnalysis {
    pub recipe: ProjectiveRecipe,
    pub raw: SuperVec,
    pub reduced: Option<SuperVec>,
    pub report: Report,
}

pub fn analyze(n: u32, j: u32, p: OddPrime) -> Result<ProjectiveAnalysis> {
    let recipe = residue_seq(n, j, p)?;
    let raw = projective_char(&recipe);
    let reduced = raw.div_exact(&recipe.k()).ok();
    let report = check_recipe(&recipe, &raw, reduced.as_ref());
    Ok(ProjectiveAnalysis {
        recipe,
        raw,
        reduced,
        report,
    })
}

/// Verifies every claim about `P_{I_j}`. Precondition failures become a
/// single failing claim.
pub fn lemma_checks(n: u32, j: u32, p: OddPrime) -> Report {
    match analyze(n, j, p) {
        Ok(a) => a.report,
        Err(e) => {
            let mut r = Report::new();
            r.check("precondition", false, format!("n={n} j={j} p={p}: {e}"));
            r
        }
    }
}

fn check_recipe(recipe: &ProjectiveRecipe, raw: &SuperVec, reduced: Option<&SuperVec>) -> Report {
    let ProjectiveRecipe { n, j, p, case, .. } = *recipe;
    let ctx = format!(
        "n={n} j={j} p={p} case={case} I={:?} k={} a={}",
        recipe.seq.entries(),
        recipe.k(),
        recipe.a
    );
    let mut report = Report::new();

    report.check(
        "length",
        recipe.seq.len() == n as usize,
        format!("{ctx}: length {}", recipe.seq.len()),
    );

    let s = recipe.seq.entries();
    let ell = p.ell();
    let bad_repeat = (0..s.len().saturating_sub(1)).find(|&r| {
        s[r] == s[r + 1]
            && (!(s[r] == 0 || s[r] == 1 || s[r] + 1 == ell) || s.get(r + 2) == Some(&s[r]))
    });
    report.check(
        "repeats",
        bad_repeat.is_none(),
        match bad_repeat {
            None => format!("{ctx}: repeated residues are 0, 1 or ℓ-1 and never tripled"),
            Some(r) => format!("{ctx}: bad repeat at position {}", r + 1),
        },
    );

    let k = recipe.k();
    let indivisible = raw.iter().find(|(_, c)| !(*c % &k).is_zero());
    report.check(
        "divisible_by_k",
        indivisible.is_none() && reduced.is_some(),
        match indivisible {
            None => format!("{ctx}: all {} coefficients divisible by k", raw.len()),
            Some((key, c)) => format!("{ctx}: coefficient {c} of S({key}) not divisible by {k}"),
        },
    );

    let top = recipe.top();
    let want = BigInt::one() << recipe.a as usize;
    let got = raw.coeff(&top);
    let top_ok = got == &want * &k;
    report.check(
        "top_multiplicity",
        top_ok,
        format!(
            "{ctx}: [P:S({top})] = {got}, expected 2^a k = {}",
            &want * &k
        ),
    );

    let above = raw.keys().find(|mu| mu.part(0) > n - j);
    report.check(
        "vanishing_above",
        above.is_none(),
        match above {
            None => format!("{ctx}: no constituent with first part > {}", n - j),
            Some(mu) => format!("{ctx}: S({mu}) occurs with first part > {}", n - j),
        },
    );

    let (x, y) = signature_counts(&recipe.seq);
    let bad_exp = raw.iter().find_map(|(mu, c)| {
        let h = mu.len() as u32;
        let e = (n - h) / 2 + x + h.saturating_sub(y);
        let d = BigInt::one() << e as usize;
        (!(c % &d).is_zero()).then(|| format!("S({mu}) coefficient {c} not divisible by 2^{e}"))
    });
    report.check(
        "exponent_divisibility",
        bad_exp.is_none(),
        match bad_exp {
            None => format!(
                "{ctx}: x={x} y={y}: all coefficients divisible by 2^(⌊(n-h)/2⌋+x+max(0,h-y))"
            ),
            Some(msg) => format!("{ctx}: x={x} y={y}: {msg}"),
        },
    );
    report
}
