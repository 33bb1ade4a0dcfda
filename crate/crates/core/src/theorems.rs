//! Decomposition labels `D_j` for the two-row spin supermodules, the diagonal
//! multiplicities `2^a`, and the assembled matrix fragment.
//!
//! Three regimes are distinguished:
//!
//! - `n = p`: the rows `S((p-j, j))` decompose as `[D_j] + [D_{j-1}]`.
//! - `p = 3`, `n > 3`: every `D_j` is the `β`-sum `β_{n-j} + β_j`.
//! - `p ≥ 5`, `n > p`: `β`-sums for `j ≤ m - ℓ`, then the exceptional `μ_k` labels.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::blocks::same_block;
use crate::error::{Error, Result};
use crate::partition::{
    a_par, beta, beta_sum, dominates, h_prime, is_bar_separated, is_p_strict_restricted,
    pointwise_sum, regularize_2row, PStrictRestricted, Partition, StrictPartition,
};
use crate::prime::OddPrime;
use crate::projectives::{a_lemma, lemma_checks, lemma_m, reduced_projective, two_row};
use crate::report::{Claim, Report};

pub fn ell(p: OddPrime) -> u32 {
    p.ell()
}

/// The largest column index `m`. For `n = p` this is `ℓ - 1`, the last of
/// `D_0, …, D_{ℓ-1}`.
pub fn m_bound(n: u32, p: OddPrime) -> Result<u32> {
    if n < p.get() {
        return Err(Error::out_of_range("n", n, format!("n >= p = {p}")));
    }
    if n == p.get() {
        return Ok(p.ell() - 1);
    }
    if p.get() == 3 {
        Ok((n - 1) / 2 - 1 - u32::from(n % 6 == 3))
    } else {
        Ok(lemma_m(n, p))
    }
}

/// The exceptional label `μ_k` for `n = bp + c`, `0 ≤ c < p`.
pub fn mu_table(n: u32, p: OddPrime, k: u32) -> Result<PStrictRestricted> {
    let pp = p.get();
    if pp < 5 {
        return Err(Error::out_of_range("p", pp, "p >= 5"));
    }
    if n < pp {
        return Err(Error::out_of_range("n", n, format!("n >= p = {p}")));
    }
    let ell = p.ell();
    let lo = 1 + u32::from(n == pp);
    if k < lo || k > ell {
        return Err(Error::out_of_range("k", k, format!("{lo}..={ell}")));
    }
    let (b, c) = ((n / pp) as usize, n % pp);
    let ps = |t: usize| std::iter::repeat_n(pp, t);
    let (hc, fc) = (c.div_ceil(2), c / 2);
    let parts: Vec<u32> = match c {
        0 if k == 1 => ps(b - 2).chain([pp - 1, pp - 2, 2, 1]).collect(),
        0 => ps(b - 1).chain([pp - k, k]).collect(),
        1 if k == 1 => ps(b - 1).chain([pp - 2, 2, 1]).collect(),
        1 => ps(b - 1).chain([pp + 1 - k, k]).collect(),
        c if c <= pp - 2 => {
            if k < hc {
                ps(b).chain([fc + k, hc - k]).collect()
            } else if k == hc {
                ps(b - 1).chain([pp - 1, c, 1]).collect()
            } else {
                ps(b - 1).chain([pp + hc - k, fc + k]).collect()
            }
        }
        _ if k < ell => ps(b).chain([ell + k, ell - k]).collect(),
        _ => ps(b - 1).chain([pp - 1, pp - 2, 2]).collect(),
    };
    PStrictRestricted::new(Partition::new(parts)?, p)
}

/// The label of `D_j`.
pub fn d_label(n: u32, p: OddPrime, j: u32) -> Result<PStrictRestricted> {
    let m = m_bound(n, p)?;
    if j > m {
        return Err(Error::out_of_range("j", j, format!("0..={m}")));
    }
    let pp = p.get();
    let label = if n == pp {
        if j == 0 {
            beta(pp, p)
        } else {
            Partition::new(vec![pp - j - 1, j + 1])?
        }
    } else if pp == 3 || j + p.ell() <= m {
        pointwise_sum(&beta(n - j, p), &beta(j, p))
    } else {
        let c = n % pp;
        let k = if (n + c).is_multiple_of(2) {
            m + 1 - j
        } else {
            p.ell() + j - m
        };
        return mu_table(n, p, k);
    };
    PStrictRestricted::new(label, p)
}

/// The exponent `a` of the diagonal multiplicity `[S(λ):D_{λ_2}] = 2^a` for
/// `n > p`. The last condition only applies for `p ≥ 5`.
pub fn a_theorem(lambda: &StrictPartition, p: OddPrime) -> u32 {
    let n = lambda.size();
    let (x, y) = (lambda.part(0), lambda.part(1));
    let div = |t: u32| p.divides(t);
    let two_rows = x > y && y > 0;
    let hit = (two_rows && div(x) && div(y))
        || (two_rows && (div(x) || div(y)) && n % 2 == 1)
        || (y == 0 && n.is_multiple_of(2) && div(n))
        || (p.get() >= 5 && n.is_multiple_of(2 * p.get()) && x == n / 2 + 1 && y + 1 == n / 2);
    u32::from(hit)
}

/// Diagonal exponent in any regime: `0` when `n = p`.
fn a_diagonal(n: u32, j: u32, p: OddPrime) -> u32 {
    if n == p.get() {
        0
    } else {
        a_theorem(&two_row(n, j), p)
    }
}

/// `[S(λ):D(λ^R)] = 2^{(h(λ) - h_{p'}(λ) + a_0(λ) - a_p(λ^R))/2}` whenever `λ^R`
/// is known in closed form.
pub fn regularization_multiplicity(lambda: &StrictPartition, p: OddPrime) -> Result<Option<u64>> {
    let Some(reg) = regularize_2row(lambda, p)? else {
        return Ok(None);
    };
    let e = i64::from(lambda.len() as u32) - i64::from(h_prime(lambda, p.get()))
        + i64::from(a_par(lambda, 0))
        - i64::from(a_par(&reg, p.get()));
    if e < 0 || e % 2 != 0 || e > 126 {
        return Err(Error::InvalidExponent {
            partition: lambda.to_string(),
            exponent: e,
        });
    }
    Ok(Some(1u64 << (e / 2)))
}

/// `a_T = a_P + a_0((n-j, j)) - a_p(D_j)`: the diagonal exponent agrees with
/// the projective exponent under `[S(ν):D(μ)] = 2^{a_0(ν) - a_p(μ)} [P(μ):S(ν)]`.
pub fn reciprocity_parity_check(n: u32, p: OddPrime, j: u32) -> Result<bool> {
    if p.get() < 5 {
        return Err(Error::out_of_range("p", p.get(), "p >= 5"));
    }
    let m = m_bound(n, p)?;
    if j > m {
        return Err(Error::out_of_range("j", j, format!("0..={m}")));
    }
    let lambda = two_row(n, j);
    let label = d_label(n, p, j)?;
    let lhs = i64::from(a_diagonal(n, j, p));
    let rhs = i64::from(a_lemma(n, j, p)) + i64::from(a_par(&lambda, 0))
        - i64::from(a_par(&label, p.get()));
    Ok(lhs == rhs)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Entry {
    Exact(u64),
    Zero,
    Unknown,
}

impl Entry {
    pub fn symbol(&self) -> String {
        match self {
            Entry::Exact(v) => v.to_string(),
            Entry::Zero => "0".into(),
            Entry::Unknown => "?".into(),
        }
    }
}

impl Serialize for Entry {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Entry::Exact(v) => s.serialize_u64(*v),
            Entry::Zero => s.serialize_u64(0),
            Entry::Unknown => s.serialize_str("?"),
        }
    }
}

/// Rows `S((n-i, i))` for `0 ≤ i ≤ ⌊(n-1)/2⌋` against columns `D_0, …, D_m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixFragment {
    pub schema: u32,
    pub n: u32,
    pub p: OddPrime,
    pub rows: Vec<StrictPartition>,
    pub cols: Vec<PStrictRestricted>,
    pub entries: Vec<Vec<Entry>>,
    pub provenance: Vec<Vec<String>>,
}

impl MatrixFragment {
    pub fn entry(&self, row: usize, col: usize) -> Entry {
        self.entries[row][col]
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("row");
        for c in &self.cols {
            out.push_str(&format!(",\"{c}\""));
        }
        out.push('\n');
        for (r, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("\"{row}\""));
            for e in &self.entries[r] {
                out.push(',');
                out.push_str(&e.symbol());
            }
            out.push('\n');
        }
        out
    }

    pub fn to_text(&self) -> String {
        let width = self
            .rows
            .iter()
            .map(|r| r.to_string().len())
            .chain(self.cols.iter().map(|c| c.to_string().len()))
            .max()
            .unwrap_or(1)
            + 2;
        let mut out = format!("{:width$}", "");
        for c in &self.cols {
            out.push_str(&format!("{:>width$}", c.to_string()));
        }
        out.push('\n');
        for (r, row) in self.rows.iter().enumerate() {
            out.push_str(&format!("{:width$}", row.to_string()));
            for e in &self.entries[r] {
                out.push_str(&format!("{:>width$}", e.symbol()));
            }
            out.push('\n');
        }
        out
    }
}

pub fn matrix_fragment(n: u32, p: OddPrime) -> Result<MatrixFragment> {
    let m = m_bound(n, p)?;
    let cols = (0..=m)
        .map(|j| d_label(n, p, j))
        .collect::<Result<Vec<_>>>()?;
    let row_count = (n - 1) / 2 + 1;
    let rows: Vec<StrictPartition> = (0..row_count).map(|i| two_row(n, i)).collect();
    let regime = if n == p.get() {
        "n=p"
    } else if p.get() == 3 {
        "p=3"
    } else {
        "p>=5"
    };

    let mut entries = Vec::with_capacity(rows.len());
    let mut provenance = Vec::with_capacity(rows.len());
    for i in 0..row_count {
        let mut er = Vec::with_capacity(cols.len());
        let mut pr = Vec::with_capacity(cols.len());
        for j in 0..=m {
            let (e, why) = if n == p.get() {
                if j == i || j + 1 == i {
                    (Entry::Exact(1), "bidiagonal")
                } else {
                    (Entry::Zero, "bidiagonal")
                }
            } else if j == i {
                (Entry::Exact(1 << a_diagonal(n, j, p)), "diagonal")
            } else if j > i {
                (Entry::Zero, "above-diagonal")
            } else {
                (Entry::Unknown, "open")
            };
            er.push(e);
            pr.push(format!("{regime}:{why}"));
        }
        entries.push(er);
        provenance.push(pr);
    }
    Ok(MatrixFragment {
        schema: 1,
        n,
        p,
        rows,
        cols,
        entries,
        provenance,
    })
}

fn jname(check: &str, j: u32, sub: &str) -> String {
    format!("{check}/j={j:03}/{sub}")
}

/// Runs every verifiable consequence for `(n, p)`. Failures are report
/// entries; only a precondition violation (`n < p`) is an error.
pub fn verify_all(n: u32, p: OddPrime) -> Result<Report> {
    let m = m_bound(n, p)?;
    let labels = (0..=m)
        .map(|j| d_label(n, p, j))
        .collect::<Result<Vec<_>>>()?;

    let per_j: Vec<Report> = (0..=m)
        .into_par_iter()
        .map(|j| checks_for_column(n, p, m, j, &labels))
        .collect();

    let mut report = Report::new();
    for r in per_j {
        report.extend(r);
    }

    let distinct = labels
        .iter()
        .enumerate()
        .all(|(a, x)| labels[a + 1..].iter().all(|y| x != y));
    report.check(
        "labels_distinct",
        distinct,
        format!("n={n} p={p}: {} columns", labels.len()),
    );

    if n == p.get() && p.get() >= 5 {
        report.push(bidiagonal_consistency(p, &labels));
    }
    report.sort();
    Ok(report)
}

fn checks_for_column(n: u32, p: OddPrime, m: u32, j: u32, labels: &[PStrictRestricted]) -> Report {
    let mut report = Report::new();
    let lambda = two_row(n, j);
    let label = &labels[j as usize];
    let ctx = format!("n={n} p={p} j={j} λ=({lambda}) D_j=({label})");

    // (a) projective recipe claims
    if p.get() >= 5 {
        for c in lemma_checks(n, j, p).claims {
            report.push(Claim::new(
                jname("a.projective", j, &c.name),
                c.pass,
                c.detail,
            ));
        }
    } else {
        report.push(Claim::skipped(
            jname("a.projective", j, "all"),
            "no recipes at p = 3",
        ));
    }

    // (b) block
    let block = same_block(&lambda, label, p).unwrap_or(false);
    report.check(jname("b.block", j, "content"), block, ctx.clone());

    // (c) membership
    report.check(
        jname("c.membership", j, "rp"),
        label.size() == n && is_p_strict_restricted(label, p),
        ctx.clone(),
    );

    // (d) reciprocity parity
    if p.get() >= 5 {
        match reciprocity_parity_check(n, p, j) {
            Ok(ok) => report.check(
                jname("d.reciprocity", j, "parity"),
                ok,
                format!(
                    "{ctx}: a_T={} a_P={} a_0={} a_p={}",
                    a_diagonal(n, j, p),
                    a_lemma(n, j, p),
                    a_par(&lambda, 0),
                    a_par(label, p.get())
                ),
            ),
            Err(e) => report.check(
                jname("d.reciprocity", j, "parity"),
                false,
                format!("{ctx}: {e}"),
            ),
        }
    } else {
        report.push(Claim::skipped(jname("d.reciprocity", j, "parity"), "p = 3"));
    }

    // (e), (f) regularization
    match regularize_2row(&lambda, p) {
        Ok(Some(reg)) => {
            let dom = dominates(label, &reg).unwrap_or(false);
            report.check(
                jname("e.regularization", j, "dominance"),
                dom,
                format!("{ctx} λ^R=({reg})"),
            );

            let must_equal = if n == p.get() {
                j == 0
            } else if p.get() == 3 {
                true
            } else {
                j + p.ell() <= m
            };
            if must_equal {
                report.check(
                    jname("e.regularization", j, "label"),
                    reg.as_partition() == label.as_partition(),
                    format!("{ctx} λ^R=({reg})"),
                );
            } else {
                report.push(Claim::skipped(
                    jname("e.regularization", j, "label"),
                    format!("{ctx}: label is not the leading term here"),
                ));
            }

            if reg.as_partition() == label.as_partition() {
                match regularization_multiplicity(&lambda, p) {
                    Ok(Some(v)) => {
                        let want = 1u64 << a_diagonal(n, j, p);
                        report.check(
                            jname("f.diagonal", j, "regularization"),
                            v == want,
                            format!("{ctx}: leading multiplicity {v}, diagonal 2^a = {want}"),
                        );
                    }
                    Ok(None) => unreachable!("regularization succeeded"),
                    Err(e) => report.check(
                        jname("f.diagonal", j, "regularization"),
                        false,
                        format!("{ctx}: {e}"),
                    ),
                }
            } else {
                report.push(Claim::skipped(
                    jname("f.diagonal", j, "regularization"),
                    format!("{ctx}: λ^R=({reg}) is a different column"),
                ));
            }
        }
        Ok(None) => {
            report.push(Claim::skipped(
                jname("e.regularization", j, "dominance"),
                "regularization not closed-form",
            ));
            report.push(Claim::skipped(
                jname("e.regularization", j, "label"),
                "regularization not closed-form",
            ));
            report.push(Claim::skipped(
                jname("f.diagonal", j, "regularization"),
                "regularization not closed-form",
            ));
        }
        Err(e) => report.check(
            jname("e.regularization", j, "dominance"),
            false,
            format!("{ctx}: {e}"),
        ),
    }

    // (g) β-sum characterization at p = 3
    if p.get() == 3 && n > 3 {
        let nu = lambda.as_partition();
        let ok = is_bar_separated(nu, p)
            && beta_sum(nu.parts(), p) == **label
            && is_p_strict_restricted(label, p);
        report.check(jname("g.beta_sum", j, "label"), ok, ctx.clone());
        if let Some(next) = labels.get(j as usize + 1) {
            let ok = dominates(label, next).unwrap_or(false);
            report.check(
                jname("g.beta_sum", j, "dominance"),
                ok,
                format!("{ctx}: D_j ⊴ D_{{j+1}} = ({next})"),
            );
        }
    }
    report
}

/// For `n = p`, each reduced projective restricted to two-row constituents
/// must be a non-negative integer combination of the reciprocity columns
/// `[P(D_k):S(ν)] = 2^{a_p(D_k) - a_0(ν)} [S(ν):D_k]` of the bidiagonal matrix.
fn bidiagonal_consistency(p: OddPrime, labels: &[PStrictRestricted]) -> Claim {
    let n = p.get();
    let ell = p.ell() as usize;
    let rows: Vec<StrictPartition> = (0..=ell as u32).map(|i| two_row(n, i)).collect();
    let mut details = Vec::new();
    let mut all_ok = true;
    for j in 0..labels.len() as u32 {
        let v = match reduced_projective(n, j, p) {
            Ok(v) => v,
            Err(e) => {
                all_ok = false;
                details.push(format!("j={j}: {e}"));
                continue;
            }
        };
        let ap = |k: usize| a_par(&labels[k], n) as usize;
        let mut coeffs: Vec<BigInt> = Vec::with_capacity(ell);
        let mut ok = true;
        for (i, row) in rows.iter().enumerate() {
            // y_i 2^{a_0} = c_i 2^{a_p(D_i)} + c_{i-1} 2^{a_p(D_{i-1})}
            let mut rest = v.coeff(row) << a_par(row, 0) as usize;
            if i > 0 {
                rest -= &coeffs[i - 1] << ap(i - 1);
            }
            if i < ell {
                let w = BigInt::from(1u32) << ap(i);
                if rest < BigInt::from(0) || &rest % &w != BigInt::from(0) {
                    ok = false;
                    break;
                }
                coeffs.push(rest / w);
            } else if rest != BigInt::from(0) {
                ok = false;
            }
        }
        all_ok &= ok;
        let shown: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
        details.push(format!(
            "j={j}: P_j restricted to two rows = [{}] in P(D_k) (ok={ok})",
            shown.join(",")
        ));
    }
    Claim::new(
        "h.bidiagonal/projectives",
        all_ok,
        format!("n=p={p}: {}", details.join("; ")),
    )
}

/// Labels via the p = 3 characterization: `μ ∈ RP_3(n)` iff `μ` is
/// `β_{ν_1} + … + β_{ν_h}` for a bar-separated `ν`.
pub fn beta_sum_labels(n: u32, p: OddPrime) -> Vec<(Partition, Partition)> {
    crate::partition::enumerate_bar_separated(n, p)
        .into_iter()
        .map(|nu| {
            let s = beta_sum(nu.parts(), p);
            (nu, s)
        })
        .collect()
}
