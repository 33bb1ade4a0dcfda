//! Command-line front end. [`run`] returns the rendered output and an exit
//! status; `main` only parses arguments and prints.

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::{json, Map, Value};

use crate::blocks::{bar_core_strict_with, content, BarRemovalPolicy};
use crate::error::{Error, Result};
use crate::partition::{
    beta, enumerate_rp_with, enumerate_strict, regularize_2row, GapConvention, StrictPartition,
};
use crate::prime::OddPrime;
use crate::projectives::analyze;
use crate::report::Report;
use crate::superchar::{dimension_additivity, ind_seq_trace, SuperVec};
use crate::theorems::{matrix_fragment, mu_table, verify_all};

/// Environment variable read for the default worker count.
pub const THREADS_ENV: &str = "SPIN_DECOMP_THREADS";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED_CHECK: i32 = 1;
pub const EXIT_INVALID: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Convention {
    Standard,
    Swapped,
}

impl From<Convention> for GapConvention {
    fn from(c: Convention) -> Self {
        match c {
            Convention::Standard => GapConvention::Standard,
            Convention::Swapped => GapConvention::Swapped,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Policy {
    LargestFirst,
    PairsFirst,
}

impl From<Policy> for BarRemovalPolicy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::LargestFirst => BarRemovalPolicy::LargestFirst,
            Policy::PairsFirst => BarRemovalPolicy::PairsFirst,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "spin-decomp",
    version,
    about = "Two-row spin decomposition numbers in odd characteristic"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Worker threads for sweeps; 0 uses one per core.
    #[arg(long, global = true, env = THREADS_ENV, default_value_t = 0)]
    pub parallelism: usize,
}

#[derive(Debug, Args)]
pub struct NP {
    #[arg(long)]
    pub n: u32,
    #[arg(long)]
    pub p: OddPrime,
}

#[derive(Debug, Args)]
pub struct Sweep {
    /// Comma-separated list of odd primes.
    #[arg(long, value_delimiter = ',', required = true)]
    pub p: Vec<OddPrime>,
    /// Largest n in the sweep.
    #[arg(long)]
    pub nmax: u32,
    /// Smallest n in the sweep.
    #[arg(long)]
    pub nmin: Option<u32>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// List strict partitions of n, or RP_p(n) when --p is given.
    Enum {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        p: Option<OddPrime>,
        #[arg(long, value_enum, default_value_t = Convention::Standard)]
        convention: Convention,
    },
    /// p-bar core of a strict partition.
    Barcore {
        #[arg(long)]
        partition: StrictPartition,
        #[arg(long)]
        p: OddPrime,
        #[arg(long, value_enum, default_value_t = Policy::LargestFirst)]
        policy: Policy,
    },
    /// Residue content (the block key).
    Content {
        #[arg(long)]
        partition: crate::partition::Partition,
        #[arg(long)]
        p: OddPrime,
    },
    /// Regularization of a strict partition with at most two parts.
    Regularize {
        #[arg(long)]
        partition: StrictPartition,
        #[arg(long)]
        p: OddPrime,
    },
    /// The basic spin label β_n.
    Beta(NP),
    /// Exceptional labels μ_k; all k when --k is omitted.
    Mu {
        #[command(flatten)]
        np: NP,
        #[arg(long)]
        k: Option<u32>,
    },
    /// Trace of successive residue inductions starting from S(()).
    Induce {
        /// Comma-separated residues.
        #[arg(long, value_delimiter = ',', required = true)]
        seq: Vec<u32>,
        #[arg(long)]
        p: OddPrime,
    },
    /// Projective recipe, raw and reduced characters, and its checks.
    Projective {
        #[command(flatten)]
        np: NP,
        #[arg(long)]
        j: u32,
    },
    /// Decomposition matrix fragment for the two-row rows.
    Matrix(NP),
    /// Runs every verification for each (n, p) in the sweep.
    Verify {
        #[command(flatten)]
        sweep: Sweep,
        /// Include passing claims in the output.
        #[arg(long)]
        all_claims: bool,
    },
    /// Dimension additivity of residue induction over all strict partitions.
    Dimcheck(Sweep),
}

/// Rendered output plus the process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub output: String,
    pub status: i32,
}

impl Outcome {
    fn ok(output: String) -> Self {
        Outcome {
            output,
            status: EXIT_OK,
        }
    }

    fn checked(output: String, pass: bool) -> Self {
        let status = if pass { EXIT_OK } else { EXIT_FAILED_CHECK };
        Outcome { output, status }
    }
}

/// Executes a parsed command. Library errors (bad ranges, non-restricted
/// labels) are returned as `Err` and map to exit status 2.
pub fn run(cli: &Cli) -> Result<Outcome> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.parallelism)
        .build()
        .map_err(|e| Error::Parse(e.to_string()))?;
    pool.install(|| dispatch(&cli.command, cli.format))
}

fn dispatch(cmd: &Command, format: Format) -> Result<Outcome> {
    match cmd {
        Command::Enum { n, p, convention } => {
            let (labels, set): (Vec<String>, String) = match p {
                Some(p) => (
                    enumerate_rp_with(*n, *p, (*convention).into())
                        .iter()
                        .map(|l| l.to_string())
                        .collect(),
                    format!("RP_{p}"),
                ),
                None => (
                    enumerate_strict(*n).iter().map(|l| l.to_string()).collect(),
                    "RP_0".into(),
                ),
            };
            let out = match format {
                Format::Json => json_doc(
                    json!({"command": "enum", "n": n, "set": set, "count": labels.len(), "partitions": labels}),
                ),
                Format::Csv => lines("partition", labels.iter().map(|l| quote(l))),
                Format::Text => lines_plain(&labels),
            };
            Ok(Outcome::ok(out))
        }
        Command::Barcore {
            partition,
            p,
            policy,
        } => {
            let core = bar_core_strict_with(partition, *p, (*policy).into());
            Ok(Outcome::ok(single(
                format,
                "barcore",
                partition,
                *p,
                "core",
                &core.to_string(),
            )))
        }
        Command::Content { partition, p } => {
            let c = content(partition, *p);
            Ok(Outcome::ok(single(
                format,
                "content",
                partition,
                *p,
                "content",
                &c.to_string(),
            )))
        }
        Command::Regularize { partition, p } => {
            let r = regularize_2row(partition, *p)?;
            let shown = r.map(|r| r.to_string()).unwrap_or_else(|| "?".into());
            Ok(Outcome::ok(single(
                format,
                "regularize",
                partition,
                *p,
                "regularization",
                &shown,
            )))
        }
        Command::Beta(NP { n, p }) => {
            let b = beta(*n, *p);
            Ok(Outcome::ok(single(
                format,
                "beta",
                n,
                *p,
                "beta",
                &b.to_string(),
            )))
        }
        Command::Mu { np: NP { n, p }, k } => {
            let ks: Vec<u32> = match k {
                Some(k) => vec![*k],
                None => (1 + u32::from(*n == p.get())..=p.ell()).collect(),
            };
            let rows = ks
                .iter()
                .map(|&k| mu_table(*n, *p, k).map(|m| (k, m.to_string())))
                .collect::<Result<Vec<_>>>()?;
            let out = match format {
                Format::Json => json_doc(json!({
                    "command": "mu", "n": n, "p": p,
                    "mu": rows.iter().map(|(k, m)| json!({"k": k, "partition": m})).collect::<Vec<_>>(),
                })),
                Format::Csv => lines(
                    "k,partition",
                    rows.iter().map(|(k, m)| format!("{k},{}", quote(m))),
                ),
                Format::Text => lines_plain(rows.iter().map(|(k, m)| format!("mu_{k} = {m}"))),
            };
            Ok(Outcome::ok(out))
        }
        Command::Induce { seq, p } => {
            if let Some(&bad) = seq.iter().find(|&&i| i > p.ell()) {
                return Err(Error::out_of_range(
                    "residue",
                    bad,
                    format!("0..={}", p.ell()),
                ));
            }
            let trace = ind_seq_trace(seq, *p);
            let out = match format {
                Format::Json => json_doc(json!({
                    "command": "induce", "p": p, "I": seq,
                    "trace": trace.iter().map(vec_map).collect::<Vec<_>>(),
                })),
                Format::Csv => lines(
                    "step,partition,coefficient",
                    trace.iter().enumerate().flat_map(|(s, v)| {
                        v.iter()
                            .map(move |(k, c)| format!("{s},{},{c}", quote(&k.to_string())))
                            .collect::<Vec<_>>()
                    }),
                ),
                Format::Text => {
                    lines_plain(trace.iter().enumerate().map(|(s, v)| format!("{s}: {v}")))
                }
            };
            Ok(Outcome::ok(out))
        }
        Command::Projective { np: NP { n, p }, j } => {
            let a = analyze(*n, *j, *p)?;
            let pass = a.report.pass();
            let out = match format {
                Format::Json => {
                    let mut doc = serde_json::to_value(&a.recipe).expect("recipe serializes");
                    let obj = doc.as_object_mut().expect("recipe is an object");
                    obj.insert("raw".into(), vec_map(&a.raw));
                    obj.insert(
                        "reduced".into(),
                        a.reduced.as_ref().map(vec_map).unwrap_or(Value::Null),
                    );
                    obj.insert("pass".into(), Value::Bool(pass));
                    obj.insert(
                        "claims".into(),
                        serde_json::to_value(&a.report.claims).expect("claims serialize"),
                    );
                    json_doc(doc)
                }
                Format::Csv => report_csv(&a.report),
                Format::Text => {
                    let r = &a.recipe;
                    let mut s = format!(
                        "n={} j={} p={} case {}\nI = {:?}\nk = {}\na = {}\nraw = {}\nreduced = {}\n",
                        r.n,
                        r.j,
                        r.p,
                        r.case,
                        r.seq.entries(),
                        r.k(),
                        r.a,
                        a.raw,
                        a.reduced.as_ref().map(|v| v.to_string()).unwrap_or_else(|| "not divisible".into())
                    );
                    s.push_str(&report_text(&a.report, true));
                    s
                }
            };
            Ok(Outcome::checked(out, pass))
        }
        Command::Matrix(NP { n, p }) => {
            let f = matrix_fragment(*n, *p)?;
            let out = match format {
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&f).expect("fragment serializes");
                    s.push('\n');
                    s
                }
                Format::Csv => f.to_csv(),
                Format::Text => f.to_text(),
            };
            Ok(Outcome::ok(out))
        }
        Command::Verify { sweep, all_claims } => {
            let tasks = sweep_tasks(sweep, |p| p.get())?;
            let runs: Vec<(u32, OddPrime, Report)> = tasks
                .into_par_iter()
                .map(|(n, p)| verify_all(n, p).map(|r| (n, p, r)))
                .collect::<Result<Vec<_>>>()?;
            Ok(sweep_outcome("verify", &runs, format, *all_claims))
        }
        Command::Dimcheck(sweep) => {
            let tasks = sweep_tasks(sweep, |_| 0)?;
            let runs: Vec<(u32, OddPrime, Report)> = tasks
                .into_par_iter()
                .map(|(n, p)| (n, p, dimension_additivity(n, p)))
                .collect();
            Ok(sweep_outcome("dimcheck", &runs, format, false))
        }
    }
}

/// All `(n, p)` pairs of a sweep in a fixed order.
fn sweep_tasks(
    sweep: &Sweep,
    default_min: impl Fn(OddPrime) -> u32,
) -> Result<Vec<(u32, OddPrime)>> {
    let mut out = Vec::new();
    for &p in &sweep.p {
        let lo = sweep.nmin.unwrap_or_else(|| default_min(p));
        if lo < default_min(p) {
            return Err(Error::out_of_range(
                "nmin",
                lo,
                format!(">= {}", default_min(p)),
            ));
        }
        out.extend((lo..=sweep.nmax).map(|n| (n, p)));
    }
    Ok(out)
}

fn sweep_outcome(
    command: &str,
    runs: &[(u32, OddPrime, Report)],
    format: Format,
    all_claims: bool,
) -> Outcome {
    let pass = runs.iter().all(|(_, _, r)| r.pass());
    let total: usize = runs.iter().map(|(_, _, r)| r.len()).sum();
    let failed: usize = runs.iter().map(|(_, _, r)| r.failures().count()).sum();
    let out = match format {
        Format::Json => json_doc(json!({
            "command": command,
            "pass": pass,
            "claims": total,
            "failed": failed,
            "runs": runs.iter().map(|(n, p, r)| {
                let shown: Vec<_> = r.claims.iter().filter(|c| all_claims || !c.pass).collect();
                json!({"n": n, "p": p, "pass": r.pass(), "claims": r.len(), "details": shown})
            }).collect::<Vec<_>>(),
        })),
        Format::Csv => lines(
            "n,p,claim,pass,detail",
            runs.iter().flat_map(|(n, p, r)| {
                r.claims
                    .iter()
                    .filter(|c| all_claims || !c.pass)
                    .map(move |c| {
                        format!("{n},{p},{},{},{}", quote(&c.name), c.pass, quote(&c.detail))
                    })
                    .collect::<Vec<_>>()
            }),
        ),
        Format::Text => {
            let mut s = String::new();
            for (n, p, r) in runs {
                let f = r.failures().count();
                s.push_str(&format!(
                    "n={n:<3} p={p:<3} {:>5} claims  {}\n",
                    r.len(),
                    if f == 0 {
                        "ok".into()
                    } else {
                        format!("{f} FAILED")
                    }
                ));
                s.push_str(&report_text(r, all_claims));
            }
            s.push_str(&format!("{command}: {total} claims, {failed} failed\n"));
            s
        }
    };
    Outcome::checked(out, pass)
}

/// A vector as a `{"partition": coefficient}` object.
fn vec_map(v: &SuperVec) -> Value {
    let mut m = Map::new();
    for (k, c) in v.iter() {
        m.insert(k.to_string(), bigint_value(c));
    }
    Value::Object(m)
}

fn bigint_value(c: &BigInt) -> Value {
    match c.to_i64() {
        Some(x) => Value::from(x),
        None => Value::String(c.to_string()),
    }
}

fn json_doc(mut v: Value) -> String {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), Value::from(1));
    }
    let mut s = serde_json::to_string_pretty(&v).expect("json values serialize");
    s.push('\n');
    s
}

fn single(
    format: Format,
    command: &str,
    input: impl ToString,
    p: OddPrime,
    key: &str,
    value: &str,
) -> String {
    let input = input.to_string();
    match format {
        Format::Json => json_doc(json!({"command": command, "input": input, "p": p, key: value})),
        Format::Csv => format!("input,p,{key}\n{},{p},{}\n", quote(&input), quote(value)),
        Format::Text => format!("{value}\n"),
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('"', "\"\""))
}

fn lines(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut s = format!("{header}\n");
    for r in rows {
        s.push_str(&r);
        s.push('\n');
    }
    s
}

fn lines_plain<S: AsRef<str>>(rows: impl IntoIterator<Item = S>) -> String {
    let mut s = String::new();
    for r in rows {
        s.push_str(r.as_ref());
        s.push('\n');
    }
    s
}

fn report_text(r: &Report, all: bool) -> String {
    let mut s = String::new();
    for c in r.claims.iter().filter(|c| all || !c.pass) {
        s.push_str(&format!(
            "  [{}] {}: {}\n",
            if c.pass { "pass" } else { "FAIL" },
            c.name,
            c.detail
        ));
    }
    s
}

fn report_csv(r: &Report) -> String {
    lines(
        "claim,pass,detail",
        r.claims
            .iter()
            .map(|c| format!("{},{},{}", quote(&c.name), c.pass, quote(&c.detail))),
    )
}
