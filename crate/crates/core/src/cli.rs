//! Command-line interface.

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::{Error, Result};
use crate::ff_poly::{set_factor_seed, Poly};
use crate::invariants::{build_field, ShanksField, SIGNATURE};
use crate::search::{
    class_number_one_depth, large_index_scan, search_class_number_one, survey, Method, SearchPlan,
};
use crate::simple_cubic::{classify_parameters, ShanksPoly};
use crate::splitting::{p_signature, splitting_census, Truncation};
use crate::zeta::{exact_l_polynomial, hprime_candidates, truncated_estimate};

#[derive(Parser, Debug)]
#[command(
    name = "cubicff",
    version,
    about = "Shanks simple cubic function fields over F_q(t): invariants, prime splitting and class numbers"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    out: Format,
    /// Seed for the randomized equal-degree factorization step.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Worker threads (default: available cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Csv,
}

#[derive(Args, Debug)]
struct FieldArgs {
    /// Prime order of the constant field (at least 5).
    #[arg(long)]
    q: u32,
    /// Parameter A, e.g. "t^3+3t+2".
    #[arg(long = "A")]
    a: String,
}

#[derive(Args, Debug)]
#[group(multiple = false)]
struct TruncArgs {
    /// Number of primes in the truncated product.
    #[arg(long)]
    trunc: Option<u64>,
    /// Use all primes of degree at most this value.
    #[arg(long)]
    lambda: Option<usize>,
}

impl TruncArgs {
    fn get(&self, default: u64) -> Truncation {
        match (self.trunc, self.lambda) {
            (_, Some(l)) => Truncation::Degree(l),
            (Some(n), None) => Truncation::Count(n),
            (None, None) => Truncation::Count(default),
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Index, discriminant, genus, signature and regulator of a field.
    Invariants(FieldArgs),
    /// Decomposition type of one prime.
    Psig {
        #[command(flatten)]
        field: FieldArgs,
        /// Monic irreducible prime, e.g. "t+1".
        #[arg(long = "P")]
        p: String,
    },
    /// Split, inert and ramified counts over a prefix of the primes.
    Census {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        trunc: TruncArgs,
    },
    /// Truncated Euler-product estimate of the class number.
    Classno {
        #[command(flatten)]
        field: FieldArgs,
        #[command(flatten)]
        trunc: TruncArgs,
    },
    /// Exact L-polynomial and class numbers (genus at most 8).
    Exact(FieldArgs),
    /// One row per canonical parameter of the given degree.
    Survey {
        #[arg(long)]
        q: u32,
        /// Degree of A, or a range such as 2..4.
        #[arg(long = "deg-a")]
        deg_a: String,
        /// Keep only fields with this index degree.
        #[arg(long = "deg-i")]
        deg_i: Option<usize>,
        /// Include parameters with A^2+3A+9 not cube-free.
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        trunc: TruncArgs,
    },
    /// Fields with ideal class number one.
    SearchH1 {
        #[arg(long)]
        q: u32,
        /// Largest degree of A to search (default: Hasse-Weil cutoff, capped at 4).
        #[arg(long = "deg-a")]
        deg_a: Option<usize>,
        /// Search up to the Hasse-Weil cutoff degree (long running for q = 5).
        #[arg(long = "full-depth")]
        full_depth: bool,
        /// Skip the index-degree pruning and test every cube-free parameter.
        #[arg(long = "no-prune")]
        no_prune: bool,
    },
    /// Parameters with A^2+3A+9 not cube-free: index, regulator candidates, h'.
    LargeIndex {
        #[arg(long)]
        q: u32,
        #[arg(long = "deg-a")]
        deg_a: usize,
    },
    /// Triples (c, k, n) whose simple cubic has square discriminant.
    ClassifyParams {
        #[arg(long)]
        q: u32,
    },
    /// Canonical parameter defining the same field.
    Canon(FieldArgs),
}

struct Table<'a> {
    out: &'a mut dyn Write,
    sep: &'static str,
}

impl Table<'_> {
    fn row<S: AsRef<str>>(&mut self, cells: &[S]) -> std::io::Result<()> {
        let cells: Vec<&str> = cells.iter().map(AsRef::as_ref).collect();
        writeln!(self.out, "{}", cells.join(self.sep))
    }
}

fn field_from(args: &FieldArgs) -> Result<ShanksField> {
    build_field(args.q, &Poly::parse(&args.a, args.q)?)
}

fn parse_range(s: &str) -> Result<std::ops::RangeInclusive<usize>> {
    let bad = || Error::Parse(format!("bad degree range {s:?}"));
    match s.split_once("..") {
        Some((a, b)) => {
            let a = a.trim().parse().map_err(|_| bad())?;
            let b = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
            Ok(a..=b)
        }
        None => {
            let d = s.trim().parse().map_err(|_| bad())?;
            Ok(d..=d)
        }
    }
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map_or_else(|| "-".to_string(), |v| v.to_string())
}

/// Outcome of a command: `Ok(true)` when an inconsistency was reported.
fn dispatch(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<bool> {
    let sep = match cli.out {
        Format::Tsv => "\t",
        Format::Csv => ",",
    };
    let mut t = Table { out, sep };
    let io = |e: std::io::Error| Error::ResourceRefusal(format!("output error: {e}"));
    let mut inconsistent = false;
    match &cli.command {
        Command::Invariants(args) => {
            let k = field_from(args)?;
            let rows: Vec<(&str, String)> = vec![
                ("q", k.q().to_string()),
                ("A", k.a().to_string()),
                ("cube_free", k.cube_free.to_string()),
                ("I", k.index.to_string()),
                ("I_deg", k.index_degree().to_string()),
                ("D(K)", format!("({})^2", k.conductor)),
                ("D_deg", k.disc_k.degree().unwrap_or(0).to_string()),
                ("g", k.genus.to_string()),
                ("R", k.regulator.to_string()),
                ("signature", SIGNATURE.to_string()),
                ("Q", k.reduction.to_string()),
                ("basis_denominator", k.basis_denominator().to_string()),
                ("canonical", k.shanks.canonical().to_string()),
            ];
            for (key, v) in rows {
                t.row(&[key, v.as_str()]).map_err(io)?;
            }
        }
        Command::Psig { field, p } => {
            let k = field_from(field)?;
            let prime = Poly::parse(p, field.q)?;
            let st = p_signature(&k, &prime)?;
            t.row(&["q", "A", "P", "type"]).map_err(io)?;
            t.row(&[k.q().to_string(), k.a().to_string(), prime.to_string(), st.to_string()])
                .map_err(io)?;
        }
        Command::Census { field, trunc } => {
            let k = field_from(field)?;
            let c = splitting_census(&k, trunc.get(40_000))?;
            t.row(&["q", "A", "trunc", "split", "inert", "ramified"]).map_err(io)?;
            t.row(&[
                k.q().to_string(),
                k.a().to_string(),
                c.truncation.to_string(),
                c.split().to_string(),
                c.inert().to_string(),
                c.ramified().to_string(),
            ])
            .map_err(io)?;
        }
        Command::Classno { field, trunc } => {
            let k = field_from(field)?;
            let est = truncated_estimate(&k, trunc.get(40_000))?;
            t.row(&[
                "q", "A", "g", "I_deg", "R", "lambda", "trunc", "Eprime", "psi", "E", "L", "hprime_est",
            ])
            .map_err(io)?;
            t.row(&[
                k.q().to_string(),
                k.a().to_string(),
                k.genus.to_string(),
                k.index_degree().to_string(),
                k.regulator.to_string(),
                est.lambda.to_string(),
                est.primes.to_string(),
                format!("{:.6}", est.eprime),
                format!("{:.6e}", est.psi),
                est.e.to_string(),
                est.l.to_string(),
                opt(est.hprime_estimate),
            ])
            .map_err(io)?;
        }
        Command::Exact(args) => {
            let k = field_from(args)?;
            let l = exact_l_polynomial(&k)?;
            let h = l.h() as u128;
            let hprime = match k.regulator.exact() {
                Some(r) => crate::invariants::class_number_relation(h, r)?.to_string(),
                None => {
                    let c = hprime_candidates(h, &k.regulator);
                    inconsistent |= c.is_empty();
                    c.iter()
                        .map(|(r, hp)| format!("{hp}(R={r})"))
                        .collect::<Vec<_>>()
                        .join("|")
                }
            };
            let mut head = vec!["q".to_string(), "A".into(), "g".into()];
            head.extend((0..l.coeffs.len()).map(|i| format!("a_{i}")));
            head.extend(["h".to_string(), "hprime".into()]);
            t.row(&head).map_err(io)?;
            let mut row = vec![k.q().to_string(), k.a().to_string(), k.genus.to_string()];
            row.extend(l.coeffs.iter().map(i128::to_string));
            row.extend([h.to_string(), hprime]);
            t.row(&row).map_err(io)?;
        }
        Command::Survey {
            q,
            deg_a,
            deg_i,
            all,
            trunc,
        } => {
            let range = parse_range(deg_a)?;
            let default = SearchPlan::table_one(*q, *range.end()).truncation;
            let plan = SearchPlan {
                q: *q,
                deg_a: range,
                deg_i: *deg_i,
                cube_free_only: !all,
                truncation: match (trunc.trunc, trunc.lambda) {
                    (None, None) => default,
                    _ => trunc.get(0),
                },
                target_hprime: None,
            };
            let _ = writeln!(err, "survey: q = {q}, deg A in {deg_a}, truncation {}", plan.truncation);
            let report = survey(&plan);
            t.row(&["q", "A", "g", "I_deg", "R", "hprime", "method", "split", "inert", "measure"])
                .map_err(io)?;
            for r in &report.rows {
                t.row(&[
                    q.to_string(),
                    r.a.to_string(),
                    r.genus.to_string(),
                    r.deg_i.to_string(),
                    r.regulator.to_string(),
                    opt(r.hprime),
                    match r.method {
                        Method::Exact => "exact".into(),
                        Method::Estimate => "estimate".to_string(),
                    },
                    r.split.to_string(),
                    r.inert.to_string(),
                    r.measure.map_or_else(|| "-".to_string(), |m| format!("{m:.5}")),
                ])
                .map_err(io)?;
            }
            for (a, e) in &report.errors {
                let _ = writeln!(err, "A = {a}: {e}");
                inconsistent = true;
            }
        }
        Command::SearchH1 {
            q,
            deg_a,
            full_depth,
            no_prune,
        } => {
            let depth = deg_a.unwrap_or_else(|| class_number_one_depth(*q, *full_depth));
            let r = search_class_number_one(*q, depth, !no_prune);
            let _ = writeln!(
                err,
                "search-h1: q = {q}, deg A <= {depth} (Hasse-Weil cutoff {}), {} cube-free fields examined; deg A = 1 always has class number 1",
                r.cutoff, r.examined
            );
            t.row(&["q", "I_deg", "A", "status"]).map_err(io)?;
            for (a, i) in &r.found {
                t.row(&[q.to_string(), i.to_string(), a.to_string(), "h'=1".into()])
                    .map_err(io)?;
            }
            for (a, est) in &r.unresolved {
                let _ = writeln!(err, "unresolved: A = {a}, E = {}, L = {}", est.e, est.l);
                t.row(&[q.to_string(), "-".into(), a.to_string(), "unresolved".to_string()])
                    .map_err(io)?;
            }
            for (a, e) in &r.errors {
                let _ = writeln!(err, "A = {a}: {e}");
                inconsistent = true;
            }
        }
        Command::LargeIndex { q, deg_a } => {
            let (rows, errors) = large_index_scan(*q, *deg_a);
            t.row(&["q", "I_deg", "A", "g", "Q", "R_candidates", "h", "consistent"])
                .map_err(io)?;
            for r in &rows {
                let consistent: Vec<String> =
                    r.consistent.iter().map(|(rr, hp)| format!("R={rr}:h'={hp}")).collect();
                t.row(&[
                    q.to_string(),
                    r.deg_i.to_string(),
                    r.a.to_string(),
                    r.genus.to_string(),
                    r.reduction.to_string(),
                    r.regulator.to_string(),
                    r.h.to_string(),
                    consistent.join("|"),
                ])
                .map_err(io)?;
            }
            for (a, e) in &errors {
                let _ = writeln!(err, "A = {a}: {e}");
                inconsistent = true;
            }
        }
        Command::ClassifyParams { q } => {
            t.row(&["c", "k", "n"]).map_err(io)?;
            for (c, k, n) in classify_parameters(*q)? {
                t.row(&[c.to_string(), k.to_string(), n.to_string()]).map_err(io)?;
            }
        }
        Command::Canon(args) => {
            let a = ShanksPoly::parse(&args.a, args.q)?;
            t.row(&["A", "canonical", "frobenius_power"]).map_err(io)?;
            t.row(&[
                a.to_string(),
                a.canonical().to_string(),
                a.is_frobenius_power().to_string(),
            ])
            .map_err(io)?;
        }
    }
    Ok(inconsistent)
}

/// Runs the CLI on `args` (including the program name) and returns the exit code:
/// 0 on success, 1 on usage or input errors, 2 on inconsistency reports.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{text}")
            } else {
                write!(err, "{text}")
            };
            return code;
        }
    };
    if let Some(seed) = cli.seed {
        set_factor_seed(seed);
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        builder = builder.num_threads(n);
    }
    let pool = match builder.build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "cannot start worker threads: {e}");
            return 1;
        }
    };
    let mut out_buf = Vec::new();
    let mut err_buf = Vec::new();
    let result = pool.install(|| dispatch(&cli, &mut out_buf, &mut err_buf));
    let _ = out.write_all(&out_buf);
    let _ = err.write_all(&err_buf);
    match result {
        Ok(false) => 0,
        Ok(true) => 2,
        Err(e @ (Error::Inconsistency(_) | Error::ClassificationGap(_))) => {
            let _ = writeln!(err, "{e}");
            2
        }
        Err(e) => {
            let _ = writeln!(err, "{e}");
            1
        }
    }
}
