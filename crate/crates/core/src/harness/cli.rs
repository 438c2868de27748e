//! `dedekind compute | verify | sweep`.
//!
//! Exit codes: 0 when everything passes, 1 when an identity fails, 2 on
//! usage errors and violated preconditions.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::dft::BernoulliConvention;
use crate::error::Result;
use crate::hp::DEFAULT_PRECISION;
use crate::sums::ZeroResidue;

use super::compute::compute;
use super::registry::{verify, IdentityReport, REGISTRY};
use super::sweep::{sweep, write_csv, SweepSpec};
use super::{parse_tolerance, Params, RunConfig};

#[derive(Parser, Debug)]
#[command(name = "dedekind", version, about = "Generalized Dedekind, Hardy and Hurwitz-zeta sums")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct GlobalArgs {
    /// Working precision in bits.
    #[arg(long, global = true, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
    /// Pass threshold, e.g. `2^-128` or `1e-30`; default 2^-(precision/2).
    #[arg(long, global = true)]
    tolerance: Option<String>,
    /// Series terms for truncated-series identities.
    #[arg(long, global = true)]
    terms: Option<u64>,
    /// Bernoulli and zero-residue conventions; repeatable.
    #[arg(long, global = true, value_enum)]
    convention: Vec<Convention>,
    #[arg(long, global = true)]
    json: bool,
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Worker threads for sweeps; 0 uses every core.
    #[arg(long, global = true, default_value_t = 0)]
    jobs: usize,
    /// Largest brute-force enumeration allowed.
    #[arg(long, global = true)]
    work_limit: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Convention {
    Paper,
    Corrected,
    IncludeZero,
    ExcludeZero,
}

impl Convention {
    fn name(self) -> &'static str {
        match self {
            Convention::Paper => "paper",
            Convention::Corrected => "corrected",
            Convention::IncludeZero => "include-zero",
            Convention::ExcludeZero => "exclude-zero",
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate one sum or special function.
    Compute {
        target: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check one identity instance.
    Verify {
        /// Identity id; `list` prints the registry.
        id: String,
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Check an identity over ranges of parameters.
    Sweep(SweepArgs),
}

#[derive(Args, Debug, Default)]
struct ParamArgs {
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    h: Option<i64>,
    #[arg(long, value_delimiter = ',')]
    hs: Option<Vec<i64>>,
    #[arg(long, value_delimiter = ',')]
    rs: Option<Vec<u32>>,
    #[arg(long)]
    r: Option<u64>,
    /// Hardy sum: S, s1, ..., s5.
    #[arg(long)]
    which: Option<String>,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    s1: Option<String>,
    #[arg(long)]
    s2: Option<String>,
    /// Rational argument `p/q`.
    #[arg(long)]
    x: Option<String>,
    /// Periodic map spec (repeatable): `sawtooth:h`, `bernoulli:r`, `cot:h`,
    /// `random:SEED`, or explicit values `0,1,-1`.
    #[arg(long)]
    f: Vec<String>,
    #[arg(long)]
    m: Option<usize>,
}

impl ParamArgs {
    fn into_params(self, conventions: &[Convention], terms: Option<u64>) -> Params {
        Params {
            k: self.k,
            h: self.h,
            hs: self.hs,
            rs: self.rs,
            r: self.r,
            which: self.which,
            s: self.s,
            s1: self.s1,
            s2: self.s2,
            x: self.x,
            f: (!self.f.is_empty()).then_some(self.f),
            m: self.m,
            terms,
            convention: convention_param(conventions),
        }
    }
}

fn convention_param(conventions: &[Convention]) -> Option<String> {
    (!conventions.is_empty()).then(|| conventions.iter().map(|c| c.name()).collect::<Vec<_>>().join(","))
}

#[derive(Args, Debug)]
struct SweepArgs {
    id: String,
    /// Moduli: `3..20`, `odd 3..49`, `even 2..48` or a list.
    #[arg(long)]
    k: String,
    /// Multipliers: `all-coprime` (default), a range or a list.
    #[arg(long)]
    h: Option<String>,
    /// Tuple length; with `--m 2` two-multiplier identities run over all pairs.
    #[arg(long)]
    m: Option<usize>,
    /// Random tuples per modulus (default 50 when m >= 3).
    #[arg(long)]
    samples: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_delimiter = ',')]
    rs: Option<Vec<u32>>,
    #[arg(long)]
    r: Option<u64>,
    #[arg(long)]
    s: Option<String>,
    #[arg(long)]
    s1: Option<String>,
    #[arg(long)]
    s2: Option<String>,
    #[arg(long)]
    f: Vec<String>,
}

fn config(g: &GlobalArgs) -> Result<RunConfig> {
    let mut cfg = RunConfig::with_precision(g.precision)?;
    if let Some(t) = &g.tolerance {
        cfg.tolerance = parse_tolerance(t, g.precision)?;
    }
    if let Some(n) = g.terms {
        cfg.terms = n;
    }
    if let Some(w) = g.work_limit {
        cfg.work_limit = w;
    }
    for c in &g.convention {
        match c {
            Convention::Paper => cfg.bernoulli = BernoulliConvention::Paper,
            Convention::Corrected => cfg.bernoulli = BernoulliConvention::Corrected,
            Convention::IncludeZero => cfg.zero_residue = ZeroResidue::Include,
            Convention::ExcludeZero => cfg.zero_residue = ZeroResidue::Exclude,
        }
    }
    cfg.jobs = g.jobs;
    cfg.validate()?;
    Ok(cfg)
}

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<i32> {
    let g = &cli.global;
    let cfg = config(g)?;
    let mut stdout = std::io::stdout().lock();
    match cli.command {
        Command::Compute { target, params } => {
            let p = params.into_params(&g.convention, g.terms);
            let o = compute(&target, &p, &cfg)?;
            if g.json {
                let _ = writeln!(stdout, "{}", to_json(&o));
            } else {
                let _ = writeln!(stdout, "{}", o.value);
                if let Some(n) = &o.note {
                    let _ = writeln!(stdout, "({n})");
                }
            }
            Ok(0)
        }
        Command::Verify { id, params } => {
            if id == "list" {
                for e in REGISTRY {
                    let _ = writeln!(stdout, "{:<11} {}  [{}]  needs {}", e.id, e.anchor, e.params, e.precondition);
                }
                return Ok(0);
            }
            let p = params.into_params(&g.convention, g.terms);
            let r = verify(&id, &p, &cfg)?;
            if let Some(path) = &g.csv {
                write_csv(path, std::slice::from_ref(&r))?;
            }
            if g.json {
                let _ = writeln!(stdout, "{}", to_json(&r));
            } else {
                print_report(&mut stdout, &r);
            }
            Ok(if r.pass { 0 } else { 1 })
        }
        Command::Sweep(a) => {
            let spec = SweepSpec {
                id: a.id,
                k: a.k,
                h: a.h,
                m: a.m,
                samples: a.samples,
                seed: a.seed,
                base: Params {
                    rs: a.rs,
                    r: a.r,
                    s: a.s,
                    s1: a.s1,
                    s2: a.s2,
                    f: (!a.f.is_empty()).then_some(a.f),
                    terms: g.terms,
                    convention: convention_param(&g.convention),
                    ..Params::default()
                },
            };
            let (summary, reports) = sweep(&spec, &cfg)?;
            if let Some(path) = &g.csv {
                write_csv(path, &reports)?;
            }
            if g.json {
                let doc = serde_json::json!({ "summary": summary, "reports": reports });
                let _ = writeln!(stdout, "{doc}");
            } else {
                for r in reports.iter().filter(|r| !r.pass) {
                    print_report(&mut stdout, r);
                }
                for e in &summary.errors {
                    let _ = writeln!(stdout, "error {e}");
                }
                let _ = writeln!(
                    stdout,
                    "{}: {} instances, {} passed, {} failed, {} skipped; max residual {}; {} us",
                    summary.id,
                    summary.instances,
                    summary.passed,
                    summary.failed,
                    summary.skipped,
                    summary.max_residual,
                    summary.micros
                );
                if let Some(ratio) = summary.timing_ratio {
                    let _ = writeln!(
                        stdout,
                        "brute force {} us, closed form {} us, ratio {:.1}",
                        summary.lhs_micros, summary.rhs_micros, ratio
                    );
                }
            }
            Ok(if summary.all_pass() { 0 } else { 1 })
        }
    }
}

fn print_report(out: &mut impl Write, r: &IdentityReport) {
    let status = if r.pass { "PASS" } else { "FAIL" };
    let params = serde_json::to_string(&r.params).unwrap_or_default();
    let _ = writeln!(out, "{} {} {}", r.id, params, status);
    let _ = writeln!(out, "  lhs      {}", r.lhs);
    let _ = writeln!(out, "  rhs      {}", r.rhs);
    let _ = writeln!(out, "  residual {}", r.residual);
    let _ = writeln!(out, "  note     {}", r.note);
}

fn to_json<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string(v).expect("reports serialize")
}
