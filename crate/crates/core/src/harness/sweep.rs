//! Parameter sweeps: expand ranges into identity instances, check them in
//! parallel, and merge the reports in parameter order.

use std::path::Path;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use rug::Float;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::gcd;
use crate::hp::decimal;

use super::registry::{lookup, verify, IdentityReport, Multipliers};
use super::{Params, RunConfig};

/// Tuples drawn per modulus when `m >= 3` and no sample count is given.
pub const DEFAULT_SAMPLES: usize = 50;

#[derive(Debug, Clone)]
pub struct SweepSpec {
    pub id: String,
    /// `3..20`, `odd 3..49`, `even 2..48`, `1,5,7` or `12`.
    pub k: String,
    /// `all-coprime`, a range or a list; default `all-coprime`.
    pub h: Option<String>,
    /// Tuple length for identities with several multipliers.
    pub m: Option<usize>,
    /// Random tuples per modulus instead of all of them.
    pub samples: Option<usize>,
    pub seed: u64,
    /// Fixed parameters copied into every instance (`rs`, `f`, `s1`, ...).
    pub base: Params,
}

impl SweepSpec {
    pub fn new(id: &str, k: &str) -> Self {
        SweepSpec {
            id: id.to_string(),
            k: k.to_string(),
            h: None,
            m: None,
            samples: None,
            seed: 0,
            base: Params::default(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepSummary {
    pub id: String,
    pub instances: usize,
    pub passed: usize,
    pub failed: usize,
    /// Instances whose parameters violate the identity's hypotheses.
    pub skipped: usize,
    pub max_residual: String,
    pub micros: u64,
    pub lhs_micros: u64,
    pub rhs_micros: u64,
    /// Brute-force time over closed-form time, when both were measured.
    pub timing_ratio: Option<f64>,
    pub errors: Vec<String>,
}

impl SweepSummary {
    pub fn all_pass(&self) -> bool {
        self.failed == 0
    }
}

fn bad_range(s: &str) -> Error {
    Error::InvalidArgument(format!("bad range '{s}'"))
}

/// Inclusive integer ranges: `a..b`, `odd a..b`, `even a..b`, `a,b,c`, `a`.
pub fn parse_range(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    let (filter, body): (Option<i64>, &str) = if let Some(rest) = s.strip_prefix("odd") {
        (Some(1), rest.trim())
    } else if let Some(rest) = s.strip_prefix("even") {
        (Some(0), rest.trim())
    } else {
        (None, s)
    };
    let values: Vec<i64> = if let Some((a, b)) = body.split_once("..") {
        let a: i64 = a.trim().parse().map_err(|_| bad_range(s))?;
        let b: i64 = b.trim().trim_start_matches('=').parse().map_err(|_| bad_range(s))?;
        (a..=b).collect()
    } else {
        body.split(',')
            .map(|t| t.trim().parse().map_err(|_| bad_range(s)))
            .collect::<Result<_>>()?
    };
    Ok(values
        .into_iter()
        .filter(|v| filter.is_none_or(|p| v.rem_euclid(2) == p))
        .collect())
}

fn moduli(spec: &str) -> Result<Vec<u64>> {
    parse_range(spec)?
        .into_iter()
        .map(|k| {
            u64::try_from(k)
                .ok()
                .filter(|&k| k > 0)
                .ok_or_else(|| Error::InvalidArgument(format!("k must be positive, got {k}")))
        })
        .collect()
}

/// Residues in `1..k` coprime to `k` (`[1]` for `k = 1`).
pub fn coprime_residues(k: u64) -> Vec<i64> {
    if k == 1 {
        return vec![1];
    }
    (1..k as i64).filter(|&h| gcd(h, k) == 1).collect()
}

fn multipliers(spec: Option<&str>, k: u64) -> Result<Vec<i64>> {
    match spec.map(str::trim) {
        None | Some("all-coprime") => Ok(coprime_residues(k)),
        Some(s) => parse_range(s),
    }
}

fn all_tuples(base: &[i64], m: usize) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..m {
        out = out
            .into_iter()
            .flat_map(|t| {
                base.iter().map(move |&h| {
                    let mut t = t.clone();
                    t.push(h);
                    t
                })
            })
            .collect();
    }
    out
}

fn instances(spec: &SweepSpec) -> Result<Vec<Params>> {
    let entry = lookup(&spec.id)?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut out = Vec::new();
    for k in moduli(&spec.k)? {
        let base = Params {
            k: Some(k),
            ..spec.base.clone()
        };
        let hs_of = |t: Vec<i64>| Params {
            hs: Some(t),
            ..base.clone()
        };
        match entry.multipliers {
            Multipliers::None => out.push(base.clone()),
            Multipliers::One => {
                for h in multipliers(spec.h.as_deref(), k)? {
                    out.push(Params { h: Some(h), ..base.clone() });
                }
            }
            Multipliers::Pair if spec.m != Some(2) => {
                for h in multipliers(spec.h.as_deref(), k)? {
                    out.push(Params { h: Some(h), ..base.clone() });
                }
            }
            Multipliers::Pair | Multipliers::Tuple => {
                let m = spec
                    .m
                    .or(spec.base.rs.as_ref().map(Vec::len))
                    .or(spec.base.hs.as_ref().map(Vec::len))
                    .unwrap_or(2);
                let pool = multipliers(spec.h.as_deref(), k)?;
                let samples = spec.samples.or((m >= 3).then_some(DEFAULT_SAMPLES));
                match samples {
                    Some(n) => {
                        let mut drawn: Vec<Vec<i64>> = (0..n)
                            .map(|_| (0..m).map(|_| *pool.choose(&mut rng).unwrap()).collect())
                            .collect();
                        drawn.sort();
                        out.extend(drawn.into_iter().map(hs_of));
                    }
                    None => out.extend(all_tuples(&pool, m).into_iter().map(hs_of)),
                }
            }
        }
    }
    Ok(out)
}

enum Outcome {
    Report(IdentityReport),
    Skipped,
    Failed(String),
}

/// Runs every admissible instance of `spec` on `cfg.jobs` workers (all cores
/// when 0). Reports come back in parameter order.
pub fn sweep(spec: &SweepSpec, cfg: &RunConfig) -> Result<(SweepSummary, Vec<IdentityReport>)> {
    cfg.validate()?;
    let cases = instances(spec)?;
    let run = || -> Vec<Outcome> {
        cases
            .par_iter()
            .map(|p| match verify(&spec.id, p, cfg) {
                Ok(r) => Outcome::Report(r),
                Err(e) if e.is_precondition() || matches!(e, Error::WorkLimit { .. }) => Outcome::Skipped,
                Err(e) => Outcome::Failed(format!("{}: {e}", serde_json::to_string(p).unwrap_or_default())),
            })
            .collect()
    };
    let outcomes = if cfg.jobs > 0 {
        rayon::ThreadPoolBuilder::new()
            .num_threads(cfg.jobs)
            .build()
            .map_err(|e| Error::InvalidArgument(format!("worker pool: {e}")))?
            .install(run)
    } else {
        run()
    };

    let mut summary = SweepSummary {
        id: spec.id.clone(),
        instances: outcomes.len(),
        passed: 0,
        failed: 0,
        skipped: 0,
        max_residual: "0".into(),
        micros: 0,
        lhs_micros: 0,
        rhs_micros: 0,
        timing_ratio: None,
        errors: Vec::new(),
    };
    let mut worst = Float::new(cfg.precision);
    let mut reports = Vec::new();
    for o in outcomes {
        match o {
            Outcome::Skipped => summary.skipped += 1,
            Outcome::Failed(msg) => {
                summary.failed += 1;
                summary.errors.push(msg);
            }
            Outcome::Report(r) => {
                if r.pass {
                    summary.passed += 1;
                } else {
                    summary.failed += 1;
                }
                if let Some(v) = &r.residual_value {
                    worst.max_mut(v);
                }
                summary.micros += r.micros;
                if let (Some(l), Some(rh)) = (r.lhs_micros, r.rhs_micros) {
                    summary.lhs_micros += l;
                    summary.rhs_micros += rh;
                }
                reports.push(r);
            }
        }
    }
    summary.max_residual = decimal(&worst, 10);
    if summary.lhs_micros > 0 {
        summary.timing_ratio = Some(summary.lhs_micros as f64 / summary.rhs_micros.max(1) as f64);
    }
    Ok((summary, reports))
}

fn join<T: ToString>(v: &Option<Vec<T>>) -> String {
    v.as_ref()
        .map(|v| v.iter().map(T::to_string).collect::<Vec<_>>().join(";"))
        .unwrap_or_default()
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(T::to_string).unwrap_or_default()
}

/// CSV with one row per report; tuple columns are `;`-separated.
pub fn write_csv(path: &Path, reports: &[IdentityReport]) -> Result<()> {
    let io = |e: csv::Error| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()));
    let mut w = csv::Writer::from_path(path).map_err(io)?;
    w.write_record([
        "id", "k", "h", "hs", "rs", "s", "lhs", "rhs", "residual", "pass", "micros", "lhs_micros", "rhs_micros",
    ])
    .map_err(io)?;
    for r in reports {
        let p = &r.params;
        let s = [&p.s, &p.s1, &p.s2]
            .iter()
            .filter_map(|v| v.as_deref())
            .collect::<Vec<_>>()
            .join(";");
        w.write_record([
            r.id.clone(),
            opt(&p.k),
            opt(&p.h),
            join(&p.hs),
            join(&p.rs),
            s,
            r.lhs.clone(),
            r.rhs.clone(),
            r.residual.clone(),
            r.pass.to_string(),
            r.micros.to_string(),
            opt(&r.lhs_micros),
            opt(&r.rhs_micros),
        ])
        .map_err(io)?;
    }
    w.flush().map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display())))
}
