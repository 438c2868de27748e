//! Every identity the harness can check, keyed by a short id.

use std::time::Instant;

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::dft::{
    closed_form_dft, corollary1_sides, corollary2_sides, defining_map, dft, max_distance, parseval_sides,
    theorem1_lhs_limited, theorem1_rhs, BernoulliConvention, PeriodicMap, TransformKind,
};
use crate::error::{Error, Result};
use crate::hp::{decimal, Bits, ComplexHP, Value, GUARD_BITS};
use crate::sums::{self, Comparison, SumParams, ZeroResidue};
use crate::zeta::{gamma_dft_sides, mikolas_d, partial_series, series_s};

use super::mapspec::{implied_period, parse_map};
use super::{Params, RunConfig};

/// How an identity takes its multipliers; drives sweep expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multipliers {
    None,
    One,
    Pair,
    Tuple,
}

#[derive(Debug, Clone, Copy)]
pub struct RegistryEntry {
    pub id: &'static str,
    /// The identity itself, written out.
    pub anchor: &'static str,
    pub params: &'static str,
    pub precondition: &'static str,
    pub multipliers: Multipliers,
}

const fn entry(
    id: &'static str,
    anchor: &'static str,
    params: &'static str,
    precondition: &'static str,
    multipliers: Multipliers,
) -> RegistryEntry {
    RegistryEntry {
        id,
        anchor,
        params,
        precondition,
        multipliers,
    }
}

use Multipliers as M;

pub static REGISTRY: &[RegistryEntry] = &[
    entry("eq1", "s(h,k) = (1/4k) sum_{a=1}^{k-1} cot(pi a/k) cot(pi a h/k)", "--h --k", "gcd(h,k) = 1", M::One),
    entry(
        "eq2",
        "s(h,k) = (1/2pi) sum_{r>=1, k!|r} cot(pi r h/k)/r",
        "--h --k [--terms N]",
        "gcd(h,k) = 1",
        M::One,
    ),
    entry(
        "parseval",
        "sum_a f1(a) f2(-a) = (1/k) sum_a f1^(a) f2^(a)",
        "--k --f F1 --f F2",
        "equal periods",
        M::None,
    ),
    entry(
        "th1",
        "sum_{a_1+...+a_m = 0 (mod k)} prod_j f_j(a_j h_j) = (1/k) sum_a prod_j f_j^(a h_j')",
        "--k --hs --f F1 --f F2 ...",
        "equal periods, gcd(h_j,k) = 1",
        M::Tuple,
    ),
    entry(
        "cor1",
        "sum_a f1(a h1) f2(a h2) = (1/k) sum_a f1^(-a h2) f2^(a h1)",
        "--k --hs h1,h2 --f F1 --f F2",
        "gcd(h_j,k) = 1",
        M::Pair,
    ),
    entry(
        "cor2",
        "sum_a f1(a h1) f2(a h2) = ((-1)^s/k) sum_a f1^(a h2) f2^(a h1), s = 1 if a map is odd",
        "--k --hs h1,h2 --f F1 --f F2",
        "gcd(h_j,k) = 1, one map odd or even",
        M::Pair,
    ),
    entry("lemma1-i", "DFT ((n/k)) = (i/2) cot(pi n/k), 0 on multiples of k", "--k", "k >= 1", M::None),
    entry(
        "lemma1-ii",
        "DFT B_r({n/k}) = r k^{1-r} (i/2)^r cot^{(r-1)}(pi n/k), B_r k^{1-r} on multiples of k",
        "--k --r",
        "r >= 1",
        M::None,
    ),
    entry(
        "lemma1-iii",
        "DFT (-1)^n ((n/k)) = -(i/2) tan(pi n/k), 0 at n = k/2",
        "--k",
        "k even",
        M::None,
    ),
    entry("lemma1-iv", "DFT (-1)^{n mod k} = i tan(pi n/k)", "--k", "k odd", M::None),
    entry(
        "lemma1-v",
        "DFT F(s, n/k) = k^{1-s} zeta(s, {n/k}), k^{1-s} zeta(s) on multiples of k",
        "--k --s",
        "Re s > 1",
        M::None,
    ),
    entry(
        "th2",
        "sum_{a_1+...+a_m = 0} prod_j ((a_j h_j/k)) = ((-1)^{m/2}/(2^m k)) sum_{a=1}^{k-1} prod_j cot(pi a h_j'/k), 0 for m odd",
        "--k --hs",
        "gcd(h_j,k) = 1",
        M::Tuple,
    ),
    entry(
        "cor3",
        "sum_{a=1}^{k-1} ((a h1/k)) ((a h2/k)) = (1/4k) sum_{a=1}^{k-1} cot(pi a h1/k) cot(pi a h2/k)",
        "--k --hs h1,h2",
        "gcd(h_j,k) = 1",
        M::Pair,
    ),
    entry(
        "th4",
        "sum_{a_1+...+a_m = 0} prod_j B_{r_j}({a_j h_j/k}) = prod_j B_{r_j}/k^{A-m+1} + ((-1)^{A/2} prod_j r_j/(2^A k^{A-m+1})) sum_{a=1}^{k-1} prod_j cot^{(r_j-1)}(pi a h_j'/k)",
        "--k --hs --rs",
        "gcd(h_j,k) = 1, A = r_1+...+r_m even (paper convention)",
        M::Tuple,
    ),
    entry(
        "cor5",
        "sum_a B_{r1}({a h1/k}) B_{r2}({a h2/k}) = B_{r1} B_{r2}/k^{A-1} + ((-1)^{(r1-r2)/2} r1 r2/(2^A k^{A-1})) sum_{a=1}^{k-1} cot^{(r1-1)}(pi a h2/k) cot^{(r2-1)}(pi a h1/k)",
        "--k --hs h1,h2 --rs r1,r2",
        "gcd(h_j,k) = 1, r1 + r2 even",
        M::Pair,
    ),
    entry(
        "th5",
        "A(h_1..h_m;k) = ((-1)^{m/2-1}/(2^m k)) sum_{a != k/2} tan(pi a h_1'/k) prod_{j>=2} cot(pi a h_j'/k)",
        "--k --hs",
        "k even, m even, h_1 odd, gcd(h_j,k) = 1",
        M::Tuple,
    ),
    entry(
        "cor6",
        "sum_{a=1}^{k-1} (-1)^a ((a h1/k)) ((a h2/k)) = -(1/4k) sum_{a != k/2} tan(pi a h2/k) cot(pi a h1/k)",
        "--k --hs h1,h2",
        "k even, h1 odd, gcd(h_j,k) = 1",
        M::Pair,
    ),
    entry(
        "cor7",
        "s2(h,k) = -(1/4k) sum_{a != k/2} tan(pi a h/k) cot(pi a/k)",
        "--h --k",
        "k even, gcd(h,k) = 1",
        M::One,
    ),
    entry(
        "th7",
        "B(h_1..h_m;k) = ((-1)^{m/2}/(2^{m-1} k)) sum_{a=1}^{k-1} tan(pi a h_1'/k) prod_{j>=2} cot(pi a h_j'/k)",
        "--k --hs",
        "k odd, m even, gcd(h_j,k) = 1",
        M::Tuple,
    ),
    entry(
        "cor8",
        "sum_{a=1}^{k-1} (-1)^{a + floor(a h1/k)} ((a h2/k)) = (1/2k) sum tan(pi a h2/k) cot(pi a h1/k)",
        "--k --hs h1,h2",
        "k odd, h1 odd, gcd(h_j,k) = 1",
        M::Pair,
    ),
    entry(
        "cor9-s3",
        "s3(h,k) = (1/2k) sum_{a=1}^{k-1} tan(pi a h/k) cot(pi a/k)",
        "--h --k",
        "k odd, gcd(h,k) = 1",
        M::One,
    ),
    entry(
        "cor9-s5",
        "s5(h,k) = (1/2k) sum_{a=1}^{k-1} tan(pi a/k) cot(pi a h/k)",
        "--h --k",
        "k odd, h odd, gcd(h,k) = 1",
        M::One,
    ),
    entry(
        "cor10",
        "sum_{a=1}^{k-1} (-1)^{floor(a h1/k)} ((a h2/k)) = (1/2k) sum tan(pi a h2/k) cot(pi a h1/k)",
        "--k --hs h1,h2",
        "k odd, h1 even, gcd(h_j,k) = 1",
        M::Pair,
    ),
    entry(
        "cor11",
        "s1(h,k) = (1/2k) sum_{a=1}^{k-1} tan(pi a/k) cot(pi a h/k)",
        "--h --k",
        "k odd, h even, gcd(h,k) = 1",
        M::One,
    ),
    entry(
        "eq14",
        "sum_{a=1}^{k-1} (-1)^{(a h1 mod k) + (a h2 mod k)} = (1/k) sum_{a=1}^{k-1} tan(pi a h1/k) tan(pi a h2/k)",
        "--k --hs h1,h2",
        "k odd, gcd(h_j,k) = 1",
        M::Pair,
    ),
    entry("tan-sq", "sum_{a=1}^{k-1} tan^2(pi a/k) = k^2 - k", "--k", "k odd", M::None),
    entry(
        "remark1",
        "s1(h,k) = (1/k) sum_{j=1}^{(k-1)/2} tan(pi j/k) cot(pi h j/k)",
        "--h --k",
        "k odd, h even, gcd(h,k) = 1",
        M::One,
    ),
    entry(
        "th9",
        "sum_{a=1}^{k-1} zeta(s1,{a h1/k}) zeta(s2,{a h2/k}) = (k^{s1+s2-1} - 1) zeta(s1) zeta(s2) + k^{s1+s2-1} sum_{a=1}^{k-1} F(s1, a h2/k) F(s2, -a h1/k)",
        "--k --hs h1,h2 --s1 --s2",
        "Re s1, Re s2 > 1, gcd(h_j,k) = 1",
        M::Pair,
    ),
    entry(
        "lemma3-a",
        "sum_{r>=1} f(r)/r = (pi/2k) sum_{r=1}^{k-1} f(r) cot(pi r/k)",
        "--f F [--k] [--terms N]",
        "f odd",
        M::None,
    ),
    entry(
        "lemma3-b",
        "(pi/2k) sum f(r) cot(pi r/k) = -(pi i/k^2) sum_{r=1}^{k-1} r f^(r)",
        "--f F [--k]",
        "f odd",
        M::None,
    ),
    entry(
        "lehmer-th8",
        "sum_{r>=1} f(r)/r = sum_{r=1}^{k} f(r) gamma(r,k)",
        "--f F [--k]",
        "f odd (so sum_r f(r) = 0)",
        M::None,
    ),
    entry(
        "cor12",
        "sum_{r>=1} f(r)/r = -(1/k) sum_{r=1}^{k-1} f^(r) F(1, -r/k)",
        "--f F [--k]",
        "f odd",
        M::None,
    ),
    entry(
        "gamma-dft",
        "DFT gamma(r,k) = F(1, -n/k) off multiples of k, gamma on multiples",
        "--k",
        "k >= 1",
        M::None,
    ),
];

pub fn lookup(id: &str) -> Result<&'static RegistryEntry> {
    REGISTRY
        .iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::InvalidArgument(format!("unknown identity '{id}'")))
}

/// Result of checking one identity instance.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IdentityReport {
    pub id: String,
    pub params: Params,
    pub lhs: String,
    pub rhs: String,
    pub residual: String,
    pub pass: bool,
    pub note: String,
    #[serde(skip)]
    pub residual_value: Option<Float>,
    #[serde(skip)]
    pub tolerance: Option<Float>,
    #[serde(skip)]
    pub micros: u64,
    #[serde(skip)]
    pub lhs_micros: Option<u64>,
    #[serde(skip)]
    pub rhs_micros: Option<u64>,
}

struct Evaluation {
    lhs: String,
    rhs: String,
    residual: Float,
    /// Replaces the configured tolerance (a rigorous truncation bound).
    bound: Option<Float>,
    notes: Vec<String>,
    lhs_micros: Option<u64>,
    rhs_micros: Option<u64>,
}

impl Evaluation {
    fn new(lhs: String, rhs: String, residual: Float) -> Self {
        Evaluation {
            lhs,
            rhs,
            residual,
            bound: None,
            notes: Vec::new(),
            lhs_micros: None,
            rhs_micros: None,
        }
    }

    fn sides(lhs: &Value, rhs: &Value, prec: Bits, digits: usize) -> Self {
        Evaluation::new(lhs.render(digits), rhs.render(digits), lhs.distance(rhs, prec))
    }

    fn comparison(c: Comparison, prec: Bits, digits: usize) -> Self {
        let mut e = Evaluation::new(c.lhs.render(digits), c.rhs.render(digits), c.residual(prec));
        for (name, v) in &c.extra {
            e.notes.push(format!("{name} = {}", v.render(digits)));
        }
        e.notes.extend(c.note);
        e
    }

    fn timed(mut self, lhs: u64, rhs: u64) -> Self {
        self.lhs_micros = Some(lhs);
        self.rhs_micros = Some(rhs);
        self
    }
}

fn timed<T>(f: impl FnOnce() -> Result<T>) -> Result<(T, u64)> {
    let start = Instant::now();
    let v = f()?;
    Ok((v, start.elapsed().as_micros() as u64))
}

/// Residuals are printed with this many significant digits.
const RESIDUAL_DIGITS: usize = 10;
/// Digits per entry when a report shows a whole transform.
const VECTOR_DIGITS: usize = 20;

/// Checks identity `id` at `params`.
pub fn verify(id: &str, params: &Params, cfg: &RunConfig) -> Result<IdentityReport> {
    let entry = lookup(id)?;
    cfg.validate()?;
    let start = Instant::now();
    let e = evaluate(entry.id, params, cfg)?;
    let micros = start.elapsed().as_micros() as u64;
    let (tol, pass) = match &e.bound {
        Some(b) => (b.clone(), e.residual <= *b),
        None => (cfg.tolerance.clone(), e.residual.is_zero() || e.residual < cfg.tolerance),
    };
    let mut note = entry.anchor.to_string();
    if let Some(b) = &e.bound {
        note.push_str(&format!("; tail bound {}", decimal(b, RESIDUAL_DIGITS)));
    }
    for n in &e.notes {
        note.push_str("; ");
        note.push_str(n);
    }
    Ok(IdentityReport {
        id: entry.id.to_string(),
        params: params.clone(),
        lhs: e.lhs,
        rhs: e.rhs,
        residual: decimal(&e.residual, RESIDUAL_DIGITS),
        pass,
        note,
        residual_value: Some(e.residual),
        tolerance: Some(tol),
        micros,
        lhs_micros: e.lhs_micros,
        rhs_micros: e.rhs_micros,
    })
}

/// Conventions from the report parameters, falling back to the run config.
pub fn conventions(params: &Params, cfg: &RunConfig) -> Result<(BernoulliConvention, ZeroResidue)> {
    let mut bern = cfg.bernoulli;
    let mut zero = cfg.zero_residue;
    if let Some(list) = &params.convention {
        for c in list.split(',').map(str::trim).filter(|c| !c.is_empty()) {
            match c {
                "paper" => bern = BernoulliConvention::Paper,
                "corrected" => bern = BernoulliConvention::Corrected,
                "include-zero" => zero = ZeroResidue::Include,
                "exclude-zero" => zero = ZeroResidue::Exclude,
                other => return Err(Error::InvalidArgument(format!("unknown convention '{other}'"))),
            }
        }
    }
    Ok((bern, zero))
}

/// `--hs h1,h2`, or `--h` completed with a `1` in front (`lead_one`) or behind.
fn pair(p: &Params, lead_one: bool) -> Result<(i64, i64)> {
    if p.hs.is_some() {
        return p.pair(None);
    }
    let h = p.h()?;
    Ok(if lead_one { (1, h) } else { (h, 1) })
}

fn sum_params(p: &Params, cfg: &RunConfig) -> Result<SumParams> {
    Ok(SumParams::new(p.k()?, p.hs()?).with_work_limit(cfg.work_limit))
}

/// Map specs, repeated to `count` when a single one is given.
fn maps(p: &Params, count: usize, default: &str, prec: Bits) -> Result<(u64, Vec<PeriodicMap>)> {
    let mut specs = p.f.clone().unwrap_or_else(|| vec![default.to_string()]);
    if specs.len() == 1 && count > 1 {
        specs = vec![specs[0].clone(); count];
    }
    if count > 0 && specs.len() != count {
        return Err(Error::InvalidArgument(format!("need {count} maps, got {}", specs.len())));
    }
    let k = match p.k {
        Some(_) => p.k()?,
        None => specs.iter().find_map(|s| implied_period(s)).ok_or_else(|| {
            Error::InvalidArgument("missing parameter --k".into())
        })?,
    };
    let fs = specs.iter().map(|s| parse_map(s, k, prec)).collect::<Result<Vec<_>>>()?;
    Ok((k, fs))
}

fn render_map(f: &PeriodicMap, digits: usize) -> String {
    let items: Vec<String> = (0..f.period() as i64).map(|n| f.value(n).render(digits)).collect();
    format!("[{}]", items.join(", "))
}

fn map_pair(direct: &PeriodicMap, closed: &PeriodicMap, prec: Bits) -> Evaluation {
    Evaluation::new(
        render_map(direct, VECTOR_DIGITS),
        render_map(closed, VECTOR_DIGITS),
        max_distance(direct, closed, prec),
    )
}

fn transform_check(kind: TransformKind, k: u64, prec: Bits) -> Result<Evaluation> {
    let wp = prec + GUARD_BITS;
    let f = defining_map(&kind, k, wp)?;
    let direct = dft(&f, wp);
    let closed = closed_form_dft(&kind, k, wp)?;
    Ok(map_pair(&direct, &closed, prec))
}

fn complex_sides(lhs: ComplexHP, rhs: ComplexHP, prec: Bits, digits: usize) -> Evaluation {
    Evaluation::sides(&Value::Complex(lhs), &Value::Complex(rhs), prec, digits)
}

fn evaluate(id: &str, p: &Params, cfg: &RunConfig) -> Result<Evaluation> {
    let prec = cfg.precision;
    let digits = cfg.digits();
    let (bern, _zero) = conventions(p, cfg)?;
    let cmp = |c: Comparison| Evaluation::comparison(c, prec, digits);
    Ok(match id {
        "eq1" => {
            let (h, k) = (p.h()?, p.k()?);
            let (rhs, t_rhs) = timed(|| sums::dedekind_cot_rhs(h, k, prec))?;
            let (lhs, t_lhs) = timed(|| Ok(sums::dedekind_s(h, k)))?;
            Evaluation::sides(&Value::Exact(lhs), &Value::Real(rhs), prec, digits).timed(t_lhs, t_rhs)
        }
        "eq2" => {
            let (h, k) = (p.h()?, p.k()?);
            crate::exact::require_coprime(h, k)?;
            let terms = p.terms.unwrap_or(cfg.terms);
            let (value, bound) = sums::dedekind_series_rhs(h, k, terms, prec)?;
            let mut e = Evaluation::sides(&Value::Exact(sums::dedekind_s(h, k)), &Value::Real(value), prec, digits);
            e.bound = Some(bound);
            e.notes.push(format!("{terms} terms"));
            e
        }
        "parseval" => {
            let (_, fs) = maps(p, 2, "sawtooth", prec)?;
            let (lhs, rhs) = parseval_sides(&fs[0], &fs[1], prec)?;
            Evaluation::sides(&lhs, &Value::Complex(rhs), prec, digits)
        }
        "th1" => {
            let count = p.hs.as_ref().map_or(0, Vec::len);
            let (_, fs) = maps(p, count, "sawtooth", prec)?;
            let hs = match &p.hs {
                Some(hs) => hs.clone(),
                None => vec![p.h.unwrap_or(1); fs.len()],
            };
            let (lhs, t_lhs) = timed(|| theorem1_lhs_limited(&fs, &hs, prec, cfg.work_limit))?;
            let (rhs, t_rhs) = timed(|| theorem1_rhs(&fs, &hs, prec))?;
            Evaluation::sides(&lhs, &Value::Complex(rhs), prec, digits).timed(t_lhs, t_rhs)
        }
        "cor1" | "cor2" => {
            let (h1, h2) = pair(p, true)?;
            let (_, fs) = maps(p, 2, "sawtooth", prec)?;
            let sides = if id == "cor1" { corollary1_sides } else { corollary2_sides };
            let (lhs, rhs) = sides(&fs[0], &fs[1], h1, h2, prec)?;
            Evaluation::sides(&lhs, &Value::Complex(rhs), prec, digits)
        }
        "lemma1-i" => transform_check(TransformKind::Sawtooth, p.k()?, prec)?,
        "lemma1-ii" => {
            let order = match (p.r, &p.rs) {
                (Some(r), _) => r as u32,
                (None, Some(rs)) if !rs.is_empty() => rs[0],
                _ => return Err(Error::InvalidArgument("missing parameter --r".into())),
            };
            let kind = TransformKind::Bernoulli { order, convention: bern };
            let mut e = transform_check(kind, p.k()?, prec)?;
            e.notes.extend(sums::bernoulli_convention_note(&[order], bern));
            e
        }
        "lemma1-iii" => transform_check(TransformKind::AltSawtooth, p.k()?, prec)?,
        "lemma1-iv" => transform_check(TransformKind::AltSign, p.k()?, prec)?,
        "lemma1-v" => {
            let s = if p.s.is_some() { p.s("s", prec)? } else { crate::zeta::ComplexS::real(prec, 2.0) };
            s.require_convergent()?;
            transform_check(TransformKind::PeriodicZeta { s: s.s }, p.k()?, prec)?
        }
        "th2" => {
            let sp = sum_params(p, cfg)?;
            let (rhs, t_rhs) = timed(|| sums::zagier_sum_rhs(&sp, prec))?;
            let (lhs, t_lhs) = timed(|| sums::zagier_sum_lhs(&sp))?;
            Evaluation::sides(&Value::Exact(lhs), &Value::Real(rhs), prec, digits).timed(t_lhs, t_rhs)
        }
        "cor3" => {
            let (h1, h2) = pair(p, true)?;
            cmp(sums::homogeneous_dedekind(h1, h2, p.k()?, prec)?)
        }
        "th4" => {
            let sp = sum_params(p, cfg)?.with_orders(p.rs()?);
            let (rhs, t_rhs) = timed(|| sums::bernoulli_sum_rhs(&sp, prec, bern))?;
            let (lhs, t_lhs) = timed(|| sums::bernoulli_sum_lhs(&sp))?;
            let mut e = Evaluation::sides(&Value::Exact(lhs), &Value::Real(rhs), prec, digits).timed(t_lhs, t_rhs);
            e.notes.extend(sums::bernoulli_convention_note(&sp.rs, bern));
            e
        }
        "cor5" => {
            let (h1, h2) = pair(p, true)?;
            let rs = p.rs()?;
            let [r1, r2] = rs[..] else {
                return Err(Error::InvalidArgument(format!("need two orders, got {}", rs.len())));
            };
            cmp(sums::bernoulli_pair((r1, r2), (h1, h2), p.k()?, prec, bern)?)
        }
        "th5" | "th7" => {
            let sp = sum_params(p, cfg)?;
            let (lhs_fn, rhs_fn): (fn(&SumParams) -> Result<Rational>, fn(&SumParams, Bits) -> Result<Float>) =
                if id == "th5" {
                    (sums::hardy_a_lhs, sums::hardy_a_rhs)
                } else {
                    (sums::hardy_b_lhs, sums::hardy_b_rhs)
                };
            let (rhs, t_rhs) = timed(|| rhs_fn(&sp, prec))?;
            let (lhs, t_lhs) = timed(|| lhs_fn(&sp))?;
            Evaluation::sides(&Value::Exact(lhs), &Value::Real(rhs), prec, digits).timed(t_lhs, t_rhs)
        }
        "cor6" => {
            let (h1, h2) = pair(p, true)?;
            cmp(sums::alternating_pair(h1, h2, p.k()?, prec)?)
        }
        "cor7" => cmp(sums::hardy_s2_identity(p.h()?, p.k()?, prec)?),
        "cor8" => {
            let (h1, h2) = pair(p, true)?;
            cmp(sums::signed_pair_odd(h1, h2, p.k()?, prec)?)
        }
        "cor9-s3" => cmp(sums::hardy_s3_identity(p.h()?, p.k()?, prec)?),
        "cor9-s5" => cmp(sums::hardy_s5_identity(p.h()?, p.k()?, prec)?),
        "cor10" => {
            let (h1, h2) = pair(p, false)?;
            cmp(sums::signed_pair_even(h1, h2, p.k()?, prec)?)
        }
        "cor11" => cmp(sums::hardy_s1_identity(p.h()?, p.k()?, prec)?),
        "eq14" => {
            let (h1, h2) = pair(p, false)?;
            let k = p.k()?;
            let mut e = cmp(sums::hardy_s4_identity(h1, h2, k, prec)?);
            let literal = sums::s4_literal_lhs(h1, h2, k);
            e.notes.push(format!("exponent a(h1+h2) mod k gives {literal}"));
            e
        }
        "tan-sq" => cmp(sums::tan_square_identity(p.k()?, prec)?),
        "remark1" => cmp(sums::remark1_equivalence(p.h()?, p.k()?, prec)?),
        "th9" => {
            let (h1, h2) = match (&p.hs, p.h) {
                (None, None) => (1, 1),
                _ => pair(p, false)?,
            };
            let s1 = zeta_arg(p, "s1", prec)?;
            let s2 = zeta_arg(p, "s2", prec)?;
            let (lhs, rhs) = mikolas_d(&s1, &s2, h1, h2, p.k()?, prec)?;
            complex_sides(lhs, rhs, prec, digits)
        }
        "lemma3-a" => {
            let (_, fs) = maps(p, 1, "sawtooth", prec)?;
            let terms = p.terms.unwrap_or(cfg.terms);
            let forms = series_s(&fs[0], prec)?;
            let (partial, bound) = partial_series(&fs[0], terms, prec)?;
            let mut e = complex_sides(partial, forms.cot_form, prec, digits);
            let mut b = Float::with_val(prec, &bound);
            if !b.is_zero() {
                b.next_up();
            }
            e.bound = Some(b);
            e.notes.push(format!("{terms} terms"));
            e
        }
        "lemma3-b" | "lehmer-th8" | "cor12" => {
            let (_, fs) = maps(p, 1, "sawtooth", prec)?;
            let forms = series_s(&fs[0], prec)?;
            let other = match id {
                "lemma3-b" => forms.dft_form,
                "lehmer-th8" => forms.lehmer_form,
                _ => forms.zeta_form,
            };
            complex_sides(forms.cot_form, other, prec, digits)
        }
        "gamma-dft" => {
            let (direct, closed) = gamma_dft_sides(p.k()?, prec)?;
            map_pair(&direct, &closed, prec)
        }
        other => return Err(Error::InvalidArgument(format!("unknown identity '{other}'"))),
    })
}

fn zeta_arg(p: &Params, name: &str, prec: Bits) -> Result<crate::zeta::ComplexS> {
    let given = match name {
        "s1" => p.s1.is_some(),
        _ => p.s2.is_some(),
    };
    if given {
        p.s(name, prec)
    } else {
        Ok(crate::zeta::ComplexS::real(prec, 2.0))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(k: u64) -> Params {
        Params {
            k: Some(k),
            ..Params::default()
        }
    }

    #[test]
    fn every_entry_is_dispatched_and_unique() {
        assert_eq!(REGISTRY.len(), 33);
        for (i, e) in REGISTRY.iter().enumerate() {
            assert!(REGISTRY[i + 1..].iter().all(|o| o.id != e.id), "{}", e.id);
            // an unknown id would surface as InvalidArgument("unknown identity")
            let err = evaluate(e.id, &Params::default(), &RunConfig::default()).err();
            if let Some(Error::InvalidArgument(msg)) = err {
                assert!(!msg.starts_with("unknown identity"), "{}", e.id);
            }
        }
    }

    #[test]
    fn dedekind_instances() {
        let cfg = RunConfig::default();
        let p = Params {
            h: Some(1),
            ..params(3)
        };
        let r = verify("eq1", &p, &cfg).unwrap();
        assert!(r.pass);
        assert_eq!(r.lhs, "1/18");
        let r = verify("eq2", &Params { terms: Some(1000), ..p }, &cfg).unwrap();
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn th4_paper_convention_fails_at_order_one() {
        let cfg = RunConfig::default();
        let p = Params {
            hs: Some(vec![1, 1]),
            rs: Some(vec![1, 1]),
            ..params(3)
        };
        let r = verify("th4", &p, &cfg).unwrap();
        assert!(!r.pass);
        assert_eq!(r.lhs, "7/36");
        assert!(r.note.contains("order-one"));
        let p = Params {
            convention: Some("corrected".into()),
            ..p
        };
        assert!(verify("th4", &p, &cfg).unwrap().pass);
    }

    #[test]
    fn preconditions_are_errors() {
        let cfg = RunConfig::default();
        let e = verify("cor9-s3", &Params { h: Some(1), ..params(4) }, &cfg).unwrap_err();
        assert!(e.is_precondition());
        let e = verify("eq1", &Params { h: Some(2), ..params(4) }, &cfg).unwrap_err();
        assert!(matches!(e, Error::NotCoprime { .. }));
        assert!(verify("nope", &params(3), &cfg).is_err());
    }

    #[test]
    fn transform_and_zeta_entries() {
        let cfg = RunConfig::default();
        for id in ["lemma1-i", "lemma1-iv", "lemma1-v", "gamma-dft", "tan-sq", "lemma3-b", "lehmer-th8", "cor12"] {
            let r = verify(id, &params(5), &cfg).unwrap();
            assert!(r.pass, "{id}: {r:?}");
        }
        let r = verify("lemma1-iii", &params(6), &cfg).unwrap();
        assert!(r.pass);
        let p = Params {
            f: Some(vec!["0,1,-1".into()]),
            terms: Some(2000),
            ..Params::default()
        };
        assert!(verify("lemma3-a", &p, &cfg).unwrap().pass);
        let p = Params {
            hs: Some(vec![1, 1]),
            ..params(2)
        };
        assert!(verify("th9", &p, &cfg).unwrap().pass);
    }
}
