//! Dedekind, Dedekind-Bernoulli and Hardy sums: exact definitional values
//! next to their trigonometric closed forms.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use crate::dft::{
    closed_form_dft, constrained_sum_exact, check_work, alt_sign_value, theorem1_rhs_from_transforms,
    BernoulliConvention, TransformKind, DEFAULT_WORK_LIMIT,
};
use crate::error::{Error, Result};
use crate::exact::{bernoulli_bar, bernoulli_number, mod_inverse, mulmod, require_coprime, sawtooth_at};
use crate::hp::{pi, Bits, Value, GUARD_BITS};
use crate::trig::{cot_at, trig_product_sum, TrigFactor};
use crate::zeta::{cot_weight_map, partial_series};

/// Parameters shared by the multi-dimensional sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumParams {
    pub k: u64,
    pub hs: Vec<i64>,
    /// Bernoulli orders; empty for the sawtooth sums.
    pub rs: Vec<u32>,
    pub work_limit: u64,
}

impl SumParams {
    pub fn new(k: u64, hs: Vec<i64>) -> Self {
        SumParams {
            k,
            hs,
            rs: Vec::new(),
            work_limit: DEFAULT_WORK_LIMIT,
        }
    }

    pub fn with_orders(mut self, rs: Vec<u32>) -> Self {
        self.rs = rs;
        self
    }

    pub fn with_work_limit(mut self, limit: u64) -> Self {
        self.work_limit = limit;
        self
    }

    pub fn m(&self) -> usize {
        self.hs.len()
    }

    fn validate(&self) -> Result<()> {
        if self.k == 0 {
            return Err(Error::InvalidArgument("k must be positive".into()));
        }
        if self.hs.is_empty() {
            return Err(Error::InvalidArgument("need at least one multiplier".into()));
        }
        for &h in &self.hs {
            require_coprime(h, self.k)?;
        }
        Ok(())
    }

    fn validate_orders(&self) -> Result<()> {
        self.validate()?;
        if self.rs.len() != self.hs.len() {
            return Err(Error::InvalidArgument(format!(
                "{} orders for {} multipliers",
                self.rs.len(),
                self.hs.len()
            )));
        }
        if self.rs.contains(&0) {
            return Err(Error::InvalidArgument("Bernoulli orders must be positive".into()));
        }
        Ok(())
    }

    fn inverses(&self) -> Result<Vec<i64>> {
        self.hs.iter().map(|&h| mod_inverse(h, self.k).map(|v| v as i64)).collect()
    }

    fn order_sum(&self) -> u32 {
        self.rs.iter().sum()
    }
}

/// Two (or more) evaluations of the same quantity.
#[derive(Debug, Clone, PartialEq)]
pub struct Comparison {
    pub lhs: Value,
    pub rhs: Value,
    /// Further forms that should agree with `lhs`.
    pub extra: Vec<(String, Value)>,
    pub note: Option<String>,
}

impl Comparison {
    pub fn new(lhs: Value, rhs: Value) -> Self {
        Comparison {
            lhs,
            rhs,
            extra: Vec::new(),
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Largest distance from `lhs` to any other form.
    pub fn residual(&self, prec: Bits) -> Float {
        let mut worst = self.lhs.distance(&self.rhs, prec);
        for (_, v) in &self.extra {
            worst.max_mut(&self.lhs.distance(v, prec));
        }
        worst
    }
}

fn saw_table(h: i64, k: u64) -> Vec<Rational> {
    (0..k as i64).map(|a| sawtooth_at(mulmod(a, h, k), k)).collect()
}

fn sign(odd: bool) -> i32 {
    if odd {
        -1
    } else {
        1
    }
}

/// `c * trig` at `prec`, `c` exact.
fn scaled(c: &Rational, trig: Float, prec: Bits) -> Float {
    Float::with_val(prec, trig * c)
}

fn require_odd_k(k: u64, what: &str) -> Result<()> {
    if k.is_multiple_of(2) {
        return Err(Error::ParityViolation(format!("{what} needs k odd, got k = {k}")));
    }
    Ok(())
}

fn require_even_k(k: u64, what: &str) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::ParityViolation(format!("{what} needs k even, got k = {k}")));
    }
    Ok(())
}

fn require_h_parity(h: i64, odd: bool, what: &str) -> Result<()> {
    if (h.rem_euclid(2) == 1) != odd {
        let want = if odd { "odd" } else { "even" };
        return Err(Error::ParityViolation(format!("{what} needs h {want}, got h = {h}")));
    }
    Ok(())
}

fn require_coprime_pair(h1: i64, h2: i64, k: u64) -> Result<()> {
    require_coprime(h1, k)?;
    require_coprime(h2, k)
}

/// Classical Dedekind sum `s(h, k) = sum_{a mod k} ((a/k)) ((ah/k))`.
pub fn dedekind_s(h: i64, k: u64) -> Rational {
    (1..k as i64)
        .map(|a| sawtooth_at(a, k) * sawtooth_at(mulmod(a, h, k), k))
        .sum()
}

/// `(1/4k) sum_{a=1}^{k-1} cot(pi a / k) cot(pi a h / k)`.
pub fn dedekind_cot_rhs(h: i64, k: u64, prec: Bits) -> Result<Float> {
    require_coprime(h, k)?;
    let trig = trig_product_sum(&[TrigFactor::cot(1), TrigFactor::cot(h)], k, &[], prec + GUARD_BITS)?;
    Ok(scaled(&Rational::from((1, 4 * k)), trig, prec))
}

/// `(1/2 pi) sum_{r=1}^{N} cot(pi r h / k) / r`, skipping multiples of `k`,
/// with a bound on the omitted tail.
pub fn dedekind_series_rhs(h: i64, k: u64, terms: u64, prec: Bits) -> Result<(Float, Float)> {
    let wp = prec + GUARD_BITS;
    let weights = cot_weight_map(h, k, wp)?;
    let (value, bound) = partial_series(&weights, terms, wp)?;
    let two_pi = Float::with_val(wp, pi(wp) * 2u32);
    let value = Float::with_val(prec, &value.re / &two_pi);
    let mut bound = Float::with_val(prec, bound / &two_pi);
    if !bound.is_zero() {
        bound.next_up();
    }
    Ok((value, bound))
}

/// Constrained sawtooth product over `a_1 + ... + a_m = 0 (mod k)`.
pub fn zagier_sum_lhs(params: &SumParams) -> Result<Rational> {
    params.validate()?;
    check_work(params.k, params.m(), params.work_limit)?;
    let tables: Vec<_> = params.hs.iter().map(|&h| saw_table(h, params.k)).collect();
    Ok(constrained_sum_exact(&tables, params.k))
}

/// `(-1)^{m/2} / (2^m k) sum_{a=1}^{k-1} prod_j cot(pi a h_j' / k)`; zero for odd `m`.
pub fn zagier_sum_rhs(params: &SumParams, prec: Bits) -> Result<Float> {
    params.validate()?;
    let m = params.m();
    if m % 2 == 1 {
        return Ok(Float::new(prec));
    }
    let factors: Vec<_> = params.inverses()?.into_iter().map(TrigFactor::cot).collect();
    let trig = trig_product_sum(&factors, params.k, &[], prec + GUARD_BITS)?;
    let denom = Integer::from(Integer::u_pow_u(2, m as u32)) * params.k;
    let c = Rational::from((sign(m % 4 == 2), denom));
    Ok(scaled(&c, trig, prec))
}

/// Higher dimensional Dedekind-Bernoulli sum
/// `sum_{a_1 + ... + a_m = 0} prod_j B_{r_j}({a_j h_j / k})`.
pub fn bernoulli_sum_lhs(params: &SumParams) -> Result<Rational> {
    params.validate_orders()?;
    check_work(params.k, params.m(), params.work_limit)?;
    let k = params.k;
    let tables: Vec<Vec<Rational>> = params
        .hs
        .iter()
        .zip(&params.rs)
        .map(|(&h, &r)| {
            (0..k as i64)
                .map(|a| bernoulli_bar(r as usize, &Rational::from((mulmod(a, h, k), k))))
                .collect()
        })
        .collect();
    Ok(constrained_sum_exact(&tables, k))
}

/// Closed form of [`bernoulli_sum_lhs`].
///
/// `Paper`: `B_{r_1}...B_{r_m} / k^{A-m+1} + (-1)^{A/2} r_1...r_m / (2^A k^{A-m+1})
/// sum_{a=1}^{k-1} prod_j cot^{(r_j-1)}(pi a h_j' / k)`, `A` even. Off by a
/// constant whenever some `r_j = 1`.
///
/// `Corrected`: the DFT product with the order-one transform that keeps the
/// `-1/2` of `B_1` off the multiples; valid for every `A`.
pub fn bernoulli_sum_rhs(params: &SumParams, prec: Bits, convention: BernoulliConvention) -> Result<Float> {
    params.validate_orders()?;
    let k = params.k;
    let a_sum = params.order_sum();
    match convention {
        BernoulliConvention::Paper => {
            if a_sum % 2 == 1 {
                return Err(Error::ParityViolation(format!(
                    "the cotangent form needs r_1 + ... + r_m even, got {a_sum}"
                )));
            }
            let m = params.m() as u32;
            let k_pow = Integer::from(k).pow(a_sum + 1 - m);
            let mut constant = Rational::from((1, k_pow.clone()));
            for &r in &params.rs {
                constant *= bernoulli_number(r as usize);
            }
            let r_prod: Integer = params.rs.iter().map(|&r| Integer::from(r)).product();
            let denom = Integer::from(Integer::u_pow_u(2, a_sum)) * k_pow;
            let c = Rational::from((r_prod * sign(a_sum % 4 == 2), denom));
            let factors: Vec<_> = params
                .inverses()?
                .into_iter()
                .zip(&params.rs)
                .map(|(h, &r)| TrigFactor::CotDeriv {
                    order: r as usize - 1,
                    multiplier: h,
                })
                .collect();
            let trig = trig_product_sum(&factors, k, &[], prec + GUARD_BITS)?;
            let wp = prec + GUARD_BITS;
            Ok(Float::with_val(prec, scaled(&c, trig, wp) + &constant))
        }
        BernoulliConvention::Corrected => {
            let wp = prec + GUARD_BITS;
            let transforms = params
                .rs
                .iter()
                .map(|&r| closed_form_dft(&TransformKind::Bernoulli { order: r, convention }, k, wp))
                .collect::<Result<Vec<_>>>()?;
            let z = theorem1_rhs_from_transforms(&transforms, &params.hs, wp)?;
            Ok(Float::with_val(prec, &z.re))
        }
    }
}

/// Report note for the cotangent form when an order-one factor is present.
pub fn bernoulli_convention_note(rs: &[u32], convention: BernoulliConvention) -> Option<String> {
    (convention == BernoulliConvention::Paper && rs.contains(&1)).then(|| {
        "order-one factor: B_1({n/k}) is -1/2 at multiples of k, but the cotangent \
         transform assumes the sawtooth value 0 there; use the corrected convention"
            .to_string()
    })
}

/// Whether the `a = 0` residue enters a Hardy sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ZeroResidue {
    Include,
    /// The form under which the finite trigonometric identities hold.
    #[default]
    Exclude,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HardyKind {
    S,
    S1,
    S2,
    S3,
    S4,
    S5,
}

impl std::str::FromStr for HardyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "S" | "s" => HardyKind::S,
            "s1" => HardyKind::S1,
            "s2" => HardyKind::S2,
            "s3" => HardyKind::S3,
            "s4" => HardyKind::S4,
            "s5" => HardyKind::S5,
            _ => return Err(Error::InvalidArgument(format!("unknown Hardy sum '{s}'"))),
        })
    }
}

fn neg_one_pow(e: i64) -> i64 {
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn floor_div(a: i64, h: i64, k: u64) -> i64 {
    ((a as i128 * h as i128).div_euclid(k as i128)) as i64
}

/// The six Hardy sums over `a = 0..k-1`. Only `S` and `s4` have a nonzero
/// `a = 0` term (`-1` and `+1`); `convention` decides whether it is kept.
pub fn hardy_sum(which: HardyKind, h: i64, k: u64, convention: ZeroResidue) -> Rational {
    let start = match convention {
        ZeroResidue::Include => 0,
        ZeroResidue::Exclude => 1,
    };
    let mut total = Rational::new();
    for a in start..k as i64 {
        let fl = floor_div(a, h, k);
        let saw_a = || sawtooth_at(a, k);
        let term = match which {
            HardyKind::S => Rational::from(neg_one_pow(a + 1 + fl)),
            HardyKind::S1 => saw_a() * neg_one_pow(fl),
            HardyKind::S2 => saw_a() * sawtooth_at(mulmod(a, h, k), k) * neg_one_pow(a),
            HardyKind::S3 => sawtooth_at(mulmod(a, h, k), k) * neg_one_pow(a),
            HardyKind::S4 => Rational::from(neg_one_pow(fl)),
            HardyKind::S5 => saw_a() * neg_one_pow(a + fl),
        };
        total += term;
    }
    total
}

/// `A(h_1..h_m; k)`: sawtooth product weighted by `(-1)^{a_1}`; `k` even, `h_1` odd.
pub fn hardy_a_lhs(params: &SumParams) -> Result<Rational> {
    check_hardy_a(params)?;
    check_work(params.k, params.m(), params.work_limit)?;
    let k = params.k;
    let mut tables: Vec<_> = params.hs.iter().map(|&h| saw_table(h, k)).collect();
    for (a, v) in tables[0].iter_mut().enumerate() {
        if a % 2 == 1 {
            *v = Rational::from(-&*v);
        }
    }
    Ok(constrained_sum_exact(&tables, k))
}

fn check_hardy_a(params: &SumParams) -> Result<()> {
    params.validate()?;
    require_even_k(params.k, "A-sum")?;
    require_h_parity(params.hs[0], true, "A-sum first multiplier")
}

fn require_even_m(m: usize, what: &str) -> Result<()> {
    if m % 2 == 1 {
        return Err(Error::ParityViolation(format!("{what} needs m even, got m = {m}")));
    }
    Ok(())
}

/// `(-1)^{m/2-1} / (2^m k) sum_{a != k/2} tan(pi a h_1'/k) prod_{j>=2} cot(pi a h_j'/k)`.
pub fn hardy_a_rhs(params: &SumParams, prec: Bits) -> Result<Float> {
    check_hardy_a(params)?;
    let m = params.m();
    require_even_m(m, "A-sum closed form")?;
    let inv = params.inverses()?;
    let mut factors = vec![TrigFactor::tan(inv[0])];
    factors.extend(inv[1..].iter().map(|&h| TrigFactor::cot(h)));
    let trig = trig_product_sum(&factors, params.k, &[params.k / 2], prec + GUARD_BITS)?;
    let denom = Integer::from(Integer::u_pow_u(2, m as u32)) * params.k;
    let c = Rational::from((sign(m.is_multiple_of(4)), denom));
    Ok(scaled(&c, trig, prec))
}

/// `B(h_1..h_m; k)`: `a_1 != 0`, weight `(-1)^{a_1 h_1 + k floor(a_1 h_1 / k)}`; `k` odd.
pub fn hardy_b_lhs(params: &SumParams) -> Result<Rational> {
    params.validate()?;
    require_odd_k(params.k, "B-sum")?;
    check_work(params.k, params.m(), params.work_limit)?;
    let k = params.k;
    let h1 = params.hs[0];
    let mut tables = vec![(0..k as i64).map(|a| alt_sign_value(mulmod(a, h1, k), k)).collect::<Vec<_>>()];
    tables.extend(params.hs[1..].iter().map(|&h| saw_table(h, k)));
    Ok(constrained_sum_exact(&tables, k))
}

/// `(-1)^{m/2} / (2^{m-1} k) sum_{a=1}^{k-1} tan(pi a h_1'/k) prod_{j>=2} cot(pi a h_j'/k)`.
pub fn hardy_b_rhs(params: &SumParams, prec: Bits) -> Result<Float> {
    params.validate()?;
    require_odd_k(params.k, "B-sum")?;
    let m = params.m();
    require_even_m(m, "B-sum closed form")?;
    let inv = params.inverses()?;
    let mut factors = vec![TrigFactor::tan(inv[0])];
    factors.extend(inv[1..].iter().map(|&h| TrigFactor::cot(h)));
    let trig = trig_product_sum(&factors, params.k, &[], prec + GUARD_BITS)?;
    let denom = Integer::from(Integer::u_pow_u(2, m as u32 - 1)) * params.k;
    let c = Rational::from((sign(m % 4 == 2), denom));
    Ok(scaled(&c, trig, prec))
}

fn two_factor(f1: TrigFactor, f2: TrigFactor, k: u64, excl: &[u64], c: Rational, prec: Bits) -> Result<Value> {
    let trig = trig_product_sum(&[f1, f2], k, excl, prec + GUARD_BITS)?;
    Ok(Value::Real(scaled(&c, trig, prec)))
}

/// `sum_{a=1}^{k-1} ((a h1/k)) ((a h2/k)) = (1/4k) sum cot(pi a h1/k) cot(pi a h2/k)`.
pub fn homogeneous_dedekind(h1: i64, h2: i64, k: u64, prec: Bits) -> Result<Comparison> {
    require_coprime_pair(h1, h2, k)?;
    let lhs: Rational = (1..k as i64)
        .map(|a| sawtooth_at(mulmod(a, h1, k), k) * sawtooth_at(mulmod(a, h2, k), k))
        .sum();
    let rhs = two_factor(TrigFactor::cot(h1), TrigFactor::cot(h2), k, &[], Rational::from((1, 4 * k)), prec)?;
    Ok(Comparison::new(Value::Exact(lhs), rhs))
}

/// Two-factor Bernoulli sum `sum_{a mod k} B_{r1}({a h1/k}) B_{r2}({a h2/k})` against
/// `B_{r1} B_{r2} / k^{A-1} + (-1)^{(r1-r2)/2} r1 r2 / (2^A k^{A-1})
/// sum_{a=1}^{k-1} cot^{(r1-1)}(pi a h2/k) cot^{(r2-1)}(pi a h1/k)`, `A = r1 + r2` even.
///
/// The derivative orders pair with the opposite multipliers: `r1` with `h2`.
/// [`bernoulli_pair_literal`] keeps `r1` with `h1`.
pub fn bernoulli_pair(
    r: (u32, u32),
    h: (i64, i64),
    k: u64,
    prec: Bits,
    convention: BernoulliConvention,
) -> Result<Comparison> {
    bernoulli_pair_impl(r, h, k, prec, convention, true)
}

/// [`bernoulli_pair`] with `cot^{(r1-1)}(pi a h1/k) cot^{(r2-1)}(pi a h2/k)`.
/// Differs from the true value when `r1 != r2` and `h1 != h2 (mod k)`.
pub fn bernoulli_pair_literal(r: (u32, u32), h: (i64, i64), k: u64, prec: Bits) -> Result<Comparison> {
    bernoulli_pair_impl(r, h, k, prec, BernoulliConvention::Paper, false)
}

fn bernoulli_pair_impl(
    r: (u32, u32),
    h: (i64, i64),
    k: u64,
    prec: Bits,
    convention: BernoulliConvention,
    swapped: bool,
) -> Result<Comparison> {
    let (r1, r2) = r;
    let (h1, h2) = h;
    require_coprime_pair(h1, h2, k)?;
    if r1 == 0 || r2 == 0 {
        return Err(Error::InvalidArgument("Bernoulli orders must be positive".into()));
    }
    let a_sum = r1 + r2;
    if a_sum % 2 == 1 {
        return Err(Error::ParityViolation(format!("r1 + r2 must be even, got {a_sum}")));
    }
    let lhs: Rational = (0..k as i64)
        .map(|a| {
            bernoulli_bar(r1 as usize, &Rational::from((mulmod(a, h1, k), k)))
                * bernoulli_bar(r2 as usize, &Rational::from((mulmod(a, h2, k), k)))
        })
        .sum();
    let wp = prec + GUARD_BITS;
    let rhs = match convention {
        BernoulliConvention::Paper => {
            let k_pow = Integer::from(k).pow(a_sum - 1);
            let constant = bernoulli_number(r1 as usize) * bernoulli_number(r2 as usize) / Rational::from(k_pow.clone());
            let diff = (r1 as i64 - r2 as i64) / 2;
            let denom = Integer::from(Integer::u_pow_u(2, a_sum)) * k_pow;
            let c = Rational::from((Integer::from(r1 * r2) * neg_one_pow(diff), denom));
            let (m1, m2) = if swapped { (h2, h1) } else { (h1, h2) };
            let f1 = TrigFactor::CotDeriv { order: r1 as usize - 1, multiplier: m1 };
            let f2 = TrigFactor::CotDeriv { order: r2 as usize - 1, multiplier: m2 };
            let trig = trig_product_sum(&[f1, f2], k, &[], wp)?;
            Float::with_val(prec, scaled(&c, trig, wp) + &constant)
        }
        BernoulliConvention::Corrected => {
            // (1/k) sum_a g1(a h2) g2(-a h1)
            let g1 = closed_form_dft(&TransformKind::Bernoulli { order: r1, convention }, k, wp)?;
            let g2 = closed_form_dft(&TransformKind::Bernoulli { order: r2, convention }, k, wp)?;
            let total: crate::hp::ComplexHP = (0..k as i64)
                .map(|a| &g1.complex_at(mulmod(a, h2, k), wp) * &g2.complex_at(-mulmod(a, h1, k), wp))
                .sum();
            Float::with_val(prec, &total.re / k)
        }
    };
    let cmp = Comparison::new(Value::Exact(lhs), Value::Real(rhs));
    Ok(match bernoulli_convention_note(&[r1, r2], convention) {
        Some(n) => cmp.with_note(n),
        None => cmp,
    })
}

/// `sum_{a=1}^{k-1} (-1)^a ((a h1/k)) ((a h2/k)) = -(1/4k) sum_{a != k/2} tan(pi a h2/k) cot(pi a h1/k)`,
/// `k` even, `h1` odd.
pub fn alternating_pair(h1: i64, h2: i64, k: u64, prec: Bits) -> Result<Comparison> {
    require_coprime_pair(h1, h2, k)?;
    require_even_k(k, "alternating pair")?;
    require_h_parity(h1, true, "alternating pair")?;
    let lhs: Rational = (1..k as i64)
        .map(|a| sawtooth_at(mulmod(a, h1, k), k) * sawtooth_at(mulmod(a, h2, k), k) * neg_one_pow(a))
        .sum();
    let c = Rational::from((-1, 4 * k));
    let rhs = two_factor(TrigFactor::tan(h2), TrigFactor::cot(h1), k, &[k / 2], c, prec)?;
    Ok(Comparison::new(Value::Exact(lhs), rhs))
}

/// `s2(h, k) = -(1/4k) sum_{a != k/2} tan(pi a h/k) cot(pi a/k)`, `k` even.
pub fn hardy_s2_identity(h: i64, k: u64, prec: Bits) -> Result<Comparison> {
    require_coprime(h, k)?;
    require_even_k(k, "s2 closed form")?;
    let lhs = hardy_sum(HardyKind::S2, h, k, ZeroResidue::default());
    let c = Rational::from((-1, 4 * k));
    let rhs = two_factor(TrigFactor::tan(h), TrigFactor::cot(1), k, &[k / 2], c, prec)?;
    Ok(Comparison::new(Value::Exact(lhs), rhs))
}

/// `sum_{a=1}^{k-1} (-1)^{a + floor(a h1/k)} ((a h2/k)) = (1/2k) sum tan(pi a h2/k) cot(pi a h1/k)`,
/// `k` odd, `h1` odd.
pub fn signed_pair_odd(h1: i64, h2: i64, k: u64, prec: Bits) -> Result<Comparison> {
    require_coprime_pair(h1, h2, k)?;
    require_odd_k(k, "signed pair")?;
    require_h_parity(h1, true, "signed pair")?;
    let lhs: Rational = (1..k as i64)
        .map(|a| sawtooth_at(mulmod(a, h2, k), k) * neg_one_pow(a + floor_div(a, h1, k)))
        .sum();
    let rhs = two_factor(TrigFactor::tan(h2), TrigFactor::cot(h1), k, &[], Rational::from((1, 2 * k)), prec)?;
    Ok(Comparison::new(Value::Exact(lhs), rhs))
}

/// `sum_{a=1}^{k-1} (-1)^{floor(a h1/k)} ((a h2/k)) = (1/2k) sum tan(pi a h2/k) cot(pi a h1/k)`,
/// `k` odd, `h1` even.
pub fn signed_pair_even(h1: i64, h2: i64, k: u64, prec: Bits) -> Result<Comparison> {
    require_coprime_pair(h1, h2, k)?;
    require_odd_k(k, "signed pair")?;
    require_h_parity(h1, false, "signed pair")?;
    let lhs: Rational = (1..k as i64)
        .map(|a| sawtooth_at(mulmod(a, h2, k), k) * neg_one_pow(floor_div(a, h1, k)))
        .sum();
    let rhs = two_factor(TrigFactor::tan(h2), TrigFactor::cot(h1), k, &[], Rational::from((1, 2 * k)), prec)?;
    Ok(Comparison::new(Value::Exact(lhs), rhs))
}

/// `s3(h, k) = (1/2k) sum tan(pi a h/k) cot(pi a/k)`, `k` odd.
pub fn hardy_s3_identity(h: i64, k: u64, prec: Bits) -> Result<Comparison> {
    require_coprime(h, k)?;
    require_odd_k(k, "s3 closed form")?;
    let lhs = hardy_sum(HardyKind::S3, h, k, ZeroResidue::default());
    let rhs = two_factor(TrigFactor::tan(h), TrigFactor::cot(1), k, &[], Rational::from((1, 2 * k)), prec)?;
    Ok(Comparison::new(Value::Exact(lhs), rhs))
}

/// `s5(h, k) = (1/2k) sum tan(pi a/k) cot(pi a h/k)`, `k` odd, `h` odd.
pub fn hardy_s5_identity(h: i64, k: u64, prec: Bits) -> Result<Comparison> {
    require_coprime(h, k)?;
    require_odd_k(k, "s5 closed form")?;
    require_h_parity(h, true, "s5 closed form")?;
    let lhs = hardy_sum(HardyKind::S5, h, k, ZeroResidue::default());
    let rhs = two_factor(TrigFactor::tan(1), TrigFactor::cot(h), k, &[], Rational::from((1, 2 * k)), prec)?;
    Ok(Comparison::new(Value::Exact(lhs), rhs))
}

/// `s1(h, k) = (1/2k) sum tan(pi a/k) cot(pi a h/k)`, `k` odd, `h` even.
pub fn hardy_s1_identity(h: i64, k: u64, prec: Bits) -> Result<Comparison> {
    require_coprime(h, k)?;
    require_odd_k(k, "s1 closed form")?;
    require_h_parity(h, false, "s1 closed form")?;
    let lhs = hardy_sum(HardyKind::S1, h, k, ZeroResidue::default());
    let rhs = two_factor(TrigFactor::tan(1), TrigFactor::cot(h), k, &[], Rational::from((1, 2 * k)), prec)?;
    Ok(Comparison::new(Value::Exact(lhs), rhs))
}

/// `sum_{a=1}^{k-1} (-1)^{(a h1 mod k) + (a h2 mod k)} = (1/k) sum tan(pi a h1/k) tan(pi a h2/k)`, `k` odd.
///
/// The exponent is reduced factor by factor, which is what the two-map
/// identity produces for the alternating sign map.
pub fn hardy_s4_identity(h1: i64, h2: i64, k: u64, prec: Bits) -> Result<Comparison> {
    require_coprime_pair(h1, h2, k)?;
    require_odd_k(k, "s4-type identity")?;
    let lhs: i64 = (1..k as i64)
        .map(|a| neg_one_pow(mulmod(a, h1, k) + mulmod(a, h2, k)))
        .sum();
    let rhs = two_factor(TrigFactor::tan(h1), TrigFactor::tan(h2), k, &[], Rational::from((1, k)), prec)?;
    Ok(Comparison::new(Value::Exact(Rational::from(lhs)), rhs))
}

/// `(-1)^{a(h1+h2) mod k}` summed over `a = 1..k-1`: the other reading of the exponent.
pub fn s4_literal_lhs(h1: i64, h2: i64, k: u64) -> i64 {
    (1..k as i64).map(|a| neg_one_pow(mulmod(a, h1 + h2, k))).sum()
}

/// `sum_{a=1}^{k-1} tan^2(pi a / k) = k^2 - k` for odd `k`.
pub fn tan_square_identity(k: u64, prec: Bits) -> Result<Comparison> {
    require_odd_k(k, "tan^2 sum")?;
    let trig = trig_product_sum(&[TrigFactor::tan(1), TrigFactor::tan(1)], k, &[], prec)?;
    let exact = Rational::from(k * k - k);
    Ok(Comparison::new(Value::Real(trig), Value::Exact(exact)))
}

/// `s1(h, k)` for `k` odd, `h` even, against three trigonometric forms:
/// the full range `(1/2k) sum_{a=1}^{k-1} tan(pi a/k) cot(pi a h/k)`, the
/// half range `(1/k) sum_{j=1}^{(k-1)/2} tan(pi j/k) cot(pi h j/k)`, and
/// `-(1/2k) sum_{j=1, j != (k+1)/2}^{k} cot(pi h (2j-1)/2k) cot(pi (2j-1)/2k)`.
pub fn remark1_equivalence(h: i64, k: u64, prec: Bits) -> Result<Comparison> {
    let full = hardy_s1_identity(h, k, prec)?;
    let wp = prec + GUARD_BITS;
    let mut half = Float::new(wp);
    for j in 1..=(k as i64 - 1) / 2 {
        let t = crate::trig::tan_at(j, k, wp)?;
        let c = cot_at(mulmod(j, h, k), k, wp)?;
        half += t * c;
    }
    let half = Float::with_val(prec, half / k);
    let mut odd = Float::new(wp);
    for j in 1..=k as i64 {
        if 2 * j - 1 == k as i64 {
            continue;
        }
        let c1 = cot_at(mulmod(2 * j - 1, h, 2 * k), 2 * k, wp)?;
        let c2 = cot_at(2 * j - 1, 2 * k, wp)?;
        odd += c1 * c2;
    }
    let odd = -Float::with_val(prec, odd / (2 * k));
    let mut cmp = full;
    cmp.extra.push(("half-range".into(), Value::Real(half)));
    cmp.extra.push(("odd-multiple cot form".into(), Value::Real(odd)));
    Ok(cmp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{gcd, ratio};
    use crate::hp::pow2;

    const P: Bits = 256;

    fn tight() -> Float {
        pow2(P, -128)
    }

    fn coprimes(k: u64) -> Vec<i64> {
        (1..=k.max(1) as i64).filter(|&h| gcd(h, k) == 1).collect()
    }

    /// `n` coprime multipliers, repeating when `k` has fewer.
    fn spread(k: u64, n: usize, reversed: bool) -> Vec<i64> {
        let mut c = coprimes(k);
        if reversed {
            c.reverse();
        }
        c.iter().copied().cycle().take(n).collect()
    }

    fn close(x: &Float, q: &Rational) -> bool {
        Value::Real(x.clone()).distance(&Value::Exact(q.clone()), P) < tight()
    }

    fn holds(c: &Comparison) -> bool {
        c.residual(P) < tight()
    }

    #[test]
    fn dedekind_examples() {
        assert_eq!(dedekind_s(1, 1), Rational::new());
        assert_eq!(dedekind_s(1, 3), ratio(1, 18));
        assert_eq!(dedekind_s(2, 5), Rational::new());
        assert_eq!(dedekind_s(1, 4), ratio(1, 8));
        assert!(close(&dedekind_cot_rhs(1, 3, P).unwrap(), &ratio(1, 18)));
        assert!(dedekind_cot_rhs(1, 1, P).unwrap().is_zero());
        assert!(close(&dedekind_cot_rhs(2, 5, P).unwrap(), &Rational::new()));
        assert!(matches!(dedekind_cot_rhs(2, 4, P), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn dedekind_cot_form_all_small() {
        for k in 1..=30u64 {
            for h in coprimes(k) {
                assert!(close(&dedekind_cot_rhs(h, k, P).unwrap(), &dedekind_s(h, k)), "h={h} k={k}");
            }
        }
    }

    #[test]
    fn dedekind_series_within_bound() {
        for (h, k, n) in [(1i64, 3u64, 30_000u64), (1, 4, 10_000), (3, 7, 20_000)] {
            let (v, bound) = dedekind_series_rhs(h, k, n, 128).unwrap();
            let err = Value::Real(v).distance(&Value::Exact(dedekind_s(h, k)), 128);
            assert!(err <= bound, "h={h} k={k}");
        }
        let (v, b) = dedekind_series_rhs(1, 1, 1000, 128).unwrap();
        assert!(v.is_zero() && b.is_zero());
    }

    #[test]
    fn zagier_examples() {
        let p = |k, hs: &[i64]| SumParams::new(k, hs.to_vec());
        assert_eq!(zagier_sum_lhs(&p(3, &[1, 1])).unwrap(), ratio(-1, 18));
        assert_eq!(zagier_sum_lhs(&p(5, &[1, 2, 3])).unwrap(), Rational::new());
        assert_eq!(zagier_sum_lhs(&p(3, &[1, 1, 1, 1])).unwrap(), ratio(1, 216));
        assert!(close(&zagier_sum_rhs(&p(3, &[1, 1]), P).unwrap(), &ratio(-1, 18)));
        assert!(close(&zagier_sum_rhs(&p(3, &[1, 1, 1, 1]), P).unwrap(), &ratio(1, 216)));
        assert!(close(&zagier_sum_rhs(&p(5, &[1, 2]), P).unwrap(), &Rational::new()));
        assert_eq!(zagier_sum_lhs(&p(5, &[1, 2])).unwrap(), Rational::new());
    }

    #[test]
    fn zagier_pairs_and_quadruples() {
        for k in 1..=12u64 {
            for h1 in coprimes(k) {
                for h2 in coprimes(k) {
                    let p = SumParams::new(k, vec![h1, h2]);
                    assert!(close(&zagier_sum_rhs(&p, P).unwrap(), &zagier_sum_lhs(&p).unwrap()));
                }
            }
            let hs: Vec<i64> = spread(k, 4, false);
            let p = SumParams::new(k, hs);
            assert!(close(&zagier_sum_rhs(&p, P).unwrap(), &zagier_sum_lhs(&p).unwrap()), "k={k}");
        }
    }

    #[test]
    fn work_limit_is_enforced() {
        let p = SumParams::new(40, vec![1; 4]).with_work_limit(1000);
        assert!(matches!(zagier_sum_lhs(&p), Err(Error::WorkLimit { .. })));
    }

    #[test]
    fn bernoulli_examples() {
        let p = |k, hs: &[i64], rs: &[u32]| SumParams::new(k, hs.to_vec()).with_orders(rs.to_vec());
        assert_eq!(bernoulli_sum_lhs(&p(3, &[1, 1], &[1, 1])).unwrap(), ratio(7, 36));
        assert_eq!(bernoulli_sum_lhs(&p(1, &[1, 1], &[2, 2])).unwrap(), ratio(1, 36));
        // B_1(0) B_2(0) + B_1(1/2) B_2(1/2) over a_1 + a_2 = 0 (mod 2)
        assert_eq!(bernoulli_sum_lhs(&p(2, &[1, 1], &[1, 2])).unwrap(), ratio(-1, 12));

        let q = p(3, &[1, 1], &[2, 2]);
        let lhs = bernoulli_sum_lhs(&q).unwrap();
        assert!(close(&bernoulli_sum_rhs(&q, P, BernoulliConvention::Paper).unwrap(), &lhs));

        let q = p(3, &[1, 1], &[1, 1]);
        assert!(close(&bernoulli_sum_rhs(&q, P, BernoulliConvention::Paper).unwrap(), &ratio(1, 36)));
        assert!(close(&bernoulli_sum_rhs(&q, P, BernoulliConvention::Corrected).unwrap(), &ratio(7, 36)));
        assert!(bernoulli_convention_note(&[1, 1], BernoulliConvention::Paper).is_some());
        assert!(bernoulli_convention_note(&[1, 1], BernoulliConvention::Corrected).is_none());
    }

    #[test]
    fn bernoulli_cotangent_form_for_orders_at_least_two() {
        let orders: [&[u32]; 5] = [&[2, 2], &[2, 4], &[3, 3], &[2, 2, 2, 2], &[3, 2, 3]];
        for rs in orders {
            for k in 1..=9u64 {
                let hs: Vec<i64> = spread(k, rs.len(), true);
                let p = SumParams::new(k, hs).with_orders(rs.to_vec());
                let lhs = bernoulli_sum_lhs(&p).unwrap();
                for conv in [BernoulliConvention::Paper, BernoulliConvention::Corrected] {
                    let rhs = bernoulli_sum_rhs(&p, P, conv).unwrap();
                    assert!(close(&rhs, &lhs), "rs={rs:?} k={k} {conv:?}");
                }
            }
        }
    }

    #[test]
    fn bernoulli_corrected_with_order_one() {
        for rs in [&[1u32, 1][..], &[1, 3], &[1, 1, 2], &[1, 2]] {
            for k in 2..=8u64 {
                let hs: Vec<i64> = spread(k, rs.len(), false);
                let p = SumParams::new(k, hs).with_orders(rs.to_vec());
                let rhs = bernoulli_sum_rhs(&p, P, BernoulliConvention::Corrected).unwrap();
                assert!(close(&rhs, &bernoulli_sum_lhs(&p).unwrap()), "rs={rs:?} k={k}");
            }
        }
    }

    #[test]
    fn bernoulli_odd_total_vanishes() {
        for k in 1..=8u64 {
            let p = SumParams::new(k, vec![1, 1]).with_orders(vec![3, 2]);
            assert_eq!(bernoulli_sum_lhs(&p).unwrap(), Rational::new());
            assert!(matches!(
                bernoulli_sum_rhs(&p, P, BernoulliConvention::Paper),
                Err(Error::ParityViolation(_))
            ));
        }
    }

    #[test]
    fn bernoulli_pair_multiplier_assignment() {
        for k in 2..=11u64 {
            for h1 in coprimes(k) {
                for h2 in coprimes(k) {
                    for r in [(2u32, 2u32), (2, 4), (3, 5), (4, 2)] {
                        assert!(holds(&bernoulli_pair(r, (h1, h2), k, P, BernoulliConvention::Paper).unwrap()));
                    }
                    for r in [(1u32, 1u32), (1, 3)] {
                        assert!(holds(&bernoulli_pair(r, (h1, h2), k, P, BernoulliConvention::Corrected).unwrap()));
                    }
                }
            }
        }
        // keeping r1 with h1 breaks as soon as the orders and multipliers differ
        let swapped = bernoulli_pair((2, 4), (1, 2), 7, P, BernoulliConvention::Paper).unwrap();
        let literal = bernoulli_pair_literal((2, 4), (1, 2), 7, P).unwrap();
        assert!(holds(&swapped));
        assert!(!holds(&literal));
    }

    #[test]
    fn hardy_examples() {
        use HardyKind::*;
        let ex = ZeroResidue::Exclude;
        assert_eq!(hardy_sum(S3, 1, 3, ex), ratio(1, 3));
        assert_eq!(hardy_sum(S2, 1, 4, ex), ratio(-1, 8));
        assert_eq!(hardy_sum(S1, 2, 3, ex), ratio(-1, 3));
        assert_eq!(hardy_sum(S4, 1, 3, ZeroResidue::Include) - hardy_sum(S4, 1, 3, ex), ratio(1, 1));
        assert_eq!(hardy_sum(S, 1, 3, ZeroResidue::Include) - hardy_sum(S, 1, 3, ex), ratio(-1, 1));
        for kind in [S1, S2, S3, S5] {
            assert_eq!(hardy_sum(kind, 3, 7, ZeroResidue::Include), hardy_sum(kind, 3, 7, ex));
        }
    }

    #[test]
    fn hardy_a_examples() {
        let p = SumParams::new(4, vec![1, 1]);
        assert_eq!(hardy_a_lhs(&p).unwrap(), ratio(1, 8));
        assert!(close(&hardy_a_rhs(&p, P).unwrap(), &ratio(1, 8)));
        let p = SumParams::new(4, vec![1, 3]);
        assert!(close(&hardy_a_rhs(&p, P).unwrap(), &hardy_a_lhs(&p).unwrap()));
        let p = SumParams::new(2, vec![1, 1]);
        assert_eq!(hardy_a_lhs(&p).unwrap(), Rational::new());
        assert!(hardy_a_rhs(&p, P).unwrap().is_zero());
        assert!(matches!(hardy_a_lhs(&SumParams::new(5, vec![1, 1])), Err(Error::ParityViolation(_))));
        assert!(matches!(hardy_a_lhs(&SumParams::new(4, vec![2, 1])), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn hardy_a_general() {
        for k in (2..=14u64).step_by(2) {
            for h1 in coprimes(k) {
                for h2 in coprimes(k) {
                    let p = SumParams::new(k, vec![h1, h2]);
                    assert!(close(&hardy_a_rhs(&p, P).unwrap(), &hardy_a_lhs(&p).unwrap()));
                }
            }
            let p = SumParams::new(k, spread(k, 4, false));
            assert!(close(&hardy_a_rhs(&p, P).unwrap(), &hardy_a_lhs(&p).unwrap()), "k={k}");
        }
    }

    #[test]
    fn hardy_b_examples() {
        let p = SumParams::new(3, vec![1, 1]);
        assert_eq!(hardy_b_lhs(&p).unwrap(), ratio(-1, 3));
        assert!(close(&hardy_b_rhs(&p, P).unwrap(), &ratio(-1, 3)));
        let p = SumParams::new(3, vec![2, 1]);
        assert_eq!(hardy_b_lhs(&p).unwrap(), ratio(1, 3));
        assert!(close(&hardy_b_rhs(&p, P).unwrap(), &ratio(1, 3)));
        let p = SumParams::new(1, vec![1, 1]);
        assert_eq!(hardy_b_lhs(&p).unwrap(), Rational::new());
        assert!(hardy_b_rhs(&p, P).unwrap().is_zero());
    }

    #[test]
    fn hardy_b_general() {
        for k in (1..=13u64).step_by(2) {
            for h1 in coprimes(k) {
                for h2 in coprimes(k) {
                    let p = SumParams::new(k, vec![h1, h2]);
                    assert!(close(&hardy_b_rhs(&p, P).unwrap(), &hardy_b_lhs(&p).unwrap()));
                }
            }
            let p = SumParams::new(k, spread(k, 4, false));
            assert!(close(&hardy_b_rhs(&p, P).unwrap(), &hardy_b_lhs(&p).unwrap()), "k={k}");
        }
    }

    #[test]
    fn two_factor_corollaries() {
        for k in 1..=25u64 {
            for h1 in coprimes(k) {
                for h2 in coprimes(k) {
                    assert!(holds(&homogeneous_dedekind(h1, h2, k, P).unwrap()));
                    if k % 2 == 0 && h1 % 2 == 1 {
                        assert!(holds(&alternating_pair(h1, h2, k, P).unwrap()), "k={k} h=({h1},{h2})");
                    }
                    if k % 2 == 1 {
                        let c = if h1 % 2 == 1 {
                            signed_pair_odd(h1, h2, k, P)
                        } else {
                            signed_pair_even(h1, h2, k, P)
                        };
                        assert!(holds(&c.unwrap()), "k={k} h=({h1},{h2})");
                        assert!(holds(&hardy_s4_identity(h1, h2, k, P).unwrap()));
                    }
                }
                if k.is_multiple_of(2) {
                    assert!(holds(&hardy_s2_identity(h1, k, P).unwrap()));
                } else {
                    assert!(holds(&hardy_s3_identity(h1, k, P).unwrap()));
                    if h1 % 2 == 1 {
                        assert!(holds(&hardy_s5_identity(h1, k, P).unwrap()));
                    } else {
                        assert!(holds(&hardy_s1_identity(h1, k, P).unwrap()));
                        assert!(holds(&remark1_equivalence(h1, k, P).unwrap()));
                    }
                }
            }
        }
    }

    #[test]
    fn s4_identity_examples() {
        let c = hardy_s4_identity(1, 1, 3, P).unwrap();
        assert_eq!(c.lhs, Value::Exact(ratio(2, 1)));
        assert!(holds(&c));
        let c = hardy_s4_identity(1, 1, 5, P).unwrap();
        assert_eq!(c.lhs, Value::Exact(ratio(4, 1)));
        assert!(holds(&c));
        assert!(holds(&hardy_s4_identity(1, 3, 5, P).unwrap()));
        assert_eq!(s4_literal_lhs(1, 1, 3), 0);
        assert!(matches!(hardy_s4_identity(1, 1, 4, P), Err(Error::ParityViolation(_))));
    }

    #[test]
    fn s4_identity_matches_hardy_s4() {
        for k in (3..=21u64).step_by(2) {
            for h in coprimes(k).into_iter().filter(|h| h % 2 == 1) {
                let c = hardy_s4_identity(h, 1, k, P).unwrap();
                assert_eq!(c.lhs, Value::Exact(hardy_sum(HardyKind::S4, h, k, ZeroResidue::Exclude)));
            }
        }
    }

    #[test]
    fn tan_square_examples() {
        assert!(holds(&tan_square_identity(5, P).unwrap()));
        assert_eq!(tan_square_identity(5, P).unwrap().rhs, Value::Exact(ratio(20, 1)));
        assert!(holds(&tan_square_identity(3, P).unwrap()));
        assert!(matches!(tan_square_identity(6, P), Err(Error::ParityViolation(_))));
    }

    #[test]
    fn remark1_examples() {
        let c = remark1_equivalence(2, 3, P).unwrap();
        assert_eq!(c.lhs, Value::Exact(ratio(-1, 3)));
        assert!(holds(&c));
        assert!(holds(&remark1_equivalence(2, 5, P).unwrap()));
        assert!(holds(&remark1_equivalence(4, 5, P).unwrap()));
        assert!(matches!(remark1_equivalence(3, 5, P), Err(Error::ParityViolation(_))));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn dedekind_is_odd_in_h(k in 1u64..60, h in -200i64..200) {
                prop_assume!(gcd(h, k) == 1);
                prop_assert_eq!(dedekind_s(-h, k), -dedekind_s(h, k));
            }

            #[test]
            fn dedekind_depends_on_h_mod_k(k in 1u64..60, h in -200i64..200, t in -5i64..5) {
                prop_assert_eq!(dedekind_s(h + t * k as i64, k), dedekind_s(h, k));
            }

            #[test]
            fn zagier_odd_m_vanishes(k in 1u64..12, seed in 0i64..1000) {
                let hs: Vec<i64> = (0..3).map(|j| seed * (j + 1) + 1).filter(|&h| gcd(h, k) == 1).collect();
                prop_assume!(hs.len() == 3);
                let p = SumParams::new(k, hs);
                prop_assert_eq!(zagier_sum_lhs(&p).unwrap(), Rational::new());
            }

            #[test]
            fn zagier_rhs_matches_lhs(k in 2u64..16, a in 1i64..100, b in 1i64..100) {
                prop_assume!(gcd(a, k) == 1 && gcd(b, k) == 1);
                let p = SumParams::new(k, vec![a, b, a, b]);
                prop_assert!(close(&zagier_sum_rhs(&p, P).unwrap(), &zagier_sum_lhs(&p).unwrap()));
            }
        }
    }
}
