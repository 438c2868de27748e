//! Hurwitz and periodic zeta functions, digamma, the generalized Euler
//! constants `gamma(r, k)`, and the series `S(f) = sum_{r>=1} f(r)/r` of
//! odd periodic maps with its four finite evaluations.

use rug::{Float, Integer, Rational};

use crate::dft::{closed_form_residual, dft, max_distance, Parity, PeriodicMap, TransformKind};
use crate::error::{Error, Result};
use crate::exact::{bernoulli_numbers, mulmod, require_coprime};
use crate::hp::{euler_gamma, pi, pow2, Bits, ComplexHP, Value, GUARD_BITS};
use crate::trig::CotTable;

/// Complex exponent `s` with convergence checks.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexS {
    pub s: ComplexHP,
}

impl ComplexS {
    pub fn new(s: ComplexHP) -> Self {
        ComplexS { s }
    }

    pub fn real(prec: Bits, x: f64) -> Self {
        ComplexS::new(ComplexHP::from_real(Float::with_val(prec, x)))
    }

    pub fn re(&self) -> &Float {
        &self.s.re
    }

    pub fn re_gt_one(&self) -> bool {
        self.s.re > 1
    }

    pub fn is_one(&self) -> bool {
        self.s.re == 1 && self.s.im.is_zero()
    }

    pub fn require_convergent(&self) -> Result<&Self> {
        if self.re_gt_one() {
            Ok(self)
        } else {
            Err(Error::ConvergenceDomain(format!(
                "Re s = {} must exceed 1",
                self.s.re.to_f64()
            )))
        }
    }
}

/// `B_{2j} / (2j)!` for `j = 1..=count` at `prec` bits.
fn bernoulli_over_factorial(count: usize, prec: Bits) -> Vec<Float> {
    let b = bernoulli_numbers(2 * count);
    let mut fact = Integer::from(1);
    let mut out = Vec::with_capacity(count);
    for j in 1..=count {
        fact *= (2 * j - 1) as u64;
        fact *= (2 * j) as u64;
        out.push(Float::with_val(prec, &b[2 * j] / Rational::from(&fact)));
    }
    out
}

/// Hurwitz zeta `zeta(s, x) = sum_{n>=0} (n + x)^{-s}` for `Re s > 1`, `x > 0`.
///
/// Euler-Maclaurin with shift `N`: the direct sum over `n < N`, the integral
/// and half-endpoint terms at `y = N + x`, and Bernoulli corrections until
/// the first omitted term drops below `2^{-(prec+8)}` relative to the value.
/// If the correction terms start growing first, `N` is doubled.
pub fn hurwitz_zeta(s: &ComplexS, x: &Rational, prec: Bits) -> Result<ComplexHP> {
    s.require_convergent()?;
    if *x <= 0 {
        return Err(Error::NonPositiveArgument(format!("Hurwitz parameter x = {x}")));
    }
    let wp = prec + GUARD_BITS + 16;
    let s_hp = s.s.with_prec(wp);
    let s_abs = s_hp.abs().to_f64();
    let mut shift = ((0.12 * wp as f64) + s_abs).ceil() as u64 + 8;
    loop {
        if let Some(z) = euler_maclaurin(&s_hp, x, shift, prec, wp) {
            return Ok(z.with_prec(prec));
        }
        shift *= 2;
    }
}

fn euler_maclaurin(s: &ComplexHP, x: &Rational, shift: u64, prec: Bits, wp: Bits) -> Option<ComplexHP> {
    let neg_s = -s;
    let mut total = ComplexHP::zero(wp);
    for n in 0..shift {
        let base = Float::with_val(wp, x + Rational::from(n));
        total = &total + &neg_s.pow_of(&base);
    }
    let y = Float::with_val(wp, x + Rational::from(shift));
    let y_neg_s = neg_s.pow_of(&y);
    let s_minus_one = s - &ComplexHP::from_real(Float::with_val(wp, 1));
    total = &total + &y_neg_s.scale(&y).recip_mul(&s_minus_one);
    total = &total + &y_neg_s.scale(&Float::with_val(wp, 0.5));

    let eps = pow2(wp, -(prec as i32) - 8);
    let y2 = Float::with_val(wp, y.square_ref());
    let max_terms = 4 * wp as usize;
    let coeffs = bernoulli_over_factorial(max_terms.min(64), wp);
    let mut coeffs = coeffs;
    let mut poch = s.clone();
    let mut ypow = y_neg_s.scale(&Float::with_val(wp, y.recip_ref()));
    let mut prev = None::<Float>;
    for j in 1..=max_terms {
        if j > coeffs.len() {
            coeffs = bernoulli_over_factorial((2 * coeffs.len()).min(max_terms), wp);
        }
        let term = (&poch * &ypow).scale(&coeffs[j - 1]);
        let mag = term.abs();
        let scale = Float::with_val(wp, total.abs()).max(&Float::with_val(wp, 1));
        if mag <= Float::with_val(wp, &eps * &scale) {
            return Some(total);
        }
        if prev.as_ref().is_some_and(|p| mag > *p) {
            return None;
        }
        total = &total + &term;
        prev = Some(mag);
        // (s)_{2j+1} = (s)_{2j-1} (s + 2j - 1)(s + 2j)
        let a = &poch * &(s + &ComplexHP::from_real(Float::with_val(wp, 2 * j - 1)));
        poch = &a * &(s + &ComplexHP::from_real(Float::with_val(wp, 2 * j)));
        ypow = ypow.scale(&Float::with_val(wp, y2.recip_ref()));
    }
    None
}

trait RecipMul {
    fn recip_mul(&self, den: &ComplexHP) -> ComplexHP;
}

impl RecipMul for ComplexHP {
    /// `self / den`
    fn recip_mul(&self, den: &ComplexHP) -> ComplexHP {
        self * &den.recip()
    }
}

/// Riemann zeta `zeta(s) = zeta(s, 1)`.
pub fn riemann_zeta(s: &ComplexS, prec: Bits) -> Result<ComplexHP> {
    hurwitz_zeta(s, &Rational::from(1), prec)
}

/// `zeta(s, a/k)` for `a = 1..=k`; serves every `F(s, n/k)`.
#[derive(Debug, Clone)]
pub struct HurwitzTable {
    k: u64,
    prec: Bits,
    /// index `a - 1` holds `zeta(s, a/k)`
    values: Vec<ComplexHP>,
    k_neg_s: ComplexHP,
}

impl HurwitzTable {
    pub fn new(s: &ComplexHP, k: u64, prec: Bits) -> Result<Self> {
        let cs = ComplexS::new(s.clone());
        cs.require_convergent()?;
        let wp = prec + GUARD_BITS;
        let values = (1..=k)
            .map(|a| hurwitz_zeta(&cs, &Rational::from((a, k)), wp))
            .collect::<Result<Vec<_>>>()?;
        let k_neg_s = (-&s.with_prec(wp)).pow_of(&Float::with_val(wp, k));
        Ok(HurwitzTable { k, prec, values, k_neg_s })
    }

    /// `zeta(s, {a/k})` with `{a/k}` taken in `(0, 1]`.
    pub fn hurwitz(&self, a: i64) -> ComplexHP {
        let r = a.rem_euclid(self.k as i64) as u64;
        let idx = if r == 0 { self.k } else { r };
        self.values[idx as usize - 1].with_prec(self.prec)
    }

    pub fn riemann(&self) -> ComplexHP {
        self.hurwitz(0)
    }

    /// `F(s, n/k) = k^{-s} sum_{a=1}^{k} e^{2 pi i a n / k} zeta(s, a/k)`.
    pub fn periodic_zeta(&self, n: i64) -> ComplexHP {
        let wp = self.prec + GUARD_BITS;
        let k = self.k;
        let two_pi = Float::with_val(wp, pi(wp) * 2u32);
        let mut total = ComplexHP::zero(wp);
        for (i, z) in self.values.iter().enumerate() {
            let a = i as i64 + 1;
            let r = mulmod(a, n, k);
            let phase = Float::with_val(wp, &two_pi * r) / k;
            total = &total + &(&ComplexHP::cis(&phase) * z);
        }
        (&total * &self.k_neg_s).with_prec(self.prec)
    }
}

/// `F(1, x) = -log(2 sin(pi x)) + i pi (1/2 - {x})` for `x` not an integer.
fn periodic_zeta_at_one(x: &Rational, prec: Bits) -> Result<ComplexHP> {
    if x.denom() == &1u32 {
        return Err(Error::ConvergenceDomain(
            "F(1, x) diverges at integer x".into(),
        ));
    }
    let wp = prec + GUARD_BITS;
    let fx = crate::exact::frac(x);
    let arg = Float::with_val(wp, pi(wp) * &fx);
    let re = -Float::with_val(wp, arg.sin() * 2u32).ln();
    let half_minus = Rational::from((1, 2)) - fx;
    let im = Float::with_val(wp, pi(wp) * &half_minus);
    Ok(ComplexHP::new(re, im).with_prec(prec))
}

/// Periodic zeta `F(s, x) = sum_{n>=1} e^{2 pi i n x} n^{-s}` at rational `x`.
pub fn periodic_zeta(s: &ComplexS, x: &Rational, prec: Bits) -> Result<ComplexHP> {
    if s.is_one() {
        return periodic_zeta_at_one(x, prec);
    }
    s.require_convergent()?;
    let k = x.denom().to_u64().ok_or_else(|| Error::InvalidArgument("denominator too large".into()))?;
    let n = Integer::from(x.numer() % k).to_i64().unwrap();
    let table = HurwitzTable::new(&s.s, k, prec)?;
    Ok(table.periodic_zeta(n))
}

/// `max_n |DFT(n -> F(s, n/k)) - closed form|` with the closed form
/// `k^{1-s} zeta(s, {n/k})` off the multiples and `k^{1-s} zeta(s)` on them.
pub fn lemma1v_check(s: &ComplexS, k: u64, prec: Bits) -> Result<Float> {
    s.require_convergent()?;
    closed_form_residual(&TransformKind::PeriodicZeta { s: s.s.clone() }, k, prec)
}

/// Both sides of the Hurwitz-zeta analogue of the Dedekind sum:
/// `sum_{a=1}^{k-1} zeta(s1, {a h1/k}) zeta(s2, {a h2/k})` and
/// `(k^{s1+s2-1} - 1) zeta(s1) zeta(s2) + k^{s1+s2-1} sum_{a=1}^{k-1} F(s1, a h2/k) F(s2, -a h1/k)`.
pub fn mikolas_d(
    s1: &ComplexS,
    s2: &ComplexS,
    h1: i64,
    h2: i64,
    k: u64,
    prec: Bits,
) -> Result<(ComplexHP, ComplexHP)> {
    s1.require_convergent()?;
    s2.require_convergent()?;
    require_coprime(h1, k)?;
    require_coprime(h2, k)?;
    let wp = prec + GUARD_BITS;
    let t1 = HurwitzTable::new(&s1.s, k, wp)?;
    let t2 = HurwitzTable::new(&s2.s, k, wp)?;
    let mut lhs = ComplexHP::zero(wp);
    let mut cross = ComplexHP::zero(wp);
    for a in 1..k as i64 {
        lhs = &lhs + &(&t1.hurwitz(mulmod(a, h1, k)) * &t2.hurwitz(mulmod(a, h2, k)));
        cross = &cross + &(&t1.periodic_zeta(mulmod(a, h2, k)) * &t2.periodic_zeta(-mulmod(a, h1, k)));
    }
    let one = ComplexHP::from_real(Float::with_val(wp, 1));
    let exponent = &(&s1.s.with_prec(wp) + &s2.s.with_prec(wp)) - &one;
    let k_pow = exponent.pow_of(&Float::with_val(wp, k));
    let zz = &t1.riemann() * &t2.riemann();
    let rhs = &(&(&k_pow - &one) * &zz) + &(&k_pow * &cross);
    Ok((lhs.with_prec(prec), rhs.with_prec(prec)))
}

/// Digamma `psi(x)` for rational `x > 0`: upward recurrence to `y >= y0`,
/// then `psi(y) ~ ln y - 1/(2y) - sum_j B_{2j} / (2j y^{2j})`.
pub fn digamma(x: &Rational, prec: Bits) -> Result<Float> {
    if *x <= 0 {
        return Err(Error::NonPositiveArgument(format!("digamma at {x}")));
    }
    let wp = prec + GUARD_BITS + 16;
    let y0 = (0.12 * wp as f64).ceil() as i64 + 8;
    let floor = x.clone().floor().numer().to_i64().unwrap_or(i64::MAX);
    let shift = (y0 - floor).max(0);
    let mut recurrence = Float::new(wp);
    for j in 0..shift {
        recurrence += Float::with_val(wp, x + Rational::from(j)).recip();
    }
    let y = Float::with_val(wp, x + Rational::from(shift));
    let mut acc = Float::with_val(wp, y.ln_ref());
    acc -= Float::with_val(wp, y.recip_ref()) / 2u32;
    let eps = pow2(wp, -(prec as i32) - 8);
    let y2_inv = Float::with_val(wp, y.square_ref()).recip();
    let mut ypow = y2_inv.clone();
    let mut count = 32usize;
    let mut b = bernoulli_numbers(2 * count);
    let mut j = 1usize;
    loop {
        if j > count {
            count *= 2;
            b = bernoulli_numbers(2 * count);
        }
        let term = Float::with_val(wp, &ypow * &b[2 * j]) / (2 * j) as u64;
        if Float::with_val(wp, term.abs_ref()) < eps {
            break;
        }
        acc -= term;
        ypow *= &y2_inv;
        j += 1;
    }
    Ok(Float::with_val(prec, acc - recurrence))
}

fn check_gamma_index(r: u64, k: u64) -> Result<u64> {
    match (r, k) {
        (0, 1) => Ok(1),
        _ if k >= 1 && (1..=k).contains(&r) => Ok(r),
        _ => Err(Error::OutOfRange(format!("gamma(r, k) needs 1 <= r <= k, got r = {r}, k = {k}"))),
    }
}

/// Generalized Euler constant `gamma(r, k) = -(ln k + psi(r/k)) / k`.
/// `gamma(0, 1)` is accepted as Euler's constant.
pub fn euler_constant_gamma(r: u64, k: u64, prec: Bits) -> Result<Float> {
    let r = check_gamma_index(r, k)?;
    let wp = prec + GUARD_BITS;
    let psi = digamma(&Rational::from((r, k)), wp)?;
    let ln_k = Float::with_val(wp, k).ln();
    Ok(Float::with_val(prec, -(ln_k + psi) / k))
}

/// The defining limit truncated at `x`: `sum_{n <= x, n = r (mod k)} 1/n - (ln x)/k`.
/// Converges to `gamma(r, k)` with error `O(1/x)`.
pub fn euler_constant_gamma_partial(r: u64, k: u64, x: u64, prec: Bits) -> Result<Float> {
    let r = check_gamma_index(r, k)?;
    let mut acc = Float::new(prec + GUARD_BITS);
    let mut n = r;
    while n <= x {
        acc += Float::with_val(prec + GUARD_BITS, n).recip();
        n += k;
    }
    let ln_x = Float::with_val(prec + GUARD_BITS, x).ln();
    Ok(Float::with_val(prec, acc - ln_x / k))
}

/// `gamma(1, k), ..., gamma(k, k)`.
#[derive(Debug, Clone)]
pub struct EulerConstantTable {
    pub k: u64,
    pub values: Vec<Float>,
}

impl EulerConstantTable {
    pub fn new(k: u64, prec: Bits) -> Result<Self> {
        let values = (1..=k)
            .map(|r| euler_constant_gamma(r, k, prec))
            .collect::<Result<Vec<_>>>()?;
        Ok(EulerConstantTable { k, values })
    }

    /// `gamma(r, k)` for any integer `r`, read mod `k`.
    pub fn get(&self, r: i64) -> &Float {
        let idx = r.rem_euclid(self.k as i64) as u64;
        let idx = if idx == 0 { self.k } else { idx };
        &self.values[idx as usize - 1]
    }

    pub fn as_map(&self) -> PeriodicMap {
        PeriodicMap::from_fn_numeric(self.k, |n| ComplexHP::from_real(self.get(n).clone()))
    }
}

/// The DFT of `r -> gamma(r, k)` computed directly, and its closed form:
/// `F(1, -n/k)` off the multiples of `k`, Euler's constant on them.
pub fn gamma_dft_sides(k: u64, prec: Bits) -> Result<(PeriodicMap, PeriodicMap)> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    let wp = prec + GUARD_BITS;
    let table = EulerConstantTable::new(k, wp)?;
    let direct = dft(&table.as_map(), wp);
    let closed = PeriodicMap::from_fn_numeric(k, |n| {
        if n == 0 {
            ComplexHP::from_real(euler_gamma(wp))
        } else {
            periodic_zeta_at_one(&Rational::from((-n, k as i64)), wp).expect("k does not divide n")
        }
    });
    Ok((direct, closed))
}

/// `max_n` distance between the two sides of [`gamma_dft_sides`].
pub fn gamma_dft_check(k: u64, prec: Bits) -> Result<Float> {
    let (direct, closed) = gamma_dft_sides(k, prec)?;
    Ok(Float::with_val(prec, max_distance(&direct, &closed, prec + GUARD_BITS)))
}

/// The four finite evaluations of `S(f) = sum_{r>=1} f(r)/r`.
#[derive(Debug, Clone)]
pub struct SeriesForms {
    /// `(pi / 2k) sum_{r=1}^{k-1} f(r) cot(pi r / k)`
    pub cot_form: ComplexHP,
    /// `-(pi i / k^2) sum_{r=1}^{k-1} r f^(r)`
    pub dft_form: ComplexHP,
    /// `sum_{r=1}^{k} f(r) gamma(r, k)`
    pub lehmer_form: ComplexHP,
    /// `-(1/k) sum_{r=1}^{k-1} f^(r) F(1, -r/k)`
    pub zeta_form: ComplexHP,
}

impl SeriesForms {
    pub fn all(&self) -> [&ComplexHP; 4] {
        [&self.cot_form, &self.dft_form, &self.lehmer_form, &self.zeta_form]
    }

    /// Largest pairwise distance among the four forms.
    pub fn spread(&self, prec: Bits) -> Float {
        let forms = self.all();
        let mut worst = Float::new(prec);
        for i in 0..4 {
            for j in i + 1..4 {
                worst.max_mut(&Float::with_val(prec, (forms[i] - forms[j]).abs()));
            }
        }
        worst
    }
}

fn require_odd(f: &PeriodicMap) -> Result<()> {
    if f.parity() == Parity::Odd || f.clone().with_parity(Parity::Odd).is_ok() {
        Ok(())
    } else {
        Err(Error::NotOdd)
    }
}

fn require_mean_zero(f: &PeriodicMap, prec: Bits) -> Result<()> {
    let zero = match f.period_sum(prec) {
        Value::Exact(q) => q == 0,
        other => {
            let tol = pow2(prec, -(prec as i32) + 16);
            other.distance(&Value::Exact(Rational::new()), prec) <= tol
        }
    };
    if zero {
        Ok(())
    } else {
        Err(Error::NotMeanZero)
    }
}

/// All four finite evaluations of `S(f)` for an odd k-periodic map.
pub fn series_s(f: &PeriodicMap, prec: Bits) -> Result<SeriesForms> {
    require_odd(f)?;
    let k = f.period();
    let wp = prec + GUARD_BITS;
    let pi_wp = pi(wp);
    let cots = CotTable::new(k, wp);
    let fhat = dft(f, wp);

    let mut cot_sum = ComplexHP::zero(wp);
    let mut weighted = ComplexHP::zero(wp);
    let mut zeta_sum = ComplexHP::zero(wp);
    for r in 1..k as i64 {
        cot_sum = &cot_sum + &f.complex_at(r, wp).scale(cots.get(r).unwrap());
        let g = fhat.complex_at(r, wp);
        weighted = &weighted + &g.scale(&Float::with_val(wp, r));
        let fz = periodic_zeta_at_one(&Rational::from((-r, k as i64)), wp)?;
        zeta_sum = &zeta_sum + &(&g * &fz);
    }
    let cot_form = cot_sum.scale(&Float::with_val(wp, &pi_wp / (2 * k)));
    let dft_form = weighted
        .mul_i()
        .scale(&Float::with_val(wp, -Float::with_val(wp, &pi_wp / Float::with_val(wp, k).square())));
    let zeta_form = zeta_sum.scale(&Float::with_val(wp, Float::with_val(wp, k).recip()));
    let zeta_form = -&zeta_form;
    let lehmer_form = lehmer_sum(f, wp)?;
    Ok(SeriesForms {
        cot_form: cot_form.with_prec(prec),
        dft_form: dft_form.with_prec(prec),
        lehmer_form: lehmer_form.with_prec(prec),
        zeta_form: zeta_form.with_prec(prec),
    })
}

/// `sum_{r=1}^{k} f(r) gamma(r, k)`; requires `sum_r f(r) = 0`, the condition
/// for `sum_{r>=1} f(r)/r` to converge.
pub fn lehmer_sum(f: &PeriodicMap, prec: Bits) -> Result<ComplexHP> {
    require_mean_zero(f, prec)?;
    let k = f.period();
    let wp = prec + GUARD_BITS;
    let table = EulerConstantTable::new(k, wp)?;
    let total: ComplexHP = (1..=k as i64)
        .map(|r| f.complex_at(r, wp).scale(table.get(r)))
        .sum();
    Ok(total.with_prec(prec))
}

/// Truncated series `sum_{r=1}^{n} f(r)/r` with a tail bound, for mean-zero maps.
///
/// By partial summation the tail is at most `(max F - min F) / (n + 1)`,
/// where `F(m) = sum_{r=1}^{m} f(r)` runs over one period (per component,
/// combined with `hypot`). This never exceeds `k max|f| / (n + 1)`.
pub fn partial_series(f: &PeriodicMap, terms: u64, prec: Bits) -> Result<(ComplexHP, Float)> {
    require_mean_zero(f, prec)?;
    let k = f.period();
    let wp = prec + GUARD_BITS;
    let vals: Vec<ComplexHP> = (0..k as i64).map(|n| f.complex_at(n, wp)).collect();
    let mut re = Float::new(wp);
    let mut im = Float::new(wp);
    let real_only = vals.iter().all(ComplexHP::is_real);
    for r in 1..=terms {
        let v = &vals[(r % k) as usize];
        if v.re.is_zero() && v.im.is_zero() {
            continue;
        }
        re += Float::with_val(wp, &v.re / r);
        if !real_only {
            im += Float::with_val(wp, &v.im / r);
        }
    }
    Ok((ComplexHP::new(re, im).with_prec(prec), tail_bound(&vals, terms, prec)))
}

fn tail_bound(vals: &[ComplexHP], terms: u64, prec: Bits) -> Float {
    let wp = prec + GUARD_BITS;
    let k = vals.len();
    let (mut acc_re, mut acc_im) = (Float::new(wp), Float::new(wp));
    let (mut lo_re, mut hi_re) = (Float::new(wp), Float::new(wp));
    let (mut lo_im, mut hi_im) = (Float::new(wp), Float::new(wp));
    for r in 1..=k {
        let v = &vals[r % k];
        acc_re += &v.re;
        acc_im += &v.im;
        lo_re.min_mut(&acc_re);
        hi_re.max_mut(&acc_re);
        lo_im.min_mut(&acc_im);
        hi_im.max_mut(&acc_im);
    }
    let width = Float::with_val(wp, (hi_re - lo_re).hypot(&(hi_im - lo_im)));
    // round up: the bound is a guarantee
    let mut bound = Float::with_val(prec, width / Float::with_val(wp, terms + 1));
    if !bound.is_zero() {
        bound.next_up();
    }
    bound
}

/// Exact-valued map convenience: `f(r)` for `r = 0..k` must be odd.
pub fn odd_exact_map(values: Vec<Rational>) -> Result<PeriodicMap> {
    PeriodicMap::exact(values)?.with_parity(Parity::Odd).map_err(|_| Error::NotOdd)
}

/// `n -> cot(pi n h / k)` (zero on the multiples of `k`), the weight of the
/// cotangent series of the Dedekind sum.
pub fn cot_weight_map(h: i64, k: u64, prec: Bits) -> Result<PeriodicMap> {
    require_coprime(h, k)?;
    let cots = CotTable::new(k, prec);
    let values = (0..k as i64)
        .map(|n| match cots.get(mulmod(n, h, k)) {
            Some(c) => ComplexHP::from_real(c.clone()),
            None => ComplexHP::zero(prec),
        })
        .collect();
    PeriodicMap::numeric(values)?.with_parity(Parity::Odd)
}

/// `n -> tan(pi n h / k)` for odd `k`.
pub fn tan_weight_map(h: i64, k: u64, prec: Bits) -> Result<PeriodicMap> {
    require_coprime(h, k)?;
    if k.is_multiple_of(2) {
        return Err(Error::ParityViolation(format!("tan weight needs odd k, got {k}")));
    }
    let values = (0..k as i64)
        .map(|n| ComplexHP::from_real(crate::trig::tan_at(mulmod(n, h, k), k, prec).expect("k odd")))
        .collect();
    PeriodicMap::numeric(values)?.with_parity(Parity::Odd)
}
