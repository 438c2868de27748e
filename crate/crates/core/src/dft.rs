//! Discrete Fourier transform on k-periodic functions `f : Z -> C`.
//!
//! The transform is `f^(n) = sum_{a mod k} f(a) e^{-2 pi i a n / k}`,
//! evaluated directly in `O(k^2)` so every modulus (prime or not) is handled
//! the same way. Exact maps stay exact through convolution, dilation and the
//! brute-force side of the convolution identity; they are promoted to
//! [`ComplexHP`] only when a transform is taken.

use rug::ops::Pow;
use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::exact::{bernoulli_bar, bernoulli_number, mod_inverse, mulmod, ratio, require_coprime, sawtooth_at};
use crate::hp::{pow2, Bits, ComplexHP, Value, GUARD_BITS};
use crate::trig::{cot_at, cot_deriv_at, tan_at};
use crate::zeta::{hurwitz_zeta, riemann_zeta, ComplexS};

/// Parity tag carried by a map.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
    None,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Values {
    Exact(Vec<Rational>),
    Numeric(Vec<ComplexHP>),
}

/// A k-periodic function stored as its values on `0..k`.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicMap {
    values: Values,
    parity: Parity,
}

impl PeriodicMap {
    pub fn exact(values: Vec<Rational>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("a period needs at least one value".into()));
        }
        let mut map = PeriodicMap {
            values: Values::Exact(values),
            parity: Parity::None,
        };
        map.parity = map.detect_parity();
        Ok(map)
    }

    pub fn numeric(values: Vec<ComplexHP>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("a period needs at least one value".into()));
        }
        Ok(PeriodicMap {
            values: Values::Numeric(values),
            parity: Parity::None,
        })
    }

    /// Exact map `n -> g(n)` for `n` in `0..k`.
    pub fn from_fn_exact(k: u64, g: impl Fn(i64) -> Rational) -> Self {
        Self::exact((0..k as i64).map(g).collect()).expect("k >= 1")
    }

    pub fn from_fn_numeric(k: u64, g: impl Fn(i64) -> ComplexHP) -> Self {
        Self::numeric((0..k as i64).map(g).collect()).expect("k >= 1")
    }

    pub fn period(&self) -> u64 {
        match &self.values {
            Values::Exact(v) => v.len() as u64,
            Values::Numeric(v) => v.len() as u64,
        }
    }

    pub fn values(&self) -> &Values {
        &self.values
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.values, Values::Exact(_))
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    /// Tags the map with a parity after checking it over one period. Exact
    /// maps are checked exactly, numeric maps within `2^{-(prec-8)}`.
    pub fn with_parity(mut self, parity: Parity) -> Result<Self> {
        if !self.satisfies(parity) {
            return Err(Error::ParityViolation(format!(
                "map does not satisfy the {parity:?} tag"
            )));
        }
        self.parity = parity;
        Ok(self)
    }

    fn idx(&self, n: i64) -> usize {
        n.rem_euclid(self.period() as i64) as usize
    }

    /// Exact value at `n`, if the map is exact.
    pub fn exact_at(&self, n: i64) -> Option<&Rational> {
        match &self.values {
            Values::Exact(v) => Some(&v[self.idx(n)]),
            Values::Numeric(_) => None,
        }
    }

    pub fn value(&self, n: i64) -> Value {
        match &self.values {
            Values::Exact(v) => Value::Exact(v[self.idx(n)].clone()),
            Values::Numeric(v) => Value::Complex(v[self.idx(n)].clone()),
        }
    }

    pub fn complex_at(&self, n: i64, prec: Bits) -> ComplexHP {
        match &self.values {
            Values::Exact(v) => ComplexHP::from_rational(prec, &v[self.idx(n)]),
            Values::Numeric(v) => v[self.idx(n)].with_prec(prec),
        }
    }

    fn detect_parity(&self) -> Parity {
        if self.satisfies(Parity::Odd) {
            Parity::Odd
        } else if self.satisfies(Parity::Even) {
            Parity::Even
        } else {
            Parity::None
        }
    }

    fn satisfies(&self, parity: Parity) -> bool {
        let k = self.period() as i64;
        match (&self.values, parity) {
            (_, Parity::None) => true,
            (Values::Exact(v), Parity::Odd) => {
                (0..k).all(|n| v[n as usize] == -v[(-n).rem_euclid(k) as usize].clone())
            }
            (Values::Exact(v), Parity::Even) => {
                (0..k).all(|n| v[n as usize] == v[(-n).rem_euclid(k) as usize])
            }
            (Values::Numeric(v), p) => {
                let prec = v[0].prec();
                let tol = pow2(prec, 8 - prec as i32);
                (0..k).all(|n| {
                    let a = &v[n as usize];
                    let b = &v[(-n).rem_euclid(k) as usize];
                    let d = if p == Parity::Odd { a + b } else { a - b };
                    let scale = Float::with_val(prec, a.abs()).max(&Float::with_val(prec, 1));
                    d.abs() <= Float::with_val(prec, &tol * &scale)
                })
            }
        }
    }

    /// Sum over one period.
    pub fn period_sum(&self, prec: Bits) -> Value {
        match &self.values {
            Values::Exact(v) => Value::Exact(v.iter().sum()),
            Values::Numeric(v) => Value::Complex(v.iter().map(|z| z.with_prec(prec)).sum()),
        }
    }

    fn map_indices(&self, g: impl Fn(i64) -> i64) -> Self {
        let k = self.period();
        let values = match &self.values {
            Values::Exact(v) => Values::Exact(
                (0..k as i64).map(|n| v[g(n).rem_euclid(k as i64) as usize].clone()).collect(),
            ),
            Values::Numeric(v) => Values::Numeric(
                (0..k as i64).map(|n| v[g(n).rem_euclid(k as i64) as usize].clone()).collect(),
            ),
        };
        PeriodicMap {
            values,
            parity: self.parity,
        }
    }

    /// `n -> f(-n)`.
    pub fn reflect(&self) -> Self {
        self.map_indices(|n| -n)
    }

    /// Pointwise product.
    pub fn pointwise_mul(&self, other: &PeriodicMap, prec: Bits) -> Result<Self> {
        same_period(self, other)?;
        let k = self.period() as i64;
        match (&self.values, &other.values) {
            (Values::Exact(a), Values::Exact(b)) => {
                PeriodicMap::exact(a.iter().zip(b).map(|(x, y)| Rational::from(x * y)).collect())
            }
            _ => PeriodicMap::numeric(
                (0..k)
                    .map(|n| &self.complex_at(n, prec) * &other.complex_at(n, prec))
                    .collect(),
            ),
        }
    }
}

fn same_period(f: &PeriodicMap, g: &PeriodicMap) -> Result<()> {
    if f.period() != g.period() {
        return Err(Error::PeriodMismatch {
            left: f.period(),
            right: g.period(),
        });
    }
    Ok(())
}

/// `e^{-2 pi i j / k}` for `j` in `0..k`, built from one primitive root by
/// repeated multiplication at `prec + GUARD_BITS`. Rounding error after `k`
/// steps stays below `k 2^{-prec-GUARD_BITS+2}`.
fn roots_of_unity(k: u64, prec: Bits) -> Vec<ComplexHP> {
    let wp = prec + GUARD_BITS;
    let theta = Float::with_val(wp, -crate::hp::pi(wp) * 2u32) / k;
    let w = ComplexHP::cis(&theta);
    let mut roots = Vec::with_capacity(k as usize);
    let mut cur = ComplexHP::from_real(Float::with_val(wp, 1));
    for _ in 0..k {
        roots.push(cur.clone());
        cur = &cur * &w;
    }
    roots
}

/// Direct DFT at `prec` bits.
pub fn dft(f: &PeriodicMap, prec: Bits) -> PeriodicMap {
    let k = f.period();
    let wp = prec + GUARD_BITS;
    let roots = roots_of_unity(k, prec);
    let vals: Vec<ComplexHP> = (0..k).map(|a| f.complex_at(a as i64, wp)).collect();
    let out = (0..k)
        .map(|n| {
            let mut acc = ComplexHP::zero(wp);
            for (a, v) in vals.iter().enumerate() {
                let j = ((a as u128 * n as u128) % k as u128) as usize;
                acc = &acc + &(v * &roots[j]);
            }
            acc.with_prec(prec)
        })
        .collect();
    let mut map = PeriodicMap::numeric(out).expect("k >= 1");
    // odd/even maps have odd/even transforms
    map.parity = f.parity;
    map
}

/// `max_n |F(F(f))(n) - k f(-n)|`.
pub fn dft_involution_check(f: &PeriodicMap, prec: Bits) -> Float {
    let k = f.period();
    let twice = dft(&dft(f, prec), prec);
    let mut worst = Float::new(prec);
    for n in 0..k as i64 {
        let expect = f.complex_at(-n, prec).scale_rational(&Rational::from(k));
        let d = (&twice.complex_at(n, prec) - &expect).abs();
        worst.max_mut(&d);
    }
    worst
}

/// Cauchy convolution `(f * g)(n) = sum_a f(a) g(n - a)`; exact for exact inputs.
pub fn cauchy_convolve(f: &PeriodicMap, g: &PeriodicMap, prec: Bits) -> Result<PeriodicMap> {
    same_period(f, g)?;
    let k = f.period() as i64;
    match (&f.values, &g.values) {
        (Values::Exact(_), Values::Exact(_)) => Ok(PeriodicMap::from_fn_exact(k as u64, |n| {
            (0..k)
                .map(|a| Rational::from(f.exact_at(a).unwrap() * g.exact_at(n - a).unwrap()))
                .sum()
        })),
        _ => Ok(PeriodicMap::from_fn_numeric(k as u64, |n| {
            (0..k)
                .map(|a| &f.complex_at(a, prec) * &g.complex_at(n - a, prec))
                .sum()
        })),
    }
}

/// `n -> f(n h)` for `h` coprime to the period.
pub fn dilate(f: &PeriodicMap, h: i64) -> Result<PeriodicMap> {
    let k = f.period();
    require_coprime(h, k)?;
    let kk = k as i128;
    Ok(f.map_indices(move |n| ((n as i128 * h as i128).rem_euclid(kk)) as i64))
}

/// Default bailout for brute-force enumerations.
pub const DEFAULT_WORK_LIMIT: u64 = 100_000_000;

fn check_common(fs: &[PeriodicMap], hs: &[i64]) -> Result<u64> {
    if fs.is_empty() || fs.len() != hs.len() {
        return Err(Error::InvalidArgument(
            "need one multiplier per map and at least one map".into(),
        ));
    }
    let k = fs[0].period();
    for f in &fs[1..] {
        same_period(&fs[0], f)?;
    }
    for &h in hs {
        require_coprime(h, k)?;
    }
    Ok(k)
}

/// Number of tuples enumerated by the brute-force side: `k^{m-1}`.
pub fn enumeration_size(k: u64, m: usize) -> u128 {
    (k as u128).saturating_pow(m.saturating_sub(1) as u32)
}

pub(crate) fn check_work(k: u64, m: usize, limit: u64) -> Result<()> {
    let terms = enumeration_size(k, m);
    if terms > limit as u128 {
        return Err(Error::WorkLimit { terms, limit });
    }
    Ok(())
}

/// `sum_{a_1 + ... + a_m = 0 (mod k)} prod_j f_j(a_j h_j)` over exact tables
/// `t_j[a] = f_j(a h_j)`. Partial products are kept per depth.
pub(crate) fn constrained_sum_exact(tables: &[Vec<Rational>], k: u64) -> Rational {
    let m = tables.len();
    let k = k as usize;
    if m == 1 {
        return tables[0][0].clone();
    }
    // digits a_0..a_{m-2}; a_{m-1} = -(sum) mod k
    let free = m - 1;
    let mut digits = vec![0usize; free];
    let mut prefix: Vec<Rational> = Vec::with_capacity(free + 1);
    prefix.push(Rational::from(1));
    for (j, t) in tables.iter().take(free).enumerate() {
        let p = Rational::from(&prefix[j] * &t[0]);
        prefix.push(p);
    }
    let mut total = Rational::new();
    let mut digit_sum = 0usize;
    loop {
        let last = (k - digit_sum % k) % k;
        total += Rational::from(&prefix[free] * &tables[free][last]);
        // advance the odometer
        let mut pos = free;
        loop {
            if pos == 0 {
                return total;
            }
            pos -= 1;
            digits[pos] += 1;
            digit_sum += 1;
            if digits[pos] < k {
                break;
            }
            digit_sum -= k;
            digits[pos] = 0;
        }
        for j in pos..free {
            let p = Rational::from(&prefix[j] * &tables[j][digits[j]]);
            prefix[j + 1] = p;
        }
    }
}

fn constrained_sum_numeric(tables: &[Vec<ComplexHP>], k: u64, prec: Bits) -> ComplexHP {
    let m = tables.len();
    let k = k as usize;
    if m == 1 {
        return tables[0][0].clone();
    }
    let free = m - 1;
    let mut digits = vec![0usize; free];
    let mut total = ComplexHP::zero(prec);
    let mut digit_sum = 0usize;
    loop {
        let last = (k - digit_sum % k) % k;
        let mut prod = tables[free][last].clone();
        for j in 0..free {
            prod = &prod * &tables[j][digits[j]];
        }
        total = &total + &prod;
        let mut pos = free;
        loop {
            if pos == 0 {
                return total;
            }
            pos -= 1;
            digits[pos] += 1;
            digit_sum += 1;
            if digits[pos] < k {
                break;
            }
            digit_sum -= k;
            digits[pos] = 0;
        }
    }
}

/// Brute-force side of the convolution identity, `O(k^{m-1})`.
pub fn theorem1_lhs(fs: &[PeriodicMap], hs: &[i64], prec: Bits) -> Result<Value> {
    theorem1_lhs_limited(fs, hs, prec, DEFAULT_WORK_LIMIT)
}

pub fn theorem1_lhs_limited(
    fs: &[PeriodicMap],
    hs: &[i64],
    prec: Bits,
    work_limit: u64,
) -> Result<Value> {
    let k = check_common(fs, hs)?;
    check_work(k, fs.len(), work_limit)?;
    if fs.iter().all(PeriodicMap::is_exact) {
        let tables: Vec<Vec<Rational>> = fs
            .iter()
            .zip(hs)
            .map(|(f, &h)| {
                (0..k as i64)
                    .map(|a| f.exact_at(mulmod(a, h, k)).unwrap().clone())
                    .collect()
            })
            .collect();
        Ok(Value::Exact(constrained_sum_exact(&tables, k)))
    } else {
        let wp = prec + GUARD_BITS;
        let tables: Vec<Vec<ComplexHP>> = fs
            .iter()
            .zip(hs)
            .map(|(f, &h)| {
                (0..k as i64)
                    .map(|a| f.complex_at(mulmod(a, h, k), wp))
                    .collect()
            })
            .collect();
        Ok(Value::Complex(constrained_sum_numeric(&tables, k, wp).with_prec(prec)))
    }
}

/// `(1/k) sum_a prod_j g_j(a h_j')` for already-transformed maps `g_j`.
pub fn theorem1_rhs_from_transforms(transforms: &[PeriodicMap], hs: &[i64], prec: Bits) -> Result<ComplexHP> {
    let k = check_common(transforms, hs)?;
    let inverses: Vec<u64> = hs.iter().map(|&h| mod_inverse(h, k)).collect::<Result<_>>()?;
    let wp = prec + GUARD_BITS;
    let mut total = ComplexHP::zero(wp);
    for a in 0..k {
        let mut prod = ComplexHP::from_real(Float::with_val(wp, 1));
        for (g, &inv) in transforms.iter().zip(&inverses) {
            let idx = ((a as u128 * inv as u128) % k as u128) as i64;
            prod = &prod * &g.complex_at(idx, wp);
        }
        total = &total + &prod;
    }
    let k_inv = Rational::from((1, k));
    Ok(total.scale_rational(&k_inv).with_prec(prec))
}

/// DFT side of the convolution identity.
pub fn theorem1_rhs(fs: &[PeriodicMap], hs: &[i64], prec: Bits) -> Result<ComplexHP> {
    check_common(fs, hs)?;
    let wp = prec + GUARD_BITS;
    let transforms: Vec<PeriodicMap> = fs.iter().map(|f| dft(f, wp)).collect();
    theorem1_rhs_from_transforms(&transforms, hs, prec)
}

/// `sum_a f1(a h1) f2(a h2)` for two maps (both exact or not).
pub fn paired_sum(f1: &PeriodicMap, f2: &PeriodicMap, h1: i64, h2: i64, prec: Bits) -> Result<Value> {
    same_period(f1, f2)?;
    let k = f1.period() as i64;
    if f1.is_exact() && f2.is_exact() {
        let v = (0..k)
            .map(|a| {
                Rational::from(
                    f1.exact_at(mulmod(a, h1, k as u64)).unwrap() * f2.exact_at(mulmod(a, h2, k as u64)).unwrap(),
                )
            })
            .sum();
        return Ok(Value::Exact(v));
    }
    let z = (0..k)
        .map(|a| &f1.complex_at(mulmod(a, h1, k as u64), prec) * &f2.complex_at(mulmod(a, h2, k as u64), prec))
        .sum();
    Ok(Value::Complex(z))
}

/// Two-map identity `sum_a f1(a h1) f2(a h2) = (1/k) sum_a f1^(-a h2) f2^(a h1)`.
/// Returns both sides.
pub fn corollary1_sides(
    f1: &PeriodicMap,
    f2: &PeriodicMap,
    h1: i64,
    h2: i64,
    prec: Bits,
) -> Result<(Value, ComplexHP)> {
    same_period(f1, f2)?;
    let k = f1.period();
    require_coprime(h1, k)?;
    require_coprime(h2, k)?;
    let lhs = paired_sum(f1, f2, h1, h2, prec)?;
    let wp = prec + GUARD_BITS;
    let g1 = dft(f1, wp);
    let g2 = dft(f2, wp);
    let rhs: ComplexHP = (0..k as i64)
        .map(|a| &g1.complex_at(-mulmod(a, h2, k), wp) * &g2.complex_at(mulmod(a, h1, k), wp))
        .sum();
    Ok((lhs, rhs.scale_rational(&Rational::from((1, k))).with_prec(prec)))
}

/// Sign-rule form: with `f1` or `f2` odd (resp. even),
/// `sum_a f1(a h1) f2(a h2) = (-1)^s/k sum_a f1^(a h2) f2^(a h1)`, `s = 1` when odd.
pub fn corollary2_sides(
    f1: &PeriodicMap,
    f2: &PeriodicMap,
    h1: i64,
    h2: i64,
    prec: Bits,
) -> Result<(Value, ComplexHP)> {
    same_period(f1, f2)?;
    let k = f1.period();
    require_coprime(h1, k)?;
    require_coprime(h2, k)?;
    let tags = [f1.parity(), f2.parity()];
    let negate = if tags.contains(&Parity::Odd) {
        true
    } else if tags.contains(&Parity::Even) {
        false
    } else {
        return Err(Error::ParityViolation(
            "one of the two maps must be odd or even".into(),
        ));
    };
    let lhs = paired_sum(f1, f2, h1, h2, prec)?;
    let wp = prec + GUARD_BITS;
    let g1 = dft(f1, wp);
    let g2 = dft(f2, wp);
    let rhs: ComplexHP = (0..k as i64)
        .map(|a| &g1.complex_at(mulmod(a, h2, k), wp) * &g2.complex_at(mulmod(a, h1, k), wp))
        .sum();
    let scale = Rational::from((if negate { -1 } else { 1 }, k as i64));
    Ok((lhs, rhs.scale_rational(&scale).with_prec(prec)))
}

/// `|sum_a f1(a) f2(-a) - (1/k) sum_a f1^(a) f2^(a)|`.
pub fn parseval_check(f1: &PeriodicMap, f2: &PeriodicMap, prec: Bits) -> Result<Float> {
    let (lhs, rhs) = parseval_sides(f1, f2, prec)?;
    Ok(lhs.distance(&Value::Complex(rhs), prec))
}

pub fn parseval_sides(f1: &PeriodicMap, f2: &PeriodicMap, prec: Bits) -> Result<(Value, ComplexHP)> {
    same_period(f1, f2)?;
    let k = f1.period();
    let lhs = paired_sum(f1, f2, 1, -1, prec)?;
    let wp = prec + GUARD_BITS;
    let g1 = dft(f1, wp);
    let g2 = dft(f2, wp);
    let rhs: ComplexHP = (0..k as i64)
        .map(|a| &g1.complex_at(a, wp) * &g2.complex_at(a, wp))
        .sum();
    Ok((lhs, rhs.scale_rational(&Rational::from((1, k))).with_prec(prec)))
}

/// Which convention to use for the order-1 Bernoulli transform.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BernoulliConvention {
    /// `r k^{1-r} (i/2)^r cot^{(r-1)}(pi n / k)` off the multiples of `k`.
    #[default]
    Paper,
    /// Adds the constant `-1/2` off the multiples when `r = 1`, matching
    /// `B_1({n/k})`, which is `-1/2` (not `0`) at the multiples.
    Corrected,
}

/// The transform pairs with closed forms.
#[derive(Debug, Clone, PartialEq)]
pub enum TransformKind {
    /// `n -> ((n/k))`
    Sawtooth,
    /// `n -> B_r({n/k})`
    Bernoulli { order: u32, convention: BernoulliConvention },
    /// `n -> (-1)^n ((n/k))`, `k` even
    AltSawtooth,
    /// `n -> (-1)^{n mod k}` off the multiples, `0` on them; `k` odd
    AltSign,
    /// `n -> F(s, n/k)` with `Re s > 1`
    PeriodicZeta { s: ComplexHP },
}

fn check_kind(kind: &TransformKind, k: u64) -> Result<()> {
    match kind {
        TransformKind::AltSawtooth if k % 2 == 1 => Err(Error::ParityViolation(format!(
            "alternating sawtooth needs an even period, got k = {k}"
        ))),
        TransformKind::AltSign if k.is_multiple_of(2) => Err(Error::ParityViolation(format!(
            "alternating sign map needs an odd period, got k = {k}"
        ))),
        TransformKind::Bernoulli { order: 0, .. } => {
            Err(Error::InvalidArgument("Bernoulli order must be positive".into()))
        }
        TransformKind::PeriodicZeta { s } => ComplexS::new(s.clone()).require_convergent().map(|_| ()),
        _ => Ok(()),
    }
}

/// `(-1)^{n mod k}` off the multiples, `0` on them.
pub fn alt_sign_value(n: i64, k: u64) -> Rational {
    let r = n.rem_euclid(k as i64);
    match r {
        0 => Rational::new(),
        r if r % 2 == 0 => Rational::from(1),
        _ => Rational::from(-1),
    }
}

pub fn sawtooth_map(k: u64) -> PeriodicMap {
    PeriodicMap::from_fn_exact(k, |n| sawtooth_at(n, k))
}

pub fn bernoulli_map(r: u32, k: u64) -> PeriodicMap {
    PeriodicMap::from_fn_exact(k, |n| bernoulli_bar(r as usize, &ratio(n, k as i64)))
}

/// The k-periodic function whose transform `kind` describes.
pub fn defining_map(kind: &TransformKind, k: u64, prec: Bits) -> Result<PeriodicMap> {
    check_kind(kind, k)?;
    Ok(match kind {
        TransformKind::Sawtooth => sawtooth_map(k),
        TransformKind::Bernoulli { order, .. } => bernoulli_map(*order, k),
        TransformKind::AltSawtooth => PeriodicMap::from_fn_exact(k, |n| {
            let s = sawtooth_at(n, k);
            if n % 2 == 0 {
                s
            } else {
                -s
            }
        }),
        TransformKind::AltSign => PeriodicMap::from_fn_exact(k, |n| alt_sign_value(n, k)),
        TransformKind::PeriodicZeta { s } => {
            let table = crate::zeta::HurwitzTable::new(s, k, prec)?;
            PeriodicMap::from_fn_numeric(k, |n| table.periodic_zeta(n))
        }
    })
}

/// The transform of [`defining_map`] built from its closed form.
pub fn closed_form_dft(kind: &TransformKind, k: u64, prec: Bits) -> Result<PeriodicMap> {
    check_kind(kind, k)?;
    let wp = prec + GUARD_BITS;
    let zero = || ComplexHP::zero(prec);
    let values: Vec<ComplexHP> = match kind {
        TransformKind::Sawtooth => (0..k as i64)
            .map(|n| match cot_at(n, k, wp) {
                Ok(c) => ComplexHP::imag(Float::with_val(prec, c / 2u32)),
                Err(_) => zero(),
            })
            .collect(),
        TransformKind::Bernoulli { order, convention } => {
            let r = *order;
            // k^{1-r}
            let k_pow = Rational::from((1, rug::Integer::from(k).pow(r - 1)));
            let at_multiple = Rational::from(&bernoulli_number(r as usize) * &k_pow);
            // (i/2)^r = i^r / 2^r
            let half_pow = Rational::from((1, rug::Integer::from(2).pow(r)));
            let coeff = Rational::from(&k_pow * &half_pow) * r;
            (0..k as i64)
                .map(|n| {
                    if n == 0 {
                        return ComplexHP::from_rational(prec, &at_multiple);
                    }
                    let d = cot_deriv_at((r - 1) as usize, n, k, wp).expect("k does not divide n");
                    let mag = Float::with_val(wp, d * &coeff);
                    let mut z = match r % 4 {
                        0 => ComplexHP::from_real(mag),
                        1 => ComplexHP::imag(mag),
                        2 => ComplexHP::from_real(-mag),
                        _ => ComplexHP::imag(-mag),
                    };
                    if r == 1 && *convention == BernoulliConvention::Corrected {
                        z.re -= 0.5f64;
                    }
                    z.with_prec(prec)
                })
                .collect()
        }
        TransformKind::AltSawtooth => (0..k as i64)
            .map(|n| match tan_at(n, k, wp) {
                Ok(t) => ComplexHP::imag(Float::with_val(prec, -t / 2u32)),
                Err(_) => zero(),
            })
            .collect(),
        TransformKind::AltSign => (0..k as i64)
            .map(|n| ComplexHP::imag(Float::with_val(prec, tan_at(n, k, wp).expect("k is odd"))))
            .collect(),
        TransformKind::PeriodicZeta { s } => {
            let s_hp = s.with_prec(wp);
            let one_minus_s = &ComplexHP::from_real(Float::with_val(wp, 1)) - &s_hp;
            let k_pow = one_minus_s.pow_of(&Float::with_val(wp, k));
            let cs = ComplexS::new(s_hp);
            (0..k as i64)
                .map(|n| {
                    let z = if n == 0 {
                        riemann_zeta(&cs, wp)
                    } else {
                        hurwitz_zeta(&cs, &ratio(n, k as i64), wp)
                    }
                    .expect("Re s > 1 was checked");
                    (&k_pow * &z).with_prec(prec)
                })
                .collect()
        }
    };
    let mut map = PeriodicMap::numeric(values)?;
    map.parity = match kind {
        TransformKind::Sawtooth | TransformKind::AltSawtooth | TransformKind::AltSign => Parity::Odd,
        TransformKind::Bernoulli { order, convention } => {
            if *order == 1 && *convention == BernoulliConvention::Corrected {
                Parity::None
            } else if order % 2 == 0 {
                Parity::Even
            } else {
                Parity::Odd
            }
        }
        TransformKind::PeriodicZeta { .. } => Parity::None,
    };
    Ok(map)
}

/// `max_n |dft(defining map)(n) - closed form(n)|`.
pub fn closed_form_residual(kind: &TransformKind, k: u64, prec: Bits) -> Result<Float> {
    let f = defining_map(kind, k, prec)?;
    let direct = dft(&f, prec);
    let closed = closed_form_dft(kind, k, prec)?;
    Ok(max_distance(&direct, &closed, prec))
}

/// `max_n |f(n) - g(n)|` over one period.
pub fn max_distance(f: &PeriodicMap, g: &PeriodicMap, prec: Bits) -> Float {
    let mut worst = Float::new(prec);
    for n in 0..f.period() as i64 {
        let d = (&f.complex_at(n, prec) - &g.complex_at(n, prec)).abs();
        worst.max_mut(&d);
    }
    worst
}

#[cfg(test)]
mod tests {
    use super::*;

    const P: Bits = 256;

    fn tol() -> Float {
        pow2(P, -(P as i32) + 8)
    }

    fn approx(z: &ComplexHP, re: f64, im: f64) -> bool {
        (z.re.to_f64() - re).abs() < 1e-14 && (z.im.to_f64() - im).abs() < 1e-14
    }

    #[test]
    fn dft_examples() {
        let f = dft(&sawtooth_map(3), P);
        assert!(approx(&f.complex_at(1, P), 0.0, 3f64.sqrt() / 6.0));
        let c = dft(&PeriodicMap::exact(vec![Rational::from(1); 4]).unwrap(), P);
        assert!(approx(&c.complex_at(0, P), 4.0, 0.0));
        for n in 1..4 {
            assert!(c.complex_at(n, P).abs() < tol());
        }
        let z = dft(&sawtooth_map(2), P);
        for n in 0..2 {
            assert!(z.complex_at(n, P).abs() < tol());
        }
    }

    #[test]
    fn involution_examples() {
        assert!(dft_involution_check(&sawtooth_map(5), P) < tol());
        let r = PeriodicMap::exact((0..8).map(|i| ratio(i * i - 7, 3 + i)).collect()).unwrap();
        assert!(dft_involution_check(&r, P) < tol());
        let delta = PeriodicMap::from_fn_exact(3, |n| Rational::from((n == 0) as i64));
        assert!(dft_involution_check(&delta, P) < tol());
    }

    #[test]
    fn convolution_examples() {
        let saw = sawtooth_map(3);
        let delta = PeriodicMap::from_fn_exact(3, |n| Rational::from((n == 0) as i64));
        assert_eq!(cauchy_convolve(&delta, &saw, P).unwrap(), saw);
        let c = cauchy_convolve(&saw, &saw, P).unwrap();
        assert_eq!(c.exact_at(0).unwrap(), &ratio(-1, 18));
        assert_eq!(
            cauchy_convolve(&saw, &sawtooth_map(4), P),
            Err(Error::PeriodMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn dilate_examples() {
        let saw = sawtooth_map(5);
        assert_eq!(dilate(&saw, 1).unwrap(), saw);
        assert_eq!(dilate(&saw, 2).unwrap().exact_at(1).unwrap(), &ratio(-1, 10));
        let lhs = dft(&dilate(&saw, 2).unwrap(), P);
        let rhs = dilate(&dft(&saw, P), 3).unwrap();
        assert!(max_distance(&lhs, &rhs, P) < tol());
        assert_eq!(dilate(&sawtooth_map(4), 2), Err(Error::NotCoprime { h: 2, k: 4 }));
    }

    #[test]
    fn theorem1_examples() {
        let saw = sawtooth_map(3);
        let two = [saw.clone(), saw.clone()];
        assert_eq!(theorem1_lhs(&two, &[1, 1], P).unwrap(), Value::Exact(ratio(-1, 18)));
        let rhs = theorem1_rhs(&two, &[1, 1], P).unwrap();
        assert!(Value::Complex(rhs).distance(&Value::Exact(ratio(-1, 18)), P) < tol());

        let four = vec![saw.clone(); 4];
        assert_eq!(theorem1_lhs(&four, &[1; 4], P).unwrap(), Value::Exact(ratio(1, 216)));
        let rhs = theorem1_rhs(&four, &[1; 4], P).unwrap();
        assert!(Value::Complex(rhs).distance(&Value::Exact(ratio(1, 216)), P) < tol());

        assert_eq!(theorem1_lhs(std::slice::from_ref(&saw), &[1], P).unwrap(), Value::Exact(Rational::new()));
        let one = theorem1_rhs(&[saw], &[1], P).unwrap();
        assert!(one.abs() < tol());
    }

    #[test]
    fn theorem1_work_limit() {
        let saw = sawtooth_map(10);
        let fs = vec![saw; 5];
        assert!(matches!(
            theorem1_lhs_limited(&fs, &[1; 5], P, 1000),
            Err(Error::WorkLimit { terms: 10000, limit: 1000 })
        ));
    }

    #[test]
    fn closed_form_examples() {
        let i = closed_form_dft(&TransformKind::Sawtooth, 3, P).unwrap();
        assert!(approx(&i.complex_at(1, P), 0.0, 3f64.sqrt() / 6.0));
        let iv = closed_form_dft(&TransformKind::AltSign, 3, P).unwrap();
        assert!(approx(&iv.complex_at(1, P), 0.0, 3f64.sqrt()));
        let ii = closed_form_dft(
            &TransformKind::Bernoulli { order: 2, convention: BernoulliConvention::Paper },
            3,
            P,
        )
        .unwrap();
        assert!(Value::Complex(ii.complex_at(0, P)).distance(&Value::Exact(ratio(1, 18)), P) < tol());
        assert!(matches!(
            closed_form_dft(&TransformKind::AltSawtooth, 3, P),
            Err(Error::ParityViolation(_))
        ));
        assert!(matches!(
            closed_form_dft(&TransformKind::AltSign, 4, P),
            Err(Error::ParityViolation(_))
        ));
    }

    #[test]
    fn closed_forms_agree_with_direct_transform() {
        for k in 1..=12u64 {
            assert!(closed_form_residual(&TransformKind::Sawtooth, k, P).unwrap() < tol(), "i k={k}");
            if k % 2 == 0 {
                assert!(closed_form_residual(&TransformKind::AltSawtooth, k, P).unwrap() < tol(), "iii k={k}");
            } else {
                assert!(closed_form_residual(&TransformKind::AltSign, k, P).unwrap() < tol(), "iv k={k}");
            }
            for r in 1..=6u32 {
                let corrected = TransformKind::Bernoulli { order: r, convention: BernoulliConvention::Corrected };
                assert!(closed_form_residual(&corrected, k, P).unwrap() < tol(), "ii r={r} k={k}");
            }
        }
    }

    #[test]
    fn bernoulli_order_one_paper_form_is_off_by_half() {
        let paper = TransformKind::Bernoulli { order: 1, convention: BernoulliConvention::Paper };
        let direct = dft(&defining_map(&paper, 3, P).unwrap(), P);
        assert!(approx(&direct.complex_at(1, P), -0.5, 3f64.sqrt() / 6.0));
        let res = closed_form_residual(&paper, 3, P).unwrap();
        assert!((res.to_f64() - 0.5).abs() < 1e-30);
        // k = 1 has no off-multiple indices, so both forms coincide
        assert!(closed_form_residual(&paper, 1, P).unwrap() < tol());
    }

    #[test]
    fn parseval_examples() {
        let saw = sawtooth_map(3);
        let (lhs, _) = parseval_sides(&saw, &saw, P).unwrap();
        assert_eq!(lhs, Value::Exact(ratio(-1, 18)));
        assert!(parseval_check(&saw, &saw, P).unwrap() < tol());
        let odd = sawtooth_map(5);
        let even = PeriodicMap::exact(vec![Rational::from(1); 5]).unwrap();
        let (lhs, rhs) = parseval_sides(&odd, &even, P).unwrap();
        assert_eq!(lhs, Value::Exact(Rational::new()));
        assert!(rhs.abs() < tol());
        let r1 = PeriodicMap::exact((0..6).map(|i| ratio(3 * i - 4, 7)).collect()).unwrap();
        let r2 = PeriodicMap::exact((0..6).map(|i| ratio(i * i, 5)).collect()).unwrap();
        assert!(parseval_check(&r1, &r2, P).unwrap() < tol());
    }

    #[test]
    fn corollary2_sign_rule() {
        let saw = sawtooth_map(7);
        let (lhs, rhs) = corollary2_sides(&saw, &saw, 2, 3, P).unwrap();
        assert!(lhs.distance(&Value::Complex(rhs), P) < tol());
        let f = PeriodicMap::exact((0..7).map(|i| ratio(i * 3 % 5, 2)).collect()).unwrap();
        assert!(matches!(corollary2_sides(&f, &f, 1, 2, P), Err(Error::ParityViolation(_))));
        let (lhs, rhs) = corollary1_sides(&f, &saw, 3, 5, P).unwrap();
        assert!(lhs.distance(&Value::Complex(rhs), P) < tol());
    }

    #[test]
    fn parity_tags() {
        assert_eq!(sawtooth_map(6).parity(), Parity::Odd);
        assert_eq!(bernoulli_map(2, 6).parity(), Parity::Even);
        let f = PeriodicMap::exact(vec![ratio(1, 1), ratio(2, 1), ratio(3, 1)]).unwrap();
        assert_eq!(f.parity(), Parity::None);
        assert!(f.with_parity(Parity::Odd).is_err());
    }
}
