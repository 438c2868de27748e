//! Exact rational side: fractional part, sawtooth, Bernoulli numbers,
//! polynomials and functions, and modular inverses.

use std::sync::{OnceLock, RwLock};

use rug::{Integer, Rational};

use crate::error::{Error, Result};

/// `n / d` as a canonical rational. Panics on `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::from((n, d))
}

/// Fractional part `q - floor(q)`, always in `[0, 1)`.
pub fn frac(q: &Rational) -> Rational {
    let (fract, _) = q.clone().fract_floor(Integer::new());
    fract
}

/// The sawtooth `((q))`: `{q} - 1/2` off the integers, `0` on them.
pub fn sawtooth(q: &Rational) -> Rational {
    if q.denom() == &1u32 {
        return Rational::new();
    }
    frac(q) - Rational::from((1, 2))
}

/// Sawtooth at `n / k` for integers.
pub fn sawtooth_at(n: i64, k: u64) -> Rational {
    let r = n.rem_euclid(k as i64);
    if r == 0 {
        Rational::new()
    } else {
        Rational::from((2 * r - k as i64, 2 * k as i64))
    }
}

/// Memoized Bernoulli numbers with `B_1 = -1/2`.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    cache: Vec<Rational>,
}

impl Default for BernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BernoulliTable {
    pub fn new() -> Self {
        BernoulliTable {
            cache: vec![Rational::from(1)],
        }
    }

    pub fn len(&self) -> usize {
        self.cache.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cache.is_empty()
    }

    /// Extends the cache so that `B_0..=B_r` are available.
    pub fn fill_to(&mut self, r: usize) {
        while self.cache.len() <= r {
            let n = self.cache.len();
            if n >= 3 && n % 2 == 1 {
                self.cache.push(Rational::new());
                continue;
            }
            // sum_{j=0}^{n} C(n+1, j) B_j = 0
            let mut acc = Rational::new();
            let mut binom = Integer::from(1);
            for (j, b) in self.cache.iter().enumerate() {
                if *b.numer() != 0 {
                    acc += Rational::from(&binom * b);
                }
                binom *= (n + 1 - j) as u64;
                binom /= (j + 1) as u64;
            }
            // binom is now C(n+1, n) = n + 1
            acc /= -Rational::from(binom);
            self.cache.push(acc);
        }
    }

    pub fn get(&mut self, r: usize) -> &Rational {
        self.fill_to(r);
        &self.cache[r]
    }

    /// Read-only lookup; `None` when `r` has not been filled yet.
    pub fn cached(&self, r: usize) -> Option<&Rational> {
        self.cache.get(r)
    }
}

fn shared_table() -> &'static RwLock<BernoulliTable> {
    static TABLE: OnceLock<RwLock<BernoulliTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(BernoulliTable::new()))
}

/// Exact Bernoulli number `B_r` from the process-wide table.
pub fn bernoulli_number(r: usize) -> Rational {
    if let Some(b) = shared_table().read().unwrap().cached(r) {
        return b.clone();
    }
    let mut table = shared_table().write().unwrap();
    table.get(r).clone()
}

/// `B_0..=B_upto` in one lock acquisition.
pub fn bernoulli_numbers(upto: usize) -> Vec<Rational> {
    {
        let table = shared_table().read().unwrap();
        if table.len() > upto {
            return table.cache[..=upto].to_vec();
        }
    }
    let mut table = shared_table().write().unwrap();
    table.fill_to(upto);
    table.cache[..=upto].to_vec()
}

/// Bernoulli polynomial `B_r(x)` with coefficients in ascending powers of `x`.
#[derive(Debug, Clone, PartialEq)]
pub struct BernoulliPoly {
    pub degree: usize,
    pub coefficients: Vec<Rational>,
}

impl BernoulliPoly {
    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::new();
        for c in self.coefficients.iter().rev() {
            acc *= x;
            acc += c;
        }
        acc
    }
}

/// `B_r(x) = sum_j C(r, j) B_j x^(r-j)`.
pub fn bernoulli_poly(r: usize) -> BernoulliPoly {
    let b = bernoulli_numbers(r);
    let mut coefficients = vec![Rational::new(); r + 1];
    let mut binom = Integer::from(1);
    for (j, bj) in b.iter().enumerate() {
        coefficients[r - j] = Rational::from(&binom * bj);
        binom *= (r - j) as u64;
        binom /= (j + 1) as u64;
    }
    BernoulliPoly {
        degree: r,
        coefficients,
    }
}

/// Bernoulli function `B_r({q})`.
pub fn bernoulli_bar(r: usize, q: &Rational) -> Rational {
    bernoulli_poly(r).eval(&frac(q))
}

/// `a h mod k` in `[0, k)` without overflow.
pub fn mulmod(a: i64, h: i64, k: u64) -> i64 {
    (a as i128 * h as i128).rem_euclid(k as i128) as i64
}

/// Greatest common divisor of `|h|` and `k`.
pub fn gcd(h: i64, k: u64) -> u64 {
    let mut a = h.unsigned_abs();
    let mut b = k;
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn require_coprime(h: i64, k: u64) -> Result<()> {
    if gcd(h, k) == 1 {
        Ok(())
    } else {
        Err(Error::NotCoprime { h, k })
    }
}

/// Least positive `h'` with `h h' = 1 (mod k)`, by the extended Euclidean
/// algorithm. Returns 1 for `k = 1`.
pub fn mod_inverse(h: i64, k: u64) -> Result<u64> {
    if k == 0 {
        return Err(Error::InvalidArgument("modulus must be positive".into()));
    }
    if k == 1 {
        return Ok(1);
    }
    let m = k as i128;
    let (mut old_r, mut r) = ((h as i128).rem_euclid(m), m);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return Err(Error::NotCoprime { h, k });
    }
    Ok(old_s.rem_euclid(m) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rug::ops::Pow;

    #[test]
    fn frac_examples() {
        assert_eq!(frac(&ratio(7, 3)), ratio(1, 3));
        assert_eq!(frac(&ratio(-1, 2)), ratio(1, 2));
        assert_eq!(frac(&ratio(4, 1)), Rational::new());
    }

    #[test]
    fn sawtooth_examples() {
        assert_eq!(sawtooth(&ratio(1, 3)), ratio(-1, 6));
        assert_eq!(sawtooth(&ratio(5, 1)), Rational::new());
        assert_eq!(sawtooth(&ratio(1, 2)), Rational::new());
        for n in -12..12 {
            assert_eq!(sawtooth_at(n, 5), sawtooth(&ratio(n, 5)));
        }
    }

    #[test]
    fn bernoulli_number_examples() {
        assert_eq!(bernoulli_number(0), ratio(1, 1));
        assert_eq!(bernoulli_number(1), ratio(-1, 2));
        assert_eq!(bernoulli_number(2), ratio(1, 6));
        assert_eq!(bernoulli_number(3), Rational::new());
        assert_eq!(bernoulli_number(4), ratio(-1, 30));
        assert_eq!(bernoulli_number(12), ratio(-691, 2730));
        for r in (3..40).step_by(2) {
            assert_eq!(bernoulli_number(r), Rational::new());
        }
    }

    #[test]
    fn bernoulli_poly_examples() {
        assert_eq!(bernoulli_poly(1).coefficients, vec![ratio(-1, 2), ratio(1, 1)]);
        assert_eq!(
            bernoulli_poly(2).coefficients,
            vec![ratio(1, 6), ratio(-1, 1), ratio(1, 1)]
        );
        assert_eq!(
            bernoulli_poly(3).coefficients,
            vec![Rational::new(), ratio(1, 2), ratio(-3, 2), ratio(1, 1)]
        );
        for r in 1..20usize {
            let p = bernoulli_poly(r);
            assert_eq!(p.coefficients[r], ratio(1, 1));
            assert_eq!(p.coefficients[0], bernoulli_number(r));
            assert_eq!(p.coefficients[r - 1], ratio(-(r as i64), 2));
        }
    }

    #[test]
    fn bernoulli_bar_examples() {
        assert_eq!(bernoulli_bar(1, &ratio(1, 3)), ratio(-1, 6));
        assert_eq!(bernoulli_bar(1, &ratio(2, 1)), ratio(-1, 2));
        assert_eq!(bernoulli_bar(2, &ratio(5, 2)), ratio(-1, 12));
    }

    #[test]
    fn multiplication_theorem_oracle() {
        // sum_{a mod k} B_r({a/k}) = k^{1-r} B_r
        for r in 1..10usize {
            for k in 1..9i64 {
                let lhs: Rational = (0..k).map(|a| bernoulli_bar(r, &ratio(a, k))).sum();
                let rhs = bernoulli_number(r) / Rational::from(Integer::from(k).pow(r as u32 - 1));
                assert_eq!(lhs, rhs, "r={r} k={k}");
            }
        }
    }

    #[test]
    fn table_is_consistent_across_instances() {
        let mut local = BernoulliTable::new();
        for r in 0..30 {
            assert_eq!(*local.get(r), bernoulli_number(r));
        }
    }

    #[test]
    fn mod_inverse_examples() {
        assert_eq!(mod_inverse(3, 7), Ok(5));
        assert_eq!(mod_inverse(1, 9), Ok(1));
        assert_eq!(mod_inverse(1, 1), Ok(1));
        assert_eq!(mod_inverse(-1, 5), Ok(4));
        assert_eq!(mod_inverse(2, 4), Err(Error::NotCoprime { h: 2, k: 4 }));
    }

    #[test]
    fn concurrent_readers_agree() {
        let handles: Vec<_> = (0..4)
            .map(|i| std::thread::spawn(move || bernoulli_number(20 + 2 * i)))
            .collect();
        let got: Vec<_> = handles.into_iter().map(|h| h.join().unwrap()).collect();
        assert_eq!(got[0], ratio(-174611, 330));
    }
}
