//! tan, cot and higher cot derivatives at rational multiples of pi, and the
//! finite product sums that form the right-hand side of every identity.

use std::sync::{OnceLock, RwLock};

use rug::{Float, Integer};

use crate::error::{Error, Result};
use crate::exact::mulmod;
use crate::hp::{pi, Bits, GUARD_BITS};

/// Integer polynomial `Q_m` with `cot^{(m)}(x) = Q_m(cot x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotPoly {
    pub order: usize,
    /// Ascending powers of `t`.
    pub coefficients: Vec<Integer>,
}

impl CotPoly {
    fn base() -> Self {
        CotPoly {
            order: 0,
            coefficients: vec![Integer::new(), Integer::from(1)],
        }
    }

    /// `Q_{m+1} = -(1 + t^2) Q_m'`.
    fn next(&self) -> Self {
        let deriv: Vec<Integer> = self
            .coefficients
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| Integer::from(c * i as u64))
            .collect();
        let mut coefficients = vec![Integer::new(); deriv.len() + 2];
        for (i, d) in deriv.iter().enumerate() {
            coefficients[i] -= d;
            coefficients[i + 2] -= d;
        }
        while coefficients.len() > 1 && coefficients.last().is_some_and(|c| *c == 0) {
            coefficients.pop();
        }
        CotPoly {
            order: self.order + 1,
            coefficients,
        }
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, t: &Float) -> Float {
        let prec = t.prec();
        let mut acc = Float::new(prec);
        for c in self.coefficients.iter().rev() {
            acc *= t;
            acc += c;
        }
        acc
    }
}

/// Memoized `Q_m`.
pub fn cot_poly(m: usize) -> CotPoly {
    static CACHE: OnceLock<RwLock<Vec<CotPoly>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(vec![CotPoly::base()]));
    if let Some(p) = cache.read().unwrap().get(m) {
        return p.clone();
    }
    let mut polys = cache.write().unwrap();
    while polys.len() <= m {
        let next = polys.last().unwrap().next();
        polys.push(next);
    }
    polys[m].clone()
}

fn reduce(a: i64, k: u64) -> u64 {
    a.rem_euclid(k as i64) as u64
}

/// `cot(pi a / k)`.
pub fn cot_at(a: i64, k: u64, prec: Bits) -> Result<Float> {
    let r = reduce(a, k);
    if r == 0 {
        return Err(Error::PoleAtIntegerMultiple { a, k });
    }
    Ok(reduced_cot(r, k, prec))
}

// r in [1, k-1]; evaluated at the residue nearest zero so the argument stays in (0, pi/2].
fn reduced_cot(r: u64, k: u64, prec: Bits) -> Float {
    let wp = prec + GUARD_BITS;
    let (num, sign) = if 2 * r > k { (k - r, -1) } else { (r, 1) };
    let x = Float::with_val(wp, pi(wp) * num) / k;
    let c = Float::with_val(prec, x.cot());
    if sign < 0 {
        -c
    } else {
        c
    }
}

/// `tan(pi a / k)`.
pub fn tan_at(a: i64, k: u64, prec: Bits) -> Result<Float> {
    let r = reduce(a, k);
    if 2 * r == k {
        return Err(Error::PoleAtHalfPeriod { a, k });
    }
    if r == 0 {
        return Ok(Float::new(prec));
    }
    let wp = prec + GUARD_BITS;
    let (num, sign) = if 2 * r > k { (k - r, -1) } else { (r, 1) };
    let x = Float::with_val(wp, pi(wp) * num) / k;
    let t = Float::with_val(prec, x.tan());
    Ok(if sign < 0 { -t } else { t })
}

/// `cot^{(m)}(pi a / k)` through `Q_m(cot(pi a / k))`.
pub fn cot_deriv_at(m: usize, a: i64, k: u64, prec: Bits) -> Result<Float> {
    let t = cot_at(a, k, prec + GUARD_BITS)?;
    Ok(Float::with_val(prec, cot_poly(m).eval(&t)))
}

/// `cot(pi b / k)` for every residue `b`; the entry at `b = 0` is unused.
#[derive(Debug, Clone)]
pub struct CotTable {
    k: u64,
    values: Vec<Float>,
}

impl CotTable {
    pub fn new(k: u64, prec: Bits) -> Self {
        let mut values = vec![Float::new(prec); k as usize];
        for r in 1..k {
            if 2 * r > k {
                values[r as usize] = Float::with_val(prec, -&values[(k - r) as usize]);
            } else {
                values[r as usize] = reduced_cot(r, k, prec);
            }
        }
        CotTable { k, values }
    }

    pub fn get(&self, a: i64) -> Option<&Float> {
        let r = reduce(a, self.k);
        (r != 0).then(|| &self.values[r as usize])
    }
}

/// One factor of a trigonometric product.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigFactor {
    /// `tan(pi a h / k)`
    Tan { multiplier: i64 },
    /// `cot^{(order)}(pi a h / k)`
    CotDeriv { order: usize, multiplier: i64 },
}

impl TrigFactor {
    pub fn cot(multiplier: i64) -> Self {
        TrigFactor::CotDeriv {
            order: 0,
            multiplier,
        }
    }

    pub fn tan(multiplier: i64) -> Self {
        TrigFactor::Tan { multiplier }
    }

    pub fn multiplier(&self) -> i64 {
        match *self {
            TrigFactor::Tan { multiplier } | TrigFactor::CotDeriv { multiplier, .. } => multiplier,
        }
    }

    /// True when the factor is an odd function of its argument.
    pub fn is_odd(&self) -> bool {
        match *self {
            TrigFactor::Tan { .. } => true,
            TrigFactor::CotDeriv { order, .. } => order % 2 == 0,
        }
    }
}

/// `sum_{a=1}^{k-1}, a not excluded, prod_j factor_j(a)`.
///
/// Each factor kind is evaluated from a per-call table of the `k - 1`
/// residues, so the cost is `O(k)` transcendental evaluations.
pub fn trig_product_sum(
    factors: &[TrigFactor],
    k: u64,
    exclusions: &[u64],
    prec: Bits,
) -> Result<Float> {
    let wp = prec + GUARD_BITS;
    let needs_cot = factors.iter().any(|f| matches!(f, TrigFactor::CotDeriv { .. }));
    let needs_tan = factors.iter().any(|f| matches!(f, TrigFactor::Tan { .. }));
    let cots = needs_cot.then(|| CotTable::new(k, wp));
    let tans: Option<Vec<Option<Float>>> = needs_tan.then(|| {
        (0..k)
            .map(|r| tan_at(r as i64, k, wp).ok())
            .collect()
    });
    let polys: Vec<Option<CotPoly>> = factors
        .iter()
        .map(|f| match *f {
            TrigFactor::CotDeriv { order, .. } if order > 0 => Some(cot_poly(order)),
            _ => None,
        })
        .collect();

    let mut total = Float::new(wp);
    for a in 1..k {
        if exclusions.contains(&a) {
            continue;
        }
        let mut prod = Float::with_val(wp, 1);
        for (factor, poly) in factors.iter().zip(&polys) {
            let r = mulmod(a as i64, factor.multiplier(), k);
            match factor {
                TrigFactor::Tan { .. } => {
                    let t = tans.as_ref().unwrap()[r as usize]
                        .as_ref()
                        .ok_or(Error::PoleAtHalfPeriod { a: r, k })?;
                    prod *= t;
                }
                TrigFactor::CotDeriv { .. } => {
                    let c = cots
                        .as_ref()
                        .unwrap()
                        .get(r)
                        .ok_or(Error::PoleAtIntegerMultiple { a: r, k })?;
                    match poly {
                        Some(p) => prod *= p.eval(c),
                        None => prod *= c,
                    }
                }
            }
        }
        total += prod;
    }
    Ok(Float::with_val(prec, total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hp::pow2;

    fn close(x: &Float, y: f64, tol: f64) -> bool {
        (x.to_f64() - y).abs() < tol
    }

    fn ints(v: &[i64]) -> Vec<Integer> {
        v.iter().map(|&c| Integer::from(c)).collect()
    }

    #[test]
    fn cot_poly_examples() {
        assert_eq!(cot_poly(0).coefficients, ints(&[0, 1]));
        assert_eq!(cot_poly(1).coefficients, ints(&[-1, 0, -1]));
        assert_eq!(cot_poly(2).coefficients, ints(&[0, 2, 0, 2]));
    }

    #[test]
    fn cot_poly_degree_and_parity() {
        for m in 0..=12 {
            let p = cot_poly(m);
            assert_eq!(p.degree(), m + 1);
            for (i, c) in p.coefficients.iter().enumerate() {
                if (i + m + 1) % 2 == 1 {
                    assert_eq!(*c, 0, "m={m} i={i}");
                }
            }
        }
    }

    #[test]
    fn cot_and_tan_examples() {
        assert!(close(&cot_at(1, 4, 128).unwrap(), 1.0, 1e-15));
        assert!(close(&cot_at(1, 3, 128).unwrap(), 0.5773502691896258, 1e-15));
        assert_eq!(
            cot_at(3, 3, 128),
            Err(Error::PoleAtIntegerMultiple { a: 3, k: 3 })
        );
        assert!(close(&tan_at(1, 4, 128).unwrap(), 1.0, 1e-15));
        assert_eq!(tan_at(2, 4, 128), Err(Error::PoleAtHalfPeriod { a: 2, k: 4 }));
        assert!(close(&tan_at(1, 3, 128).unwrap(), 1.7320508075688772, 1e-15));
    }

    #[test]
    fn cot_deriv_examples() {
        assert!(close(&cot_deriv_at(0, 1, 4, 128).unwrap(), 1.0, 1e-15));
        assert!(close(&cot_deriv_at(1, 1, 4, 128).unwrap(), -2.0, 1e-15));
        let expect = 8.0 / (3.0 * 3f64.sqrt());
        assert!(close(&cot_deriv_at(2, 1, 3, 128).unwrap(), expect, 1e-14));
    }

    #[test]
    fn cot_deriv_reflection() {
        let tol = pow2(256, -240);
        for m in 0..=4 {
            for k in 2..=12u64 {
                for a in 1..k as i64 {
                    let x = cot_deriv_at(m, a, k, 256).unwrap();
                    let y = cot_deriv_at(m, k as i64 - a, k, 256).unwrap();
                    let sign = if m % 2 == 0 { -1 } else { 1 };
                    let diff = Float::with_val(256, &x - Float::with_val(256, &y * sign));
                    let scale = Float::with_val(256, x.abs_ref()).max(&Float::with_val(256, 1));
                    assert!(diff.abs() < Float::with_val(256, &tol * &scale), "m={m} k={k} a={a}");
                }
            }
        }
    }

    #[test]
    fn cot_deriv_matches_finite_differences() {
        // Central differences of cot at step 2^{-bits/4}; truncation error is O(h^2).
        let bits = 256u32;
        let h = pow2(bits, -(bits as i32) / 4);
        let tol = pow2(bits, -(bits as i32) / 4 + 8);
        for (a, k) in [(1i64, 5u64), (2, 7), (3, 8)] {
            let x = Float::with_val(bits, pi(bits) * a) / k;
            let cot = |y: Float| y.cot();
            let lo = Float::with_val(bits, &x - &h);
            let hi = Float::with_val(bits, &x + &h);
            let d1 = Float::with_val(bits, cot(hi.clone()) - cot(lo.clone())) / Float::with_val(bits, &h * 2u32);
            let d2 = Float::with_val(
                bits,
                cot(hi.clone()) - Float::with_val(bits, cot(x.clone()) * 2u32) + cot(lo.clone()),
            ) / Float::with_val(bits, h.clone().square());
            let two_h = Float::with_val(bits, &h * 2u32);
            let d3 = Float::with_val(
                bits,
                cot(Float::with_val(bits, &x + &two_h)) - Float::with_val(bits, cot(hi.clone()) * 2u32)
                    + Float::with_val(bits, cot(lo.clone()) * 2u32)
                    - cot(Float::with_val(bits, &x - &two_h)),
            ) / Float::with_val(bits, Float::with_val(bits, h.clone().square()) * &h * 2u32);
            for (m, d) in [(1, d1), (2, d2), (3, d3)] {
                let exact = cot_deriv_at(m, a, k, bits).unwrap();
                let err = Float::with_val(bits, &exact - &d).abs();
                assert!(err < tol, "m={m} a={a} k={k} err={}", err.to_f64());
            }
        }
    }

    #[test]
    fn product_sum_examples() {
        let two_cot = [TrigFactor::cot(1), TrigFactor::cot(1)];
        let v = trig_product_sum(&two_cot, 3, &[], 256).unwrap();
        assert!(close(&v, 2.0 / 3.0, 1e-15));
        let two_tan = [TrigFactor::tan(1), TrigFactor::tan(1)];
        let v = trig_product_sum(&two_tan, 3, &[], 256).unwrap();
        assert!(close(&v, 6.0, 1e-14));
        let four_cot = [TrigFactor::cot(1); 4];
        let v = trig_product_sum(&four_cot, 3, &[], 256).unwrap();
        assert!(close(&v, 2.0 / 9.0, 1e-15));
    }

    #[test]
    fn product_sum_reports_uncovered_poles() {
        let f = [TrigFactor::tan(1), TrigFactor::cot(1)];
        assert!(matches!(
            trig_product_sum(&f, 4, &[], 128),
            Err(Error::PoleAtHalfPeriod { .. })
        ));
        assert!(trig_product_sum(&f, 4, &[2], 128).is_ok());
    }

    #[test]
    fn odd_factor_count_vanishes() {
        let tol = pow2(256, -200);
        for k in 2..=15u64 {
            let f = [TrigFactor::cot(1), TrigFactor::cot(1), TrigFactor::cot(1)];
            assert!(trig_product_sum(&f, k, &[], 256).unwrap().abs() < tol);
            let g = [TrigFactor::CotDeriv { order: 1, multiplier: 1 }, TrigFactor::cot(1)];
            assert!(trig_product_sum(&g, k, &[], 256).unwrap().abs() < tol);
        }
    }
}
