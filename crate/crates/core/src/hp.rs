//! High-precision numeric substrate on top of MPFR floats.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use rug::float::Constant;
use rug::{Float, Rational};

/// Precision in bits.
pub type Bits = u32;

/// Real arbitrary-precision value; the precision travels with the value.
pub type RealHP = Float;

pub const DEFAULT_PRECISION: Bits = 256;

/// Extra bits carried by internal accumulations.
pub const GUARD_BITS: Bits = 32;

/// `pi` at `prec` bits, cached per precision level.
pub fn pi(prec: Bits) -> Float {
    static CACHE: OnceLock<RwLock<HashMap<Bits, Float>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(p) = cache.read().unwrap().get(&prec) {
        return p.clone();
    }
    let p = Float::with_val(prec, Constant::Pi);
    cache.write().unwrap().insert(prec, p.clone());
    p
}

/// Euler's constant at `prec` bits.
pub fn euler_gamma(prec: Bits) -> Float {
    Float::with_val(prec, Constant::Euler)
}

pub fn real(prec: Bits, q: &Rational) -> Float {
    Float::with_val(prec, q)
}

/// `2^e` as a float.
pub fn pow2(prec: Bits, e: i32) -> Float {
    Float::with_val(prec, Float::i_exp(1, e))
}

/// Complex value with MPFR real and imaginary parts.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexHP {
    pub re: Float,
    pub im: Float,
}

impl ComplexHP {
    pub fn zero(prec: Bits) -> Self {
        ComplexHP {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn from_real(re: Float) -> Self {
        let im = Float::new(re.prec());
        ComplexHP { re, im }
    }

    pub fn from_rational(prec: Bits, q: &Rational) -> Self {
        Self::from_real(Float::with_val(prec, q))
    }

    pub fn new(re: Float, im: Float) -> Self {
        ComplexHP { re, im }
    }

    /// `i * x`.
    pub fn imag(x: Float) -> Self {
        let re = Float::new(x.prec());
        ComplexHP { re, im: x }
    }

    /// `e^{i theta}`.
    pub fn cis(theta: &Float) -> Self {
        let (s, c) = theta.clone().sin_cos(Float::new(theta.prec()));
        ComplexHP { re: c, im: s }
    }

    pub fn prec(&self) -> Bits {
        self.re.prec().min(self.im.prec())
    }

    pub fn with_prec(&self, prec: Bits) -> Self {
        ComplexHP {
            re: Float::with_val(prec, &self.re),
            im: Float::with_val(prec, &self.im),
        }
    }

    pub fn conj(&self) -> Self {
        ComplexHP {
            re: self.re.clone(),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn scale(&self, x: &Float) -> Self {
        let p = self.prec();
        ComplexHP {
            re: Float::with_val(p, &self.re * x),
            im: Float::with_val(p, &self.im * x),
        }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        let p = self.prec();
        ComplexHP {
            re: Float::with_val(p, &self.re * q),
            im: Float::with_val(p, &self.im * q),
        }
    }

    /// Multiplication by `i`.
    pub fn mul_i(&self) -> Self {
        ComplexHP {
            re: Float::with_val(self.im.prec(), -&self.im),
            im: self.re.clone(),
        }
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let norm = Float::with_val(p, self.re.clone().square() + self.im.clone().square());
        ComplexHP {
            re: Float::with_val(p, &self.re / &norm),
            im: Float::with_val(p, -Float::with_val(p, &self.im / &norm)),
        }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// `base^{self}` for a positive real base: `exp(self * ln base)`.
    pub fn pow_of(&self, base: &Float) -> Self {
        let p = self.prec();
        let ln = Float::with_val(p, base.ln_ref());
        let mag = Float::with_val(p, &self.re * &ln).exp();
        if self.im.is_zero() {
            return ComplexHP::from_real(mag);
        }
        let phase = Float::with_val(p, &self.im * &ln);
        ComplexHP::cis(&phase).scale(&mag)
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let mag = Float::with_val(p, self.re.exp_ref());
        if self.im.is_zero() {
            return ComplexHP::from_real(mag);
        }
        ComplexHP::cis(&self.im).scale(&mag)
    }

    /// Decimal rendering with `digits` significant digits per part.
    pub fn to_decimal(&self, digits: usize) -> String {
        let re = decimal(&self.re, digits);
        if self.im.is_zero() {
            return re;
        }
        let im_abs = Float::with_val(self.im.prec(), self.im.abs_ref());
        let sign = if self.im.is_sign_negative() { '-' } else { '+' };
        format!("{re}{sign}{}i", decimal(&im_abs, digits))
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }
}

impl Add for &ComplexHP {
    type Output = ComplexHP;
    fn add(self, rhs: &ComplexHP) -> ComplexHP {
        let p = self.prec().max(rhs.prec());
        ComplexHP {
            re: Float::with_val(p, &self.re + &rhs.re),
            im: Float::with_val(p, &self.im + &rhs.im),
        }
    }
}

impl Sub for &ComplexHP {
    type Output = ComplexHP;
    fn sub(self, rhs: &ComplexHP) -> ComplexHP {
        let p = self.prec().max(rhs.prec());
        ComplexHP {
            re: Float::with_val(p, &self.re - &rhs.re),
            im: Float::with_val(p, &self.im - &rhs.im),
        }
    }
}

impl Mul for &ComplexHP {
    type Output = ComplexHP;
    fn mul(self, rhs: &ComplexHP) -> ComplexHP {
        let p = self.prec().max(rhs.prec());
        if self.im.is_zero() && rhs.im.is_zero() {
            return ComplexHP::from_real(Float::with_val(p, &self.re * &rhs.re));
        }
        let ac = Float::with_val(p, &self.re * &rhs.re);
        let bd = Float::with_val(p, &self.im * &rhs.im);
        let ad = Float::with_val(p, &self.re * &rhs.im);
        let bc = Float::with_val(p, &self.im * &rhs.re);
        ComplexHP {
            re: ac - bd,
            im: ad + bc,
        }
    }
}

impl Neg for &ComplexHP {
    type Output = ComplexHP;
    fn neg(self) -> ComplexHP {
        ComplexHP {
            re: Float::with_val(self.re.prec(), -&self.re),
            im: Float::with_val(self.im.prec(), -&self.im),
        }
    }
}

impl std::iter::Sum for ComplexHP {
    fn sum<I: Iterator<Item = ComplexHP>>(iter: I) -> Self {
        let mut acc: Option<ComplexHP> = None;
        for z in iter {
            acc = Some(match acc {
                None => z,
                Some(a) => &a + &z,
            });
        }
        acc.unwrap_or_else(|| ComplexHP::zero(DEFAULT_PRECISION))
    }
}

impl fmt::Display for ComplexHP {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(digits_for(self.prec())))
    }
}

/// Decimal digits that `prec` bits can honestly represent.
pub fn digits_for(prec: Bits) -> usize {
    ((prec as f64) * std::f64::consts::LOG10_2).floor().max(1.0) as usize
}

/// Scientific decimal string with `digits` significant digits.
pub fn decimal(x: &Float, digits: usize) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let sci = x.to_string_radix(10, Some(digits));
    positional(&sci).unwrap_or(sci)
}

/// Rewrites `-1.2345e-2` as `-0.012345` when the exponent is moderate.
fn positional(sci: &str) -> Option<String> {
    let (mantissa, exp) = match sci.split_once('e') {
        Some((m, e)) => (m, e.parse::<i32>().ok()?),
        None => (sci, 0),
    };
    if !(-6..=20).contains(&exp) {
        return None;
    }
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let digits: String = format!("{int}{frac}");
    let point = int.len() as i32 + exp;
    let body = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point as usize >= digits.len() {
        format!("{digits}{}", "0".repeat(point as usize - digits.len()))
    } else {
        format!("{}.{}", &digits[..point as usize], &digits[point as usize..])
    };
    Some(format!("{sign}{body}"))
}

/// A value on either side of an identity.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Exact(Rational),
    Real(Float),
    Complex(ComplexHP),
}

impl Value {
    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn to_complex(&self, prec: Bits) -> ComplexHP {
        match self {
            Value::Exact(q) => ComplexHP::from_rational(prec, q),
            Value::Real(x) => ComplexHP::from_real(Float::with_val(prec, x)),
            Value::Complex(z) => z.with_prec(prec),
        }
    }

    pub fn exact(&self) -> Option<&Rational> {
        match self {
            Value::Exact(q) => Some(q),
            _ => None,
        }
    }

    /// `|self - other|` at `prec` bits; exact when both sides are exact.
    pub fn distance(&self, other: &Value, prec: Bits) -> Float {
        match (self, other) {
            (Value::Exact(a), Value::Exact(b)) => {
                Float::with_val(prec, Rational::from(a - b).abs())
            }
            (Value::Exact(q), Value::Real(x)) | (Value::Real(x), Value::Exact(q)) => {
                let wp = prec.max(x.prec()) + GUARD_BITS;
                Float::with_val(prec, (Float::with_val(wp, x) - q).abs())
            }
            (Value::Real(a), Value::Real(b)) => {
                let wp = prec.max(a.prec()).max(b.prec());
                Float::with_val(prec, Float::with_val(wp, a - b).abs())
            }
            _ => {
                let wp = prec + GUARD_BITS;
                let d = &self.to_complex(wp) - &other.to_complex(wp);
                Float::with_val(prec, d.abs())
            }
        }
    }

    /// Rendering used in reports: exact values as `p/q`, numbers in decimal.
    pub fn render(&self, digits: usize) -> String {
        match self {
            Value::Exact(q) => q.to_string(),
            Value::Real(x) => decimal(x, digits),
            Value::Complex(z) => z.to_decimal(digits),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = match self {
            Value::Exact(_) => 0,
            Value::Real(x) => digits_for(x.prec()),
            Value::Complex(z) => digits_for(z.prec()),
        };
        f.write_str(&self.render(digits))
    }
}
