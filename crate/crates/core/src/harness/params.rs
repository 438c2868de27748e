//! Parameters of one identity instance, as they appear on the command line
//! and in JSON reports.

use rug::{Float, Rational};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hp::{Bits, ComplexHP};
use crate::zeta::ComplexS;

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub hs: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rs: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub which: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s1: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s2: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub x: Option<String>,
    /// Map specs, see [`crate::harness::mapspec`].
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub f: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub terms: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convention: Option<String>,
}

fn missing(name: &str) -> Error {
    Error::InvalidArgument(format!("missing parameter --{name}"))
}

impl Params {
    pub fn k(&self) -> Result<u64> {
        match self.k {
            Some(0) => Err(Error::InvalidArgument("k must be positive".into())),
            Some(k) => Ok(k),
            None => Err(missing("k")),
        }
    }

    pub fn h(&self) -> Result<i64> {
        self.h.ok_or_else(|| missing("h"))
    }

    pub fn r(&self) -> Result<u64> {
        self.r.ok_or_else(|| missing("r"))
    }

    /// `--hs`, or a tuple of `m` copies of `--h`.
    pub fn hs(&self) -> Result<Vec<i64>> {
        if let Some(hs) = &self.hs {
            return Ok(hs.clone());
        }
        match (self.h, self.m) {
            (Some(h), Some(m)) => Ok(vec![h; m]),
            _ => Err(missing("hs")),
        }
    }

    /// Exactly two multipliers: `--hs a,b`, or `--h h` paired with `default_second`.
    pub fn pair(&self, default_second: Option<i64>) -> Result<(i64, i64)> {
        if let Some(hs) = &self.hs {
            return match hs.as_slice() {
                [a, b] => Ok((*a, *b)),
                _ => Err(Error::InvalidArgument(format!("need two multipliers, got {}", hs.len()))),
            };
        }
        match (self.h, default_second) {
            (Some(h), Some(second)) => Ok((h, second)),
            (Some(h), None) => Ok((h, h)),
            _ => Err(missing("hs")),
        }
    }

    pub fn rs(&self) -> Result<Vec<u32>> {
        self.rs.clone().ok_or_else(|| missing("rs"))
    }

    pub fn s(&self, name: &str, prec: Bits) -> Result<ComplexS> {
        let text = match name {
            "s1" => self.s1.as_ref(),
            "s2" => self.s2.as_ref(),
            _ => self.s.as_ref(),
        };
        parse_complex(text.ok_or_else(|| missing(name))?, prec).map(ComplexS::new)
    }

    pub fn x(&self) -> Result<Rational> {
        parse_rational(self.x.as_ref().ok_or_else(|| missing("x"))?)
    }
}

/// `p/q` or an integer.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::InvalidArgument(format!("not a rational number: '{s}'"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: rug::Integer = p.trim().parse().map_err(|_| bad())?;
            let q: rug::Integer = q.trim().parse().map_err(|_| bad())?;
            if q == 0 {
                return Err(bad());
            }
            Ok(Rational::from((p, q)))
        }
        None => s.parse::<rug::Integer>().map(Rational::from).map_err(|_| bad()),
    }
}

/// `2`, `2.5`, `2+1i`, `2-0.5i`, `1.5i`.
pub fn parse_complex(s: &str, prec: Bits) -> Result<ComplexHP> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::InvalidArgument(format!("not a complex number: '{s}'"));
    let real = |x: &str| -> Result<Float> {
        let parsed = Float::parse(x).map_err(|_| bad())?;
        Ok(Float::with_val(prec, parsed))
    };
    let Some(body) = t.strip_suffix('i') else {
        return Ok(ComplexHP::from_real(real(&t)?));
    };
    // split at the last sign that is not an exponent sign or the leading one
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&j| (bytes[j] == b'+' || bytes[j] == b'-') && !matches!(bytes[j - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(j) => (&body[..j], &body[j..]),
        None => ("0", body),
    };
    let im = match im {
        "" | "+" => "1",
        "-" => "-1",
        other => other,
    };
    Ok(ComplexHP::new(real(re)?, real(im)?))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complex_forms() {
        let z = parse_complex("2+1i", 64).unwrap();
        assert_eq!((z.re.to_f64(), z.im.to_f64()), (2.0, 1.0));
        let z = parse_complex("2.5", 64).unwrap();
        assert_eq!((z.re.to_f64(), z.im.to_f64()), (2.5, 0.0));
        let z = parse_complex("3-0.5i", 64).unwrap();
        assert_eq!((z.re.to_f64(), z.im.to_f64()), (3.0, -0.5));
        let z = parse_complex("1e-1+2e-1i", 64).unwrap();
        assert!((z.re.to_f64() - 0.1).abs() < 1e-15 && (z.im.to_f64() - 0.2).abs() < 1e-15);
        let z = parse_complex("-i", 64).unwrap();
        assert_eq!(z.im.to_f64(), -1.0);
        assert!(parse_complex("two", 64).is_err());
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("1/3").unwrap(), Rational::from((1, 3)));
        assert_eq!(parse_rational("-4").unwrap(), Rational::from(-4));
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn json_round_trip_skips_absent_fields() {
        let p = Params {
            k: Some(3),
            hs: Some(vec![1, 1]),
            ..Params::default()
        };
        let text = serde_json::to_string(&p).unwrap();
        assert_eq!(text, r#"{"k":3,"hs":[1,1]}"#);
        assert_eq!(serde_json::from_str::<Params>(&text).unwrap(), p);
    }
}
