//! Text specs for periodic maps:
//!
//! | spec | map `n -> ...` |
//! |---|---|
//! | `sawtooth`, `sawtooth:h` | `((n h / k))` |
//! | `bernoulli:r` | `B_r({n/k})` |
//! | `alt-sawtooth` | `(-1)^n ((n/k))`, `k` even |
//! | `alt-sign` | `(-1)^{n mod k}`, `0` on multiples, `k` odd |
//! | `const` | `1` |
//! | `delta` | `1` on multiples of `k`, else `0` |
//! | `cot:h`, `tan:h` | `cot(pi n h / k)`, `tan(pi n h / k)` (numeric, odd) |
//! | `0,1,-1/2` | explicit values on `0..k` |
//! | `random:SEED`, `random-odd:SEED` | small random rationals |

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rug::Rational;

use crate::dft::{defining_map, dilate, PeriodicMap, TransformKind};
use crate::error::{Error, Result};
use crate::hp::Bits;
use crate::zeta::{cot_weight_map, tan_weight_map};

use super::params::parse_rational;

fn bad(spec: &str) -> Error {
    Error::InvalidArgument(format!("unknown map spec '{spec}'"))
}

fn int_arg<T: std::str::FromStr>(spec: &str, arg: Option<&str>) -> Result<T> {
    arg.ok_or_else(|| bad(spec))?.parse().map_err(|_| bad(spec))
}

/// Period implied by the spec itself (explicit value lists only).
pub fn implied_period(spec: &str) -> Option<u64> {
    spec.contains(',').then(|| spec.split(',').count() as u64)
}

pub fn parse_map(spec: &str, k: u64, prec: Bits) -> Result<PeriodicMap> {
    let spec = spec.trim();
    if spec.contains(',') || (k == 1 && parse_rational(spec).is_ok()) {
        let values = spec.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        if values.len() as u64 != k {
            return Err(Error::PeriodMismatch {
                left: values.len() as u64,
                right: k,
            });
        }
        return PeriodicMap::exact(values);
    }
    let (name, arg) = match spec.split_once(':') {
        Some((n, a)) => (n, Some(a)),
        None => (spec, None),
    };
    match name {
        "sawtooth" => {
            let base = defining_map(&TransformKind::Sawtooth, k, prec)?;
            match arg {
                Some(_) => dilate(&base, int_arg(spec, arg)?),
                None => Ok(base),
            }
        }
        "bernoulli" => {
            let order: u32 = int_arg(spec, arg)?;
            defining_map(
                &TransformKind::Bernoulli {
                    order,
                    convention: Default::default(),
                },
                k,
                prec,
            )
        }
        "alt-sawtooth" => defining_map(&TransformKind::AltSawtooth, k, prec),
        "alt-sign" => defining_map(&TransformKind::AltSign, k, prec),
        "const" => Ok(PeriodicMap::from_fn_exact(k, |_| Rational::from(1))),
        "delta" => Ok(PeriodicMap::from_fn_exact(k, |n| Rational::from((n == 0) as i32))),
        "cot" => cot_weight_map(int_arg(spec, arg.or(Some("1")))?, k, prec),
        "tan" => tan_weight_map(int_arg(spec, arg.or(Some("1")))?, k, prec),
        "random" => Ok(random_map(k, int_arg(spec, arg)?, false)),
        "random-odd" => Ok(random_map(k, int_arg(spec, arg)?, true)),
        _ => Err(bad(spec)),
    }
}

fn small_rational(rng: &mut ChaCha8Rng) -> Rational {
    Rational::from((rng.gen_range(-9i32..=9), rng.gen_range(1i32..=6)))
}

/// Random exact map with entries `p/q`, `|p| <= 9`, `1 <= q <= 6`;
/// with `odd`, `f(-n) = -f(n)`.
pub fn random_map(k: u64, seed: u64, odd: bool) -> PeriodicMap {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let k = k as usize;
    let mut values = vec![Rational::new(); k];
    if odd {
        for a in 1..k {
            if 2 * a < k {
                values[a] = small_rational(&mut rng);
            } else if 2 * a > k {
                values[a] = -values[k - a].clone();
            }
        }
    } else {
        for v in values.iter_mut() {
            *v = small_rational(&mut rng);
        }
    }
    PeriodicMap::exact(values).expect("k >= 1")
}
