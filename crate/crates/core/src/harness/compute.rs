//! Single values: `dedekind compute TARGET ...`.

use rug::Rational;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::{bernoulli_number, mod_inverse};
use crate::hp::{ComplexHP, Value};
use crate::sums::{self, HardyKind, SumParams, ZeroResidue};
use crate::zeta::{digamma, euler_constant_gamma, hurwitz_zeta, periodic_zeta, series_s};

use super::mapspec::{implied_period, parse_map};
use super::registry::conventions;
use super::{Params, RunConfig};

pub const TARGETS: &[&str] = &[
    "dedekind",
    "dedekind-cot",
    "zagier",
    "bernoulli-number",
    "bernoulli-sum",
    "hardy",
    "hardy-a",
    "hardy-b",
    "gamma-rk",
    "digamma",
    "hurwitz",
    "periodic-zeta",
    "series",
    "mod-inverse",
];

#[derive(Debug, Clone, Serialize)]
pub struct ComputeOutput {
    pub target: String,
    pub params: Params,
    pub value: String,
    pub exact: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

fn out(target: &str, params: &Params, v: Value, digits: usize) -> ComputeOutput {
    ComputeOutput {
        target: target.to_string(),
        params: params.clone(),
        exact: v.is_exact(),
        value: v.render(digits),
        note: None,
    }
}

pub fn compute(target: &str, p: &Params, cfg: &RunConfig) -> Result<ComputeOutput> {
    cfg.validate()?;
    let prec = cfg.precision;
    let digits = cfg.digits();
    let (_, zero) = conventions(p, cfg)?;
    let exact = |q: Rational| Value::Exact(q);
    let sum_params = || -> Result<SumParams> { Ok(SumParams::new(p.k()?, p.hs()?).with_work_limit(cfg.work_limit)) };
    let v = match target {
        "dedekind" => {
            let (h, k) = (p.h()?, p.k()?);
            crate::exact::require_coprime(h, k)?;
            exact(sums::dedekind_s(h, k))
        }
        "dedekind-cot" => Value::Real(sums::dedekind_cot_rhs(p.h()?, p.k()?, prec)?),
        "zagier" => exact(sums::zagier_sum_lhs(&sum_params()?)?),
        "bernoulli-number" => exact(bernoulli_number(p.r()? as usize)),
        "bernoulli-sum" => exact(sums::bernoulli_sum_lhs(&sum_params()?.with_orders(p.rs()?))?),
        "hardy" => {
            let which: HardyKind = p.which.as_deref().unwrap_or("S").parse()?;
            let (h, k) = (p.h()?, p.k()?);
            let value = sums::hardy_sum(which, h, k, zero);
            let other_conv = match zero {
                ZeroResidue::Include => ZeroResidue::Exclude,
                ZeroResidue::Exclude => ZeroResidue::Include,
            };
            let other = sums::hardy_sum(which, h, k, other_conv);
            let mut o = out(target, p, exact(value.clone()), digits);
            if other != value {
                let label = match other_conv {
                    ZeroResidue::Include => "include-zero",
                    ZeroResidue::Exclude => "exclude-zero",
                };
                o.note = Some(format!("{label}: {other}"));
            }
            return Ok(o);
        }
        "hardy-a" => exact(sums::hardy_a_lhs(&sum_params()?)?),
        "hardy-b" => exact(sums::hardy_b_lhs(&sum_params()?)?),
        "gamma-rk" => Value::Real(euler_constant_gamma(p.r()?, p.k()?, prec)?),
        "digamma" => Value::Real(digamma(&p.x()?, prec)?),
        "hurwitz" => Value::Complex(hurwitz_zeta(&p.s("s", prec)?, &p.x()?, prec)?),
        "periodic-zeta" => Value::Complex(periodic_zeta(&p.s("s", prec)?, &p.x()?, prec)?),
        "series" => {
            let spec = p
                .f
                .as_ref()
                .and_then(|f| f.first())
                .ok_or_else(|| Error::InvalidArgument("missing parameter --f".into()))?;
            let k = match p.k {
                Some(_) => p.k()?,
                None => implied_period(spec).ok_or_else(|| Error::InvalidArgument("missing parameter --k".into()))?,
            };
            let forms = series_s(&parse_map(spec, k, prec)?, prec)?;
            let mut o = out(target, p, Value::Complex(forms.cot_form.clone()), digits);
            let render = |z: &ComplexHP| z.to_decimal(digits);
            o.note = Some(format!(
                "dft form {}; lehmer form {}; zeta form {}",
                render(&forms.dft_form),
                render(&forms.lehmer_form),
                render(&forms.zeta_form)
            ));
            return Ok(o);
        }
        "mod-inverse" => exact(Rational::from(mod_inverse(p.h()?, p.k()?)?)),
        other => {
            return Err(Error::InvalidArgument(format!(
                "unknown target '{other}' (expected one of {})",
                TARGETS.join(", ")
            )))
        }
    };
    Ok(out(target, p, v, digits))
}
