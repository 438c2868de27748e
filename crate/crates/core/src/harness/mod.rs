//! Verification harness: run configuration, identity registry, parameter
//! sweeps and the command-line front end.

pub mod cli;
pub mod compute;
pub mod mapspec;
pub mod params;
pub mod registry;
pub mod sweep;

use rug::Float;

use crate::dft::{BernoulliConvention, DEFAULT_WORK_LIMIT};
use crate::error::{Error, Result};
use crate::hp::{pow2, Bits, DEFAULT_PRECISION};
use crate::sums::ZeroResidue;

pub use params::Params;
pub use registry::{verify, IdentityReport, RegistryEntry, REGISTRY};
pub use sweep::{sweep, SweepSpec, SweepSummary};

pub const DEFAULT_TERMS: u64 = 100_000;

/// Settings shared by every command.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub precision: Bits,
    pub tolerance: Float,
    pub terms: u64,
    pub work_limit: u64,
    pub bernoulli: BernoulliConvention,
    pub zero_residue: ZeroResidue,
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            precision: DEFAULT_PRECISION,
            tolerance: pow2(DEFAULT_PRECISION, -128),
            terms: DEFAULT_TERMS,
            work_limit: DEFAULT_WORK_LIMIT,
            bernoulli: BernoulliConvention::Paper,
            zero_residue: ZeroResidue::Exclude,
            jobs: 0,
        }
    }
}

impl RunConfig {
    /// Default tolerance for `precision` bits: `2^{-precision/2}`.
    pub fn with_precision(precision: Bits) -> Result<Self> {
        let cfg = RunConfig {
            precision,
            tolerance: pow2(precision, -(precision as i32) / 2),
            ..RunConfig::default()
        };
        cfg.validate()?;
        Ok(cfg)
    }

    /// Refuses tolerances finer than the arithmetic can deliver.
    pub fn validate(&self) -> Result<()> {
        if self.precision < 32 {
            return Err(Error::InvalidArgument(format!(
                "precision must be at least 32 bits, got {}",
                self.precision
            )));
        }
        let floor = pow2(self.precision, 16 - self.precision as i32);
        if self.tolerance < floor {
            return Err(Error::InvalidArgument(format!(
                "tolerance {} is below 2^-{} for {} bits of precision",
                self.tolerance.to_f64(),
                self.precision - 16,
                self.precision
            )));
        }
        if self.terms == 0 {
            return Err(Error::InvalidArgument("series terms must be positive".into()));
        }
        Ok(())
    }

    /// Significant digits used when printing values.
    pub fn digits(&self) -> usize {
        crate::hp::digits_for(self.precision)
    }
}

/// Parses `2^-128`, `1e-30` or `0.001` into a float at `prec` bits.
pub fn parse_tolerance(s: &str, prec: Bits) -> Result<Float> {
    let s = s.trim();
    if let Some(e) = s.strip_prefix("2^") {
        let e: i32 = e
            .trim_matches(|c| c == '(' || c == ')')
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("bad tolerance exponent '{s}'")))?;
        return Ok(pow2(prec, e));
    }
    let parsed = Float::parse(s).map_err(|_| Error::InvalidArgument(format!("bad tolerance '{s}'")))?;
    let x = Float::with_val(prec, parsed);
    if x <= 0 {
        return Err(Error::InvalidArgument("tolerance must be positive".into()));
    }
    Ok(x)
}
