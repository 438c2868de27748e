//! `sum_{r>=1} f(r)/r` for an odd periodic map, evaluated by a cotangent
//! sum, a transform sum, the generalized Euler constants gamma(r, k) and
//! the periodic zeta function at 1, then compared with partial sums.

use dedekind_sums::dft::PeriodicMap;
use dedekind_sums::hp::{decimal, pi};
use dedekind_sums::zeta::{euler_constant_gamma, gamma_dft_check, partial_series, series_s};
use rug::{Float, Rational};

fn main() -> dedekind_sums::Result<()> {
    let prec = 256;
    // f = (0, 1, -1): 1 - 1/2 + 1/4 - 1/5 + ...
    let f = PeriodicMap::exact(vec![Rational::new(), Rational::from(1), Rational::from(-1)])?;
    let forms = series_s(&f, prec)?;
    for (name, z) in ["cotangent", "transform", "gamma(r,k)", "periodic zeta"].iter().zip(forms.all()) {
        println!("{name:<14} {}", z.to_decimal(40));
    }
    let target = Float::with_val(prec, pi(prec) / (Float::with_val(prec, 3u32).sqrt() * 3u32));
    println!("pi/(3 sqrt 3)  {}", decimal(&target, 40));

    for n in [100u64, 10_000, 1_000_000] {
        let (partial, bound) = partial_series(&f, n, prec)?;
        println!("N = {n:>7}: {}  tail <= {:.2e}", partial.to_decimal(20), bound.to_f64());
    }

    println!("gamma(r, 4):");
    for r in 1..=4 {
        println!("  r = {r}: {}", decimal(&euler_constant_gamma(r, 4, prec)?, 30));
    }
    println!("transform of gamma(., 6) vs digamma closed form: {:.2e}", gamma_dft_check(6, prec)?.to_f64());
    Ok(())
}
