//! Sums of products of sawtooth values against products of cotangents,
//! for a few tuples of multipliers. Odd tuple lengths vanish.

use dedekind_sums::dft::enumeration_size;
use dedekind_sums::hp::{decimal, Value};
use dedekind_sums::sums::{zagier_sum_lhs, zagier_sum_rhs, SumParams};

fn main() -> dedekind_sums::Result<()> {
    let prec = 256;
    let cases: &[(u64, &[i64])] = &[
        (3, &[1, 1]),
        (7, &[1, 2, 3]),
        (7, &[1, 2, 3, 4]),
        (11, &[1, 3, 5, 7, 9, 2]),
        (40, &[1, 3, 7, 9]),
    ];
    for &(k, hs) in cases {
        let p = SumParams::new(k, hs.to_vec());
        let lhs = zagier_sum_lhs(&p)?;
        let rhs = zagier_sum_rhs(&p, prec)?;
        let residual = Value::Exact(lhs.clone()).distance(&Value::Real(rhs.clone()), prec);
        println!(
            "k = {k:>2} h = {hs:?}: {lhs} vs {}  (residual {:.2e}, {} terms enumerated)",
            decimal(&rhs, 24),
            residual.to_f64(),
            enumeration_size(k, hs.len())
        );
    }
    Ok(())
}
