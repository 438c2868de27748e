//! The Dedekind sum three ways: the defining sum over sawtooth products,
//! the finite cotangent sum, and a truncated cotangent series with its
//! tail bound.
//!
//!     cargo run --example dedekind_cot -- 5 12

use dedekind_sums::hp::{decimal, Value};
use dedekind_sums::sums::{dedekind_cot_rhs, dedekind_s, dedekind_series_rhs};

fn main() -> dedekind_sums::Result<()> {
    let args: Vec<i64> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let (h, k) = match args[..] {
        [h, k, ..] => (h, k as u64),
        _ => (5, 12),
    };
    let prec = 256;

    let exact = dedekind_s(h, k);
    let cot = dedekind_cot_rhs(h, k, prec)?;
    println!("s({h},{k})            = {exact}");
    println!("cotangent form      = {}", decimal(&cot, 40));

    // reciprocity as a free sanity check
    if h > 0 {
        let recip = dedekind_s(k as i64, h as u64);
        println!("s(h,k) + s(k,h)     = {}", exact.clone() + recip);
    }

    for terms in [1_000u64, 10_000, 100_000] {
        let (value, bound) = dedekind_series_rhs(h, k, terms, prec)?;
        let err = Value::Real(value.clone()).distance(&Value::Exact(exact.clone()), prec);
        println!(
            "series, N = {terms:>6}  = {}  error {:.3e} <= bound {:.3e}",
            decimal(&value, 20),
            err.to_f64(),
            bound.to_f64()
        );
    }
    Ok(())
}
