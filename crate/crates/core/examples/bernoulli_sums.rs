//! Sums of products of periodic Bernoulli functions and their
//! cotangent-derivative closed forms. Order one needs care: `B_1({x})`
//! is `-1/2` at integers, which the plain closed form misses.

use dedekind_sums::dft::BernoulliConvention;
use dedekind_sums::exact::bernoulli_number;
use dedekind_sums::hp::{decimal, Value};
use dedekind_sums::sums::{bernoulli_convention_note, bernoulli_sum_lhs, bernoulli_sum_rhs, SumParams};

fn show(k: u64, hs: &[i64], rs: &[u32], convention: BernoulliConvention) -> dedekind_sums::Result<()> {
    let prec = 256;
    let p = SumParams::new(k, hs.to_vec()).with_orders(rs.to_vec());
    let lhs = bernoulli_sum_lhs(&p)?;
    if rs.iter().sum::<u32>() % 2 == 1 {
        println!("k = {k} h = {hs:?} r = {rs:?}: {lhs} (odd weight, no cotangent form)");
        return Ok(());
    }
    let rhs = bernoulli_sum_rhs(&p, prec, convention)?;
    let residual = Value::Exact(lhs.clone()).distance(&Value::Real(rhs.clone()), prec).to_f64();
    println!("k = {k} h = {hs:?} r = {rs:?} {convention:?}: {lhs} vs {} ({residual:.2e})", decimal(&rhs, 20));
    if let Some(note) = bernoulli_convention_note(rs, convention) {
        println!("  {note}");
    }
    Ok(())
}

fn main() -> dedekind_sums::Result<()> {
    println!("B_0..B_10: {:?}", (0..=10).map(|r| bernoulli_number(r).to_string()).collect::<Vec<_>>());
    show(5, &[1, 2], &[2, 2], BernoulliConvention::Paper)?;
    show(7, &[1, 3], &[2, 4], BernoulliConvention::Paper)?;
    show(9, &[1, 2, 4], &[2, 2, 4], BernoulliConvention::Paper)?;
    // odd total weight vanishes when every order is at least 2
    show(7, &[1, 2], &[2, 3], BernoulliConvention::Paper)?;
    show(3, &[1, 1], &[1, 1], BernoulliConvention::Paper)?;
    show(3, &[1, 1], &[1, 1], BernoulliConvention::Corrected)?;
    // but not with an order-one factor
    show(5, &[1, 2], &[1, 4], BernoulliConvention::Corrected)?;
    Ok(())
}
