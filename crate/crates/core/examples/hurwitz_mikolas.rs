//! Products of Hurwitz zeta values at dilated fractions, summed over a
//! period, against the periodic zeta form.

use dedekind_sums::hp::{decimal, pi};
use dedekind_sums::zeta::{hurwitz_zeta, mikolas_d, ComplexS};
use rug::{Float, Rational};

fn main() -> dedekind_sums::Result<()> {
    let prec = 256;
    let two = ComplexS::real(prec, 2.0);
    let three = ComplexS::real(prec, 3.0);

    let half = hurwitz_zeta(&two, &Rational::from((1, 2)), prec)?;
    println!("zeta(2, 1/2)     = {}", half.to_decimal(40));

    let (lhs, rhs) = mikolas_d(&two, &two, 1, 1, 2, prec)?;
    let target = Float::with_val(prec, pi(prec).square_ref()).square() / 4u32;
    println!("s = (2,2), k = 2: {}", lhs.to_decimal(40));
    println!("                  {}", rhs.to_decimal(40));
    println!("pi^4/4          = {}", decimal(&target, 40));

    for (k, h) in [(5u64, (1, 2)), (7, (2, 3)), (12, (5, 7))] {
        let (lhs, rhs) = mikolas_d(&two, &three, h.0, h.1, k, prec)?;
        println!(
            "s = (2,3), k = {k:>2}, h = {h:?}: {}  |diff| {:.2e}",
            lhs.to_decimal(30),
            (&lhs - &rhs).abs().to_f64()
        );
    }
    Ok(())
}
