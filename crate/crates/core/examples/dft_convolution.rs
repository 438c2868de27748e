//! Finite Fourier transform on Z/kZ: convolution becomes a pointwise
//! product, dilation by h becomes dilation by h^{-1}, and the sum of
//! products of dilated maps collapses to a sum over transforms.

use dedekind_sums::dft::{
    cauchy_convolve, dft, dilate, max_distance, sawtooth_map, theorem1_lhs, theorem1_rhs, PeriodicMap,
};
use dedekind_sums::exact::mod_inverse;
use dedekind_sums::harness::mapspec::random_map;
use dedekind_sums::hp::Value;

fn main() -> dedekind_sums::Result<()> {
    let prec = 256;
    let k = 7;
    let f = random_map(k, 1, false);
    let g = random_map(k, 2, false);

    let conv = dft(&cauchy_convolve(&f, &g, prec)?, prec);
    let (ff, gg) = (dft(&f, prec), dft(&g, prec));
    let prod = PeriodicMap::from_fn_numeric(k, |n| &ff.complex_at(n, prec) * &gg.complex_at(n, prec));
    println!("k = {k}: |DFT(f*g) - DFT(f) DFT(g)| = {:.3e}", max_distance(&conv, &prod, prec).to_f64());

    let h = 3;
    let inv = mod_inverse(h, k)? as i64;
    let a = dft(&dilate(&f, h)?, prec);
    let b = dilate(&ff, inv)?;
    println!("dilation by {h} vs transform dilated by {inv}: {:.3e}", max_distance(&a, &b, prec).to_f64());

    let saw = dft(&sawtooth_map(k), prec);
    println!("transform of the sawtooth, k = {k}:");
    for n in 0..k as i64 {
        println!("  n = {n}: {}", saw.complex_at(n, prec).to_decimal(18));
    }

    let fs = [f, g, random_map(k, 3, false)];
    let hs = [1, 2, 4];
    let lhs = theorem1_lhs(&fs, &hs, prec)?;
    let rhs = theorem1_rhs(&fs, &hs, prec)?;
    println!("sum_a f1(a) f2(2a) f3(4a)  = {}", lhs.render(30));
    println!("via transforms             = {}", rhs.to_decimal(30));
    println!("residual                   = {:.3e}", lhs.distance(&Value::Complex(rhs), prec).to_f64());
    Ok(())
}
