//! Cross-module properties, checked through the public API only.

use dedekind_sums::dft::{
    cauchy_convolve, closed_form_residual, dft, dilate, max_distance, sawtooth_map, theorem1_lhs, theorem1_rhs,
    BernoulliConvention, TransformKind,
};
use dedekind_sums::exact::{gcd, mod_inverse};
use dedekind_sums::harness::mapspec::random_map;
use dedekind_sums::hp::{pow2, Bits, ComplexHP, Value};
use dedekind_sums::sums::{
    bernoulli_sum_lhs, bernoulli_sum_rhs, hardy_s4_identity, hardy_sum, HardyKind, SumParams, ZeroResidue,
};
use dedekind_sums::zeta::{hurwitz_zeta, partial_series, riemann_zeta, series_s, ComplexS};
use proptest::prelude::*;
use rug::{Float, Rational};

const P: Bits = 256;

fn coprimes(k: u64) -> Vec<i64> {
    (1..k.max(2) as i64).filter(|&h| gcd(h, k) == 1).collect()
}

#[test]
fn convolution_theorem_pointwise() {
    for k in 1..10 {
        let f = random_map(k, k, false);
        let g = random_map(k, 100 + k, false);
        let lhs = dft(&cauchy_convolve(&f, &g, P).unwrap(), P);
        let (ff, gg) = (dft(&f, P), dft(&g, P));
        let prod = dedekind_sums::dft::PeriodicMap::from_fn_numeric(k, |n| &ff.complex_at(n, P) * &gg.complex_at(n, P));
        assert!(max_distance(&lhs, &prod, P) < pow2(P, -200), "k={k}");
    }
}

#[test]
fn dilation_commutes_with_transform() {
    for k in 2..14u64 {
        let f = random_map(k, 7 * k, false);
        for h in coprimes(k) {
            let inv = mod_inverse(h, k).unwrap() as i64;
            let a = dft(&dilate(&f, h).unwrap(), P);
            let b = dilate(&dft(&f, P), inv).unwrap();
            assert!(max_distance(&a, &b, P) < pow2(P, -200), "k={k} h={h}");
        }
    }
}

#[test]
fn closed_forms_for_every_transform_pair() {
    let tol = pow2(P, -200);
    for k in 1..13u64 {
        assert!(closed_form_residual(&TransformKind::Sawtooth, k, P).unwrap() < tol);
        for order in 2..6 {
            let kind = TransformKind::Bernoulli {
                order,
                convention: BernoulliConvention::Paper,
            };
            assert!(closed_form_residual(&kind, k, P).unwrap() < tol, "k={k} r={order}");
        }
        let corrected = TransformKind::Bernoulli {
            order: 1,
            convention: BernoulliConvention::Corrected,
        };
        assert!(closed_form_residual(&corrected, k, P).unwrap() < tol);
        let kind = if k % 2 == 0 { TransformKind::AltSawtooth } else { TransformKind::AltSign };
        assert!(closed_form_residual(&kind, k, P).unwrap() < tol);
    }
    for s in [2.0, 2.5, 3.0] {
        let kind = TransformKind::PeriodicZeta {
            s: ComplexHP::from_real(Float::with_val(P, s)),
        };
        assert!(closed_form_residual(&kind, 6, P).unwrap() < pow2(P, -120), "s={s}");
    }
}

#[test]
fn hurwitz_multiplication_theorem() {
    for s in [2.0, 2.5, 3.0] {
        let s = ComplexS::real(P, s);
        let zeta = riemann_zeta(&s, P).unwrap();
        for k in 1..=10u64 {
            let total: ComplexHP = (1..=k).map(|a| hurwitz_zeta(&s, &Rational::from((a, k)), P).unwrap()).sum();
            let rhs = &s.s.pow_of(&Float::with_val(P, k)) * &zeta;
            assert!((&total - &rhs).abs() < pow2(P, -200), "k={k}");
        }
    }
}

#[test]
fn bernoulli_sums_vanish_for_odd_weight() {
    for k in [3u64, 5, 7, 8, 9] {
        for rs in [vec![3, 2], vec![2, 5], vec![3, 3, 3], vec![2, 2, 3], vec![4, 3, 2, 2]] {
            let hs = coprimes(k).into_iter().cycle().take(rs.len()).collect();
            let p = SumParams::new(k, hs).with_orders(rs.clone());
            assert_eq!(bernoulli_sum_lhs(&p).unwrap(), 0, "k={k} rs={rs:?}");
        }
    }
}

/// `B_1({x})` is `-1/2` at integers, so an order-one factor breaks the
/// odd-weight vanishing even when another order is at least 3.
#[test]
fn order_one_factor_breaks_vanishing() {
    for k in [3u64, 5, 7] {
        let p = SumParams::new(k, vec![1, 2]).with_orders(vec![1, 4]);
        assert_eq!(bernoulli_sum_lhs(&p).unwrap(), Rational::from((1, 60)), "k={k}");
    }
    let p = SumParams::new(7, vec![1, 2, 4]).with_orders(vec![3, 3, 1]);
    assert_ne!(bernoulli_sum_lhs(&p).unwrap(), 0);
}

#[test]
fn corrected_convention_is_exact_at_order_one() {
    for k in 2..10u64 {
        for rs in [vec![1, 1], vec![1, 3], vec![1, 2], vec![1, 1, 2]] {
            let hs: Vec<i64> = coprimes(k).into_iter().rev().cycle().take(rs.len()).collect();
            let p = SumParams::new(k, hs).with_orders(rs.clone());
            let lhs = Value::Exact(bernoulli_sum_lhs(&p).unwrap());
            let rhs = Value::Real(bernoulli_sum_rhs(&p, P, BernoulliConvention::Corrected).unwrap());
            assert!(lhs.distance(&rhs, P) < pow2(P, -128), "k={k} rs={rs:?}");
        }
    }
}

#[test]
fn s4_convention_consistency() {
    for k in (3..40u64).step_by(2) {
        for h in coprimes(k).into_iter().filter(|h| h % 2 == 1) {
            let s4 = hardy_sum(HardyKind::S4, h, k, ZeroResidue::Exclude);
            let eq = hardy_s4_identity(h, 1, k, P).unwrap();
            assert_eq!(eq.lhs, Value::Exact(s4), "k={k} h={h}");
        }
    }
}

#[test]
fn truncated_series_error_shrinks_with_terms() {
    let f = random_map(9, 4, true);
    let exact = series_s(&f, P).unwrap().cot_form;
    let mut last = None::<Float>;
    for n in [1_000u64, 2_000, 4_000, 8_000] {
        let (partial, bound) = partial_series(&f, n, P).unwrap();
        let err = (&partial - &exact).abs();
        assert!(err <= bound, "n={n}");
        if let Some(prev) = last {
            assert!(bound < prev, "bound should shrink");
        }
        last = Some(bound);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn theorem1_on_random_maps(k in 1u64..9, m in 1usize..4, seed in 0u64..1000) {
        let fs: Vec<_> = (0..m).map(|j| random_map(k, seed * 7 + j as u64, false)).collect();
        let pool = coprimes(k);
        let hs: Vec<i64> = (0..m).map(|j| pool[(seed as usize + 3 * j) % pool.len()]).collect();
        let lhs = theorem1_lhs(&fs, &hs, P).unwrap();
        let rhs = Value::Complex(theorem1_rhs(&fs, &hs, P).unwrap());
        prop_assert!(lhs.distance(&rhs, P) < pow2(P, -128));
    }

    #[test]
    fn sawtooth_transform_is_odd(k in 1u64..20) {
        let t = dft(&sawtooth_map(k), P);
        for n in 0..k as i64 {
            let d = (&t.complex_at(n, P) + &t.complex_at(-n, P)).abs();
            prop_assert!(d < pow2(P, -200));
        }
    }
}
