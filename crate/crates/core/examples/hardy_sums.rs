//! The six Hardy sums and the trigonometric identities they satisfy,
//! run through the identity registry.

use dedekind_sums::harness::{verify, Params, RunConfig};
use dedekind_sums::sums::{hardy_sum, HardyKind, ZeroResidue};

fn main() -> dedekind_sums::Result<()> {
    let (h, k) = (3, 11);
    for which in [HardyKind::S, HardyKind::S1, HardyKind::S2, HardyKind::S3, HardyKind::S4, HardyKind::S5] {
        let incl = hardy_sum(which, h, k, ZeroResidue::Include);
        let excl = hardy_sum(which, h, k, ZeroResidue::Exclude);
        println!("{which:?}({h},{k}) = {excl}  (with a = 0: {incl})");
    }

    let cfg = RunConfig::default();
    let runs: Vec<(&str, Params)> = vec![
        ("cor7", Params { h: Some(5), k: Some(12), ..Params::default() }),
        ("cor9-s3", Params { h: Some(3), k: Some(11), ..Params::default() }),
        ("cor9-s5", Params { h: Some(3), k: Some(11), ..Params::default() }),
        ("cor11", Params { h: Some(4), k: Some(11), ..Params::default() }),
        ("eq14", Params { hs: Some(vec![3, 5]), k: Some(11), ..Params::default() }),
        ("tan-sq", Params { k: Some(11), ..Params::default() }),
    ];
    for (id, p) in runs {
        let r = verify(id, &p, &cfg)?;
        let status = if r.pass { "ok" } else { "FAIL" };
        let cut = |v: &str| v[..v.len().min(24)].to_string();
        println!("{id:<8} {status:<4} lhs {:<24} rhs {:<24} residual {}", cut(&r.lhs), cut(&r.rhs), r.residual);
    }
    Ok(())
}
