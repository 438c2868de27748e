//! Parameter sweeps through the registry, the same machinery as
//! `dedekind sweep`. Ends with the timing comparison between brute-force
//! enumeration and the closed form.

use dedekind_sums::harness::{sweep, RunConfig, SweepSpec};

fn main() -> dedekind_sums::Result<()> {
    let cfg = RunConfig::default();
    let mut specs = vec![
        SweepSpec::new("eq1", "1..50"),
        SweepSpec::new("cor9-s3", "odd 3..49"),
        SweepSpec::new("tan-sq", "odd 3..99"),
    ];
    let mut pairs = SweepSpec::new("th2", "1..12");
    pairs.m = Some(2);
    specs.push(pairs);
    let mut quads = SweepSpec::new("th2", "40");
    quads.m = Some(4);
    quads.samples = Some(5);
    specs.push(quads);

    for spec in &specs {
        let (s, _) = sweep(spec, &cfg)?;
        print!(
            "{:<8} k {:<10} {:>5} passed {:>3} failed {:>4} skipped, max residual {}, {} ms",
            s.id,
            spec.k,
            s.passed,
            s.failed,
            s.skipped,
            s.max_residual,
            s.micros / 1000
        );
        match s.timing_ratio {
            Some(r) => println!(", enumeration/closed form {r:.1}x"),
            None => println!(),
        }
    }
    Ok(())
}
