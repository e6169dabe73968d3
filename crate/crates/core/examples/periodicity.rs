//! Periodic resolutions: the example module has period equal to the
//! multiplicative order of α.

use abdim::exactmath::FieldCtx;
use abdim::paperlab::{js_complex, js_module, js_ring, JSConfig};
use abdim::resolution::{detect_periodicity, verify_complete_resolution};

fn main() -> abdim::Result<()> {
    for (p, alpha) in [(7, 3), (7, 2), (13, 4), (5, 4)] {
        let cfg = JSConfig::new(FieldCtx::prime(p)?, alpha)?;
        let alg = js_ring(&cfg)?;
        let m = js_module(&cfg, &alg);
        let search = detect_periodicity(&m, 8, 0);
        println!(
            "GF({p}), α = {alpha} of order {:?}: period {:?}",
            cfg.order(),
            search.period
        );
        for a in &search.attempts {
            println!("  p = {}: {}", a.period, a.outcome);
        }
        let report = verify_complete_resolution(&js_complex(&cfg, &alg, 0, 0)?)?;
        println!(
            "  complete resolution over {} spots: d∘d = 0 {}, exact {}, dual exact {}",
            report.spots.len(),
            report.composites_zero,
            report.exact,
            report.dual_exact
        );
    }
    Ok(())
}
