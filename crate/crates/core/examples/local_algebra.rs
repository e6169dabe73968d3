//! Build the example four-variable local algebra, print its basis, Loewy
//! lengths and socle.

use abdim::exactmath::FieldCtx;
use abdim::paperlab::{js_ring, ring_stats, JSConfig};

fn main() -> abdim::Result<()> {
    for (field, alpha) in [(FieldCtx::prime(7)?, 3), (FieldCtx::Rationals, 2)] {
        let cfg = JSConfig::new(field, alpha)?;
        let alg = js_ring(&cfg)?;
        let s = ring_stats(&alg);
        println!("over {field}, α = {}:", cfg.alpha);
        println!("  dim {} with basis {}", s.dim, s.basis.join(", "));
        println!("  dim m^i for i ≥ 1: {:?}", alg.max_ideal_power_dims());
        println!(
            "  socle dimension {}, Gorenstein: {}",
            s.socle_dim, s.gorenstein
        );
        let x1 = alg.var_element(0).clone();
        let x3 = alg.var_element(2).clone();
        println!(
            "  x1*x3 = {}",
            alg.element_to_string(&alg.multiply(&x1, &x3))
        );
    }
    Ok(())
}
