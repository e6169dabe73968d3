//! AB-dimension: certified zero when α has finite order, left open
//! otherwise, with the evidence gathered on sample modules.

use abdim::exactmath::FieldCtx;
use abdim::homdim::{ab_dimension, AbDimVerdict, HomDimConfig};
use abdim::paperlab::{js_module, js_ring, JSConfig};

fn main() -> abdim::Result<()> {
    let hd = HomDimConfig {
        seed: 7,
        ..HomDimConfig::default()
    };
    for (field, alpha) in [(FieldCtx::prime(7)?, 3), (FieldCtx::Rationals, 2)] {
        let cfg = JSConfig::new(field, alpha)?;
        let alg = js_ring(&cfg)?;
        let v = ab_dimension(&js_module(&cfg, &alg), &hd)?;
        match &v {
            AbDimVerdict::CertifiedZero { rule, formula, .. } => {
                println!("over {field}: AB-dim 0 by {rule:?} ({formula})")
            }
            AbDimVerdict::Unknown { reason, .. } => println!("over {field}: unknown, {reason}"),
            AbDimVerdict::MinusInfinity => println!("over {field}: zero module"),
        }
        for e in v.evidence() {
            match (&e.p_value, &e.skipped) {
                (Some(p), _) => println!("  {:<10} dim {:<3} P = {p:?}", e.name, e.kdim),
                (_, Some(why)) => println!("  {:<10} skipped: {why}", e.name),
                _ => {}
            }
        }
    }
    Ok(())
}
