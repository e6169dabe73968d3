//! Minimal free resolutions and Betti numbers.

use std::sync::Arc;

use abdim::algebra::build_algebra;
use abdim::exactmath::FieldCtx;
use abdim::fpmodule::FPModule;
use abdim::groebner::Poly;
use abdim::paperlab::{js_module, js_ring, JSConfig};
use abdim::resolution::minimal_free_resolution;

fn main() -> abdim::Result<()> {
    let f5 = FieldCtx::prime(5)?;
    let x = |i| Poly::var(f5, 2, i);
    let ci = Arc::new(build_algebra(
        &["x".into(), "y".into()],
        &[x(0).pow(2), x(1).pow(2)],
    )?);
    let k = FPModule::residue_field(ci);
    let res = minimal_free_resolution(&k, 8);
    println!("k over k[x,y]/(x^2,y^2): β = {:?}", res.betti());

    let cfg = JSConfig::new(FieldCtx::prime(7)?, 3)?;
    let alg = js_ring(&cfg)?;
    let m = js_module(&cfg, &alg);
    let res = minimal_free_resolution(&m, 12);
    println!("M = coker d_1: β = {:?}", res.betti());
    println!(
        "  minimal {}, exact {}, d∘d = 0: {}",
        res.is_minimal(),
        res.is_exact(),
        res.composites_vanish()
    );
    println!("  d_1 =\n{}", res.differential(1).display(&alg));
    Ok(())
}
