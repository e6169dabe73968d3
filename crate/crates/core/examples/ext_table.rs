//! Dimensions of Ext between modules over the example ring.

use abdim::exactmath::FieldCtx;
use abdim::fpmodule::{matlis_dual, syzygy, FPModule};
use abdim::homdim::ext_table;
use abdim::paperlab::{js_module, js_ring, JSConfig};

fn main() -> abdim::Result<()> {
    let cfg = JSConfig::new(FieldCtx::prime(7)?, 3)?;
    let alg = js_ring(&cfg)?;
    let m = js_module(&cfg, &alg);
    let r = FPModule::free(alg.clone(), 1);
    let targets = [
        ("R", r.clone()),
        ("k", FPModule::residue_field(alg.clone())),
        ("M", m.clone()),
        ("ΩM", syzygy(&m, 1)),
        ("E", matlis_dual(&r)),
    ];
    println!("dim Ext^i(M, N), i = 0..12");
    for (name, n) in &targets {
        let t = ext_table(&m, n, 0, 12)?;
        println!("  N = {name:<3} {:?}", t.dims);
    }
    Ok(())
}
