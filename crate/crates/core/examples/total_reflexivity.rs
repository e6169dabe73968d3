//! G-dimension zero certificates, and what happens for the residue field
//! over a non-Gorenstein ring.

use abdim::exactmath::FieldCtx;
use abdim::fpmodule::FPModule;
use abdim::homdim::{total_reflexivity, GdimVerdict, HomDimConfig};
use abdim::paperlab::{js_module, js_ring, JSConfig};

fn show(name: &str, v: &GdimVerdict) {
    match v {
        GdimVerdict::Zero { certificate } => println!(
            "{name}: G-dim 0 (Ext(M,R) {:?}, Ext(M*,R) {:?}, biduality witness verified {})",
            certificate.module_ext, certificate.dual_ext, certificate.biduality_witness_verified
        ),
        GdimVerdict::MinusInfinity => println!("{name}: zero module"),
        GdimVerdict::Unknown {
            clause,
            witness_index,
            detail,
        } => println!("{name}: not certified, {clause:?} fails at {witness_index:?} ({detail})"),
    }
}

fn main() -> abdim::Result<()> {
    let hd = HomDimConfig::default();
    for (field, alpha) in [(FieldCtx::prime(7)?, 3), (FieldCtx::Rationals, 2)] {
        let cfg = JSConfig::new(field, alpha)?;
        let alg = js_ring(&cfg)?;
        show(
            &format!("M over {field}"),
            &total_reflexivity(&js_module(&cfg, &alg), &hd)?,
        );
        show(
            &format!("k over {field}"),
            &total_reflexivity(&FPModule::residue_field(alg), &hd)?,
        );
    }
    Ok(())
}
