//! Isomorphism tests with verified witnesses.

use abdim::exactmath::FieldCtx;
use abdim::fpmodule::{dual, is_isomorphic, syzygy, verify_witness, IsoVerdict, DEFAULT_TRIALS};
use abdim::paperlab::{js_module, js_ring, JSConfig};

fn main() -> abdim::Result<()> {
    let cfg = JSConfig::new(FieldCtx::prime(7)?, 3)?;
    let alg = js_ring(&cfg)?;
    let m = js_module(&cfg, &alg);

    let ddm = dual(&dual(&m));
    match is_isomorphic(&m, &ddm, 1, DEFAULT_TRIALS)? {
        IsoVerdict::Yes(phi) => println!(
            "M ≅ M**, witness verified: {}",
            verify_witness(&m, &ddm, &phi)
        ),
        other => println!("M vs M**: {other:?}"),
    }
    for p in 1..=6 {
        let v = is_isomorphic(&syzygy(&m, p), &m, 1, DEFAULT_TRIALS)?;
        let text = match v {
            IsoVerdict::Yes(_) => "isomorphic".to_string(),
            IsoVerdict::No(reason) => format!("not isomorphic ({reason})"),
            IsoVerdict::Unknown => "undecided".to_string(),
        };
        println!("Ω^{p} M vs M: {text}");
    }
    Ok(())
}
