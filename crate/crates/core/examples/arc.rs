//! Self-Ext vanishing checks on random modules over k[x,y]/(x^2,y^2).

use std::sync::Arc;

use abdim::algebra::build_algebra;
use abdim::exactmath::FieldCtx;
use abdim::groebner::Poly;
use abdim::homdim::{arc_check, HomDimConfig};
use abdim::paperlab::sample_modules;

fn main() -> abdim::Result<()> {
    let f5 = FieldCtx::prime(5)?;
    let x = |i| Poly::var(f5, 2, i);
    let alg = Arc::new(build_algebra(
        &["x".into(), "y".into()],
        &[x(0).pow(2), x(1).pow(2)],
    )?);
    let cfg = HomDimConfig::default();
    for (i, m) in sample_modules(&alg, 3, 8, 3, 3)?.iter().enumerate() {
        let r = arc_check(m, &cfg)?;
        println!(
            "#{i}: dim {:>2}, free {:<5}, first i with Ext^i(M,M) ≠ 0: {:?}, dim Ext^1(M,ΩM) = {}",
            m.kdim(),
            r.free,
            r.self_ext_first_nonzero,
            r.syzygy_ext1
        );
    }
    Ok(())
}
