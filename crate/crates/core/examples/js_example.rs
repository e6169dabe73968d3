//! The full experiment on the example ring, printed as JSON.
//!
//! cargo run --release --example js_example -- 13 4

use abdim::exactmath::FieldCtx;
use abdim::paperlab::{run_js_experiment, JSConfig};

fn main() -> abdim::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let p: u64 = args.first().map_or(7, |s| s.parse().expect("prime or 0"));
    let alpha: i64 = args.get(1).map_or(3, |s| s.parse().expect("integer α"));
    let field = if p == 0 {
        FieldCtx::Rationals
    } else {
        FieldCtx::prime(p)?
    };
    let report = run_js_experiment(&JSConfig::new(field, alpha)?.with_bound(12))?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).expect("serializable")
    );
    eprintln!("consistent: {}", report.is_consistent());
    Ok(())
}
