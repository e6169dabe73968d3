//! Run a session file through the DSL interpreter.
//!
//! cargo run --example session_dsl -- examples/sessions/js_example.abd

use abdim::cli::{run_session, RunOptions};

fn main() {
    let path = std::env::args().nth(1).unwrap_or_else(|| {
        concat!(
            env!("CARGO_MANIFEST_DIR"),
            "/examples/sessions/js_example.abd"
        )
        .into()
    });
    let src = std::fs::read_to_string(&path).expect("readable session file");
    let out = run_session(&src, &RunOptions::default());
    print!("{}", out.text);
    for d in &out.diagnostics {
        eprintln!("{d}");
    }
    std::process::exit(out.exit_code);
}
