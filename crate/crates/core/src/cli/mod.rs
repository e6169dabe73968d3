//! A small session language for defining one ring, modules over it, and
//! commands; plus its executor with text and JSON output.
//!
//! ```text
//! ring R = GF(7)[x1, x2, x3, x4] / (3*x1*x3 + x2*x3, x1*x4 + x2*x4, x3*x4, x1^2, x2^2, x3^2, x4^2)
//! module M = coker [[x1, 3*x3], [x4, x2]]
//! resolve M 10; betti M
//! ext M M 0 20
//! ```

pub mod ast;
mod exec;
mod lexer;
mod parser;
mod printer;

use std::fmt;

pub use ast::Session;
pub use exec::{execute, run_session, RunOptions, RunOutcome, SCHEMA_VERSION};
pub use parser::parse_session;

pub const EXIT_OK: i32 = 0;
pub const EXIT_COMPUTATION: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Diagnostic {
    Syntax {
        line: usize,
        col: usize,
        expected: Vec<String>,
        found: String,
    },
    /// `statement` is the 0-based index of the offending statement.
    Semantic { statement: usize, message: String },
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Diagnostic::Syntax {
                line,
                col,
                expected,
                found,
            } => {
                let exp = match expected.as_slice() {
                    [one] => one.clone(),
                    many => format!("one of {}", many.join(", ")),
                };
                write!(
                    f,
                    "syntax error at line {line}, column {col}: expected {exp}, found {found}"
                )
            }
            Diagnostic::Semantic { statement, message } => {
                write!(f, "error in statement {}: {message}", statement + 1)
            }
        }
    }
}

impl std::error::Error for Diagnostic {}

#[cfg(test)]
mod tests;
