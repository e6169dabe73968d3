//! Exact homological algebra over finite-dimensional commutative local
//! algebras: Gröbner bases, module realizations, minimal free resolutions,
//! Ext, total reflexivity and AB-dimension verdicts.

pub mod algebra;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod fpmodule;
pub mod groebner;
pub mod homdim;
pub mod paperlab;
pub mod resolution;

pub use error::{Error, Result};
