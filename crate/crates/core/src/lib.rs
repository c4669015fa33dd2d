//! Stancu-type q-Baskakov operators and their Kantorovich variants.

// `!(x > 0.0)` style checks are deliberate: they also reject NaN
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analysis;
pub mod basis;
pub mod cli;
pub mod error;
pub mod functions;
pub mod moments;
pub mod operators;
pub mod qcalc;
mod quad;

pub use error::{Error, Result};
