//! Exact area statistics of lattice paths: area enumerators by dynamic
//! programming, closed forms for their q-derivatives in a quadratic function
//! field, and the power moments and growth numerics built on them.

pub mod derk;
pub mod dp;
pub mod error;
pub mod kernel;
pub mod moments;
pub mod oeis;
pub mod parse;
pub mod quad;
pub mod series;
pub mod steps;

pub use error::{Error, Result};
