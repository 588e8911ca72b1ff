//! Statistics for Winter Olympics medal tables: binomial medal-share
//! inference with confidence curves, a likelihood-ratio test for equal
//! proportions, scoring-scheme rankings, per-capita figures and grouped
//! logistic regression, together with the historical tables they run on.

pub mod binom;
pub mod dataset;
mod error;
pub mod lrt;
pub mod ranking;
pub mod regress;
pub mod special;

pub use error::{Error, Result};
