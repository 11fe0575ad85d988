//! Exact toolkit for left-symmetric algebras given by structure constants.

pub mod error;
pub mod exact;
pub mod matrix;
pub mod algebra;
pub mod lie;
pub mod cocycle;
pub mod props;
pub mod constructions;
pub mod catalog;
pub mod iso;
pub mod format;

pub use error::{Error, Result};
