//! Finite 2-categories and σ-limits, σ-colimits, σ-filteredness and
//! σ-flatness of diagrams of finite categories.

pub mod budget;
pub mod colimits;
pub mod elements;
pub mod error;
pub mod filteredness;
pub mod fincat;
pub mod flatness;
pub mod fixtures;
pub mod report;
pub mod transforms;
pub mod two_cat;

pub use error::{Error, Result};
