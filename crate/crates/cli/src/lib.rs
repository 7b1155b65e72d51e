//! Document formats and command implementations behind the `sigmacat`
//! binary.

pub mod doc;
pub mod run;
