//! Cat-valued 2-functors and pseudofunctors, transformations of every
//! flavor, modifications, Hom categories, and ends and coends.

mod coend;
mod diagram;
mod ends;
mod hom;

pub use coend::{certify_coend, codicone_diagram, coend_eps, CoendResult};
pub use diagram::{CatDiagram, PseudoData};
pub use ends::{
    check_dicone, check_dicone_morphism, cotensor_diagram, end_eps, hom_diagram, postcompose_diagram, precompose_diagram, Dicone, EndCat,
};
pub use hom::{
    check_modification, check_transformation, flavor_inclusions, hom_eps, modifications_between, transformations, HomCat, Modification,
    Transformation,
};

use crate::two_cat::{Fin2Cat, WideSub};

/// Which structural 2-cells a transformation must have invertible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// Identities.
    Strict,
    /// All invertible.
    Pseudo,
    /// Invertible on the marked 1-cells.
    Sigma(WideSub),
    Lax,
}

impl Flavor {
    /// Whether the structural cell at `f: a → b` must be invertible.
    pub fn needs_iso(&self, base: &Fin2Cat, a: usize, b: usize, f: usize) -> bool {
        match self {
            Flavor::Strict | Flavor::Pseudo => true,
            Flavor::Sigma(s) => s.contains(base, a, b, f),
            Flavor::Lax => false,
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Flavor::Strict => "s",
            Flavor::Pseudo => "p",
            Flavor::Sigma(_) => "sigma",
            Flavor::Lax => "lax",
        }
    }

    /// The same flavor for the `op_dual` of the base.
    pub fn op(&self, base: &Fin2Cat) -> Flavor {
        match self {
            Flavor::Sigma(s) => Flavor::Sigma(s.op(base)),
            other => other.clone(),
        }
    }
}

/// Lax: `θ_f : Gf θ_A ⇒ θ_B Ff`. Op-lax: `θ_f : θ_B Ff ⇒ Gf θ_A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Lax,
    OpLax,
}
