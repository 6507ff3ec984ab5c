//! Combinatorial crystals of types `D_n` and `C_2`.
//!
//! The library models crystal graphs by tableaux and the signature rule, and
//! builds the affine crystals `B^{2,s}` of type `D_n^{(1)}` from their classical
//! components together with the `σ` automorphism that defines the zero arrows.
//!
//! Letters are nonzero integers (`-i` is `ī`); tableaux are lists of rows.

pub mod affine;
pub mod branching;
pub mod c2;
pub mod cartan;
pub mod dtableau;
pub mod graph;
pub mod letter;
pub mod plactic;
pub mod signature;
pub mod stembridge;
pub mod tableau;
pub mod weyl;
pub mod words;

pub use cartan::CartanData;
pub use graph::CrystalGraph;
pub use letter::{Alphabet, Family, Letter};
pub use signature::{Dir, Signature};
pub use tableau::Tableau;

/// Errors reported by the library.
#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CrystalError {
    #[error("vertex cap of {0} exceeded")]
    CapExceeded(usize),
    #[error("vertex is not in the graph")]
    UnknownVertex,
    #[error("invalid shape: {0}")]
    Shape(String),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("inconsistent structure: {0}")]
    Inconsistent(String),
    #[error("malformed document: {0}")]
    Format(String),
}
