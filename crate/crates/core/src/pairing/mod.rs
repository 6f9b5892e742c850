//! Pairing: box tensor products, morphism complexes and their homology.

mod boxt;
mod complex;
mod mor;

pub use boxt::box_tensor;
pub use complex::{homology_dim, ChainComplex, Field};
pub use mor::mor_pairing;

use crate::structures::{AInftyReport, ViolationReport};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum PairingError {
    #[error("refusing to pair: one of the A-infinity module or the type D structure must be bounded")]
    BothUnbounded,
    #[error(
        "the module is a truncation with actions of length at most {stored}, \
         but the type D structure has paths of length {needed}"
    )]
    TruncationTooShort { stored: usize, needed: usize },
    #[error("invalid type D structure: {0}")]
    InvalidTypeD(ViolationReport),
    #[error("invalid A-infinity module: {0}")]
    InvalidAInfty(AInftyReport),
    #[error("differential does not square to zero: d^2({src}) contains {dst}")]
    DSquaredNonzero { src: String, dst: String },
}
