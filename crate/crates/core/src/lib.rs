//! Exact bordered Floer computations over the torus algebra.
//!
//! The crate computes with type D structures and A∞-modules over the torus
//! algebra, pairs them by box tensor product or morphism complexes, and
//! decides whether a rational homology solid torus is a Heegaard Floer
//! homology solid torus (HFST) from its bordered invariant, its immersed
//! curve invariant, or (for Seifert fibered spaces) its Seifert invariants.
//!
//! Inputs are always framed by the rational longitude: λ is the horizontal
//! direction, slope 0.

pub mod algebra;
pub mod cli;
pub mod curves;
pub mod format;
pub mod hfst;
pub mod pairing;
pub mod seifert;
pub mod structures;
