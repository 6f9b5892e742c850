//! Type D structures and A∞-modules over the torus algebra.

mod ainfty;
mod bounded;
mod builtin;
mod random;
mod typed;

pub use ainfty::{
    check_ainfty, AInftyMod, AInftyReport, AInftyViolation, ActionKey, ActionValue, Ring,
};
pub use bounded::{
    is_bounded, nilpotence_degree, BoundednessCertificate, Pairable, Verdict, Witness,
};
pub use builtin::{builtin, longitude_cycle, solid_torus_module, Builtin, BuiltinName};
pub use random::{random_typed, IdempotentPolicy};
pub use typed::{check_typed, Arrow, Generator, TypeD, Violation, ViolationReport};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum StructureError {
    #[error("duplicate generator `{0}`")]
    DuplicateGenerator(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("duplicate arrow `{0}`")]
    DuplicateArrow(String),
    #[error("generator index out of range")]
    BadIndex,
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
    #[error("random structures need at least one generator")]
    EmptyRandom,
    #[error("invalid type D structure: {0}")]
    InvalidTypeD(ViolationReport),
    #[error("invalid A-infinity module: {0}")]
    InvalidAInfty(AInftyReport),
}
