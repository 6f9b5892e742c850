//! Built-in modules and structures.
//!
//! `S_untwisted_bounded` and `S_twisted_bounded` are the bounded models of
//! the A∞-module of the 0-framed solid torus, untwisted and with Laurent
//! coefficients. The solid torus also has a one-generator model,
//! `n = m₃(n, ρ₂, ρ₁) = m₄(n, ρ₂, ρ₁₂, ρ₁) = ⋯`, with infinitely many
//! actions. It is not offered here; a finite truncation of it can be
//! entered as a module file flagged `unbounded`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{Basis, Idempotent, LaurentPoly};

use super::ainfty::{AInftyMod, Ring};
use super::typed::TypeD;
use super::StructureError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BuiltinName {
    SUntwistedBounded,
    STwistedBounded,
    Fig3TypeD,
}

impl BuiltinName {
    pub const ALL: [BuiltinName; 3] = [
        BuiltinName::SUntwistedBounded,
        BuiltinName::STwistedBounded,
        BuiltinName::Fig3TypeD,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuiltinName::SUntwistedBounded => "S_untwisted_bounded",
            BuiltinName::STwistedBounded => "S_twisted_bounded",
            BuiltinName::Fig3TypeD => "fig3_typeD",
        }
    }
}

impl fmt::Display for BuiltinName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BuiltinName {
    type Err = StructureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        BuiltinName::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| StructureError::UnknownBuiltin(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Builtin {
    Module(AInftyMod),
    TypeD(TypeD),
}

pub fn builtin(name: &str) -> Result<Builtin, StructureError> {
    Ok(match name.parse::<BuiltinName>()? {
        BuiltinName::SUntwistedBounded => Builtin::Module(solid_torus_module(false)),
        BuiltinName::STwistedBounded => Builtin::Module(solid_torus_module(true)),
        BuiltinName::Fig3TypeD => Builtin::TypeD(longitude_cycle(3)),
    })
}

/// Generators `n` (ι₁), `p`, `q` (ι₀) with `m₁(p) = q`, `m₂(p, ρ₁) = n`,
/// `m₂(n, ρ₂) = c·q`, `m₂(p, ρ₁₂) = c·q`, where `c = t` when twisted.
pub fn solid_torus_module(twisted: bool) -> AInftyMod {
    let one = LaurentPoly::one();
    let c = if twisted { LaurentPoly::t() } else { one.clone() };
    let ring = if twisted { Ring::Laurent } else { Ring::F2 };
    AInftyMod::from_named(
        ring,
        &[("n", Idempotent::I1), ("p", Idempotent::I0), ("q", Idempotent::I0)],
        &[
            ("p", &[], one.clone(), "q"),
            ("p", &[Basis::R1], one, "n"),
            ("n", &[Basis::R2], c.clone(), "q"),
            ("p", &[Basis::R12], c, "q"),
        ],
    )
    .expect("solid torus module is well formed")
}

/// `j` generators over ι₀ in a directed cycle of `ρ₁₂` arrows
/// `v1 → v2 → ⋯ → vj → v1`.
pub fn longitude_cycle(j: usize) -> TypeD {
    let names: Vec<String> = (1..=j).map(|i| format!("v{i}")).collect();
    let gens: Vec<(&str, Idempotent)> = names.iter().map(|n| (n.as_str(), Idempotent::I0)).collect();
    let arrows: Vec<(&str, Basis, &str)> = (0..j)
        .map(|i| (names[i].as_str(), Basis::R12, names[(i + 1) % j].as_str()))
        .collect();
    TypeD::from_named(&gens, &arrows).expect("cycle is well formed")
}
