//! The torus algebra: eight basis elements over F₂, two orthogonal
//! idempotents and six Reeb chords.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

/// One of the two orthogonal idempotents of the torus algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Idempotent {
    I0,
    I1,
}

impl Idempotent {
    pub fn as_basis(self) -> Basis {
        match self {
            Idempotent::I0 => Basis::I0,
            Idempotent::I1 => Basis::I1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Idempotent::I0 => "i0",
            Idempotent::I1 => "i1",
        }
    }
}

impl fmt::Display for Idempotent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Idempotent {
    type Err = UnknownSymbol;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "i0" => Ok(Idempotent::I0),
            "i1" => Ok(Idempotent::I1),
            _ => Err(UnknownSymbol(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown algebra symbol `{0}`")]
pub struct UnknownSymbol(pub String);

/// Basis symbols of the torus algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    I0,
    I1,
    R1,
    R2,
    R3,
    R12,
    R23,
    R123,
}

impl Basis {
    pub const ALL: [Basis; 8] = [
        Basis::I0,
        Basis::I1,
        Basis::R1,
        Basis::R2,
        Basis::R3,
        Basis::R12,
        Basis::R23,
        Basis::R123,
    ];

    /// The six Reeb chords, i.e. every basis element except the idempotents.
    pub const CHORDS: [Basis; 6] = [
        Basis::R1,
        Basis::R2,
        Basis::R3,
        Basis::R12,
        Basis::R23,
        Basis::R123,
    ];

    fn index(self) -> u8 {
        self as u8
    }

    pub fn is_idempotent(self) -> bool {
        matches!(self, Basis::I0 | Basis::I1)
    }

    /// `ι` with `ι · self = self`.
    pub fn left(self) -> Idempotent {
        use Basis::*;
        match self {
            I0 | R1 | R3 | R12 | R123 => Idempotent::I0,
            I1 | R2 | R23 => Idempotent::I1,
        }
    }

    /// `ι` with `self · ι = self`.
    pub fn right(self) -> Idempotent {
        use Basis::*;
        match self {
            I0 | R2 | R12 => Idempotent::I0,
            I1 | R1 | R3 | R23 | R123 => Idempotent::I1,
        }
    }

    /// Product of two basis symbols; `None` means zero.
    pub fn mul(self, rhs: Basis) -> Option<Basis> {
        use Basis::*;
        if self.right() != rhs.left() {
            return None;
        }
        match (self, rhs) {
            (I0 | I1, b) => Some(b),
            (a, I0 | I1) => Some(a),
            (R1, R2) => Some(R12),
            (R2, R3) => Some(R23),
            (R1, R23) => Some(R123),
            (R12, R3) => Some(R123),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        use Basis::*;
        match self {
            I0 => "i0",
            I1 => "i1",
            R1 => "r1",
            R2 => "r2",
            R3 => "r3",
            R12 => "r12",
            R23 => "r23",
            R123 => "r123",
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = UnknownSymbol;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| UnknownSymbol(s.to_string()))
    }
}

/// An F₂-linear combination of basis symbols, stored as a bit mask.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct AlgebraElement(u8);

impl AlgebraElement {
    pub const ZERO: AlgebraElement = AlgebraElement(0);

    pub fn basis(b: Basis) -> Self {
        AlgebraElement(1 << b.index())
    }

    pub fn one() -> Self {
        Self::basis(Basis::I0) + Self::basis(Basis::I1)
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn contains(self, b: Basis) -> bool {
        self.0 & (1 << b.index()) != 0
    }

    pub fn terms(self) -> impl Iterator<Item = Basis> {
        Basis::ALL.into_iter().filter(move |b| self.contains(*b))
    }
}

impl From<Basis> for AlgebraElement {
    fn from(b: Basis) -> Self {
        Self::basis(b)
    }
}

impl Add for AlgebraElement {
    type Output = AlgebraElement;

    fn add(self, rhs: Self) -> Self {
        AlgebraElement(self.0 ^ rhs.0)
    }
}

impl Mul for AlgebraElement {
    type Output = AlgebraElement;

    fn mul(self, rhs: Self) -> Self {
        alg_mul(self, rhs)
    }
}

/// Bilinear extension of the basis multiplication table.
pub fn alg_mul(a: AlgebraElement, b: AlgebraElement) -> AlgebraElement {
    let mut out = AlgebraElement::ZERO;
    for x in a.terms() {
        for y in b.terms() {
            if let Some(z) = x.mul(y) {
                out = out + z.into();
            }
        }
    }
    out
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let names: Vec<_> = self.terms().map(Basis::name).collect();
        f.write_str(&names.join("+"))
    }
}
