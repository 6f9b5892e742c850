//! Boundedness certificates.
//!
//! A type D structure is bounded when some iterate `δᵏ` vanishes. Writing
//! `δ¹ = Σ_a a ⊗ N_a` with one F₂ matrix per chord, `δᵏ` is the sum of
//! `a₁ ⊗ ⋯ ⊗ a_k ⊗ N_{a_k}⋯N_{a₁}` over label words, and distinct words are
//! independent tensors. So `δᵏ = 0` exactly when the span `W_k` of all
//! length-k products vanishes, and `W_{k+1} = span{N_a M : M ∈ W_k}` keeps
//! the computation polynomial even when paths are exponential in number.

use crate::algebra::Basis;

use super::ainfty::AInftyMod;
use super::typed::{check_typed, TypeD};
use super::StructureError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Bounded,
    Unbounded,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    /// Smallest `k` with `δᵏ = 0`; `None` if no `k ≤ generators + 1` works.
    NilpotenceDegree(Option<usize>),
    /// Longest stored action input for an A∞-module.
    MaxActionLength(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundednessCertificate {
    pub verdict: Verdict,
    pub witness: Witness,
}

impl BoundednessCertificate {
    pub fn is_bounded(&self) -> bool {
        self.verdict == Verdict::Bounded
    }
}

/// Object accepted by [`is_bounded`].
pub enum Pairable<'a> {
    TypeD(&'a TypeD),
    AInfty(&'a AInftyMod),
}

pub fn is_bounded(obj: Pairable<'_>) -> Result<BoundednessCertificate, StructureError> {
    match obj {
        Pairable::TypeD(p) => {
            check_typed(p).map_err(StructureError::InvalidTypeD)?;
            let k = nilpotence_degree(p);
            Ok(BoundednessCertificate {
                verdict: if k.is_some() {
                    Verdict::Bounded
                } else {
                    Verdict::Unbounded
                },
                witness: Witness::NilpotenceDegree(k),
            })
        }
        Pairable::AInfty(m) => {
            super::ainfty::check_ainfty(m).map_err(StructureError::InvalidAInfty)?;
            Ok(BoundednessCertificate {
                verdict: if m.declared_unbounded() {
                    Verdict::Unbounded
                } else {
                    Verdict::Bounded
                },
                witness: Witness::MaxActionLength(m.max_inputs()),
            })
        }
    }
}

/// Bit-packed n×n F₂ matrix, flattened row-major.
#[derive(Clone, PartialEq, Eq)]
struct Flat {
    n: usize,
    bits: Vec<u64>,
}

impl Flat {
    fn zeros(n: usize) -> Self {
        Flat {
            n,
            bits: vec![0; (n * n).div_ceil(64).max(1)],
        }
    }

    fn get(&self, i: usize, j: usize) -> bool {
        let k = i * self.n + j;
        (self.bits[k / 64] >> (k % 64)) & 1 == 1
    }

    fn flip(&mut self, i: usize, j: usize) {
        let k = i * self.n + j;
        self.bits[k / 64] ^= 1 << (k % 64);
    }

    fn is_zero(&self) -> bool {
        self.bits.iter().all(|w| *w == 0)
    }

    fn mul(&self, rhs: &Flat) -> Flat {
        let n = self.n;
        let mut out = Flat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                if self.get(i, k) {
                    for j in 0..n {
                        if rhs.get(k, j) {
                            out.flip(i, j);
                        }
                    }
                }
            }
        }
        out
    }

    fn leading_bit(&self) -> Option<usize> {
        self.bits
            .iter()
            .position(|w| *w != 0)
            .map(|i| i * 64 + self.bits[i].trailing_zeros() as usize)
    }

    fn xor(&mut self, rhs: &Flat) {
        for (a, b) in self.bits.iter_mut().zip(&rhs.bits) {
            *a ^= b;
        }
    }
}

/// Reduced echelon basis of a subspace of flattened matrices.
#[derive(Default)]
struct Span(Vec<Flat>);

impl Span {
    fn insert(&mut self, mut v: Flat) {
        for b in &self.0 {
            let lead = b.leading_bit().expect("basis vectors are nonzero");
            if (v.bits[lead / 64] >> (lead % 64)) & 1 == 1 {
                v.xor(b);
            }
        }
        if !v.is_zero() {
            let lead = v.leading_bit().unwrap();
            for b in self.0.iter_mut() {
                if (b.bits[lead / 64] >> (lead % 64)) & 1 == 1 {
                    b.xor(&v);
                }
            }
            self.0.push(v);
        }
    }
}

/// Smallest `k ≥ 1` with `δᵏ = 0`, searched up to `generators + 1`.
pub fn nilpotence_degree(p: &TypeD) -> Option<usize> {
    let n = p.len();
    let mut labels: Vec<Flat> = Vec::new();
    for chord in Basis::CHORDS {
        let mut m = Flat::zeros(n);
        let mut any = false;
        for a in p.arrows().filter(|a| a.label == chord) {
            m.flip(a.dst, a.src);
            any = true;
        }
        if any {
            labels.push(m);
        }
    }
    let mut current = Span::default();
    for m in &labels {
        current.insert(m.clone());
    }
    for k in 1..=n + 1 {
        if current.0.is_empty() {
            return Some(k);
        }
        let mut next = Span::default();
        for b in &current.0 {
            for m in &labels {
                next.insert(m.mul(b));
            }
        }
        current = next;
    }
    None
}
