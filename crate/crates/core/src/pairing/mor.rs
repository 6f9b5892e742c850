use std::collections::HashMap;

use crate::algebra::{Basis, LaurentPoly};
use crate::structures::{check_typed, TypeD};

use super::complex::{ChainComplex, Field};
use super::PairingError;

/// The morphism complex `Mor(P₁, P₂)` over F₂.
///
/// The basis is every triple `(x₁, a, x₂)` with `a` a basis element of the
/// algebra and `ι(x₁)·a·ι(x₂) = a`, named `x1:a:x2`; it stands for the map
/// `x₁ ↦ a ⊗ x₂`. The differential is `f ↦ δ₂ ∘ f + f ∘ δ₁`:
/// `d(x₁, a, x₂) = Σ_{x₂ → b z} (x₁, ab, z) + Σ_{w → b x₁} (w, ba, x₂)`.
pub fn mor_pairing(p1: &TypeD, p2: &TypeD) -> Result<ChainComplex, PairingError> {
    check_typed(p1).map_err(PairingError::InvalidTypeD)?;
    check_typed(p2).map_err(PairingError::InvalidTypeD)?;
    let mut index: HashMap<(usize, Basis, usize), usize> = HashMap::new();
    let mut keys = Vec::new();
    let mut basis = Vec::new();
    for (i, g1) in p1.generators().iter().enumerate() {
        for a in Basis::ALL {
            if a.left() != g1.idem {
                continue;
            }
            for (j, g2) in p2.generators().iter().enumerate() {
                if a.right() == g2.idem {
                    index.insert((i, a, j), basis.len());
                    keys.push((i, a, j));
                    basis.push(format!("{}:{}:{}", g1.name, a, g2.name));
                }
            }
        }
    }
    let mut terms = Vec::new();
    for (src, &(x1, a, x2)) in keys.iter().enumerate() {
        for arrow in p2.arrows_from(x2) {
            if let Some(ab) = a.mul(arrow.label) {
                terms.push((src, index[&(x1, ab, arrow.dst)], LaurentPoly::one()));
            }
        }
        for arrow in p1.arrows_into(x1) {
            if let Some(ba) = arrow.label.mul(a) {
                terms.push((src, index[&(arrow.src, ba, x2)], LaurentPoly::one()));
            }
        }
    }
    let complex = ChainComplex::new(Field::F2, basis, terms);
    complex.check_d_squared()?;
    Ok(complex)
}
