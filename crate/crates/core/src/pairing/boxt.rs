use crate::algebra::{Basis, LaurentPoly};
use crate::structures::{check_ainfty, check_typed, nilpotence_degree, AInftyMod, Ring, TypeD};

use super::complex::{ChainComplex, Field};
use super::PairingError;

/// `X ⊠ P` for a right A∞-module `X` and a type D structure `P`.
///
/// The basis is every pair `x ⊗ y` with matching idempotents, named `x*y`.
/// The differential is
/// `∂(x ⊗ y) = Σ m_{k+1}(x, a₁, …, a_k) ⊗ y_k` over paths
/// `y → a₁ y₁ → ⋯ → a_k y_k` of `δ¹`-arrows. Only finitely many actions are
/// stored, so path enumeration stops as soon as the labels read so far are
/// not a prefix of any stored action.
///
/// When `X` is a truncation of an unbounded module, the sum is only correct
/// if `δᵏ = 0` for some `k` no longer than one past the longest stored action;
/// otherwise, or when `P` is unbounded too, the pairing is refused.
pub fn box_tensor(x: &AInftyMod, p: &TypeD) -> Result<ChainComplex, PairingError> {
    check_typed(p).map_err(PairingError::InvalidTypeD)?;
    check_ainfty(x).map_err(PairingError::InvalidAInfty)?;
    if x.declared_unbounded() {
        let Some(k) = nilpotence_degree(p) else {
            return Err(PairingError::BothUnbounded);
        };
        if k > x.max_inputs() + 1 {
            return Err(PairingError::TruncationTooShort {
                stored: x.max_inputs(),
                needed: k - 1,
            });
        }
    }

    let mut index = std::collections::HashMap::new();
    let mut basis = Vec::new();
    for (i, gx) in x.generators().iter().enumerate() {
        for (j, gy) in p.generators().iter().enumerate() {
            if gx.idem == gy.idem {
                index.insert((i, j), basis.len());
                basis.push(format!("{}*{}", gx.name, gy.name));
            }
        }
    }

    let mut terms: Vec<(usize, usize, LaurentPoly)> = Vec::new();
    for (&(i, j), &src) in &index {
        let mut stack: Vec<(Vec<Basis>, usize)> = vec![(Vec::new(), j)];
        while let Some((labels, y)) = stack.pop() {
            if let Some(out) = x.action(i, &labels) {
                for (z, c) in out {
                    let dst = index[&(*z, y)];
                    terms.push((src, dst, c.clone()));
                }
            }
            for a in p.arrows_from(y) {
                let mut next = labels.clone();
                next.push(a.label);
                if x.has_prefix(i, &next) {
                    stack.push((next, a.dst));
                }
            }
        }
    }
    let field = match x.ring() {
        Ring::F2 => Field::F2,
        Ring::Laurent => Field::RationalFn,
    };
    let complex = ChainComplex::new(field, basis, terms);
    complex.check_d_squared()?;
    Ok(complex)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Idempotent::{I0, I1};
    use crate::pairing::homology_dim;
    use crate::structures::{longitude_cycle, solid_torus_module, Generator};

    fn find(c: &ChainComplex, name: &str) -> usize {
        c.basis().iter().position(|b| b == name).unwrap()
    }

    #[test]
    fn fig3_complex_is_exact() {
        let c = box_tensor(&solid_torus_module(true), &longitude_cycle(3)).unwrap();
        assert_eq!(c.len(), 6);
        assert_eq!(c.entries().count(), 6);
        for i in 1..=3 {
            let next = i % 3 + 1;
            let p = find(&c, &format!("p*v{i}"));
            assert_eq!(c.coefficient(p, find(&c, &format!("q*v{i}"))), Some(&LaurentPoly::one()));
            assert_eq!(c.coefficient(p, find(&c, &format!("q*v{next}"))), Some(&LaurentPoly::t()));
        }
        assert_eq!(homology_dim(&c).unwrap(), 0);
        let untwisted = box_tensor(&solid_torus_module(false), &longitude_cycle(3)).unwrap();
        assert_eq!(untwisted, c.specialize_at_one());
        assert_eq!(homology_dim(&untwisted).unwrap(), 2);
    }

    #[test]
    fn arrowless_generator() {
        let p = TypeD::from_named(&[("x", I0)], &[]).unwrap();
        let c = box_tensor(&solid_torus_module(false), &p).unwrap();
        assert_eq!(c.basis(), ["p*x", "q*x"]);
        assert_eq!(c.dump(), "basis: p*x q*x\nd p*x 1 q*x\n");
    }

    #[test]
    fn truncated_module_against_unbounded_structure() {
        let n = [Generator { name: "n".into(), idem: I1 }];
        let one = LaurentPoly::one();
        let m = AInftyMod::new(
            Ring::F2,
            n.to_vec(),
            [(0, vec![Basis::R2, Basis::R1], one.clone(), 0)],
            true,
        )
        .unwrap();
        let cycle = TypeD::from_named(&[("y", I1)], &[("y", Basis::R23, "y")]).unwrap();
        assert_eq!(box_tensor(&m, &cycle), Err(PairingError::BothUnbounded));
        let chain = TypeD::from_named(
            &[("a", I1), ("b", I1), ("c", I1), ("d", I1)],
            &[("a", Basis::R23, "b"), ("b", Basis::R23, "c"), ("c", Basis::R23, "d")],
        )
        .unwrap();
        assert_eq!(
            box_tensor(&m, &chain),
            Err(PairingError::TruncationTooShort { stored: 2, needed: 3 })
        );
        let short = TypeD::from_named(&[("a", I1), ("b", I0), ("c", I1)], &[("a", Basis::R2, "b"), ("b", Basis::R1, "c")])
            .unwrap();
        let c = box_tensor(&m, &short).unwrap();
        assert_eq!(c.dump(), "basis: n*a n*c\nd n*a 1 n*c\n");
    }
}
