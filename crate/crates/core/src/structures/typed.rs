use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::algebra::{Basis, Idempotent};

use super::StructureError;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub name: String,
    pub idem: Idempotent,
}

/// One term `label ⊗ dst` of `δ¹(src)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub src: usize,
    pub label: Basis,
    pub dst: usize,
}

/// A finitely generated type D structure over the torus algebra.
///
/// Generators carry an idempotent; `δ¹` is stored as a set of labelled
/// arrows. Construction only checks naming and indexing; algebraic validity
/// is reported by [`check_typed`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeD {
    gens: Vec<Generator>,
    arrows: BTreeSet<Arrow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    IdempotentLabel { src: String, label: Basis, dst: String },
    IdempotentMismatch { src: String, label: Basis, dst: String },
    StructureEquation { src: String, product: Basis, dst: String },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::IdempotentLabel { src, label, dst } => write!(
                f,
                "generator {src}: arrow {src} {label} {dst} is labelled by an idempotent"
            ),
            Violation::IdempotentMismatch { src, label, dst } => write!(
                f,
                "generator {src}: arrow {src} {label} {dst} does not respect idempotents"
            ),
            Violation::StructureEquation { src, product, dst } => write!(
                f,
                "generator {src}: structure equation fails, delta^2({src}) contains {product} {dst}"
            ),
        }
    }
}

/// Every violation found, in a deterministic order.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct ViolationReport(pub Vec<Violation>);

impl TypeD {
    pub fn new<I>(gens: Vec<Generator>, arrows: I) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = Arrow>,
    {
        let mut seen = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if seen.insert(g.name.clone(), i).is_some() {
                return Err(StructureError::DuplicateGenerator(g.name.clone()));
            }
        }
        let mut set = BTreeSet::new();
        for a in arrows {
            if a.src >= gens.len() || a.dst >= gens.len() {
                return Err(StructureError::BadIndex);
            }
            if !set.insert(a) {
                return Err(StructureError::DuplicateArrow(format!(
                    "{} {} {}",
                    gens[a.src].name, a.label, gens[a.dst].name
                )));
            }
        }
        Ok(TypeD { gens, arrows: set })
    }

    /// Convenience constructor from names.
    pub fn from_named(
        gens: &[(&str, Idempotent)],
        arrows: &[(&str, Basis, &str)],
    ) -> Result<Self, StructureError> {
        let gens: Vec<Generator> = gens
            .iter()
            .map(|(n, i)| Generator {
                name: n.to_string(),
                idem: *i,
            })
            .collect();
        let index = |n: &str| {
            gens.iter()
                .position(|g| g.name == n)
                .ok_or_else(|| StructureError::UnknownGenerator(n.to_string()))
        };
        let arrows = arrows
            .iter()
            .map(|(s, l, d)| {
                Ok(Arrow {
                    src: index(s)?,
                    label: *l,
                    dst: index(d)?,
                })
            })
            .collect::<Result<Vec<_>, StructureError>>()?;
        TypeD::new(gens, arrows)
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn arrows(&self) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows_from(&self, src: usize) -> impl Iterator<Item = &Arrow> {
        let lo = Arrow {
            src,
            label: Basis::I0,
            dst: 0,
        };
        self.arrows.range(lo..).take_while(move |a| a.src == src)
    }

    pub fn arrows_into(&self, dst: usize) -> impl Iterator<Item = &Arrow> {
        self.arrows.iter().filter(move |a| a.dst == dst)
    }

    pub fn count_with(&self, idem: Idempotent) -> usize {
        self.gens.iter().filter(|g| g.idem == idem).count()
    }

    /// Disjoint union; generator names of `other` are prefixed on clashes.
    pub fn disjoint_union(&self, other: &TypeD) -> TypeD {
        let mut gens = self.gens.clone();
        let names: BTreeSet<&str> = self.gens.iter().map(|g| g.name.as_str()).collect();
        let offset = gens.len();
        for g in &other.gens {
            let mut name = g.name.clone();
            while names.contains(name.as_str()) || gens.iter().any(|h| h.name == name) {
                name = format!("{name}'");
            }
            gens.push(Generator { name, idem: g.idem });
        }
        let arrows = self.arrows.iter().copied().chain(other.arrows.iter().map(|a| Arrow {
            src: a.src + offset,
            label: a.label,
            dst: a.dst + offset,
        }));
        TypeD::new(gens, arrows).expect("disjoint union of well-formed structures")
    }

    /// Applies a permutation and renaming of generators. `perm[i]` is the new
    /// index of old generator `i`.
    pub fn relabelled(&self, perm: &[usize], names: &[String]) -> TypeD {
        let mut gens = vec![None; self.gens.len()];
        for (i, g) in self.gens.iter().enumerate() {
            gens[perm[i]] = Some(Generator {
                name: names[perm[i]].clone(),
                idem: g.idem,
            });
        }
        let gens = gens.into_iter().map(Option::unwrap).collect();
        let arrows = self.arrows.iter().map(|a| Arrow {
            src: perm[a.src],
            label: a.label,
            dst: perm[a.dst],
        });
        TypeD::new(gens, arrows).expect("relabelling preserves well-formedness")
    }

    /// Structural equality up to renaming and reordering of generators.
    pub fn isomorphic(&self, other: &TypeD) -> bool {
        if self.len() != other.len() || self.arrows.len() != other.arrows.len() {
            return false;
        }
        let n = self.len();
        let mut map = vec![usize::MAX; n];
        let mut used = vec![false; n];
        self.extend_iso(other, 0, &mut map, &mut used)
    }

    fn extend_iso(&self, other: &TypeD, i: usize, map: &mut [usize], used: &mut [bool]) -> bool {
        if i == self.len() {
            return self
                .arrows
                .iter()
                .all(|a| other.arrows.contains(&Arrow { src: map[a.src], label: a.label, dst: map[a.dst] }));
        }
        for j in 0..other.len() {
            if used[j] || other.gens[j].idem != self.gens[i].idem {
                continue;
            }
            map[i] = j;
            used[j] = true;
            let consistent = self.arrows.iter().filter(|a| a.src <= i && a.dst <= i).all(|a| {
                other.arrows.contains(&Arrow {
                    src: map[a.src],
                    label: a.label,
                    dst: map[a.dst],
                })
            });
            if consistent && self.extend_iso(other, i + 1, map, used) {
                return true;
            }
            used[j] = false;
        }
        map[i] = usize::MAX;
        false
    }

    /// `δ²(x)` as a map from (product, target) to its F₂ coefficient.
    pub(crate) fn delta_squared(&self, x: usize) -> BTreeMap<(Basis, usize), bool> {
        let mut out: BTreeMap<(Basis, usize), bool> = BTreeMap::new();
        for a in self.arrows_from(x) {
            for b in self.arrows_from(a.dst) {
                if let Some(p) = a.label.mul(b.label) {
                    let e = out.entry((p, b.dst)).or_default();
                    *e = !*e;
                }
            }
        }
        out.retain(|_, v| *v);
        out
    }
}

/// Checks idempotent compatibility of every arrow and the structure
/// equation `(μ₂ ⊗ 1) ∘ (1 ⊗ δ¹) ∘ δ¹ = 0`.
pub fn check_typed(p: &TypeD) -> Result<(), ViolationReport> {
    let name = |i: usize| p.gens[i].name.clone();
    let mut violations = Vec::new();
    for a in &p.arrows {
        if a.label.is_idempotent() {
            violations.push(Violation::IdempotentLabel {
                src: name(a.src),
                label: a.label,
                dst: name(a.dst),
            });
        } else if a.label.left() != p.gens[a.src].idem || a.label.right() != p.gens[a.dst].idem {
            violations.push(Violation::IdempotentMismatch {
                src: name(a.src),
                label: a.label,
                dst: name(a.dst),
            });
        }
    }
    for x in 0..p.len() {
        for (product, dst) in p.delta_squared(x).into_keys() {
            violations.push(Violation::StructureEquation {
                src: name(x),
                product,
                dst: name(dst),
            });
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        Err(ViolationReport(violations))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Basis::{R1, R12, R2};
    use Idempotent::{I0, I1};

    #[test]
    fn idempotent_self_arrow_is_rejected() {
        let p = TypeD::from_named(&[("x", I0)], &[("x", Basis::I0, "x")]).unwrap();
        let report = check_typed(&p).unwrap_err();
        assert!(matches!(&report.0[0], Violation::IdempotentLabel { src, .. } if src == "x"));
        assert!(report.to_string().contains("generator x"));
    }

    #[test]
    fn rho12_self_loop_is_valid() {
        let p = TypeD::from_named(&[("x", I0)], &[("x", R12, "x")]).unwrap();
        assert_eq!(check_typed(&p), Ok(()));
    }

    #[test]
    fn composable_pair_breaks_structure_equation() {
        let p = TypeD::from_named(&[("x", I0), ("y", I1), ("z", I0)], &[("x", R1, "y"), ("y", R2, "z")])
            .unwrap();
        let report = check_typed(&p).unwrap_err();
        assert_eq!(
            report.0,
            vec![Violation::StructureEquation {
                src: "x".into(),
                product: R12,
                dst: "z".into()
            }]
        );
    }

    #[test]
    fn mismatched_idempotent_is_reported() {
        let p = TypeD::from_named(&[("x", I1), ("y", I1)], &[("x", R1, "y")]).unwrap();
        assert!(matches!(check_typed(&p).unwrap_err().0[0], Violation::IdempotentMismatch { .. }));
    }

    #[test]
    fn two_paths_cancel_mod_two() {
        // x -r1-> a -r2-> z and x -r1-> b -r2-> z contribute r12⊗z twice
        let p = TypeD::from_named(
            &[("x", I0), ("a", I1), ("b", I1), ("z", I0)],
            &[("x", R1, "a"), ("x", R1, "b"), ("a", R2, "z"), ("b", R2, "z")],
        )
        .unwrap();
        assert_eq!(check_typed(&p), Ok(()));
    }

    #[test]
    fn duplicate_names_and_arrows() {
        assert!(TypeD::from_named(&[("x", I0), ("x", I1)], &[]).is_err());
        assert!(TypeD::from_named(&[("x", I0)], &[("x", R12, "x"), ("x", R12, "x")]).is_err());
        assert!(TypeD::from_named(&[("x", I0)], &[("x", R12, "y")]).is_err());
    }

    #[test]
    fn isomorphism_ignores_names() {
        let a = TypeD::from_named(&[("a", I0), ("b", I0)], &[("a", R12, "b")]).unwrap();
        let b = TypeD::from_named(&[("u", I0), ("v", I0)], &[("v", R12, "u")]).unwrap();
        let c = TypeD::from_named(&[("u", I0), ("v", I0)], &[("v", R12, "v")]).unwrap();
        assert!(a.isomorphic(&b));
        assert!(!a.isomorphic(&c));
    }
}
