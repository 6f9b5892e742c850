use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::algebra::{Basis, Idempotent, LaurentPoly};

use super::typed::Generator;
use super::StructureError;

/// Coefficient ring of an A∞-module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Ring {
    F2,
    Laurent,
}

impl Ring {
    pub fn name(self) -> &'static str {
        match self {
            Ring::F2 => "F2",
            Ring::Laurent => "laurent",
        }
    }
}

/// Output of one higher action: target generator index ↦ coefficient.
pub type ActionValue = BTreeMap<usize, LaurentPoly>;

/// Key of a stored action `m_{k+1}(x, a₁, …, a_k)`.
pub type ActionKey = (usize, Vec<Basis>);

/// A finitely presented right A∞-module over the torus algebra.
///
/// Only finitely many actions are stored. A module flagged
/// `declared_unbounded` is a finite truncation of an infinite action family;
/// it can be paired only against a type D structure whose iterated
/// differential dies before the truncation length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AInftyMod {
    ring: Ring,
    gens: Vec<Generator>,
    actions: BTreeMap<ActionKey, ActionValue>,
    declared_unbounded: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AInftyViolation {
    IdempotentInput { src: String, labels: Vec<Basis> },
    IdempotentMismatch { src: String, labels: Vec<Basis>, dst: String },
    CoefficientOutsideRing { src: String, labels: Vec<Basis>, coeff: LaurentPoly },
    Relation { src: String, labels: Vec<Basis>, dst: String, value: LaurentPoly },
}

fn seq(labels: &[Basis]) -> String {
    let names: Vec<_> = labels.iter().map(|b| b.name()).collect();
    format!("[{}]", names.join(" "))
}

impl fmt::Display for AInftyViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AInftyViolation::IdempotentInput { src, labels } => {
                write!(f, "action on {src} {}: idempotent inputs are implicit", seq(labels))
            }
            AInftyViolation::IdempotentMismatch { src, labels, dst } => write!(
                f,
                "action on {src} {} -> {dst} does not respect idempotents",
                seq(labels)
            ),
            AInftyViolation::CoefficientOutsideRing { src, labels, coeff } => write!(
                f,
                "action on {src} {} has coefficient {coeff}, not in F2",
                seq(labels)
            ),
            AInftyViolation::Relation { src, labels, dst, value } => write!(
                f,
                "A-infinity relation on {src} {} fails: coefficient {value} on {dst}",
                seq(labels)
            ),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
pub struct AInftyReport(pub Vec<AInftyViolation>);

impl AInftyMod {
    /// Terms with the same key are summed; zero sums are dropped.
    pub fn new<I>(
        ring: Ring,
        gens: Vec<Generator>,
        actions: I,
        declared_unbounded: bool,
    ) -> Result<Self, StructureError>
    where
        I: IntoIterator<Item = (usize, Vec<Basis>, LaurentPoly, usize)>,
    {
        let mut seen = HashMap::new();
        for (i, g) in gens.iter().enumerate() {
            if seen.insert(g.name.clone(), i).is_some() {
                return Err(StructureError::DuplicateGenerator(g.name.clone()));
            }
        }
        let mut map: BTreeMap<ActionKey, ActionValue> = BTreeMap::new();
        for (src, labels, coeff, dst) in actions {
            if src >= gens.len() || dst >= gens.len() {
                return Err(StructureError::BadIndex);
            }
            let slot = map.entry((src, labels)).or_default();
            let sum = slot.get(&dst).map_or(coeff.clone(), |c| c + &coeff);
            if sum.is_zero() {
                slot.remove(&dst);
            } else {
                slot.insert(dst, sum);
            }
        }
        map.retain(|_, v| !v.is_empty());
        Ok(AInftyMod {
            ring,
            gens,
            actions: map,
            declared_unbounded,
        })
    }

    pub fn from_named(
        ring: Ring,
        gens: &[(&str, Idempotent)],
        actions: &[(&str, &[Basis], LaurentPoly, &str)],
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
        let actions = actions
            .iter()
            .map(|(s, l, c, d)| Ok((index(s)?, l.to_vec(), c.clone(), index(d)?)))
            .collect::<Result<Vec<_>, StructureError>>()?;
        AInftyMod::new(ring, gens, actions, false)
    }

    pub fn ring(&self) -> Ring {
        self.ring
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

    pub fn declared_unbounded(&self) -> bool {
        self.declared_unbounded
    }

    pub fn actions(&self) -> impl Iterator<Item = (&ActionKey, &ActionValue)> {
        self.actions.iter()
    }

    pub fn action_count(&self) -> usize {
        self.actions.values().map(BTreeMap::len).sum()
    }

    pub fn action(&self, x: usize, labels: &[Basis]) -> Option<&ActionValue> {
        self.actions.get(&(x, labels.to_vec()))
    }

    /// Longest stored algebra input sequence.
    pub fn max_inputs(&self) -> usize {
        self.actions.keys().map(|(_, l)| l.len()).max().unwrap_or(0)
    }

    /// True when some stored action on `x` begins with `prefix`.
    pub(crate) fn has_prefix(&self, x: usize, prefix: &[Basis]) -> bool {
        self.actions
            .range((x, prefix.to_vec())..)
            .next()
            .is_some_and(|((y, l), _)| *y == x && l.starts_with(prefix))
    }

    /// Specialization t ↦ 1, giving a module over F₂.
    pub fn specialize_at_one(&self) -> AInftyMod {
        let actions = self.actions.iter().flat_map(|((x, labels), out)| {
            out.iter().filter(|(_, c)| c.eval_one()).map(move |(y, _)| {
                (*x, labels.clone(), LaurentPoly::one(), *y)
            })
        });
        AInftyMod::new(Ring::F2, self.gens.clone(), actions, self.declared_unbounded)
            .expect("specialization preserves well-formedness")
    }
}

/// Checks idempotent compatibility, the ring of coefficients, and the A∞
/// relations for every input sequence up to two longer than the longest
/// stored action. Longer relations only involve unstored (zero) actions and
/// products of chords, so they hold trivially. For a module flagged
/// `declared_unbounded` the unstored actions are not zero, so relations are
/// checked only up to the longest stored action.
pub fn check_ainfty(m: &AInftyMod) -> Result<(), AInftyReport> {
    let name = |i: usize| m.gens[i].name.clone();
    let mut violations = Vec::new();
    for ((x, labels), out) in &m.actions {
        if labels.iter().any(|b| b.is_idempotent()) {
            violations.push(AInftyViolation::IdempotentInput {
                src: name(*x),
                labels: labels.clone(),
            });
            continue;
        }
        let composable = labels.windows(2).all(|w| w[0].right() == w[1].left());
        let first_ok = labels.first().is_none_or(|a| a.left() == m.gens[*x].idem);
        let end_idem = labels.last().map_or(m.gens[*x].idem, |a| a.right());
        for (y, c) in out {
            if !composable || !first_ok || m.gens[*y].idem != end_idem {
                violations.push(AInftyViolation::IdempotentMismatch {
                    src: name(*x),
                    labels: labels.clone(),
                    dst: name(*y),
                });
            }
            if m.ring == Ring::F2 && !c.is_constant() {
                violations.push(AInftyViolation::CoefficientOutsideRing {
                    src: name(*x),
                    labels: labels.clone(),
                    coeff: c.clone(),
                });
            }
        }
    }
    if !violations.is_empty() {
        return Err(AInftyReport(violations));
    }

    let max_len = if m.declared_unbounded {
        m.max_inputs()
    } else {
        m.max_inputs() + 2
    };
    for x in 0..m.len() {
        let mut stack: Vec<Vec<Basis>> = vec![Vec::new()];
        while let Some(labels) = stack.pop() {
            for (y, value) in relation(m, x, &labels) {
                violations.push(AInftyViolation::Relation {
                    src: name(x),
                    labels: labels.clone(),
                    dst: name(y),
                    value,
                });
            }
            if labels.len() < max_len {
                let idem = labels.last().map_or(m.gens[x].idem, |a| a.right());
                for a in Basis::CHORDS.into_iter().filter(|a| a.left() == idem) {
                    let mut next = labels.clone();
                    next.push(a);
                    stack.push(next);
                }
            }
        }
    }
    if violations.is_empty() {
        Ok(())
    } else {
        violations.sort_by_key(|v| v.to_string());
        Err(AInftyReport(violations))
    }
}

fn accumulate(acc: &mut BTreeMap<usize, LaurentPoly>, y: usize, c: &LaurentPoly) {
    let e = acc.entry(y).or_default();
    *e = &*e + c;
}

/// Nonzero coefficients of the A∞ relation on `(x, a₁, …, a_n)`:
/// `Σ_k m(m(x, a₁..a_k), a_{k+1}..a_n) + Σ_i m(x, …, a_i a_{i+1}, …)`.
fn relation(m: &AInftyMod, x: usize, labels: &[Basis]) -> BTreeMap<usize, LaurentPoly> {
    let mut acc = BTreeMap::new();
    for k in 0..=labels.len() {
        let Some(inner) = m.action(x, &labels[..k]) else {
            continue;
        };
        for (y, c) in inner {
            if let Some(outer) = m.action(*y, &labels[k..]) {
                for (z, d) in outer {
                    accumulate(&mut acc, *z, &(c * d));
                }
            }
        }
    }
    for i in 0..labels.len().saturating_sub(1) {
        if let Some(p) = labels[i].mul(labels[i + 1]) {
            let mut merged = labels[..i].to_vec();
            merged.push(p);
            merged.extend_from_slice(&labels[i + 2..]);
            if let Some(out) = m.action(x, &merged) {
                for (z, c) in out {
                    accumulate(&mut acc, *z, c);
                }
            }
        }
    }
    acc.retain(|_, v| !v.is_zero());
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use Basis::{R1, R12, R2};
    use Idempotent::{I0, I1};

    fn one() -> LaurentPoly {
        LaurentPoly::one()
    }

    #[test]
    fn missing_m2_breaks_relation() {
        // m₂(p,ρ₁)=n and m₂(n,ρ₂)=q with no m₂(p,ρ₁₂) term
        let m = AInftyMod::from_named(
            Ring::F2,
            &[("n", I1), ("p", I0), ("q", I0)],
            &[("p", &[R1], one(), "n"), ("n", &[R2], one(), "q")],
        )
        .unwrap();
        let report = check_ainfty(&m).unwrap_err();
        assert!(report.0.iter().any(|v| matches!(v,
            AInftyViolation::Relation { src, labels, dst, .. }
                if src == "p" && labels == &vec![R1, R2] && dst == "q")));
    }

    #[test]
    fn t_coefficient_rejected_over_f2() {
        let m = AInftyMod::from_named(
            Ring::F2,
            &[("p", I0), ("q", I0)],
            &[("p", &[R12], LaurentPoly::t(), "q")],
        )
        .unwrap();
        assert!(matches!(
            check_ainfty(&m).unwrap_err().0[0],
            AInftyViolation::CoefficientOutsideRing { .. }
        ));
    }

    #[test]
    fn wrong_output_idempotent() {
        let m = AInftyMod::from_named(Ring::F2, &[("p", I0), ("n", I1)], &[("p", &[R12], one(), "n")])
            .unwrap();
        assert!(matches!(check_ainfty(&m).unwrap_err().0[0], AInftyViolation::IdempotentMismatch { .. }));
    }

    #[test]
    fn repeated_terms_cancel() {
        let m = AInftyMod::from_named(
            Ring::Laurent,
            &[("p", I0), ("q", I0)],
            &[("p", &[], one(), "q"), ("p", &[], one(), "q")],
        )
        .unwrap();
        assert_eq!(m.action_count(), 0);
    }

    #[test]
    fn m1_squared_must_vanish() {
        let m = AInftyMod::from_named(
            Ring::F2,
            &[("a", I0), ("b", I0), ("c", I0)],
            &[("a", &[], one(), "b"), ("b", &[], one(), "c")],
        )
        .unwrap();
        assert!(check_ainfty(&m).is_err());
    }
}
