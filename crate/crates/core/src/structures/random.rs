//! Seeded random type D structures for property suites.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Basis, Idempotent};

use super::typed::{check_typed, Arrow, Generator, TypeD};
use super::StructureError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdempotentPolicy {
    /// Every generator over ι₀; the only possible arrow label is ρ₁₂.
    AllI0,
    Mixed,
}

const MAX_ATTEMPTS: usize = 10_000;

pub fn random_typed(seed: u64, n: usize, policy: IdempotentPolicy) -> Result<TypeD, StructureError> {
    if n == 0 {
        return Err(StructureError::EmptyRandom);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let density = (1.5 / n as f64).min(0.5);
    match policy {
        IdempotentPolicy::AllI0 => {
            // ρ₁₂·ρ₁₂ = 0, so every ρ₁₂ digraph satisfies the structure equation
            let gens = named(&vec![Idempotent::I0; n]);
            let mut arrows = Vec::new();
            for src in 0..n {
                for dst in 0..n {
                    if rng.random_bool(density) {
                        arrows.push(Arrow { src, label: Basis::R12, dst });
                    }
                }
            }
            TypeD::new(gens, arrows)
        }
        IdempotentPolicy::Mixed => {
            for _ in 0..MAX_ATTEMPTS {
                let candidate = mixed_candidate(&mut rng, n, density);
                if check_typed(&candidate).is_ok() {
                    return Ok(candidate);
                }
            }
            Ok(constructive(&mut rng, n))
        }
    }
}

fn named(idems: &[Idempotent]) -> Vec<Generator> {
    idems
        .iter()
        .enumerate()
        .map(|(i, idem)| Generator {
            name: format!("x{}", i + 1),
            idem: *idem,
        })
        .collect()
}

fn mixed_candidate(rng: &mut ChaCha8Rng, n: usize, density: f64) -> TypeD {
    let idems: Vec<Idempotent> = (0..n)
        .map(|_| if rng.random_bool(0.5) { Idempotent::I0 } else { Idempotent::I1 })
        .collect();
    let mut arrows = Vec::new();
    for src in 0..n {
        for dst in 0..n {
            if !rng.random_bool(density) {
                continue;
            }
            let labels: Vec<Basis> = Basis::CHORDS
                .into_iter()
                .filter(|a| a.left() == idems[src] && a.right() == idems[dst])
                .collect();
            let label = labels[rng.random_range(0..labels.len())];
            arrows.push(Arrow { src, label, dst });
        }
    }
    TypeD::new(named(&idems), arrows).expect("distinct arrows on valid indices")
}

/// Valid building blocks for the fallback: lone generators, loops, the two
/// slope ±1 line structures, and a five-generator curve structure disjoint
/// from a horizontal line.
fn pieces() -> Vec<TypeD> {
    use Basis::{R1, R12, R123, R2, R23, R3};
    use Idempotent::{I0, I1};
    let specs: Vec<(Vec<(&str, Idempotent)>, Vec<(&str, Basis, &str)>)> = vec![
        (vec![("a", I0)], vec![]),
        (vec![("a", I1)], vec![]),
        (vec![("a", I0)], vec![("a", R12, "a")]),
        (vec![("a", I1)], vec![("a", R23, "a")]),
        (vec![("a", I0), ("b", I1)], vec![("a", R1, "b"), ("a", R3, "b")]),
        (vec![("a", I0), ("b", I1)], vec![("a", R123, "b"), ("b", R2, "a")]),
        (
            vec![("a", I0), ("b", I0), ("c", I0), ("d", I1), ("e", I1)],
            vec![("a", R1, "e"), ("b", R3, "d"), ("b", R12, "c"), ("c", R123, "e"), ("d", R2, "a")],
        ),
    ];
    specs
        .into_iter()
        .map(|(g, a)| TypeD::from_named(&g, &a).expect("piece is well formed"))
        .collect()
}

fn constructive(rng: &mut ChaCha8Rng, n: usize) -> TypeD {
    let pieces = pieces();
    let mut out: Option<TypeD> = None;
    let mut size = 0;
    while size < n {
        let fits: Vec<&TypeD> = pieces.iter().filter(|p| p.len() <= n - size).collect();
        let piece = fits[rng.random_range(0..fits.len())];
        size += piece.len();
        out = Some(match out {
            None => piece.clone(),
            Some(acc) => acc.disjoint_union(piece),
        });
    }
    let p = out.expect("n ≥ 1");
    let names: Vec<String> = (1..=p.len()).map(|i| format!("x{i}")).collect();
    let perm: Vec<usize> = (0..p.len()).collect();
    p.relabelled(&perm, &names)
}
