//! Straight lines in the punctured torus and their type D structures.
//!
//! The torus is the unit square with opposite sides identified and the
//! puncture at the corners. Walking counterclockwise around the boundary of
//! the square from the top right corner, where the basepoint `z` sits, the
//! boundary coordinate `θ ∈ (0, 4)` meets the top side, the top left corner
//! (`θ = 1`), the left side, the bottom left corner (`θ = 2`), the bottom
//! side, the bottom right corner (`θ = 3`) and the right side.
//!
//! A curve in minimal position meets the vertical edge in generators over
//! `ι₀` and the horizontal edge in generators over `ι₁`. Each arc of the
//! curve inside the square cuts off the corners strictly between its two
//! endpoints (on the side away from `z`) and contributes an arrow labelled by
//! the corresponding chord, from the endpoint with larger `θ` to the one with
//! smaller `θ`: `{BR} ↦ ρ₁`, `{BL} ↦ ρ₂`, `{TL} ↦ ρ₃`, `{BL, BR} ↦ ρ₁₂`,
//! `{TL, BL} ↦ ρ₂₃`, all three `↦ ρ₁₂₃`. With this choice a horizontal
//! loop is a single `ρ₁₂` self-arrow over `ι₀`.

use std::fmt;

use num_integer::Integer;
use num_rational::Ratio;

use crate::algebra::{Basis, Idempotent};
use crate::structures::{Arrow, Generator, TypeD};

use super::word::{cyclic_eq, inverse_word, CurveComponent, CurveError, Letter};

type Q = Ratio<i64>;

/// A primitive direction `(q, p)` in the torus, slope `p/q`, normalized with
/// `q ≥ 0` and `p = 1` when `q = 0`. Slope `0` (`(q, p) = (1, 0)`) is the
/// rational longitude λ; slope `∞` is the meridian μ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slope {
    p: i64,
    q: i64,
}

impl Slope {
    /// Reduces `p/q` to lowest terms with the canonical sign.
    pub fn new(p: i64, q: i64) -> Result<Slope, CurveError> {
        if p == 0 && q == 0 {
            return Err(CurveError::ZeroSlope);
        }
        let g = p.gcd(&q);
        let (mut p, mut q) = (p / g, q / g);
        if q < 0 || (q == 0 && p < 0) {
            p = -p;
            q = -q;
        }
        Ok(Slope { p, q })
    }

    pub const LONGITUDE: Slope = Slope { p: 0, q: 1 };
    pub const MERIDIAN: Slope = Slope { p: 1, q: 0 };

    /// The filling slope `μ + kλ`.
    pub fn filling(k: i64) -> Slope {
        Slope::new(1, k).expect("nonzero")
    }

    pub fn p(self) -> i64 {
        self.p
    }

    pub fn q(self) -> i64 {
        self.q
    }

    /// `|p₁q₂ − p₂q₁|`.
    pub fn distance(self, other: Slope) -> u64 {
        (self.p * other.q - other.p * self.q).unsigned_abs()
    }
}

impl fmt::Display for Slope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Distance between the slopes, or `parallel_value` when they agree.
pub fn line_intersection_dim(s1: Slope, s2: Slope, parallel_value: u64) -> u64 {
    match s1.distance(s2) {
        0 => parallel_value,
        d => d,
    }
}

#[derive(Clone, Copy, Debug)]
enum Edge {
    /// Vertical edge at height `y ∈ (0, 1)`.
    V(Q),
    /// Horizontal edge at offset `x ∈ (0, 1)`.
    H(Q),
}

fn frac(x: Q) -> Q {
    x - x.floor()
}

/// Edge crossings, in order, of `mult` turns around a closed line of the
/// given slope, started at a point that keeps it off the puncture.
fn crossings(s: Slope, mult: usize) -> Vec<Edge> {
    let (p, q) = (s.p, s.q);
    let (x0, y0) = if q == 0 {
        (Q::new(1, 2), Q::from_integer(0))
    } else {
        // y = y0 + p·k/q at the vertical crossings is never an integer
        (Q::from_integer(0), Q::new(1, 2 * q))
    };
    let span = mult as i64;
    let mut events: Vec<(Q, Edge)> = Vec::new();
    for k in 0..q * span {
        let t = Q::new(k, q);
        events.push((t, Edge::V(frac(y0 + t * p))));
    }
    if p != 0 {
        // y0 + p·t crosses every integer in the range swept for t ∈ [0, span)
        let (lo, hi) = {
            let a = y0;
            let b = y0 + Q::from_integer(p * span);
            if a <= b { (a, b) } else { (b, a) }
        };
        let mut n = lo.ceil().to_integer();
        while Q::from_integer(n) <= hi {
            let t = (Q::from_integer(n) - y0) / p;
            if t >= Q::from_integer(0) && t < Q::from_integer(span) {
                events.push((t, Edge::H(frac(x0 + t * q))));
            }
            n += 1;
        }
    }
    events.sort_by(|a, b| a.0.cmp(&b.0));
    events.into_iter().map(|(_, e)| e).collect()
}

/// Boundary coordinate where the walk enters the square through `e`.
fn theta_in(e: Edge, p: i64) -> Q {
    match e {
        Edge::V(y) => Q::from_integer(2) - y,
        Edge::H(x) if p > 0 => Q::from_integer(2) + x,
        Edge::H(x) => Q::from_integer(1) - x,
    }
}

/// Boundary coordinate where the walk leaves the square through `e`.
fn theta_out(e: Edge, p: i64) -> Q {
    match e {
        Edge::V(y) => Q::from_integer(3) + y,
        Edge::H(x) if p > 0 => Q::from_integer(1) - x,
        Edge::H(x) => Q::from_integer(2) + x,
    }
}

fn chord(lo: Q, hi: Q) -> Basis {
    let inside = |c: i64| lo < Q::from_integer(c) && Q::from_integer(c) < hi;
    match (inside(1), inside(2), inside(3)) {
        (false, false, true) => Basis::R1,
        (false, true, false) => Basis::R2,
        (true, false, false) => Basis::R3,
        (false, true, true) => Basis::R12,
        (true, true, false) => Basis::R23,
        (true, true, true) => Basis::R123,
        _ => unreachable!("a straight arc joins two different sides"),
    }
}

/// Type D structure of `mult` turns around the closed line of slope `s`.
/// Generators are named `v1, v2, …` (vertical edge, `ι₀`) and `h1, h2, …`
/// (horizontal edge, `ι₁`).
pub fn line_typed(s: Slope, mult: usize) -> TypeD {
    assert!(mult >= 1, "a line is traversed at least once");
    let cs = crossings(s, mult);
    let (mut nv, mut nh) = (0, 0);
    let gens: Vec<Generator> = cs
        .iter()
        .map(|e| match e {
            Edge::V(_) => {
                nv += 1;
                Generator {
                    name: format!("v{nv}"),
                    idem: Idempotent::I0,
                }
            }
            Edge::H(_) => {
                nh += 1;
                Generator {
                    name: format!("h{nh}"),
                    idem: Idempotent::I1,
                }
            }
        })
        .collect();
    let n = cs.len();
    let arrows = (0..n).map(|i| {
        let j = (i + 1) % n;
        let a = theta_in(cs[i], s.p);
        let b = theta_out(cs[j], s.p);
        if a < b {
            Arrow { src: j, label: chord(a, b), dst: i }
        } else {
            Arrow { src: i, label: chord(b, a), dst: j }
        }
    });
    TypeD::new(gens, arrows.collect::<Vec<_>>()).expect("crossings give distinct arrows")
}

/// Cutting sequence of one turn around the line: `ℓ` at each vertical
/// crossing, `m` or `m⁻¹` at each horizontal one.
pub fn line_word(s: Slope) -> Vec<Letter> {
    crossings(s, 1)
        .into_iter()
        .map(|e| match e {
            Edge::V(_) => Letter::L,
            Edge::H(_) if s.p > 0 => Letter::M,
            Edge::H(_) => Letter::MInv,
        })
        .collect()
}

/// `Some((s, j))` when the component is homotopic to `j` turns around the
/// line of slope `s`.
pub fn line_class(c: &CurveComponent) -> Option<(Slope, usize)> {
    let (a, b) = c.homology();
    if a == 0 && b == 0 {
        return None;
    }
    let word = if a < 0 || (a == 0 && b < 0) {
        inverse_word(c.word())
    } else {
        c.word().to_vec()
    };
    let j = a.gcd(&b) as usize;
    let s = Slope::new(b, a).ok()?;
    let unit = line_word(s);
    let target: Vec<Letter> = unit.iter().copied().cycle().take(unit.len() * j).collect();
    cyclic_eq(&word, &target).then_some((s, j))
}
