//! Deciding whether a rational homology solid torus is an HFST.
//!
//! Three criteria are computed for a λ-framed invariant:
//!
//! 1. the twisted pairing `𝒮̲ ⊠ P` has vanishing homology over F₂(t)
//!    (the verdict of record);
//! 2. `dim HF̂` of the fillings along `μ + kλ` is constant for `|k| ≤ K`;
//! 3. for curve input, every component is a power of λ.
//!
//! They are equivalent, so any disagreement is reported as an internal
//! error rather than a verdict. Criterion 2 only samples a window; the
//! default `K = generators + 2` is a heuristic and is policed by the
//! agreement check.

use std::fmt;

use crate::curves::{
    curve_to_typed, line_class, line_intersection_dim, line_typed, supported_near_longitude,
    CurveError, MultiCurve, Slope,
};
use crate::pairing::{box_tensor, homology_dim, mor_pairing, PairingError};
use crate::structures::{solid_torus_module, TypeD};

/// A λ-framed invariant: an immersed multicurve or a type D structure.
#[derive(Clone, Debug)]
pub enum HfstInput {
    Curve(MultiCurve),
    TypeD(TypeD),
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum HfstError {
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Pairing(#[from] PairingError),
    #[error("filling window must be at least 1")]
    EmptyWindow,
    #[error("internal consistency failure:\n{0}")]
    Inconsistent(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HfstVerdict {
    pub is_hfst: bool,
    pub window: usize,
    pub condition2_dims: Vec<(i64, usize)>,
    pub condition2_constant: bool,
    /// `None` for type D input.
    pub condition3_supported: Option<bool>,
    pub twisted_vanishing: bool,
    pub twisted_dim: usize,
    pub untwisted_dim: usize,
}

impl fmt::Display for HfstVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "is_hfst: {}", self.is_hfst)?;
        writeln!(f, "twisted_vanishing: {}", self.twisted_vanishing)?;
        writeln!(f, "twisted_dim: {}", self.twisted_dim)?;
        writeln!(f, "untwisted_dim: {}", self.untwisted_dim)?;
        writeln!(f, "window: {}", self.window)?;
        writeln!(f, "fillings_constant: {}", self.condition2_constant)?;
        match self.condition3_supported {
            Some(b) => writeln!(f, "supported_near_longitude: {b}")?,
            None => writeln!(f, "supported_near_longitude: n/a")?,
        }
        write_dims(f, &self.condition2_dims)
    }
}

fn write_dims(f: &mut impl fmt::Write, dims: &[(i64, usize)]) -> fmt::Result {
    for (k, d) in dims {
        writeln!(f, "filling {k}: {d}")?;
    }
    Ok(())
}

fn typed(input: &HfstInput) -> Result<TypeD, HfstError> {
    match input {
        HfstInput::Curve(c) => Ok(curve_to_typed(c)?),
        HfstInput::TypeD(p) => Ok(p.clone()),
    }
}

/// `dim HF̂` of the filling along `μ + kλ`, as the homology of the morphism
/// complex from the line of that slope.
pub fn filling_dim(p: &TypeD, k: i64) -> Result<usize, HfstError> {
    let line = line_typed(Slope::filling(k), 1);
    Ok(homology_dim(&mor_pairing(&line, p)?)?)
}

/// Geometric count for a multicurve made of lines: each component of `j`
/// turns around slope `s` meets the filling line `j·Δ` times, or contributes
/// `parallel_value` when parallel to it.
pub fn line_curve_filling_dim(c: &MultiCurve, k: i64, parallel_value: u64) -> Option<u64> {
    let f = Slope::filling(k);
    c.components()
        .iter()
        .map(|x| {
            line_class(x).map(|(s, j)| match s.distance(f) {
                0 => line_intersection_dim(s, f, parallel_value),
                d => d * j as u64,
            })
        })
        .sum()
}

/// `(k, dim)` for `k ∈ [−K, K]`; curve input made of lines is checked
/// against the geometric count.
pub fn filling_dims(input: &HfstInput, window: usize) -> Result<Vec<(i64, usize)>, HfstError> {
    if window == 0 {
        return Err(HfstError::EmptyWindow);
    }
    let p = typed(input)?;
    let w = window as i64;
    let mut out = Vec::with_capacity(2 * window + 1);
    for k in -w..=w {
        let d = filling_dim(&p, k)?;
        if let HfstInput::Curve(c) = input {
            if let Some(g) = line_curve_filling_dim(c, k, 2) {
                if g != d as u64 {
                    return Err(HfstError::Inconsistent(format!(
                        "filling {k}: morphism complex gives {d}, intersection count gives {g}"
                    )));
                }
            }
        }
        out.push((k, d));
    }
    Ok(out)
}

/// Homology dimensions of `𝒮̲ ⊠ P` over F₂(t) and `𝒮 ⊠ P` over F₂.
pub fn solid_torus_pairings(p: &TypeD) -> Result<(usize, usize), HfstError> {
    let twisted = homology_dim(&box_tensor(&solid_torus_module(true), p)?)?;
    let untwisted = homology_dim(&box_tensor(&solid_torus_module(false), p)?)?;
    Ok((twisted, untwisted))
}

/// Verdict with evidence. `window` defaults to the generator count plus 2.
pub fn is_hfst(input: &HfstInput, window: Option<usize>) -> Result<HfstVerdict, HfstError> {
    let p = typed(input)?;
    let (twisted_dim, untwisted_dim) = solid_torus_pairings(&p)?;
    let window = window.unwrap_or(p.len() + 2);
    let dims = filling_dims(input, window)?;
    let constant = dims.windows(2).all(|w| w[0].1 == w[1].1);
    let supported = match input {
        HfstInput::Curve(c) => Some(supported_near_longitude(c)),
        HfstInput::TypeD(_) => None,
    };
    let verdict = HfstVerdict {
        is_hfst: twisted_dim == 0,
        window,
        condition2_dims: dims,
        condition2_constant: constant,
        condition3_supported: supported,
        twisted_vanishing: twisted_dim == 0,
        twisted_dim,
        untwisted_dim,
    };
    if constant != verdict.twisted_vanishing || supported.is_some_and(|s| s != verdict.twisted_vanishing) {
        return Err(HfstError::Inconsistent(verdict.to_string()));
    }
    Ok(verdict)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TriangleViolation {
    /// The dimension at this position exceeds the sum of the other two.
    Inequality(usize),
    OddTotal,
}

/// Rank consequences of an exact triangle of vector spaces: each dimension
/// is at most the sum of the other two, and the total is even.
pub fn triangle_rank_check(a: usize, b: usize, c: usize) -> Result<(), Vec<TriangleViolation>> {
    let d = [a, b, c];
    let total = a + b + c;
    let mut out: Vec<TriangleViolation> = (0..3)
        .filter(|&i| 2 * d[i] > total)
        .map(TriangleViolation::Inequality)
        .collect();
    if total % 2 == 1 {
        out.push(TriangleViolation::OddTotal);
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Basis::{R1, R12, R123, R2, R3};
    use crate::algebra::Idempotent::{I0, I1};
    use crate::curves::{CurveComponent, Letter};

    fn curve(words: &[&str]) -> HfstInput {
        let comps = words
            .iter()
            .map(|s| {
                let (w, z) = s.strip_suffix(" @z").map_or((*s, false), |w| (w, true));
                let w: Vec<Letter> = w.chars().map(|c| Letter::from_char(c).unwrap()).collect();
                CurveComponent::new(&w, z).unwrap()
            })
            .collect();
        HfstInput::Curve(MultiCurve::new(comps).unwrap())
    }

    #[test]
    fn solid_torus_fillings_are_spheres() {
        let dims = filling_dims(&curve(&["l @z"]), 4).unwrap();
        assert!(dims.iter().all(|(_, d)| *d == 1));
        assert_eq!(dims.len(), 9);
    }

    #[test]
    fn triple_longitude_is_hfst() {
        let v = is_hfst(&curve(&["lll"]), None).unwrap();
        assert!(v.is_hfst);
        assert_eq!(v.window, 5);
        assert!(v.condition2_dims.iter().all(|(_, d)| *d == 3));
        assert_eq!(v.untwisted_dim, 2);
    }

    #[test]
    fn slope_one_line_is_not() {
        let v = is_hfst(&curve(&["lm"]), Some(3)).unwrap();
        assert!(!v.is_hfst);
        let dims: Vec<usize> = v.condition2_dims.iter().map(|x| x.1).collect();
        assert_eq!(dims, [4, 3, 2, 1, 2, 1, 2]);
    }

    #[test]
    fn hand_entered_disjoint_curve() {
        let p = TypeD::from_named(
            &[("A", I0), ("B", I0), ("C", I0), ("D", I1), ("E", I1)],
            &[("A", R1, "E"), ("B", R3, "D"), ("B", R12, "C"), ("C", R123, "E"), ("D", R2, "A")],
        )
        .unwrap();
        let v = is_hfst(&HfstInput::TypeD(p), None).unwrap();
        assert!(v.is_hfst);
        assert_eq!(v.untwisted_dim, 0);
        assert_eq!(v.condition3_supported, None);
    }

    #[test]
    fn triangles() {
        assert_eq!(triangle_rank_check(1, 1, 0), Ok(()));
        assert_eq!(
            triangle_rank_check(1, 2, 0),
            Err(vec![TriangleViolation::Inequality(1), TriangleViolation::OddTotal])
        );
        for p in 0..20 {
            assert_eq!(triangle_rank_check(p, p + 1, 1), Ok(()));
        }
    }

    #[test]
    fn zero_window_rejected() {
        assert_eq!(filling_dims(&curve(&["l"]), 0), Err(HfstError::EmptyWindow));
    }
}
