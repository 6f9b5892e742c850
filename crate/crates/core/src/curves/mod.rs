//! Immersed multicurves in the punctured torus and the curve → type D
//! dictionary for lines and their multiples.
//!
//! Coordinates are always framed by the rational longitude: `ℓ` and slope
//! `0` are λ, `m` and slope `∞` are μ.

mod line;
mod word;

pub use line::{line_class, line_intersection_dim, line_typed, line_word, Slope};
pub use word::{
    commensurable, cyclic_eq, inverse_word, is_longitude_power, primitive_root, reduce_cyclic,
    supported_near_longitude, CurveComponent, CurveError, Letter, MultiCurve,
};

use crate::structures::TypeD;

/// Type D structure of one component. Supported classes are multiples of
/// closed lines (`ℓʲ`, `mʲ`, and the staircase words of other slopes); a
/// component through the basepoint must be a single line. The type D
/// structure does not depend on the basepoint flag.
pub fn component_to_typed(c: &CurveComponent) -> Result<TypeD, CurveError> {
    match line_class(c) {
        Some((s, j)) if j == 1 || !c.through_basepoint() => Ok(line_typed(s, j)),
        _ => Err(CurveError::Unsupported(c.to_string())),
    }
}

/// Disjoint union over components. With several components, generator names
/// get a `cN.` prefix.
pub fn curve_to_typed(c: &MultiCurve) -> Result<TypeD, CurveError> {
    let parts = c
        .components()
        .iter()
        .map(component_to_typed)
        .collect::<Result<Vec<_>, _>>()?;
    if parts.len() == 1 {
        return Ok(parts.into_iter().next().unwrap());
    }
    let mut out = TypeD::new(Vec::new(), Vec::new()).expect("empty structure");
    for (i, part) in parts.iter().enumerate() {
        let names: Vec<String> = part
            .generators()
            .iter()
            .map(|g| format!("c{}.{}", i + 1, g.name))
            .collect();
        let perm: Vec<usize> = (0..part.len()).collect();
        out = out.disjoint_union(&part.relabelled(&perm, &names));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Idempotent;
    use crate::structures::{check_typed, longitude_cycle};

    fn comp(s: &str, z: bool) -> CurveComponent {
        let w: Vec<Letter> = s.chars().map(|c| Letter::from_char(c).unwrap()).collect();
        CurveComponent::new(&w, z).unwrap()
    }

    #[test]
    fn normative_three_cycle() {
        let c = MultiCurve::new(vec![comp("lll", false)]).unwrap();
        assert!(curve_to_typed(&c).unwrap().isomorphic(&longitude_cycle(3)));
    }

    #[test]
    fn longitude_powers_lie_over_i0() {
        let c = MultiCurve::new(vec![comp("ll", false), comp("L", true), comp("lll", false)]).unwrap();
        let d = curve_to_typed(&c).unwrap();
        check_typed(&d).unwrap();
        assert_eq!(d.len(), 6);
        assert_eq!(d.count_with(Idempotent::I1), 0);
        assert_eq!(d.generators()[2].name, "c2.v1");
    }

    #[test]
    fn unsupported_classes_are_refused() {
        let c = MultiCurve::new(vec![comp("lmlM", false)]).unwrap();
        assert_eq!(curve_to_typed(&c), Err(CurveError::Unsupported("lmlM".into())));
        let c = MultiCurve::new(vec![comp("ll", true)]).unwrap();
        assert!(matches!(curve_to_typed(&c), Err(CurveError::Unsupported(_))));
    }

    #[test]
    fn empty_curve_is_empty_structure() {
        assert!(curve_to_typed(&MultiCurve::default()).unwrap().is_empty());
    }
}
