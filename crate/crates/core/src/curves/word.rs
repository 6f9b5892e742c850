use std::fmt;

/// Generators of the fundamental group of the punctured torus: `ℓ` is the
/// horizontal loop (the rational longitude), `m` the vertical one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    L,
    LInv,
    M,
    MInv,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::L => Letter::LInv,
            Letter::LInv => Letter::L,
            Letter::M => Letter::MInv,
            Letter::MInv => Letter::M,
        }
    }

    pub fn to_char(self) -> char {
        match self {
            Letter::L => 'l',
            Letter::LInv => 'L',
            Letter::M => 'm',
            Letter::MInv => 'M',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'l' => Some(Letter::L),
            'L' => Some(Letter::LInv),
            'm' => Some(Letter::M),
            'M' => Some(Letter::MInv),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum CurveError {
    #[error("curve component reduces to the empty word")]
    EmptyWord,
    #[error("at most one component may pass through the basepoint")]
    MultipleBasepoint,
    #[error("dictionary not implemented for this class: `{0}`")]
    Unsupported(String),
    #[error("(0, 0) is not a slope")]
    ZeroSlope,
}

/// Free reduction followed by cyclic reduction.
pub fn reduce_cyclic(word: &[Letter]) -> Vec<Letter> {
    let mut out: Vec<Letter> = Vec::with_capacity(word.len());
    for &x in word {
        if out.last() == Some(&x.inverse()) {
            out.pop();
        } else {
            out.push(x);
        }
    }
    let (mut i, mut j) = (0, out.len());
    while j - i >= 2 && out[i] == out[j - 1].inverse() {
        i += 1;
        j -= 1;
    }
    out[i..j].to_vec()
}

pub fn inverse_word(word: &[Letter]) -> Vec<Letter> {
    word.iter().rev().map(|x| x.inverse()).collect()
}

/// True when `b` is a cyclic rotation of `a`.
pub fn cyclic_eq(a: &[Letter], b: &[Letter]) -> bool {
    a.len() == b.len() && (a.is_empty() || (0..a.len()).any(|r| a[r..].iter().chain(&a[..r]).eq(b)))
}

/// Shortest `u` with `word = uⁿ`.
pub fn primitive_root(word: &[Letter]) -> &[Letter] {
    let n = word.len();
    for d in 1..=n {
        if n % d == 0 && (d..n).all(|i| word[i] == word[i - d]) {
            return &word[..d];
        }
    }
    word
}

/// A closed component of an immersed multicurve with trivial local system.
///
/// The word is kept freely and cyclically reduced, so two components are
/// homotopic exactly when their words are cyclic rotations of each other or
/// of each other's inverses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveComponent {
    word: Vec<Letter>,
    through_basepoint: bool,
}

impl CurveComponent {
    pub fn new(word: &[Letter], through_basepoint: bool) -> Result<Self, CurveError> {
        let word = reduce_cyclic(word);
        if word.is_empty() {
            return Err(CurveError::EmptyWord);
        }
        Ok(CurveComponent {
            word,
            through_basepoint,
        })
    }

    pub fn word(&self) -> &[Letter] {
        &self.word
    }

    pub fn through_basepoint(&self) -> bool {
        self.through_basepoint
    }

    /// Homology class `(#ℓ − #ℓ⁻¹, #m − #m⁻¹)`.
    pub fn homology(&self) -> (i64, i64) {
        self.word.iter().fold((0, 0), |(a, b), x| match x {
            Letter::L => (a + 1, b),
            Letter::LInv => (a - 1, b),
            Letter::M => (a, b + 1),
            Letter::MInv => (a, b - 1),
        })
    }
}

impl fmt::Display for CurveComponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.word.iter().map(|x| x.to_char()).collect();
        f.write_str(&s)?;
        if self.through_basepoint {
            f.write_str(" @z")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MultiCurve {
    components: Vec<CurveComponent>,
}

impl MultiCurve {
    pub fn new(components: Vec<CurveComponent>) -> Result<Self, CurveError> {
        if components.iter().filter(|c| c.through_basepoint).count() > 1 {
            return Err(CurveError::MultipleBasepoint);
        }
        Ok(MultiCurve { components })
    }

    pub fn components(&self) -> &[CurveComponent] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }
}

/// `Some(|j|)` when the component is homotopic to `ℓʲ`, `j ≠ 0`.
pub fn is_longitude_power(c: &CurveComponent) -> Option<usize> {
    let w = c.word();
    (w.iter().all(|x| *x == Letter::L) || w.iter().all(|x| *x == Letter::LInv)).then_some(w.len())
}

/// Every component is a power of the longitude (vacuously true when empty).
pub fn supported_near_longitude(c: &MultiCurve) -> bool {
    c.components().iter().all(|x| is_longitude_power(x).is_some())
}

/// Primitive roots agree up to rotation and inversion.
pub fn commensurable(a: &CurveComponent, b: &CurveComponent) -> bool {
    let ra = primitive_root(a.word());
    let rb = primitive_root(b.word());
    cyclic_eq(ra, rb) || cyclic_eq(ra, &inverse_word(rb))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Vec<Letter> {
        s.chars().map(|c| Letter::from_char(c).unwrap()).collect()
    }

    fn comp(s: &str) -> CurveComponent {
        CurveComponent::new(&w(s), false).unwrap()
    }

    #[test]
    fn reduction() {
        assert_eq!(reduce_cyclic(&w("lLm")), w("m"));
        assert_eq!(reduce_cyclic(&w("mlM")), w("l"));
        assert_eq!(reduce_cyclic(&w("MlmlLm")), w("lm"));
        assert!(reduce_cyclic(&w("lmML")).is_empty());
        assert_eq!(CurveComponent::new(&w("mM"), false), Err(CurveError::EmptyWord));
    }

    #[test]
    fn longitude_powers() {
        assert_eq!(is_longitude_power(&comp("lll")), Some(3));
        assert_eq!(is_longitude_power(&comp("LL")), Some(2));
        assert_eq!(is_longitude_power(&comp("lmlM")), None);
        assert_eq!(is_longitude_power(&comp("m")), None);
        assert_eq!(is_longitude_power(&comp("mlllM")), Some(3));
    }

    #[test]
    fn support_near_longitude() {
        let near = MultiCurve::new(vec![comp("l"), comp("LLL")]).unwrap();
        let far = MultiCurve::new(vec![comp("l"), comp("lm")]).unwrap();
        assert!(supported_near_longitude(&near));
        assert!(!supported_near_longitude(&far));
        assert!(supported_near_longitude(&MultiCurve::default()));
    }

    #[test]
    fn commensurability() {
        assert!(commensurable(&comp("ll"), &comp("lll")));
        assert!(commensurable(&comp("ll"), &comp("L")));
        assert!(!commensurable(&comp("l"), &comp("m")));
        assert!(!commensurable(&comp("lmlM"), &comp("l")));
        assert!(commensurable(&comp("lmlm"), &comp("MLML")));
        assert!(commensurable(&comp("lmlm"), &comp("mlml")));
    }

    #[test]
    fn one_basepoint_component() {
        let z = CurveComponent::new(&w("l"), true).unwrap();
        assert_eq!(MultiCurve::new(vec![z.clone(), z]), Err(CurveError::MultipleBasepoint));
    }
}
