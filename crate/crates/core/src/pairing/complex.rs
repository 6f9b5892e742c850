use std::collections::BTreeMap;
use std::fmt::Write;

use crate::algebra::{matrix_rank, F2Matrix, LaurentPoly, Matrix, RationalFn};

use super::PairingError;

/// Field over which a complex's homology is taken.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Field {
    F2,
    /// F₂(t); entries are Laurent polynomials.
    RationalFn,
}

impl Field {
    pub fn name(self) -> &'static str {
        match self {
            Field::F2 => "F2",
            Field::RationalFn => "F2(t)",
        }
    }
}

/// A finite free chain complex with a sparse differential.
///
/// `diff[(i, j)] = c` means `d(basis[i])` contains `c · basis[j]`. Over
/// [`Field::F2`] every stored coefficient is `1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainComplex {
    field: Field,
    basis: Vec<String>,
    diff: BTreeMap<(usize, usize), LaurentPoly>,
}

impl ChainComplex {
    /// Terms with the same position are summed. Over F₂ each coefficient is
    /// first evaluated at `t = 1`.
    pub fn new<I>(field: Field, basis: Vec<String>, terms: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, LaurentPoly)>,
    {
        let mut diff: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for (i, j, c) in terms {
            assert!(i < basis.len() && j < basis.len(), "differential index out of range");
            let c = match field {
                Field::F2 if c.eval_one() => LaurentPoly::one(),
                Field::F2 => LaurentPoly::zero(),
                Field::RationalFn => c,
            };
            let e = diff.entry((i, j)).or_default();
            *e = &*e + &c;
        }
        diff.retain(|_, c| !c.is_zero());
        ChainComplex { field, basis, diff }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.diff.iter().map(|((i, j), c)| (*i, *j, c))
    }

    pub fn coefficient(&self, src: usize, dst: usize) -> Option<&LaurentPoly> {
        self.diff.get(&(src, dst))
    }

    /// Nonzero entries of `d ∘ d`.
    pub fn d_squared(&self) -> BTreeMap<(usize, usize), LaurentPoly> {
        let mut rows: Vec<Vec<(usize, &LaurentPoly)>> = vec![Vec::new(); self.len()];
        for ((i, j), c) in &self.diff {
            rows[*i].push((*j, c));
        }
        let mut out: BTreeMap<(usize, usize), LaurentPoly> = BTreeMap::new();
        for (i, row) in rows.iter().enumerate() {
            for (j, c) in row {
                for (k, e) in &rows[*j] {
                    let slot = out.entry((i, *k)).or_default();
                    *slot = &*slot + &(*c * *e);
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn check_d_squared(&self) -> Result<(), PairingError> {
        match self.d_squared().into_keys().next() {
            None => Ok(()),
            Some((i, k)) => Err(PairingError::DSquaredNonzero {
                src: self.basis[i].clone(),
                dst: self.basis[k].clone(),
            }),
        }
    }

    /// Rank of the differential over the complex's field.
    pub fn rank(&self) -> usize {
        let n = self.len();
        let m = match self.field {
            Field::F2 => {
                let mut m = F2Matrix::zeros(n, n);
                for (i, j) in self.diff.keys() {
                    m.set(*i, *j, true);
                }
                Matrix::F2(m)
            }
            Field::RationalFn => {
                // only rows and columns touched by the differential matter
                let mut rows: Vec<usize> = self.diff.keys().map(|k| k.0).collect();
                let mut cols: Vec<usize> = self.diff.keys().map(|k| k.1).collect();
                rows.sort_unstable();
                rows.dedup();
                cols.sort_unstable();
                cols.dedup();
                let mut dense = vec![vec![RationalFn::zero(); cols.len()]; rows.len()];
                for ((i, j), c) in &self.diff {
                    let r = rows.binary_search(i).unwrap();
                    let s = cols.binary_search(j).unwrap();
                    dense[r][s] = RationalFn::from(c.clone());
                }
                Matrix::Rational(dense)
            }
        };
        matrix_rank(&m)
    }

    /// The same complex with `t = 1`, over F₂.
    pub fn specialize_at_one(&self) -> ChainComplex {
        ChainComplex::new(
            Field::F2,
            self.basis.clone(),
            self.entries().map(|(i, j, c)| (i, j, c.clone())),
        )
    }

    /// Text dump: a `basis:` line, then one `d SRC COEFF DST` line per entry.
    pub fn dump(&self) -> String {
        let mut out = format!("basis: {}\n", self.basis.join(" "));
        for ((i, j), c) in &self.diff {
            writeln!(out, "d {} {} {}", self.basis[*i], c, self.basis[*j]).unwrap();
        }
        out
    }
}

/// `dim H = n − 2·rank d`, after checking `d² = 0`.
pub fn homology_dim(c: &ChainComplex) -> Result<usize, PairingError> {
    c.check_d_squared()?;
    Ok(c.len() - 2 * c.rank())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(n: usize) -> Vec<String> {
        (0..n).map(|i| format!("g{i}")).collect()
    }

    #[test]
    fn zero_differential() {
        for n in 0..5 {
            let c = ChainComplex::new(Field::F2, names(n), []);
            assert_eq!(homology_dim(&c).unwrap(), n);
        }
    }

    #[test]
    fn acyclic_pair() {
        let c = ChainComplex::new(Field::F2, names(2), [(0, 1, LaurentPoly::one())]);
        assert_eq!(homology_dim(&c).unwrap(), 0);
    }

    #[test]
    fn one_plus_t_is_a_unit_only_over_the_field() {
        let c = ChainComplex::new(
            Field::RationalFn,
            names(2),
            [(0, 1, LaurentPoly::one()), (0, 1, LaurentPoly::t())],
        );
        assert_eq!(homology_dim(&c).unwrap(), 0);
        assert_eq!(homology_dim(&c.specialize_at_one()).unwrap(), 2);
    }

    #[test]
    fn nonzero_square_is_reported() {
        let one = LaurentPoly::one();
        let c = ChainComplex::new(Field::F2, names(3), [(0, 1, one.clone()), (1, 2, one)]);
        assert_eq!(
            homology_dim(&c),
            Err(PairingError::DSquaredNonzero {
                src: "g0".into(),
                dst: "g2".into()
            })
        );
    }

    #[test]
    fn dump_format() {
        let c = ChainComplex::new(Field::RationalFn, names(2), [(0, 1, LaurentPoly::t())]);
        assert_eq!(c.dump(), "basis: g0 g1\nd g0 t g1\n");
    }
}
