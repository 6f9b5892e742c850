//! Dense exact rank over F₂ and over F₂(t).

use super::laurent::RationalFn;

/// Dense F₂ matrix with bit-packed rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct F2Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<u64>>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            rows,
            cols,
            data: vec![vec![0; cols.div_ceil(64)]; rows],
        }
    }

    pub fn from_rows(rows: &[Vec<u8>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged matrix");
            for (j, v) in row.iter().enumerate() {
                if v % 2 == 1 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i][j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, v: bool) {
        let w = &mut self.data[i][j / 64];
        if v {
            *w |= 1 << (j % 64);
        } else {
            *w &= !(1 << (j % 64));
        }
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i][j / 64] ^= 1 << (j % 64);
    }

    pub fn rank(&self) -> usize {
        let mut rows = self.data.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let (w, b) = (col / 64, col % 64);
            let Some(p) = (rank..rows.len()).find(|&r| (rows[r][w] >> b) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            let pivot = rows[rank].clone();
            for (r, row) in rows.iter_mut().enumerate() {
                if r != rank && (row[w] >> b) & 1 == 1 {
                    for (x, y) in row.iter_mut().zip(&pivot).skip(w) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

/// A dense matrix over one of the two coefficient fields used here.
#[derive(Clone, Debug)]
pub enum Matrix {
    F2(F2Matrix),
    Rational(Vec<Vec<RationalFn>>),
}

/// Rank over the matrix's field by exact Gaussian elimination.
pub fn matrix_rank(m: &Matrix) -> usize {
    match m {
        Matrix::F2(m) => m.rank(),
        Matrix::Rational(rows) => rational_rank(rows.clone()),
    }
}

fn size_of(x: &RationalFn) -> usize {
    x.numerator().exponents().count() + x.denominator().exponents().count()
}

fn rational_rank(mut rows: Vec<Vec<RationalFn>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        // smallest pivot keeps intermediate fractions short
        let Some(p) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .min_by_key(|&r| size_of(&rows[r][col]))
        else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        let pivot: Vec<RationalFn> = rows[rank].iter().map(|x| x * &inv).collect();
        for r in rank + 1..rows.len() {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            for c in col..cols {
                if !pivot[c].is_zero() {
                    let delta = &factor * &pivot[c];
                    rows[r][c] = &rows[r][c] + &delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::LaurentPoly;

    fn lp(s: &str) -> RationalFn {
        RationalFn::from(s.parse::<LaurentPoly>().unwrap())
    }

    #[test]
    fn zero_matrix_has_rank_zero() {
        assert_eq!(F2Matrix::zeros(3, 3).rank(), 0);
        assert_eq!(matrix_rank(&Matrix::Rational(vec![vec![RationalFn::zero(); 3]; 3])), 0);
    }

    #[test]
    fn cyclic_matrix_over_both_fields() {
        // det = 1 + t³ over F₂(t); rows sum to zero at t = 1
        let m = vec![
            vec![lp("1"), lp("t"), lp("0")],
            vec![lp("0"), lp("1"), lp("t")],
            vec![lp("t"), lp("0"), lp("1")],
        ];
        assert_eq!(matrix_rank(&Matrix::Rational(m)), 3);
        let f2 = F2Matrix::from_rows(&[vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]]);
        assert_eq!(matrix_rank(&Matrix::F2(f2)), 2);
    }

    #[test]
    fn wide_f2_rank() {
        let mut m = F2Matrix::zeros(3, 130);
        m.set(0, 129, true);
        m.set(1, 129, true);
        m.set(1, 3, true);
        m.set(2, 3, true);
        assert_eq!(m.rank(), 2);
        m.flip(2, 70);
        assert_eq!(m.rank(), 3);
    }
}
