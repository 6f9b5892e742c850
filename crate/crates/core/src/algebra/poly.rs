//! Polynomials over F₂, bit-packed (bit `i` of the word vector is the
//! coefficient of `tⁱ`).

use std::fmt;
use std::ops::{Add, Mul};

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    // invariant: no trailing zero words
    words: Vec<u64>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { words: Vec::new() }
    }

    pub fn one() -> Self {
        Poly2 { words: vec![1] }
    }

    pub fn monomial(deg: usize) -> Self {
        let mut words = vec![0; deg / 64 + 1];
        words[deg / 64] = 1 << (deg % 64);
        Poly2 { words }
    }

    /// Builds a polynomial from the exponents with coefficient 1; repeated
    /// exponents cancel.
    pub fn from_exponents<I: IntoIterator<Item = usize>>(exps: I) -> Self {
        let mut p = Poly2::zero();
        for e in exps {
            p.flip(e);
        }
        p
    }

    fn flip(&mut self, i: usize) {
        if self.words.len() <= i / 64 {
            self.words.resize(i / 64 + 1, 0);
        }
        self.words[i / 64] ^= 1 << (i % 64);
        self.trim();
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words == [1]
    }

    pub fn coeff(&self, i: usize) -> bool {
        self.words
            .get(i / 64)
            .is_some_and(|w| (w >> (i % 64)) & 1 == 1)
    }

    pub fn degree(&self) -> Option<usize> {
        let top = *self.words.last()?;
        Some((self.words.len() - 1) * 64 + 63 - top.leading_zeros() as usize)
    }

    /// Exponent of the lowest nonzero term.
    pub fn valuation(&self) -> Option<usize> {
        self.words
            .iter()
            .position(|w| *w != 0)
            .map(|i| i * 64 + self.words[i].trailing_zeros() as usize)
    }

    pub fn exponents(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, w)| {
            (0..64).filter(move |b| (w >> b) & 1 == 1).map(move |b| i * 64 + b)
        })
    }

    pub fn shl(&self, k: usize) -> Self {
        if self.is_zero() {
            return Poly2::zero();
        }
        let (ws, bs) = (k / 64, k % 64);
        let mut words = vec![0; self.words.len() + ws + 1];
        for (i, w) in self.words.iter().enumerate() {
            words[i + ws] ^= w << bs;
            if bs != 0 {
                words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        let mut p = Poly2 { words };
        p.trim();
        p
    }

    pub fn shr(&self, k: usize) -> Self {
        let (ws, bs) = (k / 64, k % 64);
        if ws >= self.words.len() {
            return Poly2::zero();
        }
        let src = &self.words[ws..];
        let mut words = vec![0; src.len()];
        for i in 0..src.len() {
            words[i] = src[i] >> bs;
            if bs != 0 && i + 1 < src.len() {
                words[i] |= src[i + 1] << (64 - bs);
            }
        }
        let mut p = Poly2 { words };
        p.trim();
        p
    }

    /// Value at t = 1, i.e. parity of the number of terms.
    pub fn eval_one(&self) -> bool {
        self.words.iter().map(|w| w.count_ones()).sum::<u32>() % 2 == 1
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Poly2) -> (Poly2, Poly2) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.clone();
        let mut quot = Poly2::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quot.flip(shift);
            rem = &rem + &divisor.shl(shift);
        }
        (quot, rem)
    }

    pub fn gcd(a: &Poly2, b: &Poly2) -> Poly2 {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a
    }
}

impl Add for &Poly2 {
    type Output = Poly2;

    fn add(self, rhs: &Poly2) -> Poly2 {
        let (long, short) = if self.words.len() >= rhs.words.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut words = long.words.clone();
        for (w, s) in words.iter_mut().zip(&short.words) {
            *w ^= s;
        }
        let mut p = Poly2 { words };
        p.trim();
        p
    }
}

fn clmul(a: u64, b: u64) -> (u64, u64) {
    let (mut lo, mut hi) = (0u64, 0u64);
    let mut b = b;
    while b != 0 {
        let i = b.trailing_zeros();
        lo ^= a << i;
        if i != 0 {
            hi ^= a >> (64 - i);
        }
        b &= b - 1;
    }
    (lo, hi)
}

impl Mul for &Poly2 {
    type Output = Poly2;

    fn mul(self, rhs: &Poly2) -> Poly2 {
        if self.is_zero() || rhs.is_zero() {
            return Poly2::zero();
        }
        let mut words = vec![0u64; self.words.len() + rhs.words.len()];
        for (i, a) in self.words.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in rhs.words.iter().enumerate() {
                let (lo, hi) = clmul(*a, *b);
                words[i + j] ^= lo;
                words[i + j + 1] ^= hi;
            }
        }
        let mut p = Poly2 { words };
        p.trim();
        p
    }
}

impl fmt::Debug for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly2({self})")
    }
}

impl fmt::Display for Poly2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self
            .exponents()
            .map(|e| match e {
                0 => "1".to_string(),
                1 => "t".to_string(),
                _ => format!("t^{e}"),
            })
            .collect();
        f.write_str(&terms.join("+"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(exps: &[usize]) -> Poly2 {
        Poly2::from_exponents(exps.iter().copied())
    }

    #[test]
    fn frobenius_square() {
        // (1 + t)² = 1 + t² in characteristic two
        assert_eq!(&p(&[0, 1]) * &p(&[0, 1]), p(&[0, 2]));
    }

    #[test]
    fn cross_word_products() {
        let a = p(&[0, 63, 64, 130]);
        let b = p(&[1, 70]);
        let naive = {
            let mut out = Poly2::zero();
            for i in a.exponents() {
                for j in b.exponents() {
                    out.flip(i + j);
                }
            }
            out
        };
        assert_eq!(&a * &b, naive);
    }

    #[test]
    fn division_and_gcd() {
        // t³ + 1 = (t + 1)(t² + t + 1)
        let f = p(&[0, 3]);
        let (q, r) = f.div_rem(&p(&[0, 1]));
        assert_eq!(q, p(&[0, 1, 2]));
        assert!(r.is_zero());
        assert_eq!(Poly2::gcd(&f, &p(&[0, 2])), p(&[0, 1]));
        assert!(Poly2::gcd(&p(&[0, 1, 2]), &p(&[0, 1])).is_one());
    }

    #[test]
    fn shifts() {
        let a = p(&[0, 5, 63]);
        assert_eq!(a.shl(70).shr(70), a);
        assert_eq!(a.shl(1), p(&[1, 6, 64]));
        assert_eq!(a.valuation(), Some(0));
        assert_eq!(a.shl(65).valuation(), Some(65));
        assert_eq!(a.degree(), Some(63));
    }
}
