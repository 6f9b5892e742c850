//! Laurent polynomials F₂[t, t⁻¹] and the rational function field F₂(t).
//!
//! Twisted complexes in this crate have Laurent polynomial entries. Their
//! homology is computed over F₂(t) rather than the semi-infinite Laurent
//! series field: for a finitely generated free complex over the PID
//! F₂[t, t⁻¹] the homology dimension over any field containing it equals the
//! rank of the free part, so any such field gives the same answer, and F₂(t)
//! has exact finite representatives.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use super::poly::Poly2;

/// `t^shift · body`, where `body` is zero or has nonzero constant term.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    shift: i64,
    body: Poly2,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn t() -> Self {
        Self::monomial(1)
    }

    pub fn monomial(exp: i64) -> Self {
        LaurentPoly {
            shift: exp,
            body: Poly2::one(),
        }
    }

    pub fn from_exponents<I: IntoIterator<Item = i64>>(exps: I) -> Self {
        let exps: Vec<i64> = exps.into_iter().collect();
        let Some(lo) = exps.iter().copied().min() else {
            return Self::zero();
        };
        Self::normalized(lo, Poly2::from_exponents(exps.iter().map(|e| (e - lo) as usize)))
    }

    fn normalized(shift: i64, body: Poly2) -> Self {
        match body.valuation() {
            None => Self::zero(),
            Some(v) => LaurentPoly {
                shift: shift + v as i64,
                body: body.shr(v),
            },
        }
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.shift == 0 && self.body.is_one()
    }

    /// True for F₂ constants (0 or 1).
    pub fn is_constant(&self) -> bool {
        self.is_zero() || self.is_one()
    }

    pub fn exponents(&self) -> impl Iterator<Item = i64> + '_ {
        self.body.exponents().map(move |e| e as i64 + self.shift)
    }

    pub fn is_monomial(&self) -> bool {
        self.body.is_one()
    }

    /// Specialization t ↦ 1.
    pub fn eval_one(&self) -> bool {
        self.body.eval_one()
    }

    pub(crate) fn parts(&self) -> (i64, &Poly2) {
        (self.shift, &self.body)
    }

    pub(crate) fn from_parts(shift: i64, body: Poly2) -> Self {
        Self::normalized(shift, body)
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.shift.min(rhs.shift);
        let a = self.body.shl((self.shift - lo) as usize);
        let b = rhs.body.shl((rhs.shift - lo) as usize);
        LaurentPoly::normalized(lo, &a + &b)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        LaurentPoly::normalized(self.shift + rhs.shift, &self.body * &rhs.body)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        &self + &rhs
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
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

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("malformed Laurent polynomial `{0}`")]
pub struct BadLaurent(pub String);

impl FromStr for LaurentPoly {
    type Err = BadLaurent;

    /// Accepts `0`, or `+`-separated terms each of the form `1`, `t`, `t^k`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || BadLaurent(s.to_string());
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut exps = Vec::new();
        for term in s.split('+') {
            let term = term.trim();
            let e = match term {
                "1" => 0,
                "t" => 1,
                _ => term
                    .strip_prefix("t^")
                    .and_then(|k| k.parse::<i64>().ok())
                    .ok_or_else(bad)?,
            };
            exps.push(e);
        }
        Ok(Self::from_exponents(exps))
    }
}

/// An element of F₂(t), kept in lowest terms as `t^s · a(t) / b(t)` with
/// `a(0) = b(0) = 1`.
#[derive(Clone)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn zero() -> Self {
        RationalFn {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        RationalFn::from(LaurentPoly::one())
    }

    /// Returns `None` when `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::zero());
        }
        let (ns, nb) = num.parts();
        let (ds, db) = den.parts();
        let g = Poly2::gcd(nb, db);
        let nb = nb.div_rem(&g).0;
        let db = db.div_rem(&g).0;
        Some(RationalFn {
            num: LaurentPoly::from_parts(ns - ds, nb),
            den: LaurentPoly::from_parts(0, db),
        })
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        RationalFn::new(self.den.clone(), self.num.clone())
    }
}

impl From<LaurentPoly> for RationalFn {
    fn from(p: LaurentPoly) -> Self {
        RationalFn {
            num: p,
            den: LaurentPoly::one(),
        }
    }
}

impl PartialEq for RationalFn {
    fn eq(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RationalFn {}

impl Add for &RationalFn {
    type Output = RationalFn;

    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RationalFn::new(num, &self.den * &rhs.den).expect("product of nonzero denominators")
    }
}

impl Mul for &RationalFn {
    type Output = RationalFn;

    fn mul(self, rhs: &RationalFn) -> RationalFn {
        RationalFn::new(&self.num * &rhs.num, &self.den * &rhs.den)
            .expect("product of nonzero denominators")
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFn({self})")
    }
}
