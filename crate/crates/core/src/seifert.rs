//! Seifert fibered rational homology solid tori.
//!
//! A space is given by its base orbifold (a disk or a Möbius band) and
//! unnormalized Seifert invariants `rᵢ = βᵢ/αᵢ`. Boundary classes are written
//! in the basis `(h, f)`: `h` the boundary of a section, `f` a regular fiber.
//! A slope `a·h + b·f` is stored as `(a, b)`.
//!
//! `H₁` is presented with generators `x₁, …, x_k, f, h` (and `c` for the
//! crosscap of a Möbius base) and relations `αᵢxᵢ + βᵢf = 0`, `h = Σxᵢ` on
//! a disk, or `2f = 0`, `h = 2c + Σxᵢ` on a Möbius band.
//!
//! Over a disk, the invariants can be shifted by integers one at a time by
//! changing the section, so only `rᵢ mod 1` is intrinsic; the Euler number
//! `e = Σrᵢ` is intrinsic only mod 1. The λ-filling of a disk-base space
//! with `k` exceptional fibers has a singular fiber of order equal to the
//! denominator of `e`, and is `S²×S¹` for `k = 2` exactly when `e ∈ ℤ`.

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;

type Q = Ratio<i64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Base {
    Disk,
    Mobius,
}

impl Base {
    pub fn name(self) -> &'static str {
        match self {
            Base::Disk => "disk",
            Base::Mobius => "mobius",
        }
    }
}

impl FromStr for Base {
    type Err = SeifertError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "disk" => Ok(Base::Disk),
            "mobius" => Ok(Base::Mobius),
            _ => Err(SeifertError::UnknownBase(s.to_string())),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum SeifertError {
    #[error("unknown base orbifold `{0}`; expected disk or mobius")]
    UnknownBase(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertData {
    pub base: Base,
    pub cones: Vec<Q>,
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cones: Vec<String> = self.cones.iter().map(ToString::to_string).collect();
        write!(f, "base={}; cones={}", self.base.name(), cones.join(","))
    }
}

/// Data with integer invariants dropped; `e` still counts them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalized {
    pub base: Base,
    pub cones: Vec<Q>,
    pub e: Q,
}

impl Normalized {
    /// Orders `αᵢ ≥ 2` of the exceptional fibers.
    pub fn orders(&self) -> Vec<i64> {
        self.cones.iter().map(|r| *r.denom()).collect()
    }
}

pub fn normalize(d: &SeifertData) -> Normalized {
    Normalized {
        base: d.base,
        cones: d.cones.iter().copied().filter(|r| !r.is_integer()).collect(),
        e: d.cones.iter().sum(),
    }
}

/// `H₁ ≅ ℤ^free_rank ⊕ ⨁ ℤ/tᵢ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1 {
    pub free_rank: usize,
    pub torsion: Vec<u64>,
}

impl H1 {
    pub fn is_infinite(&self) -> bool {
        self.free_rank > 0
    }
}

/// Relation matrix of `H₁` (one row per relation), optionally with the
/// filling relation `a·h + b·f = 0` appended.
pub fn h1_presentation(d: &SeifertData, filling: Option<(i64, i64)>) -> Vec<Vec<i64>> {
    let k = d.cones.len();
    let extra = usize::from(d.base == Base::Mobius);
    let n = k + 2 + extra;
    let (fi, hi, ci) = (k, k + 1, k + 2);
    let mut rows = Vec::new();
    for (i, r) in d.cones.iter().enumerate() {
        let mut row = vec![0; n];
        row[i] = *r.denom();
        row[fi] = *r.numer();
        rows.push(row);
    }
    let mut section = vec![0; n];
    section[hi] = 1;
    for x in section.iter_mut().take(k) {
        *x = -1;
    }
    if d.base == Base::Mobius {
        section[ci] = -2;
        let mut twist = vec![0; n];
        twist[fi] = 2;
        rows.push(twist);
    }
    rows.push(section);
    if let Some((a, b)) = filling {
        let mut row = vec![0; n];
        row[hi] = a;
        row[fi] = b;
        rows.push(row);
    }
    rows
}

/// Nonzero diagonal entries of the Smith normal form, in divisibility order.
pub fn smith_invariants(m: &[Vec<i64>]) -> Vec<u64> {
    let mut a: Vec<Vec<i128>> = m.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // pivot: smallest nonzero entry of the remaining block
        let Some((pi, pj)) = (t..rows)
            .flat_map(|i| (t..cols).map(move |j| (i, j)))
            .filter(|&(i, j)| a[i][j] != 0)
            .min_by_key(|&(i, j)| a[i][j].abs())
        else {
            break;
        };
        a.swap(t, pi);
        for row in a.iter_mut() {
            row.swap(t, pj);
        }
        let mut clean = true;
        for i in t + 1..rows {
            let q = a[i][t] / a[t][t];
            if q != 0 {
                for j in t..cols {
                    a[i][j] -= q * a[t][j];
                }
            }
            clean &= a[i][t] == 0;
        }
        for j in t + 1..cols {
            let q = a[t][j] / a[t][t];
            if q != 0 {
                for i in t..rows {
                    a[i][j] -= q * a[i][t];
                }
            }
            clean &= a[t][j] == 0;
        }
        if !clean {
            continue;
        }
        // the pivot must divide the rest of the block
        let p = a[t][t];
        if let Some(i) = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0)) {
            for j in t..cols {
                a[t][j] += a[i][j];
            }
            continue;
        }
        out.push(p.unsigned_abs() as u64);
        t += 1;
    }
    out
}

pub fn h1(d: &SeifertData, filling: Option<(i64, i64)>) -> H1 {
    let m = h1_presentation(d, filling);
    let n = m[0].len();
    let inv = smith_invariants(&m);
    H1 {
        free_rank: n - inv.len(),
        torsion: inv.into_iter().filter(|&x| x > 1).collect(),
    }
}

/// A nonzero rational vector `w` with `R·w = 0`, for `R` of corank one.
fn kernel_vector(m: &[Vec<i64>]) -> Vec<Q> {
    let mut a: Vec<Vec<Q>> = m.iter().map(|r| r.iter().map(|&x| Q::from_integer(x)).collect()).collect();
    let cols = a[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..a.len()).find(|&i| a[i][c] != Q::from_integer(0)) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].recip();
        for x in a[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != Q::from_integer(0) {
                let f = a[i][c];
                for j in 0..cols {
                    let v = a[r][j];
                    a[i][j] -= f * v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free = (0..cols).find(|c| !pivots.contains(c)).expect("corank one");
    let mut w = vec![Q::from_integer(0); cols];
    w[free] = Q::from_integer(1);
    for (row, &c) in pivots.iter().enumerate() {
        w[c] = -a[row][free];
    }
    w
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Longitude {
    /// `e = Σrᵢ` over all stored invariants.
    pub e: Q,
    /// λ as `(a, b)` meaning `a·h + b·f`, primitive, `a ≥ 0`.
    pub lambda: (i64, i64),
    /// Distance from λ to the fiber slope `f`.
    pub delta: u64,
}

/// The rational longitude: the unique boundary slope that is torsion in
/// `H₁`, found as the kernel of `H₁(∂) → H₁(M; ℚ)`.
pub fn euler_and_longitude(d: &SeifertData) -> Longitude {
    let m = h1_presentation(d, None);
    let k = d.cones.len();
    let w = kernel_vector(&m);
    let (wf, wh) = (w[k], w[k + 1]);
    // a·wh + b·wf = 0
    let scale = wf.denom().lcm(wh.denom());
    let (mut a, mut b) = ((wf * scale).to_integer(), (-wh * scale).to_integer());
    let g = a.gcd(&b);
    a /= g;
    b /= g;
    if a < 0 || (a == 0 && b < 0) {
        a = -a;
        b = -b;
    }
    Longitude {
        e: d.cones.iter().sum(),
        lambda: (a, b),
        delta: a.unsigned_abs(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Reason {
    SolidTorus,
    MobiusBase,
    ZeroEulerPair,
    GenericDiskBase,
}

impl Reason {
    pub fn name(self) -> &'static str {
        match self {
            Reason::SolidTorus => "solid_torus",
            Reason::MobiusBase => "mobius_base",
            Reason::ZeroEulerPair => "zero_euler_pair",
            Reason::GenericDiskBase => "generic_disk_base",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertVerdict {
    pub is_hfst: bool,
    pub reason: Reason,
    pub longitude: Longitude,
    /// The λ-filling: `S2(α₁, …, α_k, Δ)` over a disk, or the Möbius case.
    pub filled_form: String,
}

impl fmt::Display for SeifertVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l = &self.longitude;
        writeln!(f, "is_hfst: {}", self.is_hfst)?;
        writeln!(f, "reason: {}", self.reason.name())?;
        writeln!(f, "euler: {}", l.e)?;
        writeln!(f, "lambda: {}h{:+}f", l.lambda.0, l.lambda.1)?;
        writeln!(f, "delta_fiber_lambda: {}", l.delta)?;
        writeln!(f, "filled: {}", self.filled_form)
    }
}

pub fn classify(d: &SeifertData) -> SeifertVerdict {
    let n = normalize(d);
    let longitude = euler_and_longitude(d);
    let k = n.cones.len();
    let (is_hfst, reason) = match n.base {
        Base::Mobius => (true, Reason::MobiusBase),
        Base::Disk if k <= 1 => (true, Reason::SolidTorus),
        Base::Disk if k == 2 && n.e.is_integer() => (true, Reason::ZeroEulerPair),
        Base::Disk => (false, Reason::GenericDiskBase),
    };
    let filled_form = match n.base {
        Base::Mobius => "fiber filling of a Mobius-base space (nonseparating sphere)".to_string(),
        Base::Disk => {
            let mut orders: Vec<String> = n.orders().iter().map(ToString::to_string).collect();
            orders.push(longitude.delta.to_string());
            format!("S2({})", orders.join(","))
        }
    };
    SeifertVerdict {
        is_hfst,
        reason,
        longitude,
        filled_form,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn disk(cones: &[(i64, i64)]) -> SeifertData {
        SeifertData {
            base: Base::Disk,
            cones: cones.iter().map(|&(b, a)| Q::new(b, a)).collect(),
        }
    }

    #[test]
    fn normalization() {
        let n = normalize(&disk(&[(3, 1), (1, 2), (-1, 2)]));
        assert_eq!(n.cones, [Q::new(1, 2), Q::new(-1, 2)]);
        assert_eq!(n.e, Q::from_integer(3));
        let m = normalize(&SeifertData {
            base: Base::Mobius,
            cones: vec![Q::from_integer(1)],
        });
        assert!(m.cones.is_empty());
        assert_eq!(m.e, Q::from_integer(1));
    }

    #[test]
    fn smith_form() {
        assert_eq!(smith_invariants(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]), [2, 6, 12]);
        assert_eq!(smith_invariants(&[vec![0, 0], vec![0, 0]]), Vec::<u64>::new());
        assert_eq!(smith_invariants(&[vec![4, 6]]), [2]);
    }

    #[test]
    fn solid_torus_longitude() {
        let l = euler_and_longitude(&disk(&[]));
        assert_eq!(l.lambda, (1, 0));
        assert_eq!(l.delta, 1);
        assert_eq!(h1(&disk(&[]), None), H1 { free_rank: 1, torsion: vec![] });
    }

    #[test]
    fn longitude_of_generic_pair() {
        let d = disk(&[(1, 2), (1, 3)]);
        let l = euler_and_longitude(&d);
        assert_eq!(l.e, Q::new(5, 6));
        assert_eq!(l.lambda, (6, 5));
        assert_eq!(l.delta, 6);
        assert!(h1(&d, Some(l.lambda)).is_infinite());
        assert!(!h1(&d, Some((1, 0))).is_infinite());
    }

    #[test]
    fn mobius_longitude_is_the_fiber() {
        let d = SeifertData {
            base: Base::Mobius,
            cones: vec![Q::new(1, 3), Q::new(2, 5)],
        };
        let l = euler_and_longitude(&d);
        assert_eq!((l.lambda, l.delta), ((0, 1), 0));
    }

    #[test]
    fn theorem_table() {
        assert!(classify(&disk(&[(1, 2), (-1, 2)])).is_hfst);
        assert_eq!(classify(&disk(&[(1, 2), (-1, 2)])).reason, Reason::ZeroEulerPair);
        assert_eq!(classify(&disk(&[(1, 2), (-1, 2)])).filled_form, "S2(2,2,1)");
        assert!(!classify(&disk(&[(1, 2), (1, 3)])).is_hfst);
        assert!(!classify(&disk(&[(1, 2), (-1, 3)])).is_hfst);
        assert!(classify(&disk(&[(2, 5)])).is_hfst);
        let m = SeifertData {
            base: Base::Mobius,
            cones: vec![Q::new(1, 3), Q::new(2, 5)],
        };
        assert_eq!(classify(&m).reason, Reason::MobiusBase);
    }

    #[test]
    fn display_round_trip_shape() {
        assert_eq!(disk(&[(1, 2), (-4, 1)]).to_string(), "base=disk; cones=1/2,-4");
    }
}
