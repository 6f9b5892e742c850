//! Torus algebra and exact coefficient arithmetic.

mod laurent;
mod matrix;
mod poly;
mod torus;

pub use laurent::{BadLaurent, LaurentPoly, RationalFn};
pub use matrix::{matrix_rank, F2Matrix, Matrix};
pub use poly::Poly2;
pub use torus::{alg_mul, AlgebraElement, Basis, Idempotent, UnknownSymbol};
