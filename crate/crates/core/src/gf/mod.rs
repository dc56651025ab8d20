//! Finite-field arithmetic: GF(4), polynomials over GF(2), the group ring
//! `F2[Y]/(Y^m - 1)` and the factorization of `Y^m - 1` into irreducibles.

mod ext;
mod factor;
mod gf4;
mod poly;
mod ring;

pub use ext::ExtField;
pub use factor::{factor_cyclotomic, Factorization};
pub use gf4::{gf4_mul, Gf4};
pub use poly::PolyF2;
pub use ring::{ring_conj, RingElem};

/// Largest `m` accepted by [`factor_cyclotomic`] and [`RingElem`].
pub const MAX_RING_M: usize = 63;
