//! Construction, decomposition and analysis of binary quasi-cyclic
//! self-dual codes, built around the cubic `(x + a | x + b | x + a + b)`
//! construction of length-3ℓ codes from a binary and a quaternary code.

pub mod bits;
pub mod equiv;
pub mod error;
pub mod gf;
pub mod lincode;
pub mod qc;
pub mod search;

pub use bits::BitVector;
pub use error::{Error, Result};
pub use gf::{Factorization, Gf4, PolyF2, RingElem};
pub use lincode::{
    BinaryCode, Code, CodeEntry, Gf4Vector, QuaternaryCode, SelfDualType, WeightEnumerator,
};
