//! Permutation equivalence of binary codes: canonical forms, automorphism
//! group orders and equivalence tests.

mod canon;
mod perm;

pub use canon::{
    analyze, are_equivalent, aut_order, canonicalize, fnv1a_128, AutInfo, CanonOptions,
    CanonicalForm, Equivalence, DEFAULT_ENUM_LOG2, DEFAULT_NODE_BUDGET, MAX_CANON_LEN,
};
pub use perm::{compose, identity, inverse, Perm, StabChain};
