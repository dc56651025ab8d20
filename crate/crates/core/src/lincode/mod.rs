//! Linear codes over GF(2) and GF(4): canonical generator matrices, duals,
//! self-duality and the weight/distance kernels.

mod binary;
mod enumerator;
mod format;
mod kernel;
mod quaternary;
mod weights;

pub use binary::BinaryCode;
pub use enumerator::{check_divisibility, classify_type, SelfDualType, WeightEnumerator};
pub use format::{format_code, format_codes, parse_codes, read_codes, Code, CodeEntry};
pub use quaternary::{Gf4Vector, QuaternaryCode};
pub use weights::{min_distance, weight_enumerator, EnumOptions, MinDistance, DEFAULT_BUDGET_LOG2};

/// Which inner product a self-duality test uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InnerProduct {
    Euclidean,
    Hermitian,
}

/// `C = C^⊥`: Euclidean for binary codes, Hermitian for quaternary codes.
/// Any other pairing is reported as not self-dual.
pub fn is_self_dual(c: &Code, ip: InnerProduct) -> bool {
    match (c, ip) {
        (Code::Binary(b), InnerProduct::Euclidean) => b.is_self_dual(),
        (Code::Quaternary(q), InnerProduct::Hermitian) => q.is_hermitian_self_dual(),
        _ => false,
    }
}
