use super::PolyF2;
use crate::error::{Error, Result};

/// The field `F2[Y]/(f)` for an irreducible `f` of degree at most 62.
/// Elements are reduced polynomials stored as bit masks.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExtField {
    modulus: PolyF2,
    degree: u32,
}

impl ExtField {
    /// Irreducibility of `modulus` is the caller's responsibility.
    pub fn new(modulus: PolyF2) -> Result<ExtField> {
        match modulus.degree() {
            Some(d) if (1..=62).contains(&d) => Ok(ExtField { modulus, degree: d }),
            _ => Err(Error::Precondition(format!(
                "unsupported field modulus {modulus}"
            ))),
        }
    }

    pub fn modulus(&self) -> PolyF2 {
        self.modulus
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn reduce(&self, p: PolyF2) -> u64 {
        p.rem(self.modulus).bits() as u64
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        PolyF2::from_bits(a as u128)
            .mul_mod(PolyF2::from_bits(b as u128), self.modulus)
            .bits() as u64
    }

    pub fn pow(&self, a: u64, e: u128) -> u64 {
        PolyF2::from_bits(a as u128).pow_mod(e, self.modulus).bits() as u64
    }

    pub fn inv(&self, a: u64) -> Option<u64> {
        if a == 0 {
            None
        } else {
            Some(self.pow(a, (1u128 << self.degree) - 2))
        }
    }
}
