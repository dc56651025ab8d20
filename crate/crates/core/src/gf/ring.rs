use std::fmt;

use super::{PolyF2, MAX_RING_M};

/// An element of `R = F2[Y]/(Y^m - 1)`, bit `i` holding the coefficient of `Y^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct RingElem {
    m: usize,
    bits: u64,
}

impl RingElem {
    pub fn zero(m: usize) -> RingElem {
        RingElem::from_bits(m, 0)
    }

    pub fn one(m: usize) -> RingElem {
        RingElem::from_bits(m, 1)
    }

    /// `Y^e` reduced mod `Y^m - 1`.
    pub fn monomial(m: usize, e: usize) -> RingElem {
        RingElem::from_bits(m, 1u64 << (e % m))
    }

    /// Panics when `m` is 0 or above 63 or when `bits` has a bit at or above `m`.
    pub fn from_bits(m: usize, bits: u64) -> RingElem {
        assert!(
            (1..=MAX_RING_M).contains(&m),
            "ring modulus m = {m} out of range"
        );
        assert!(bits >> m == 0, "bits exceed degree m - 1");
        RingElem { m, bits }
    }

    /// Reduces an arbitrary polynomial mod `Y^m - 1`.
    pub fn from_poly(m: usize, p: PolyF2) -> RingElem {
        let mut bits = 0u64;
        let mut x = p.bits();
        while x != 0 {
            let i = x.trailing_zeros() as usize;
            bits ^= 1u64 << (i % m);
            x &= x - 1;
        }
        RingElem::from_bits(m, bits)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn poly(&self) -> PolyF2 {
        PolyF2::from_bits(self.bits as u128)
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn coeff(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    fn mask(&self) -> u64 {
        if self.m == 64 {
            u64::MAX
        } else {
            (1u64 << self.m) - 1
        }
    }

    /// Multiplication by `Y^s`, i.e. rotation of the coefficient vector.
    pub fn rotate(&self, s: usize) -> RingElem {
        let s = s % self.m;
        if s == 0 {
            return *self;
        }
        let bits = ((self.bits << s) | (self.bits >> (self.m - s))) & self.mask();
        RingElem { m: self.m, bits }
    }

    pub fn add(&self, rhs: &RingElem) -> RingElem {
        assert_eq!(self.m, rhs.m, "ring moduli differ");
        RingElem {
            m: self.m,
            bits: self.bits ^ rhs.bits,
        }
    }

    pub fn mul(&self, rhs: &RingElem) -> RingElem {
        assert_eq!(self.m, rhs.m, "ring moduli differ");
        let mut acc = 0u64;
        let mut x = self.bits;
        while x != 0 {
            let i = x.trailing_zeros() as usize;
            acc ^= rhs.rotate(i).bits;
            x &= x - 1;
        }
        RingElem {
            m: self.m,
            bits: acc,
        }
    }

    /// Conjugation `Y ↦ Y^(m-1)`.
    pub fn conj(&self) -> RingElem {
        let mut bits = 0u64;
        let mut x = self.bits;
        while x != 0 {
            let i = x.trailing_zeros() as usize;
            bits |= 1u64 << ((self.m - i) % self.m);
            x &= x - 1;
        }
        RingElem { m: self.m, bits }
    }
}

/// Substitutes `Y → Y^(m-1)` and reduces.
pub fn ring_conj(x: &RingElem) -> RingElem {
    x.conj()
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.poly().pretty())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn conj_examples() {
        assert_eq!(RingElem::monomial(3, 1).conj(), RingElem::monomial(3, 2));
        assert_eq!(
            RingElem::from_bits(3, 0b011).conj(),
            RingElem::from_bits(3, 0b101)
        );
        assert_eq!(RingElem::monomial(5, 2).conj(), RingElem::monomial(5, 3));
        assert_eq!(RingElem::one(5).conj(), RingElem::one(5));
    }

    #[test]
    fn conj_is_involutive_automorphism_m3_exhaustive() {
        for a in 0..8u64 {
            let x = RingElem::from_bits(3, a);
            assert_eq!(x.conj().conj(), x);
            for b in 0..8u64 {
                let y = RingElem::from_bits(3, b);
                assert_eq!(x.add(&y).conj(), x.conj().add(&y.conj()));
                assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
            }
        }
    }

    #[test]
    fn conj_is_involutive_automorphism_randomized() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for m in (1..=15).step_by(2) {
            let mask = (1u64 << m) - 1;
            for _ in 0..200 {
                let x = RingElem::from_bits(m, rng.random::<u64>() & mask);
                let y = RingElem::from_bits(m, rng.random::<u64>() & mask);
                assert_eq!(x.conj().conj(), x);
                assert_eq!(x.add(&y).conj(), x.conj().add(&y.conj()));
                assert_eq!(x.mul(&y).conj(), x.conj().mul(&y.conj()));
            }
        }
    }

    #[test]
    fn multiplication_matches_polynomial_reduction() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for m in [3usize, 5, 7, 9, 31] {
            let mask = (1u64 << m) - 1;
            for _ in 0..50 {
                let a = rng.random::<u64>() & mask;
                let b = rng.random::<u64>() & mask;
                let x = RingElem::from_bits(m, a);
                let y = RingElem::from_bits(m, b);
                let full = PolyF2::from_bits(a as u128).mul(PolyF2::from_bits(b as u128));
                let reduced = full.rem(PolyF2::x_m_minus_1(m));
                assert_eq!(x.mul(&y), RingElem::from_poly(m, reduced));
            }
        }
    }
}
