use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign};

/// An element `a + b·ω` of GF(4), where `ω² + ω + 1 = 0`.
///
/// Bit 0 holds `a`, bit 1 holds `b`; so `0, 1, ω, ω²` are encoded as
/// `0, 1, 2, 3` (ω² = 1 + ω).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Debug)]
pub struct Gf4(u8);

// MUL[a][b] under ω² = ω + 1.
const MUL: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];

impl Gf4 {
    pub const ZERO: Gf4 = Gf4(0);
    pub const ONE: Gf4 = Gf4(1);
    pub const OMEGA: Gf4 = Gf4(2);
    pub const OMEGA2: Gf4 = Gf4(3);

    pub const ALL: [Gf4; 4] = [Gf4::ZERO, Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];
    pub const UNITS: [Gf4; 3] = [Gf4::ONE, Gf4::OMEGA, Gf4::OMEGA2];

    /// Builds an element from its coordinates over the basis `{1, ω}`.
    pub const fn new(one: bool, omega: bool) -> Gf4 {
        Gf4(one as u8 | (omega as u8) << 1)
    }

    pub const fn from_bits(bits: u8) -> Gf4 {
        Gf4(bits & 3)
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    /// Coefficient of 1.
    pub const fn one_part(self) -> bool {
        self.0 & 1 == 1
    }

    /// Coefficient of ω.
    pub const fn omega_part(self) -> bool {
        self.0 & 2 == 2
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Frobenius conjugation `x ↦ x²`.
    pub const fn conj(self) -> Gf4 {
        // a + bω ↦ a + bω² = (a + b) + bω
        let a = self.0 & 1;
        let b = (self.0 >> 1) & 1;
        Gf4((a ^ b) | b << 1)
    }

    pub fn inv(self) -> Option<Gf4> {
        match self.0 {
            0 => None,
            1 => Some(Gf4::ONE),
            2 => Some(Gf4::OMEGA2),
            _ => Some(Gf4::OMEGA),
        }
    }

    pub fn from_char(c: char) -> Option<Gf4> {
        match c {
            '0' => Some(Gf4::ZERO),
            '1' => Some(Gf4::ONE),
            'w' => Some(Gf4::OMEGA),
            'W' => Some(Gf4::OMEGA2),
            _ => None,
        }
    }

    pub fn to_char(self) -> char {
        ['0', '1', 'w', 'W'][self.0 as usize]
    }
}

/// Field multiplication.
pub fn gf4_mul(a: Gf4, b: Gf4) -> Gf4 {
    Gf4(MUL[a.0 as usize][b.0 as usize])
}

impl Add for Gf4 {
    type Output = Gf4;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn add(self, rhs: Gf4) -> Gf4 {
        Gf4(self.0 ^ rhs.0)
    }
}

impl AddAssign for Gf4 {
    #[allow(clippy::suspicious_op_assign_impl)]
    fn add_assign(&mut self, rhs: Gf4) {
        self.0 ^= rhs.0;
    }
}

impl Mul for Gf4 {
    type Output = Gf4;
    fn mul(self, rhs: Gf4) -> Gf4 {
        gf4_mul(self, rhs)
    }
}

impl MulAssign for Gf4 {
    fn mul_assign(&mut self, rhs: Gf4) {
        *self = gf4_mul(*self, rhs);
    }
}

impl fmt::Display for Gf4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_examples() {
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA, Gf4::OMEGA2);
        assert_eq!(Gf4::OMEGA * Gf4::OMEGA2, Gf4::ONE);
        assert_eq!(Gf4::ZERO * Gf4::OMEGA, Gf4::ZERO);
        // ω² + ω + 1 = 0
        assert_eq!(Gf4::OMEGA2 + Gf4::OMEGA + Gf4::ONE, Gf4::ZERO);
    }

    #[test]
    fn conjugation_examples() {
        assert_eq!(Gf4::OMEGA.conj(), Gf4::OMEGA2);
        assert_eq!(Gf4::ONE.conj(), Gf4::ONE);
        assert_eq!(Gf4::ZERO.conj(), Gf4::ZERO);
        assert_eq!(Gf4::OMEGA.conj().conj(), Gf4::OMEGA);
        for x in Gf4::ALL {
            assert_eq!(x.conj(), x * x);
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for a in Gf4::ALL {
            assert_eq!(a + Gf4::ZERO, a);
            assert_eq!(a * Gf4::ONE, a);
            assert_eq!(a + a, Gf4::ZERO);
            if let Some(inv) = a.inv() {
                assert_eq!(a * inv, Gf4::ONE);
            } else {
                assert!(a.is_zero());
            }
            for b in Gf4::ALL {
                assert_eq!(a + b, b + a);
                assert_eq!(a * b, b * a);
                // Frobenius is a ring homomorphism
                assert_eq!((a + b).conj(), a.conj() + b.conj());
                assert_eq!((a * b).conj(), a.conj() * b.conj());
                for c in Gf4::ALL {
                    assert_eq!((a + b) + c, a + (b + c));
                    assert_eq!((a * b) * c, a * (b * c));
                    assert_eq!(a * (b + c), a * b + a * c);
                }
            }
        }
        // multiplicative group is cyclic of order 3, generated by ω
        let mut x = Gf4::OMEGA;
        let mut seen = vec![];
        for _ in 0..3 {
            seen.push(x);
            x *= Gf4::OMEGA;
        }
        assert_eq!(x, Gf4::OMEGA);
        seen.sort();
        assert_eq!(seen, Gf4::UNITS.to_vec());
    }

    #[test]
    fn chars_round_trip() {
        for x in Gf4::ALL {
            assert_eq!(Gf4::from_char(x.to_char()), Some(x));
        }
        assert_eq!(Gf4::from_char('x'), None);
    }
}
