use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A polynomial over GF(2) of degree at most 127, bit `i` holding the
/// coefficient of `Y^i`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Debug)]
pub struct PolyF2(u128);

impl PolyF2 {
    pub const ZERO: PolyF2 = PolyF2(0);
    pub const ONE: PolyF2 = PolyF2(1);
    /// The indeterminate `Y`.
    pub const Y: PolyF2 = PolyF2(2);

    pub const MAX_DEGREE: u32 = 127;

    pub const fn from_bits(bits: u128) -> PolyF2 {
        PolyF2(bits)
    }

    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `Y^e`.
    pub fn monomial(e: u32) -> PolyF2 {
        assert!(e <= Self::MAX_DEGREE, "degree {e} exceeds 127");
        PolyF2(1u128 << e)
    }

    /// `Y^m + 1` (equal to `Y^m - 1` in characteristic 2).
    pub fn x_m_minus_1(m: usize) -> PolyF2 {
        PolyF2::monomial(m as u32) + PolyF2::ONE
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Degree, or `None` for the zero polynomial.
    pub const fn degree(self) -> Option<u32> {
        if self.0 == 0 {
            None
        } else {
            Some(127 - self.0.leading_zeros())
        }
    }

    pub const fn coeff(self, i: u32) -> bool {
        i < 128 && (self.0 >> i) & 1 == 1
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    /// Carry-less product. Panics if the result would exceed degree 127.
    pub fn mul(self, rhs: PolyF2) -> PolyF2 {
        match (self.degree(), rhs.degree()) {
            (Some(a), Some(b)) => {
                assert!(
                    a + b <= Self::MAX_DEGREE,
                    "product degree {} exceeds 127",
                    a + b
                );
                let mut acc = 0u128;
                let mut x = self.0;
                while x != 0 {
                    let i = x.trailing_zeros();
                    acc ^= rhs.0 << i;
                    x &= x - 1;
                }
                PolyF2(acc)
            }
            _ => PolyF2::ZERO,
        }
    }

    /// Euclidean division: `(quotient, remainder)`. Panics on a zero divisor.
    pub fn div_rem(self, divisor: PolyF2) -> (PolyF2, PolyF2) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let mut rem = self.0;
        let mut quo = 0u128;
        while let Some(rd) = PolyF2(rem).degree() {
            if rd < dd {
                break;
            }
            let shift = rd - dd;
            quo |= 1u128 << shift;
            rem ^= divisor.0 << shift;
        }
        (PolyF2(quo), PolyF2(rem))
    }

    pub fn rem(self, divisor: PolyF2) -> PolyF2 {
        self.div_rem(divisor).1
    }

    pub fn divides(self, other: PolyF2) -> bool {
        other.rem(self).is_zero()
    }

    /// Product reduced modulo `modulus`; both inputs must already be reduced
    /// and `modulus` must have degree at most 64.
    pub fn mul_mod(self, rhs: PolyF2, modulus: PolyF2) -> PolyF2 {
        self.mul(rhs).rem(modulus)
    }

    pub fn pow_mod(self, mut e: u128, modulus: PolyF2) -> PolyF2 {
        let mut base = self.rem(modulus);
        let mut acc = PolyF2::ONE.rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(base, modulus);
            }
            base = base.mul_mod(base, modulus);
            e >>= 1;
        }
        acc
    }

    pub fn gcd(self, other: PolyF2) -> PolyF2 {
        let (mut a, mut b) = (self, other);
        while !b.is_zero() {
            let r = a.rem(b);
            a = b;
            b = r;
        }
        a
    }

    /// `Y^deg(p) · p(1/Y)`.
    ///
    /// Rejects the zero polynomial and polynomials divisible by `Y`, whose
    /// reciprocal would drop in degree.
    pub fn reciprocal(self) -> Result<PolyF2> {
        let d = self
            .degree()
            .ok_or_else(|| Error::Precondition("reciprocal of the zero polynomial".into()))?;
        if !self.coeff(0) {
            return Err(Error::Precondition(format!(
                "reciprocal of {self} needs a nonzero constant term"
            )));
        }
        let rev = self.0.reverse_bits() >> (127 - d);
        Ok(PolyF2(rev))
    }

    pub fn is_self_reciprocal(self) -> bool {
        self.reciprocal().map(|r| r == self).unwrap_or(false)
    }

    /// Human-readable form such as `Y^3+Y+1`.
    pub fn pretty(self) -> String {
        let Some(d) = self.degree() else {
            return "0".to_string();
        };
        let mut terms = Vec::new();
        for i in (0..=d).rev() {
            if self.coeff(i) {
                terms.push(match i {
                    0 => "1".to_string(),
                    1 => "Y".to_string(),
                    _ => format!("Y^{i}"),
                });
            }
        }
        terms.join("+")
    }
}

impl std::ops::Add for PolyF2 {
    type Output = PolyF2;
    fn add(self, rhs: PolyF2) -> PolyF2 {
        PolyF2(self.0 ^ rhs.0)
    }
}

impl PartialOrd for PolyF2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for PolyF2 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

/// Big-endian coefficient string: `1011` is `Y^3+Y+1`.
impl fmt::Display for PolyF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree() {
            None => write!(f, "0"),
            Some(d) => {
                for i in (0..=d).rev() {
                    write!(f, "{}", if self.coeff(i) { '1' } else { '0' })?;
                }
                Ok(())
            }
        }
    }
}

impl FromStr for PolyF2 {
    type Err = Error;

    fn from_str(s: &str) -> Result<PolyF2> {
        let s = s.trim();
        if s.is_empty() || s.len() > 128 {
            return Err(Error::Parse {
                line: 0,
                msg: format!("bad polynomial string '{s}'"),
            });
        }
        let mut bits = 0u128;
        for c in s.chars() {
            bits <<= 1;
            match c {
                '0' => {}
                '1' => bits |= 1,
                _ => {
                    return Err(Error::Parse {
                        line: 0,
                        msg: format!("bad polynomial digit '{c}'"),
                    })
                }
            }
        }
        Ok(PolyF2(bits))
    }
}
