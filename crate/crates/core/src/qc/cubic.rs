use super::shape::{check_quasi_cyclic, QcShape};
use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::gf::Gf4;
use crate::lincode::{BinaryCode, EnumOptions, Gf4Vector, QuaternaryCode};

/// A binary code `C1` and a quaternary code `C2` of the same length ℓ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicComponents {
    pub c1: BinaryCode,
    pub c2: QuaternaryCode,
}

impl CubicComponents {
    pub fn new(c1: BinaryCode, c2: QuaternaryCode) -> Result<CubicComponents> {
        if c1.n() != c2.n() {
            return Err(Error::LengthMismatch {
                expected: c1.n(),
                got: c2.n(),
            });
        }
        Ok(CubicComponents { c1, c2 })
    }

    pub fn ell(&self) -> usize {
        self.c1.n()
    }
}

fn concat3(ell: usize, blocks: [&BitVector; 3]) -> BitVector {
    let mut out = BitVector::zeros(3 * ell);
    for (b, v) in blocks.iter().enumerate() {
        for j in (0..ell).filter(|&j| v.get(j)) {
            out.set(b * ell + j, true);
        }
    }
    out
}

fn planes(v: &Gf4Vector) -> (BitVector, BitVector) {
    (
        BitVector::from_words(v.len(), v.one_plane().to_vec()),
        BitVector::from_words(v.len(), v.omega_plane().to_vec()),
    )
}

/// `{(x + a | x + b | x + a + b) : x ∈ C1, a + ωb ∈ C2}`, a binary code of
/// length 3ℓ and dimension `k1 + 2·k2`.
pub fn construct_cubic(parts: &CubicComponents) -> Result<BinaryCode> {
    let ell = parts.c1.n();
    if parts.c2.n() != ell {
        return Err(Error::LengthMismatch {
            expected: ell,
            got: parts.c2.n(),
        });
    }
    let mut rows = Vec::with_capacity(parts.c1.k() + 2 * parts.c2.k());
    for x in parts.c1.rows() {
        rows.push(concat3(ell, [&x, &x, &x]));
    }
    for g in parts.c2.rows() {
        for v in [g.clone(), g.scale(Gf4::OMEGA)] {
            let (a, b) = planes(&v);
            let mut ab = a.clone();
            ab.xor_assign(&b);
            rows.push(concat3(ell, [&a, &b, &ab]));
        }
    }
    BinaryCode::from_vectors(3 * ell, rows)
}

/// Inverse of [`construct_cubic`] for codes that are quasi-cyclic of index
/// `n/3`: with blocks `(u | v | w)` and `s = u + v + w`, `C1` collects `s` and
/// `C2` collects `(u + s) + ω(v + s)`.
pub fn decompose_cubic(c: &BinaryCode) -> Result<CubicComponents> {
    if !c.n().is_multiple_of(3) {
        return Err(Error::Precondition(format!(
            "length {} is not a multiple of 3",
            c.n()
        )));
    }
    let ell = c.n() / 3;
    let shape = QcShape::cubic(ell)?;
    if !check_quasi_cyclic(c, shape)? {
        return Err(Error::NotQuasiCyclic { ell });
    }
    let mut xs = Vec::new();
    let mut quats = Vec::new();
    for r in c.rows() {
        let block = |b: usize| {
            let mut v = BitVector::zeros(ell);
            for j in (0..ell).filter(|&j| r.get(b * ell + j)) {
                v.set(j, true);
            }
            v
        };
        let (u, v, w) = (block(0), block(1), block(2));
        let mut s = u.clone();
        s.xor_assign(&v);
        s.xor_assign(&w);
        let mut a = u;
        a.xor_assign(&s);
        let mut b = v;
        b.xor_assign(&s);
        quats.push(Gf4Vector::from_planes(
            ell,
            a.words().to_vec(),
            b.words().to_vec(),
        ));
        xs.push(s);
    }
    let c1 = BinaryCode::from_rows(ell, &xs)?;
    let c2 = QuaternaryCode::from_rows(ell, &quats)?;
    debug_assert_eq!(c.k(), c1.k() + 2 * c2.k());
    CubicComponents::new(c1, c2)
}

/// `C1` Euclidean self-dual and `C2` Hermitian self-dual.
pub fn cubic_selfdual_check(parts: &CubicComponents) -> bool {
    parts.c1.is_self_dual() && parts.c2.is_hermitian_self_dual()
}

/// `min(3·d1, 2·d2)`.
pub fn distance_bound_from(d1: u32, d2: u32) -> u32 {
    (3 * d1).min(2 * d2)
}

/// Upper bound `min(3·d(C1), 2·d(C2))` on the minimum distance of the cubic code.
pub fn distance_bound(parts: &CubicComponents, opts: &EnumOptions) -> Result<u32> {
    if parts.c1.k() == 0 || parts.c2.k() == 0 {
        return Err(Error::ZeroDimension);
    }
    let d1 = parts.c1.min_distance(None, opts)?.value();
    let d2 = parts.c2.min_distance(None, opts)?.value();
    Ok(distance_bound_from(d1, d2))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lincode::weight_enumerator;

    fn bin(n: usize, rows: &[&str]) -> BinaryCode {
        let rows: Vec<BitVector> = rows.iter().map(|r| BitVector::parse(r).unwrap()).collect();
        BinaryCode::from_rows(n, &rows).unwrap()
    }

    fn quat(n: usize, rows: &[&str]) -> QuaternaryCode {
        let rows: Vec<Gf4Vector> = rows.iter().map(|r| Gf4Vector::parse(r).unwrap()).collect();
        QuaternaryCode::from_rows(n, &rows).unwrap()
    }

    #[test]
    fn i2_components_give_the_6_3_2_code() {
        let parts = CubicComponents::new(bin(2, &["11"]), quat(2, &["11"])).unwrap();
        let c = construct_cubic(&parts).unwrap();
        assert_eq!((c.n(), c.k()), (6, 3));
        assert_eq!(
            weight_enumerator(&c, None).unwrap().counts(),
            &[1, 0, 3, 0, 3, 0, 1]
        );
        assert!(check_quasi_cyclic(&c, QcShape::cubic(2).unwrap()).unwrap());
        assert!(c.is_self_dual());
        assert_eq!(decompose_cubic(&c).unwrap(), parts);
        assert_eq!(distance_bound(&parts, &EnumOptions::default()).unwrap(), 4);
    }

    #[test]
    fn zero_components() {
        let parts = CubicComponents::new(BinaryCode::zero(3), QuaternaryCode::zero(3)).unwrap();
        assert_eq!(construct_cubic(&parts).unwrap(), BinaryCode::zero(9));
        assert_eq!(
            distance_bound(&parts, &EnumOptions::default()),
            Err(Error::ZeroDimension)
        );
    }

    #[test]
    fn repetition_only_code_has_zero_quaternary_part() {
        let c = bin(6, &["101010"]);
        let parts = decompose_cubic(&c).unwrap();
        assert_eq!(parts.c1, bin(2, &["10"]));
        assert_eq!(parts.c2.k(), 0);
    }

    #[test]
    fn selfdual_check_examples() {
        let p = |a: &str, b: &str| CubicComponents::new(bin(2, &[a]), quat(2, &[b])).unwrap();
        assert!(cubic_selfdual_check(&p("11", "11")));
        assert!(!cubic_selfdual_check(&p("11", "10")));
        assert!(!cubic_selfdual_check(&p("10", "11")));
    }

    #[test]
    fn bound_arithmetic() {
        assert_eq!(distance_bound_from(4, 6), 12);
        assert_eq!(distance_bound_from(2, 8), 6);
    }

    #[test]
    fn length_mismatch() {
        assert!(CubicComponents::new(bin(2, &["11"]), quat(4, &["1100"])).is_err());
        assert!(decompose_cubic(&bin(4, &["1100"])).is_err());
    }
}
