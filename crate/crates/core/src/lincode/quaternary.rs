use std::fmt;

use crate::bits::{get_bit, popcount, set_bit, words_for, BitMatrix};
use crate::error::{Error, Result};
use crate::gf::Gf4;

/// Multiplies the planes `(one, omega)` of a GF(4) vector by a scalar in place.
fn scale_planes(one: &mut [u64], omega: &mut [u64], s: Gf4) {
    match s.bits() {
        0 => {
            one.iter_mut().for_each(|w| *w = 0);
            omega.iter_mut().for_each(|w| *w = 0);
        }
        1 => {}
        // ω(a + bω) = b + (a + b)ω
        2 => {
            for (a, b) in one.iter_mut().zip(omega.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = y;
                *b = x ^ y;
            }
        }
        // ω²(a + bω) = (a + b) + aω
        _ => {
            for (a, b) in one.iter_mut().zip(omega.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x ^ y;
                *b = x;
            }
        }
    }
}

/// Hermitian form `Σ x_j · conj(y_j)` on plane representations.
pub(crate) fn hermitian_planes(a: &[u64], b: &[u64], c: &[u64], d: &[u64]) -> Gf4 {
    // (a + bω)((c + d) + dω) = (ac + ad + bd) + (ad + bc)ω
    let mut one = 0u32;
    let mut om = 0u32;
    for i in 0..a.len() {
        one ^= ((a[i] & c[i]) ^ (a[i] & d[i]) ^ (b[i] & d[i])).count_ones() & 1;
        om ^= ((a[i] & d[i]) ^ (b[i] & c[i])).count_ones() & 1;
    }
    Gf4::new(one == 1, om == 1)
}

/// A vector in GF(4)^len stored as two bit planes.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf4Vector {
    len: usize,
    one: Vec<u64>,
    omega: Vec<u64>,
}

impl Gf4Vector {
    pub fn zeros(len: usize) -> Gf4Vector {
        let w = words_for(len);
        Gf4Vector {
            len,
            one: vec![0; w],
            omega: vec![0; w],
        }
    }

    pub fn from_elems(elems: &[Gf4]) -> Gf4Vector {
        let mut v = Gf4Vector::zeros(elems.len());
        for (j, &e) in elems.iter().enumerate() {
            v.set(j, e);
        }
        v
    }

    pub fn from_planes(len: usize, one: Vec<u64>, omega: Vec<u64>) -> Gf4Vector {
        assert_eq!(one.len(), words_for(len));
        assert_eq!(omega.len(), words_for(len));
        Gf4Vector { len, one, omega }
    }

    pub fn parse(s: &str) -> Result<Gf4Vector> {
        let elems = s
            .chars()
            .map(|c| {
                Gf4::from_char(c).ok_or_else(|| Error::Parse {
                    line: 0,
                    msg: format!("invalid GF(4) symbol '{c}'"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Gf4Vector::from_elems(&elems))
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn one_plane(&self) -> &[u64] {
        &self.one
    }

    pub fn omega_plane(&self) -> &[u64] {
        &self.omega
    }

    pub fn get(&self, j: usize) -> Gf4 {
        assert!(j < self.len);
        Gf4::new(get_bit(&self.one, j), get_bit(&self.omega, j))
    }

    pub fn set(&mut self, j: usize, v: Gf4) {
        assert!(j < self.len);
        set_bit(&mut self.one, j, v.one_part());
        set_bit(&mut self.omega, j, v.omega_part());
    }

    pub fn elems(&self) -> Vec<Gf4> {
        (0..self.len).map(|j| self.get(j)).collect()
    }

    pub fn weight(&self) -> u32 {
        self.one
            .iter()
            .zip(&self.omega)
            .map(|(a, b)| (a | b).count_ones())
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        popcount(&self.one) == 0 && popcount(&self.omega) == 0
    }

    pub fn add(&self, other: &Gf4Vector) -> Gf4Vector {
        assert_eq!(self.len, other.len);
        let one = self
            .one
            .iter()
            .zip(&other.one)
            .map(|(a, b)| a ^ b)
            .collect();
        let omega = self
            .omega
            .iter()
            .zip(&other.omega)
            .map(|(a, b)| a ^ b)
            .collect();
        Gf4Vector {
            len: self.len,
            one,
            omega,
        }
    }

    pub fn scale(&self, s: Gf4) -> Gf4Vector {
        let mut out = self.clone();
        scale_planes(&mut out.one, &mut out.omega, s);
        out
    }

    /// Coordinate-wise Frobenius.
    pub fn conj(&self) -> Gf4Vector {
        let one = self
            .one
            .iter()
            .zip(&self.omega)
            .map(|(a, b)| a ^ b)
            .collect();
        Gf4Vector {
            len: self.len,
            one,
            omega: self.omega.clone(),
        }
    }

    /// `Σ x_j · conj(y_j)`.
    pub fn hermitian(&self, other: &Gf4Vector) -> Gf4 {
        assert_eq!(self.len, other.len);
        hermitian_planes(&self.one, &self.omega, &other.one, &other.omega)
    }

    /// `Σ x_j · y_j`.
    pub fn euclidean(&self, other: &Gf4Vector) -> Gf4 {
        self.hermitian(&other.conj())
    }
}

impl fmt::Display for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            write!(f, "{}", self.get(j))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Gf4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Gf4Vector({self})")
    }
}

/// A GF(4)-linear `[n, k]` code in reduced row-echelon form (pivots equal to 1,
/// lowest-index pivot columns).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuaternaryCode {
    one: BitMatrix,
    omega: BitMatrix,
    pivots: Vec<usize>,
}

impl QuaternaryCode {
    pub fn zero(n: usize) -> QuaternaryCode {
        QuaternaryCode {
            one: BitMatrix::new(n),
            omega: BitMatrix::new(n),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> QuaternaryCode {
        let rows: Vec<Gf4Vector> = (0..n)
            .map(|j| {
                let mut v = Gf4Vector::zeros(n);
                v.set(j, Gf4::ONE);
                v
            })
            .collect();
        QuaternaryCode::from_rows(n, &rows).unwrap()
    }

    pub fn from_rows(n: usize, rows: &[Gf4Vector]) -> Result<QuaternaryCode> {
        let mut one = BitMatrix::new(n);
        let mut omega = BitMatrix::new(n);
        for r in rows {
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            one.push_row(&r.one);
            omega.push_row(&r.omega);
        }
        Ok(QuaternaryCode::reduce(one, omega))
    }

    fn reduce(mut one: BitMatrix, mut omega: BitMatrix) -> QuaternaryCode {
        let rows = one.rows();
        let n = one.cols();
        let entry = |one: &BitMatrix, omega: &BitMatrix, i: usize, j: usize| {
            Gf4::new(get_bit(one.row(i), j), get_bit(omega.row(i), j))
        };
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..n {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !entry(&one, &omega, i, col).is_zero()) else {
                continue;
            };
            one.swap_rows(r, p);
            omega.swap_rows(r, p);
            let inv = entry(&one, &omega, r, col).inv().unwrap();
            scale_planes(one.row_mut(r), omega.row_mut(r), inv);
            let pivot_one = one.row(r).to_vec();
            let pivot_om = omega.row(r).to_vec();
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let e = entry(&one, &omega, i, col);
                if e.is_zero() {
                    continue;
                }
                let mut a = pivot_one.clone();
                let mut b = pivot_om.clone();
                scale_planes(&mut a, &mut b, e);
                crate::bits::xor_into(one.row_mut(i), &a);
                crate::bits::xor_into(omega.row_mut(i), &b);
            }
            pivots.push(col);
            r += 1;
        }
        one.truncate_rows(r);
        omega.truncate_rows(r);
        QuaternaryCode { one, omega, pivots }
    }

    pub fn n(&self) -> usize {
        self.one.cols()
    }

    pub fn k(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn row(&self, i: usize) -> Gf4Vector {
        Gf4Vector::from_planes(
            self.n(),
            self.one.row(i).to_vec(),
            self.omega.row(i).to_vec(),
        )
    }

    pub fn rows(&self) -> Vec<Gf4Vector> {
        (0..self.k()).map(|i| self.row(i)).collect()
    }

    pub fn contains(&self, v: &Gf4Vector) -> bool {
        if v.len() != self.n() {
            return false;
        }
        let mut x = v.clone();
        for (i, &p) in self.pivots.iter().enumerate() {
            let e = x.get(p);
            if !e.is_zero() {
                x = x.add(&self.row(i).scale(e));
            }
        }
        x.is_zero()
    }

    /// Euclidean dual `{y : Σ x_j y_j = 0}`.
    pub fn euclidean_dual(&self) -> QuaternaryCode {
        let n = self.n();
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut rows = Vec::new();
        for f in (0..n).filter(|&f| !is_pivot[f]) {
            let mut v = Gf4Vector::zeros(n);
            v.set(f, Gf4::ONE);
            for (i, &p) in self.pivots.iter().enumerate() {
                v.set(p, self.row(i).get(f));
            }
            rows.push(v);
        }
        QuaternaryCode::from_rows(n, &rows).unwrap()
    }

    /// Dual under `⟨x, y⟩ = Σ x_j conj(y_j)`.
    pub fn hermitian_dual(&self) -> QuaternaryCode {
        self.euclidean_dual().conj()
    }

    pub fn conj(&self) -> QuaternaryCode {
        let rows: Vec<Gf4Vector> = self.rows().iter().map(|r| r.conj()).collect();
        QuaternaryCode::from_rows(self.n(), &rows).unwrap()
    }

    pub fn is_hermitian_self_orthogonal(&self) -> bool {
        let k = self.k();
        (0..k).all(|i| {
            (i..k).all(|j| {
                hermitian_planes(
                    self.one.row(i),
                    self.omega.row(i),
                    self.one.row(j),
                    self.omega.row(j),
                )
                .is_zero()
            })
        })
    }

    pub fn is_hermitian_self_dual(&self) -> bool {
        self.n() == 2 * self.k() && self.is_hermitian_self_orthogonal()
    }

    /// Monomial transform: conjugate every entry if `conjugate`, then move
    /// coordinate `j` to `perm[j]`, then scale new coordinate `i` by `scales[i]`.
    pub fn transform(
        &self,
        perm: &[usize],
        scales: &[Gf4],
        conjugate: bool,
    ) -> Result<QuaternaryCode> {
        let n = self.n();
        if perm.len() != n || scales.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                got: perm.len().min(scales.len()),
            });
        }
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::Precondition(
                    "transform permutation is not a bijection".into(),
                ));
            }
            seen[p] = true;
        }
        if scales.iter().any(|s| s.is_zero()) {
            return Err(Error::Precondition(
                "transform scaling must be a unit".into(),
            ));
        }
        let rows: Vec<Gf4Vector> = self
            .rows()
            .into_iter()
            .map(|r| {
                let r = if conjugate { r.conj() } else { r };
                let mut out = Gf4Vector::zeros(n);
                for j in 0..n {
                    out.set(perm[j], r.get(j) * scales[perm[j]]);
                }
                out
            })
            .collect();
        QuaternaryCode::from_rows(n, &rows)
    }
}

impl fmt::Debug for QuaternaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuaternaryCode[{}, {}]", self.n(), self.k())?;
        f.debug_list()
            .entries(self.rows().iter().map(|r| r.to_string()))
            .finish()
    }
}
