use std::fmt;

use crate::bits::{get_bit, set_bit, BitMatrix, BitVector};
use crate::error::{Error, Result};
use crate::gf::PolyF2;

/// A binary linear `[n, k]` code held as its reduced row-echelon generator
/// matrix. Two codes are equal exactly when their row spaces are equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BinaryCode {
    gen: BitMatrix,
    pivots: Vec<usize>,
}

impl BinaryCode {
    pub fn zero(n: usize) -> BinaryCode {
        BinaryCode {
            gen: BitMatrix::new(n),
            pivots: Vec::new(),
        }
    }

    pub fn full(n: usize) -> BinaryCode {
        let rows = (0..n).map(|j| {
            let mut v = BitVector::zeros(n);
            v.set(j, true);
            v
        });
        BinaryCode::from_vectors(n, rows).unwrap()
    }

    /// Row-reduces the given rows. Dependent rows are dropped; no rows gives
    /// the zero code.
    pub fn from_rows(n: usize, rows: &[BitVector]) -> Result<BinaryCode> {
        BinaryCode::from_vectors(n, rows.iter().cloned())
    }

    pub fn from_vectors(n: usize, rows: impl IntoIterator<Item = BitVector>) -> Result<BinaryCode> {
        let mut gen = BitMatrix::new(n);
        for r in rows {
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            gen.push_row(r.words());
        }
        Ok(BinaryCode::from_matrix(gen))
    }

    /// Rows given as 0/1 bytes.
    pub fn from_bit_rows(n: usize, rows: &[&[u8]]) -> Result<BinaryCode> {
        BinaryCode::from_vectors(n, rows.iter().map(|r| BitVector::from_bits(r)))
    }

    pub(crate) fn from_matrix(mut gen: BitMatrix) -> BinaryCode {
        let pivots = gen.rref();
        BinaryCode { gen, pivots }
    }

    pub fn n(&self) -> usize {
        self.gen.cols()
    }

    pub fn k(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub(crate) fn row_words(&self, i: usize) -> &[u64] {
        self.gen.row(i)
    }

    pub fn row(&self, i: usize) -> BitVector {
        BitVector::from_words(self.n(), self.gen.row(i).to_vec())
    }

    pub fn rows(&self) -> Vec<BitVector> {
        (0..self.k()).map(|i| self.row(i)).collect()
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        if v.len() != self.n() {
            return false;
        }
        let mut w = v.words().to_vec();
        self.gen.reduce(&self.pivots, &mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Codeword selected by the bits of `mask` over the generator rows.
    pub fn codeword(&self, mask: u64) -> BitVector {
        let mut w = vec![0u64; self.gen.wpr()];
        for i in 0..self.k() {
            if (mask >> i) & 1 == 1 {
                crate::bits::xor_into(&mut w, self.gen.row(i));
            }
        }
        BitVector::from_words(self.n(), w)
    }

    /// The dual under the standard inner product, an `[n, n-k]` code.
    pub fn euclidean_dual(&self) -> BinaryCode {
        let n = self.n();
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut dual = BitMatrix::new(n);
        let mut row = vec![0u64; dual.wpr()];
        for f in (0..n).filter(|&f| !is_pivot[f]) {
            row.iter_mut().for_each(|w| *w = 0);
            set_bit(&mut row, f, true);
            for (i, &p) in self.pivots.iter().enumerate() {
                if get_bit(self.gen.row(i), f) {
                    set_bit(&mut row, p, true);
                }
            }
            dual.push_row(&row);
        }
        BinaryCode::from_matrix(dual)
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let k = self.k();
        (0..k).all(|i| (i..k).all(|j| !crate::bits::dot(self.gen.row(i), self.gen.row(j))))
    }

    /// `C = C^⊥` under the Euclidean inner product.
    pub fn is_self_dual(&self) -> bool {
        self.n() == 2 * self.k() && self.is_self_orthogonal()
    }

    /// The cyclic code of length `n` generated by `g`, which must divide `Y^n - 1`.
    pub fn cyclic(g: PolyF2, n: usize) -> Result<BinaryCode> {
        if n == 0 || n > PolyF2::MAX_DEGREE as usize {
            return Err(Error::Precondition(format!(
                "cyclic length {n} out of range"
            )));
        }
        let deg = g
            .degree()
            .ok_or_else(|| Error::NotADivisor(g.to_string(), n))? as usize;
        if !g.divides(PolyF2::x_m_minus_1(n)) {
            return Err(Error::NotADivisor(g.to_string(), n));
        }
        let k = n - deg;
        let rows = (0..k).map(|s| {
            let mut v = BitVector::zeros(n);
            for i in 0..=deg {
                if g.coeff(i as u32) {
                    v.set(i + s, true);
                }
            }
            v
        });
        BinaryCode::from_vectors(n, rows)
    }

    /// Moves coordinate `j` to position `perm[j]`.
    pub fn permute(&self, perm: &[usize]) -> BinaryCode {
        assert_eq!(perm.len(), self.n());
        let mut out = BitMatrix::new(self.n());
        let mut row = vec![0u64; out.wpr()];
        for r in self.gen.iter_rows() {
            row.iter_mut().for_each(|w| *w = 0);
            for (j, &pj) in perm.iter().enumerate() {
                if get_bit(r, j) {
                    set_bit(&mut row, pj, true);
                }
            }
            out.push_row(&row);
        }
        BinaryCode::from_matrix(out)
    }

    /// `C ⊕ D`, coordinates of `other` placed after those of `self`.
    pub fn direct_sum(&self, other: &BinaryCode) -> BinaryCode {
        let n = self.n() + other.n();
        let mut rows = Vec::new();
        for r in self.rows() {
            let mut v = BitVector::zeros(n);
            (0..self.n())
                .filter(|&j| r.get(j))
                .for_each(|j| v.set(j, true));
            rows.push(v);
        }
        for r in other.rows() {
            let mut v = BitVector::zeros(n);
            (0..other.n())
                .filter(|&j| r.get(j))
                .for_each(|j| v.set(self.n() + j, true));
            rows.push(v);
        }
        BinaryCode::from_vectors(n, rows).unwrap()
    }
}

impl fmt::Debug for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryCode[{}, {}]", self.n(), self.k())?;
        f.debug_list()
            .entries(self.rows().iter().map(|r| r.to_string()))
            .finish()
    }
}
