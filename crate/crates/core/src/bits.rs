//! Bit-packed vectors and matrices over GF(2), 64-bit words, coordinate `j`
//! at bit `j % 64` of word `j / 64`. Bits past the length are always zero.

use std::fmt;

use crate::error::{Error, Result};

pub(crate) fn words_for(len: usize) -> usize {
    len.div_ceil(64)
}

#[inline]
pub(crate) fn get_bit(words: &[u64], j: usize) -> bool {
    (words[j >> 6] >> (j & 63)) & 1 == 1
}

#[inline]
pub(crate) fn set_bit(words: &mut [u64], j: usize, v: bool) {
    let w = &mut words[j >> 6];
    let m = 1u64 << (j & 63);
    if v {
        *w |= m;
    } else {
        *w &= !m;
    }
}

#[inline]
pub(crate) fn xor_into(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= *s;
    }
}

#[inline]
pub(crate) fn popcount(words: &[u64]) -> u32 {
    words.iter().map(|w| w.count_ones()).sum()
}

#[inline]
pub(crate) fn dot(a: &[u64], b: &[u64]) -> bool {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x & y).count_ones())
        .sum::<u32>()
        & 1
        == 1
}

/// A vector in GF(2)^len.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: usize,
    words: Vec<u64>,
}

impl BitVector {
    pub fn zeros(len: usize) -> BitVector {
        BitVector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn from_bits(bits: &[u8]) -> BitVector {
        let mut v = BitVector::zeros(bits.len());
        for (j, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(j, true);
            }
        }
        v
    }

    /// Panics if `words` has the wrong size or bits set past `len`.
    pub fn from_words(len: usize, words: Vec<u64>) -> BitVector {
        assert_eq!(words.len(), words_for(len));
        if !len.is_multiple_of(64) {
            assert_eq!(words[len / 64] >> (len % 64), 0, "bits set past length");
        }
        BitVector { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn get(&self, j: usize) -> bool {
        assert!(j < self.len);
        get_bit(&self.words, j)
    }

    pub fn set(&mut self, j: usize, v: bool) {
        assert!(j < self.len);
        set_bit(&mut self.words, j, v);
    }

    pub fn weight(&self) -> u32 {
        popcount(&self.words)
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn dot(&self, other: &BitVector) -> bool {
        assert_eq!(self.len, other.len);
        dot(&self.words, &other.words)
    }

    pub fn xor_assign(&mut self, other: &BitVector) {
        assert_eq!(self.len, other.len);
        xor_into(&mut self.words, &other.words);
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|j| self.get(j) as u8).collect()
    }

    pub fn parse(s: &str) -> Result<BitVector> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(Error::Parse {
                    line: 0,
                    msg: format!("invalid binary symbol '{c}'"),
                }),
            })
            .collect::<Result<Vec<u8>>>()?;
        Ok(BitVector::from_bits(&bits))
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for j in 0..self.len {
            write!(f, "{}", if self.get(j) { '1' } else { '0' })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Row-major bit matrix with a fixed number of words per row.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct BitMatrix {
    cols: usize,
    wpr: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(cols: usize) -> BitMatrix {
        BitMatrix {
            cols,
            wpr: words_for(cols),
            data: Vec::new(),
        }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn wpr(&self) -> usize {
        self.wpr
    }

    pub fn rows(&self) -> usize {
        if self.wpr == 0 {
            0
        } else {
            self.data.len() / self.wpr
        }
    }

    pub fn push_row(&mut self, row: &[u64]) {
        assert_eq!(row.len(), self.wpr);
        self.data.extend_from_slice(row);
    }

    pub fn row(&self, i: usize) -> &[u64] {
        &self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    pub fn row_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.wpr..(i + 1) * self.wpr]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[u64]> {
        (0..self.rows()).map(move |i| self.row(i))
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.wpr {
                self.data.swap(a * self.wpr + w, b * self.wpr + w);
            }
        }
    }

    /// `row[dst] ^= row[src]`.
    pub fn xor_row(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let wpr = self.wpr;
        let (d, s) = (dst * wpr, src * wpr);
        for w in 0..wpr {
            let v = self.data[s + w];
            self.data[d + w] ^= v;
        }
    }

    pub fn truncate_rows(&mut self, rows: usize) {
        self.data.truncate(rows * self.wpr);
    }

    /// In-place reduced row-echelon form with lowest-index pivots; drops zero
    /// rows and returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let rows = self.rows();
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..self.cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| get_bit(self.row(i), col)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..rows {
                if i != r && get_bit(self.row(i), col) {
                    self.xor_row(i, r);
                }
            }
            pivots.push(col);
            r += 1;
        }
        self.truncate_rows(r);
        pivots
    }

    /// Reduces `v` against a matrix already in RREF with the given pivots.
    pub fn reduce(&self, pivots: &[usize], v: &mut [u64]) {
        for (i, &p) in pivots.iter().enumerate() {
            if get_bit(v, p) {
                xor_into(v, self.row(i));
            }
        }
    }
}
