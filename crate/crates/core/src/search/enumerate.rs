use serde::{Deserialize, Serialize};

use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::gf::Gf4;
use crate::lincode::{BinaryCode, Gf4Vector, QuaternaryCode};

pub const DEFAULT_MAX_N_GF2: usize = 12;
pub const DEFAULT_MAX_N_GF4: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Field {
    Gf2,
    Gf4,
}

/// Number of binary self-dual codes of length `n`: `∏_{i=1}^{n/2-1} (2^i + 1)`.
pub fn binary_selfdual_mass(n: usize) -> u128 {
    (1..n / 2).map(|i| (1u128 << i) + 1).product()
}

/// Number of Hermitian self-dual codes over GF(4) of length `n`:
/// `∏_{i=0}^{n/2-1} (2^{2i+1} + 1)`.
pub fn quaternary_selfdual_mass(n: usize) -> u128 {
    (0..n / 2).map(|i| (1u128 << (2 * i + 1)) + 1).product()
}

fn check_n(n: usize, max_n: usize) -> Result<()> {
    if n == 0 || n % 2 == 1 {
        return Err(Error::Precondition(format!(
            "self-dual codes need even length, got {n}"
        )));
    }
    if n > max_n {
        return Err(Error::Budget(format!(
            "length {n} exceeds the enumeration limit {max_n}"
        )));
    }
    Ok(())
}

/// Calls `f` with every `k`-subset of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        f(&idx);
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn free_columns(n: usize, pivots: &[usize], p: usize) -> Vec<usize> {
    (p + 1..n).filter(|j| !pivots.contains(j)).collect()
}

/// All binary self-dual codes of length `n` (as distinct subspaces), by
/// row-by-row extension of reduced echelon bases with self-orthogonality
/// checked after each row.
pub fn enumerate_binary(n: usize, max_n: usize) -> Result<Vec<BinaryCode>> {
    check_n(n, max_n.min(64))?;
    let k = n / 2;
    let mut out = Vec::new();
    for_each_subset(n, k, |pivots| {
        let free: Vec<Vec<usize>> = pivots.iter().map(|&p| free_columns(n, pivots, p)).collect();
        let mut rows = Vec::with_capacity(k);
        extend_binary(n, pivots, &free, &mut rows, &mut out);
    });
    Ok(out)
}

fn extend_binary(
    n: usize,
    pivots: &[usize],
    free: &[Vec<usize>],
    rows: &mut Vec<u64>,
    out: &mut Vec<BinaryCode>,
) {
    let i = rows.len();
    if i == pivots.len() {
        let vs: Vec<BitVector> = rows
            .iter()
            .map(|&r| BitVector::from_words(n, vec![r]))
            .collect();
        out.push(BinaryCode::from_rows(n, &vs).expect("rows are independent"));
        return;
    }
    let f = &free[i];
    for mask in 0u64..1 << f.len() {
        let mut r = 1u64 << pivots[i];
        for (b, &j) in f.iter().enumerate() {
            r |= ((mask >> b) & 1) << j;
        }
        if r.count_ones() % 2 == 1 || rows.iter().any(|&s| (r & s).count_ones() % 2 == 1) {
            continue;
        }
        rows.push(r);
        extend_binary(n, pivots, free, rows, out);
        rows.pop();
    }
}

/// `(a, b)` planes: Hermitian product is zero.
fn herm_zero(x: (u64, u64), y: (u64, u64)) -> bool {
    let (a, b) = x;
    let (c, d) = y;
    (a & c ^ a & d ^ b & d).count_ones() % 2 == 0 && (a & d ^ b & c).count_ones() % 2 == 0
}

/// All Hermitian self-dual codes over GF(4) of length `n`.
pub fn enumerate_quaternary(n: usize, max_n: usize) -> Result<Vec<QuaternaryCode>> {
    check_n(n, max_n.min(32))?;
    let k = n / 2;
    let mut out = Vec::new();
    for_each_subset(n, k, |pivots| {
        let free: Vec<Vec<usize>> = pivots.iter().map(|&p| free_columns(n, pivots, p)).collect();
        let mut rows = Vec::with_capacity(k);
        extend_quaternary(n, pivots, &free, &mut rows, &mut out);
    });
    Ok(out)
}

fn extend_quaternary(
    n: usize,
    pivots: &[usize],
    free: &[Vec<usize>],
    rows: &mut Vec<(u64, u64)>,
    out: &mut Vec<QuaternaryCode>,
) {
    let i = rows.len();
    if i == pivots.len() {
        let vs: Vec<Gf4Vector> = rows
            .iter()
            .map(|&(a, b)| Gf4Vector::from_planes(n, vec![a], vec![b]))
            .collect();
        out.push(QuaternaryCode::from_rows(n, &vs).expect("rows are independent"));
        return;
    }
    let f = &free[i];
    for mask in 0u64..1 << (2 * f.len()) {
        let (mut a, mut b) = (1u64 << pivots[i], 0u64);
        for (t, &j) in f.iter().enumerate() {
            let e = Gf4::from_bits(((mask >> (2 * t)) & 3) as u8);
            a |= (e.one_part() as u64) << j;
            b |= (e.omega_part() as u64) << j;
        }
        let r = (a, b);
        if !herm_zero(r, r) || rows.iter().any(|&s| !herm_zero(r, s)) {
            continue;
        }
        rows.push(r);
        extend_quaternary(n, pivots, free, rows, out);
        rows.pop();
    }
}

#[derive(Clone, Debug)]
pub enum SelfDualList {
    Binary(Vec<BinaryCode>),
    Quaternary(Vec<QuaternaryCode>),
}

impl SelfDualList {
    pub fn len(&self) -> usize {
        match self {
            SelfDualList::Binary(v) => v.len(),
            SelfDualList::Quaternary(v) => v.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// Every self-dual code of length `n` over `field`, within the default length limits.
pub fn enumerate_selfdual(field: Field, n: usize) -> Result<SelfDualList> {
    Ok(match field {
        Field::Gf2 => SelfDualList::Binary(enumerate_binary(n, DEFAULT_MAX_N_GF2)?),
        Field::Gf4 => SelfDualList::Quaternary(enumerate_quaternary(n, DEFAULT_MAX_N_GF4)?),
    })
}
