#![allow(dead_code)]

use qcforge_core::gf::Gf4;
use qcforge_core::lincode::{BinaryCode, Gf4Vector, QuaternaryCode};
use qcforge_core::BitVector;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn random_bits(n: usize, rng: &mut impl Rng) -> BitVector {
    let bits: Vec<u8> = (0..n).map(|_| rng.random_range(0..2)).collect();
    BitVector::from_bits(&bits)
}

pub fn random_gf4(n: usize, rng: &mut impl Rng) -> Gf4Vector {
    let elems: Vec<Gf4> = (0..n).map(|_| Gf4::ALL[rng.random_range(0..4)]).collect();
    Gf4Vector::from_elems(&elems)
}

pub fn random_code(n: usize, rows: usize, rng: &mut impl Rng) -> BinaryCode {
    let vs: Vec<BitVector> = (0..rows).map(|_| random_bits(n, rng)).collect();
    BinaryCode::from_rows(n, &vs).unwrap()
}

/// Like [`random_code`] but never the zero code.
pub fn random_nonzero_code(n: usize, rows: usize, rng: &mut impl Rng) -> BinaryCode {
    loop {
        let c = random_code(n, rows.max(1), rng);
        if c.k() > 0 {
            return c;
        }
    }
}

pub fn random_quaternary(n: usize, rows: usize, rng: &mut impl Rng) -> QuaternaryCode {
    let vs: Vec<Gf4Vector> = (0..rows).map(|_| random_gf4(n, rng)).collect();
    QuaternaryCode::from_rows(n, &vs).unwrap()
}

pub fn random_perm(n: usize, rng: &mut impl Rng) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

fn xor_all(n: usize, vs: impl IntoIterator<Item = BitVector>) -> BitVector {
    vs.into_iter().fold(BitVector::zeros(n), |mut acc, v| {
        acc.xor_assign(&v);
        acc
    })
}

/// Random binary self-dual code of even length `n`, grown one
/// self-orthogonal vector at a time.
pub fn random_selfdual(n: usize, rng: &mut impl Rng) -> BinaryCode {
    let mut c = BinaryCode::zero(n);
    while c.k() < n / 2 {
        let dual = c.euclidean_dual().rows();
        let v = xor_all(n, dual.into_iter().filter(|_| rng.random_bool(0.5)));
        if v.weight() % 2 == 0 && !c.contains(&v) {
            let mut rows = c.rows();
            rows.push(v);
            c = BinaryCode::from_rows(n, &rows).unwrap();
        }
    }
    c
}

/// Random Hermitian self-dual code over GF(4) of even length `n`.
pub fn random_hermitian_selfdual(n: usize, rng: &mut impl Rng) -> QuaternaryCode {
    let mut c = QuaternaryCode::zero(n);
    while c.k() < n / 2 {
        let dual = c.hermitian_dual().rows();
        let v = dual.iter().fold(Gf4Vector::zeros(n), |acc, r| {
            acc.add(&r.scale(Gf4::ALL[rng.random_range(0..4)]))
        });
        if v.weight() % 2 == 0 && !c.contains(&v) {
            let mut rows = c.rows();
            rows.push(v);
            c = QuaternaryCode::from_rows(n, &rows).unwrap();
        }
    }
    c
}

/// All codewords by direct linear combination of the generator rows.
pub fn naive_codewords(c: &BinaryCode) -> Vec<BitVector> {
    let rows = c.rows();
    (0u64..1 << rows.len())
        .map(|mask| {
            xor_all(
                c.n(),
                rows.iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, r)| r.clone()),
            )
        })
        .collect()
}

pub fn naive_histogram(c: &BinaryCode) -> Vec<u64> {
    let mut h = vec![0u64; c.n() + 1];
    for w in naive_codewords(c) {
        h[w.weight() as usize] += 1;
    }
    h
}

pub fn naive_quaternary_histogram(c: &QuaternaryCode) -> Vec<u64> {
    let rows = c.rows();
    let mut h = vec![0u64; c.n() + 1];
    let total = 1u64 << (2 * rows.len());
    for mask in 0..total {
        let v = rows
            .iter()
            .enumerate()
            .fold(Gf4Vector::zeros(c.n()), |acc, (i, r)| {
                acc.add(&r.scale(Gf4::from_bits((mask >> (2 * i) & 3) as u8)))
            });
        h[v.weight() as usize] += 1;
    }
    h
}

/// Sorted codeword list, a set representation independent of any basis.
pub fn codeword_set(c: &BinaryCode) -> Vec<Vec<u8>> {
    let mut v: Vec<Vec<u8>> = naive_codewords(c).iter().map(|w| w.to_bits()).collect();
    v.sort();
    v
}

/// Brute-force automorphism count over all of `S_n`.
pub fn brute_aut_count(c: &BinaryCode) -> u64 {
    let n = c.n();
    let rows = c.rows();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut count = 0;
    permutohedron_each(&mut perm, &mut |p| {
        let ok = rows.iter().all(|r| {
            let mut img = BitVector::zeros(n);
            for j in 0..n {
                img.set(p[j], r.get(j));
            }
            c.contains(&img)
        });
        count += ok as u64;
    });
    count
}

/// Heap's algorithm.
pub fn permutohedron_each(p: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let n = p.len();
    let mut c = vec![0usize; n];
    f(p);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                p.swap(0, i);
            } else {
                p.swap(c[i], i);
            }
            f(p);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

pub fn code(n: usize, rows: &[&str]) -> BinaryCode {
    let vs: Vec<BitVector> = rows.iter().map(|r| BitVector::parse(r).unwrap()).collect();
    BinaryCode::from_rows(n, &vs).unwrap()
}

pub fn quat(n: usize, rows: &[&str]) -> QuaternaryCode {
    let vs: Vec<Gf4Vector> = rows.iter().map(|r| Gf4Vector::parse(r).unwrap()).collect();
    QuaternaryCode::from_rows(n, &vs).unwrap()
}
