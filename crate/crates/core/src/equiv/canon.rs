use std::cmp::Ordering;

use num_bigint::BigUint;

use super::perm::{orbits, Perm, StabChain};
use crate::bits::BitVector;
use crate::error::{Error, Result};
use crate::lincode::{weight_enumerator, BinaryCode, EnumOptions};

/// Most coordinates a code may have for canonicalization.
pub const MAX_CANON_LEN: usize = 128;
/// Default backtrack node budget.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;
/// Default ceiling on `k` for the codeword scan that feeds refinement.
pub const DEFAULT_ENUM_LOG2: usize = 28;
const MAX_WORDS: usize = 1 << 18;

#[derive(Clone, Copy, Debug)]
pub struct CanonOptions {
    pub node_budget: u64,
    pub enum_log2: usize,
    /// Refinement uses codewords of weight up to `d + extra_weight`.
    pub extra_weight: u32,
}

impl Default for CanonOptions {
    fn default() -> Self {
        CanonOptions {
            node_budget: DEFAULT_NODE_BUDGET,
            enum_log2: DEFAULT_ENUM_LOG2,
            extra_weight: 4,
        }
    }
}

impl CanonOptions {
    pub fn with_budget(node_budget: u64) -> Self {
        CanonOptions {
            node_budget,
            ..Default::default()
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    /// The code with coordinates relabeled canonically.
    pub matrix: BinaryCode,
    pub hash: u128,
    /// `labeling[i]` is the original coordinate placed at position `i`.
    pub labeling: Vec<usize>,
    pub complete: bool,
}

impl CanonicalForm {
    pub fn hash_hex(&self) -> String {
        format!("{:032x}", self.hash)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AutInfo {
    pub order: BigUint,
    pub complete: bool,
    pub generators: Vec<Vec<usize>>,
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// 128-bit FNV-1a.
pub fn fnv1a_128(bytes: &[u8]) -> u128 {
    const OFFSET: u128 = 0x6c62272e07bb014262b821756295c58d;
    const PRIME: u128 = 0x0000000001000000000000000000013B;
    bytes
        .iter()
        .fold(OFFSET, |h, &b| (h ^ b as u128).wrapping_mul(PRIME))
}

fn to_u128(v: &[u64]) -> u128 {
    v.first().copied().unwrap_or(0) as u128 | (v.get(1).copied().unwrap_or(0) as u128) << 64
}

fn rref128(rows: &mut Vec<u128>) {
    let mut r = 0;
    for col in 0..128 {
        let bit = 1u128 << col;
        let Some(p) = (r..rows.len()).find(|&i| rows[i] & bit != 0) else {
            continue;
        };
        rows.swap(r, p);
        let pr = rows[r];
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && *row & bit != 0 {
                *row ^= pr;
            }
        }
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
}

/// Canonical certificate comparison: row by row, reading each row from
/// coordinate 0 upward.
fn cert_cmp(a: &[u128], b: &[u128]) -> Ordering {
    a.iter()
        .map(|r| r.reverse_bits())
        .cmp(b.iter().map(|r| r.reverse_bits()))
}

type Cells = Vec<Vec<u8>>;

enum Step {
    Continue,
    Jump(usize),
}

struct Exhausted;

struct Search<'a> {
    n: usize,
    rows: &'a [u128],
    words: &'a [u128],
    budget: u64,
    nodes: u64,
    first: Option<(Vec<u8>, Vec<u128>)>,
    best: Option<(Vec<u8>, Vec<u128>)>,
    first_path: Vec<u8>,
    best_path: Vec<u8>,
    gens: Vec<Perm>,
}

impl Search<'_> {
    fn refine(&self, mut cells: Cells) -> Cells {
        let n = self.n;
        loop {
            if cells.len() == n {
                return cells;
            }
            let masks: Vec<u128> = cells
                .iter()
                .map(|c| c.iter().fold(0u128, |m, &x| m | 1u128 << x))
                .collect();
            let mut sig = vec![0u64; n];
            for &w in self.words {
                let mut h = splitmix(w.count_ones() as u64);
                for (ci, &m) in masks.iter().enumerate() {
                    let c = (w & m).count_ones() as u64;
                    if c != 0 {
                        h = splitmix(h ^ ((ci as u64) << 32 | c));
                    }
                }
                let mut bits = w;
                while bits != 0 {
                    let x = bits.trailing_zeros() as usize;
                    sig[x] = sig[x].wrapping_add(h);
                    bits &= bits - 1;
                }
            }
            let before = cells.len();
            let mut next = Vec::with_capacity(n);
            for cell in cells {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut keyed: Vec<(u64, u8)> =
                    cell.iter().map(|&x| (sig[x as usize], x)).collect();
                keyed.sort_unstable();
                let mut start = 0;
                for i in 1..=keyed.len() {
                    if i == keyed.len() || keyed[i].0 != keyed[start].0 {
                        next.push(keyed[start..i].iter().map(|p| p.1).collect());
                        start = i;
                    }
                }
            }
            cells = next;
            if cells.len() == before {
                return cells;
            }
        }
    }

    fn certificate(&self, order: &[u8]) -> Vec<u128> {
        let mut out: Vec<u128> = self
            .rows
            .iter()
            .map(|&r| {
                order
                    .iter()
                    .enumerate()
                    .fold(0u128, |acc, (i, &x)| acc | ((r >> x) & 1) << i)
            })
            .collect();
        rref128(&mut out);
        out
    }

    fn automorphism(&self, from: &[u8], to: &[u8]) -> Perm {
        let mut g = vec![0u8; self.n];
        for (a, b) in from.iter().zip(to) {
            g[*a as usize] = *b;
        }
        g
    }

    fn leaf(&mut self, cells: &Cells, path: &[u8]) -> Step {
        let order: Vec<u8> = cells.iter().map(|c| c[0]).collect();
        let cert = self.certificate(&order);
        let Some((first_order, first_cert)) = &self.first else {
            self.first = Some((order.clone(), cert.clone()));
            self.best = Some((order, cert));
            self.first_path = path.to_vec();
            self.best_path = path.to_vec();
            return Step::Continue;
        };
        if *first_cert == cert {
            let g = self.automorphism(first_order, &order);
            self.gens.push(g);
            let common = common_prefix(&self.first_path, path);
            return Step::Jump(common);
        }
        let (best_order, best_cert) = self.best.as_ref().unwrap();
        match cert_cmp(&cert, best_cert) {
            Ordering::Less => {
                self.best = Some((order, cert));
                self.best_path = path.to_vec();
                Step::Continue
            }
            Ordering::Equal => {
                let g = self.automorphism(best_order, &order);
                self.gens.push(g);
                Step::Jump(common_prefix(&self.best_path, path))
            }
            Ordering::Greater => Step::Continue,
        }
    }

    fn node(&mut self, cells: Cells, path: &mut Vec<u8>) -> std::result::Result<Step, Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        if cells.len() == self.n {
            return Ok(self.leaf(&cells, path));
        }
        let level = path.len();
        let target = (0..cells.len())
            .filter(|&i| cells[i].len() > 1)
            .min_by_key(|&i| (cells[i].len(), i))
            .unwrap();
        let mut children = cells[target].clone();
        children.sort_unstable();
        let mut tried: Vec<u8> = Vec::new();
        for v in children {
            if !tried.is_empty() {
                let fixing: Vec<&Perm> = self
                    .gens
                    .iter()
                    .filter(|g| path.iter().all(|&p| g[p as usize] == p))
                    .collect();
                let orb = orbits(self.n, &fixing);
                if tried.iter().any(|&w| orb[w as usize] == orb[v as usize]) {
                    continue;
                }
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<u8> = next[target].iter().copied().filter(|&x| x != v).collect();
            next[target] = vec![v];
            next.insert(target + 1, rest);
            let next = self.refine(next);
            path.push(v);
            let r = self.node(next, path)?;
            path.pop();
            if let Step::Jump(l) = r {
                if l < level {
                    return Ok(Step::Jump(l));
                }
            }
        }
        Ok(Step::Continue)
    }
}

fn common_prefix(a: &[u8], b: &[u8]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

fn pack(c: &BinaryCode) -> Vec<u128> {
    (0..c.k()).map(|i| to_u128(c.row(i).words())).collect()
}

fn unpack(n: usize, rows: &[u128]) -> Result<BinaryCode> {
    let words = crate::bits::words_for(n);
    let vecs = rows.iter().map(|&r| {
        let w = [r as u64, (r >> 64) as u64];
        BitVector::from_words(n, w[..words].to_vec())
    });
    BinaryCode::from_vectors(n, vecs)
}

fn hash_matrix(n: usize, rows: &[u128]) -> u128 {
    let mut bytes = Vec::with_capacity(16 + 16 * rows.len());
    bytes.extend_from_slice(&(n as u64).to_le_bytes());
    bytes.extend_from_slice(&(rows.len() as u64).to_le_bytes());
    for r in rows {
        bytes.extend_from_slice(&r.to_le_bytes());
    }
    fnv1a_128(&bytes)
}

/// Codewords of the lightest weight classes, starting at the minimum weight
/// and adding classes up to `d + extra` (or further, until every coordinate
/// in the support of the code is covered).
fn word_set(c: &BinaryCode, rows: &[u128], extra: u32) -> Result<Vec<u128>> {
    let w = weight_enumerator(c, None)?;
    let counts = w.counts();
    let support = rows.iter().fold(0u128, |m, &r| m | r);
    let d = w.min_distance().unwrap_or(0) as u32;
    let mut cap = d;
    let mut total = counts[d as usize];
    loop {
        let next = (cap as usize + 1..counts.len()).find(|&i| counts[i] != 0);
        let Some(next) = next else { break };
        let within = next as u32 <= d + extra && total + counts[next] <= MAX_WORDS as u64;
        if !within && covered(rows, cap, support) {
            break;
        }
        cap = next as u32;
        total += counts[next];
    }
    Ok(collect_words(rows, cap))
}

fn covered(rows: &[u128], cap: u32, support: u128) -> bool {
    collect_words(rows, cap).iter().fold(0u128, |m, &w| m | w) == support
}

fn collect_words(rows: &[u128], cap: u32) -> Vec<u128> {
    let mut out = Vec::new();
    let mut cur = 0u128;
    for i in 1u64..(1u64 << rows.len()) {
        cur ^= rows[i.trailing_zeros() as usize];
        if cur.count_ones() <= cap {
            out.push(cur);
        }
    }
    out
}

fn labeling_perm(labeling: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; labeling.len()];
    for (i, &x) in labeling.iter().enumerate() {
        perm[x] = i;
    }
    perm
}

/// Canonical form and automorphism group of a binary code under coordinate
/// permutations.
pub fn analyze(c: &BinaryCode, opts: &CanonOptions) -> Result<(CanonicalForm, AutInfo)> {
    let n = c.n();
    if c.k() == 0 {
        return Err(Error::ZeroDimension);
    }
    if n > MAX_CANON_LEN {
        return Err(Error::Precondition(format!(
            "length {n} exceeds {MAX_CANON_LEN}"
        )));
    }
    let rows = pack(c);
    if c.k() > opts.enum_log2 {
        let hash = hash_matrix(n, &rows);
        let form = CanonicalForm {
            matrix: c.clone(),
            hash,
            labeling: (0..n).collect(),
            complete: false,
        };
        let aut = AutInfo {
            order: BigUint::from(1u32),
            complete: false,
            generators: Vec::new(),
        };
        return Ok((form, aut));
    }
    let words = word_set(c, &rows, opts.extra_weight)?;
    let mut search = Search {
        n,
        rows: &rows,
        words: &words,
        budget: opts.node_budget,
        nodes: 0,
        first: None,
        best: None,
        first_path: Vec::new(),
        best_path: Vec::new(),
        gens: Vec::new(),
    };
    let root = search.refine(vec![(0..n as u8).collect()]);
    let complete = search.node(root, &mut Vec::new()).is_ok();
    let (order, cert) = match search.best.take() {
        Some(b) => b,
        None => (
            (0..n as u8).collect(),
            search.certificate(&(0..n as u8).collect::<Vec<_>>()),
        ),
    };
    let labeling: Vec<usize> = order.iter().map(|&x| x as usize).collect();
    let matrix = unpack(n, &cert)?;
    debug_assert_eq!(matrix, c.permute(&labeling_perm(&labeling)));
    let form = CanonicalForm {
        matrix,
        hash: hash_matrix(n, &cert),
        labeling,
        complete,
    };
    let chain = StabChain::new(n, &search.gens);
    let generators = search
        .gens
        .iter()
        .map(|g| g.iter().map(|&x| x as usize).collect())
        .collect();
    let aut = AutInfo {
        order: chain.order(),
        complete,
        generators,
    };
    Ok((form, aut))
}

pub fn canonicalize(c: &BinaryCode, opts: &CanonOptions) -> Result<CanonicalForm> {
    analyze(c, opts).map(|r| r.0)
}

pub fn aut_order(c: &BinaryCode, opts: &CanonOptions) -> Result<AutInfo> {
    analyze(c, opts).map(|r| r.1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Equivalence {
    Yes,
    No,
    Unknown,
}

/// Permutation equivalence of two binary codes of the same length.
pub fn are_equivalent(a: &BinaryCode, b: &BinaryCode, opts: &CanonOptions) -> Result<Equivalence> {
    if a.n() != b.n() {
        return Err(Error::LengthMismatch {
            expected: a.n(),
            got: b.n(),
        });
    }
    if a.k() != b.k() {
        return Ok(Equivalence::No);
    }
    if a.k() == 0 {
        return Ok(Equivalence::Yes);
    }
    if a.k() <= opts.enum_log2 {
        let eo = EnumOptions::default();
        if a.weight_enumerator(None, &eo)? != b.weight_enumerator(None, &eo)? {
            return Ok(Equivalence::No);
        }
    }
    let (fa, aa) = analyze(a, opts)?;
    let (fb, ab) = analyze(b, opts)?;
    if aa.complete && ab.complete && aa.order != ab.order {
        return Ok(Equivalence::No);
    }
    if fa.complete && fb.complete {
        return Ok(if fa.matrix == fb.matrix {
            Equivalence::Yes
        } else {
            Equivalence::No
        });
    }
    Ok(Equivalence::Unknown)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitVector;

    fn code(n: usize, rows: &[&str]) -> BinaryCode {
        let rows: Vec<BitVector> = rows.iter().map(|r| BitVector::parse(r).unwrap()).collect();
        BinaryCode::from_rows(n, &rows).unwrap()
    }

    fn order(c: &BinaryCode) -> u64 {
        let a = aut_order(c, &CanonOptions::default()).unwrap();
        assert!(a.complete);
        (&a.order).try_into().unwrap()
    }

    fn hash(c: &BinaryCode) -> u128 {
        let f = canonicalize(c, &CanonOptions::default()).unwrap();
        assert!(f.complete);
        f.hash
    }

    #[test]
    fn small_aut_orders() {
        assert_eq!(order(&code(2, &["11"])), 2);
        assert_eq!(order(&code(3, &["111"])), 6);
        assert_eq!(order(&code(6, &["110000", "001100", "000011"])), 48);
        assert_eq!(order(&code(4, &["1000"])), 6);
    }

    #[test]
    fn hamming_and_golay_like_orders() {
        let h8 = code(8, &["11110000", "00111100", "00001111", "01010101"]);
        assert_eq!(order(&h8), 1344);
        let h7 = BinaryCode::cyclic("1011".parse().unwrap(), 7).unwrap();
        assert_eq!(order(&h7), 168);
    }

    #[test]
    fn equivalent_examples() {
        let i2i2 = code(4, &["1100", "0011"]);
        let other = code(4, &["1010", "0101"]);
        assert_eq!(hash(&i2i2), hash(&other));
        let cubic = code(6, &["111111", "101101", "011011"]);
        let i2cubed = code(6, &["110000", "001100", "000011"]);
        assert_eq!(hash(&cubic), hash(&i2cubed));
        assert_eq!(
            are_equivalent(&cubic, &i2cubed, &CanonOptions::default()).unwrap(),
            Equivalence::Yes
        );
    }

    #[test]
    fn inequivalent_examples() {
        let i2_4 = code(8, &["11000000", "00110000", "00001100", "00000011"]);
        let h8 = code(8, &["11110000", "00111100", "00001111", "01010101"]);
        assert_eq!(
            are_equivalent(&i2_4, &h8, &CanonOptions::default()).unwrap(),
            Equivalence::No
        );
        let a = code(4, &["1100"]);
        let b = code(4, &["1110"]);
        assert_ne!(hash(&a), hash(&b));
        assert!(are_equivalent(&a, &code(5, &["11000"]), &CanonOptions::default()).is_err());
    }

    #[test]
    fn canonical_matrix_is_a_relabeling() {
        let c = code(7, &["1101000", "0110100", "0011010"]);
        let f = canonicalize(&c, &CanonOptions::default()).unwrap();
        assert_eq!(f.matrix, c.permute(&labeling_perm(&f.labeling)));
        assert_eq!(f.hash_hex().len(), 32);
    }

    #[test]
    fn zero_code_rejected() {
        assert_eq!(
            canonicalize(&BinaryCode::zero(3), &CanonOptions::default()),
            Err(Error::ZeroDimension)
        );
    }

    #[test]
    fn tiny_budget_is_incomplete() {
        let c = code(6, &["110000", "001100", "000011"]);
        let (f, a) = analyze(&c, &CanonOptions::with_budget(2)).unwrap();
        assert!(!f.complete && !a.complete);
    }

    #[test]
    fn fnv_reference_values() {
        assert_eq!(fnv1a_128(b""), 0x6c62272e07bb014262b821756295c58d);
        assert_eq!(fnv1a_128(b"a"), 0xd228cb696f1a8caf78912b704e4a8964);
    }
}
