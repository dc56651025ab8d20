use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Hamming weight distribution `A_0, …, A_n` of a code.
///
/// When `cap` is set only `A_0..=A_cap` are known; higher entries are zero
/// placeholders and must not be read.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct WeightEnumerator {
    n: usize,
    counts: Vec<u64>,
    cap: Option<usize>,
    /// log2 of the code size (`k` for binary, `2k` for quaternary), when known.
    log2_size: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub enum SelfDualType {
    TypeI,
    TypeII,
    NotSelfDual,
}

impl fmt::Display for SelfDualType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SelfDualType::TypeI => "Type I",
            SelfDualType::TypeII => "Type II",
            SelfDualType::NotSelfDual => "not self-dual",
        })
    }
}

impl WeightEnumerator {
    pub(crate) fn from_histogram(
        mut counts: Vec<u64>,
        cap: Option<usize>,
        log2_size: usize,
    ) -> Self {
        let n = counts.len() - 1;
        let cap = cap.filter(|&c| c < n);
        if let Some(c) = cap {
            counts[c + 1..].iter_mut().for_each(|a| *a = 0);
        }
        WeightEnumerator {
            n,
            counts,
            cap,
            log2_size: Some(log2_size),
        }
    }

    /// Enumerator known through weight `cap` (complete when `cap` is `None`),
    /// from explicit `(weight, count)` pairs; unlisted weights are zero.
    pub fn from_pairs(n: usize, pairs: &[(usize, u64)], cap: Option<usize>) -> Result<Self> {
        let mut counts = vec![0u64; n + 1];
        for &(i, a) in pairs {
            if i > n || cap.is_some_and(|c| i > c) {
                return Err(Error::Precondition(format!(
                    "weight {i} outside the known range"
                )));
            }
            counts[i] = a;
        }
        Ok(WeightEnumerator {
            n,
            counts,
            cap: cap.filter(|&c| c < n),
            log2_size: None,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_complete(&self) -> bool {
        self.cap.is_none()
    }

    pub fn cap(&self) -> Option<usize> {
        self.cap
    }

    /// Highest weight with a known count.
    pub fn known_through(&self) -> usize {
        self.cap.unwrap_or(self.n)
    }

    /// `A_i`, or `None` above the cap.
    pub fn get(&self, i: usize) -> Option<u64> {
        (i <= self.known_through()).then(|| self.counts[i])
    }

    /// Known counts `A_0..=A_known_through`.
    pub fn counts(&self) -> &[u64] {
        &self.counts[..=self.known_through()]
    }

    pub fn total(&self) -> u64 {
        self.counts().iter().sum()
    }

    pub fn log2_size(&self) -> Option<usize> {
        self.log2_size
    }

    /// `min{i > 0 : A_i ≠ 0}` within the known range.
    pub fn min_distance(&self) -> Option<usize> {
        (1..=self.known_through()).find(|&i| self.counts[i] != 0)
    }

    /// Nonzero `(i, A_i)` pairs, ascending.
    pub fn pairs(&self) -> Vec<(usize, u64)> {
        self.counts()
            .iter()
            .enumerate()
            .filter(|(_, &a)| a != 0)
            .map(|(i, &a)| (i, a))
            .collect()
    }
}

/// `i:A_i` pairs, ascending, zeros omitted.
impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|(i, a)| format!("{i}:{a}"))
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for WeightEnumerator {
    type Err = Error;

    /// Parses `i:A_i` pairs as a complete enumerator whose length is the
    /// largest listed weight; use [`WeightEnumerator::from_pairs`] otherwise.
    fn from_str(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        for tok in s.split_whitespace() {
            let (i, a) = tok.split_once(':').ok_or_else(|| Error::Parse {
                line: 0,
                msg: format!("bad enumerator term '{tok}'"),
            })?;
            let parse_err = |_| Error::Parse {
                line: 0,
                msg: format!("bad enumerator term '{tok}'"),
            };
            pairs.push((
                i.parse::<usize>().map_err(parse_err)?,
                a.parse::<u64>().map_err(parse_err)?,
            ));
        }
        let n = pairs.iter().map(|p| p.0).max().unwrap_or(0);
        WeightEnumerator::from_pairs(n, &pairs, None)
    }
}

/// Type II iff self-dual with every weight divisible by 4.
pub fn classify_type(w: &WeightEnumerator, self_dual: bool) -> Result<SelfDualType> {
    if let Some(c) = w.cap() {
        return Err(Error::Truncated(c));
    }
    if !self_dual {
        return Ok(SelfDualType::NotSelfDual);
    }
    let doubly_even = w.pairs().iter().all(|&(i, _)| i % 4 == 0);
    Ok(if doubly_even {
        SelfDualType::TypeII
    } else {
        SelfDualType::TypeI
    })
}

pub(crate) fn is_prime(m: u64) -> bool {
    m >= 2 && (2..).take_while(|d| d * d <= m).all(|d| !m.is_multiple_of(d))
}

/// Weights `i` with `m ∤ i` and `m ∤ A_i` among the known coefficients.
///
/// A binary ℓ-quasi-cyclic self-dual code of co-index `m` (prime) yields an
/// empty list; an empty list does not prove quasi-cyclicity.
pub fn check_divisibility(w: &WeightEnumerator, m: u64) -> Result<Vec<(usize, u64)>> {
    if !is_prime(m) {
        return Err(Error::NotPrime(m));
    }
    Ok(w.counts()
        .iter()
        .enumerate()
        .filter(|&(i, &a)| !(i as u64).is_multiple_of(m) && a % m != 0)
        .map(|(i, &a)| (i, a))
        .collect())
}
