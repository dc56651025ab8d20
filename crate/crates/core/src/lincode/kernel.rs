//! Gray-code enumeration of codewords.
//!
//! Codeword `i` of the walk is `Σ_j g_j` over the set bits of `i ^ (i >> 1)`,
//! so consecutive codewords differ by a single generator row. The index range
//! `[0, 2^k)` is split into contiguous chunks, one per worker; each chunk is
//! seeded by computing its first codeword directly.

use std::sync::atomic::{AtomicBool, Ordering};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

/// Generator rows laid out for the kernel. For quaternary codes each row is
/// `[one-plane words | ω-plane words]` and weight counts the OR of the planes.
#[derive(Clone, Debug)]
pub(crate) struct PackedRows {
    pub n: usize,
    pub words: usize,
    pub quaternary: bool,
    pub data: Vec<u64>,
}

impl PackedRows {
    pub fn rows(&self) -> usize {
        if self.words == 0 {
            0
        } else {
            self.data.len() / self.words
        }
    }

    pub fn shuffle(&mut self, seed: u64) {
        let mut rows: Vec<Vec<u64>> = self.data.chunks(self.words).map(|c| c.to_vec()).collect();
        rows.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        self.data = rows.concat();
    }
}

#[inline(always)]
fn weight<const W: usize, const Q: bool>(c: &[u64; W]) -> u32 {
    if Q {
        let h = W / 2;
        (0..h).map(|i| (c[i] | c[i + h]).count_ones()).sum()
    } else {
        c.iter().map(|w| w.count_ones()).sum()
    }
}

/// Walks indices `[start, end)`; `visit` returns false to stop. Returns false
/// if stopped early.
fn walk<const W: usize, const Q: bool>(
    rows: &[[u64; W]],
    start: u64,
    end: u64,
    mut visit: impl FnMut(u32) -> bool,
) -> bool {
    if start >= end {
        return true;
    }
    let mut cw = [0u64; W];
    let g = start ^ (start >> 1);
    for (j, r) in rows.iter().enumerate() {
        if (g >> j) & 1 == 1 {
            for w in 0..W {
                cw[w] ^= r[w];
            }
        }
    }
    if !visit(weight::<W, Q>(&cw)) {
        return false;
    }
    for i in start + 1..end {
        let r = &rows[i.trailing_zeros() as usize];
        for w in 0..W {
            cw[w] ^= r[w];
        }
        if !visit(weight::<W, Q>(&cw)) {
            return false;
        }
    }
    true
}

fn ranges(total: u64, threads: usize) -> Vec<(u64, u64)> {
    let t = (threads.max(1) as u64).min(total.max(1));
    let step = total / t;
    (0..t)
        .map(|i| {
            let s = i * step;
            let e = if i + 1 == t { total } else { s + step };
            (s, e)
        })
        .collect()
}

fn histogram_impl<const W: usize, const Q: bool>(p: &PackedRows, threads: usize) -> Vec<u64> {
    let rows: Vec<[u64; W]> = p
        .data
        .chunks(W)
        .map(|c| c.try_into().expect("row width"))
        .collect();
    let total = 1u64 << rows.len();
    let parts: Vec<Vec<u64>> = std::thread::scope(|s| {
        let handles: Vec<_> = ranges(total, threads)
            .into_iter()
            .map(|(a, b)| {
                let rows = &rows;
                s.spawn(move || {
                    let mut hist = vec![0u64; p.n + 1];
                    walk::<W, Q>(rows, a, b, |w| {
                        hist[w as usize] += 1;
                        true
                    });
                    hist
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let mut hist = vec![0u64; p.n + 1];
    for part in parts {
        for (a, b) in hist.iter_mut().zip(part) {
            *a += b;
        }
    }
    hist
}

fn min_weight_impl<const W: usize, const Q: bool>(
    p: &PackedRows,
    stop_at: Option<u32>,
    threads: usize,
) -> (u32, bool) {
    let rows: Vec<[u64; W]> = p
        .data
        .chunks(W)
        .map(|c| c.try_into().expect("row width"))
        .collect();
    let total = 1u64 << rows.len();
    let stop = AtomicBool::new(false);
    let parts: Vec<(u32, bool)> = std::thread::scope(|s| {
        let handles: Vec<_> = ranges(total, threads)
            .into_iter()
            .map(|(a, b)| {
                let rows = &rows;
                let stop = &stop;
                s.spawn(move || {
                    let mut best = u32::MAX;
                    let mut tick = 0u32;
                    let done = walk::<W, Q>(rows, a, b, |w| {
                        if w != 0 && w < best {
                            best = w;
                            if stop_at.is_some_and(|t| w <= t) {
                                stop.store(true, Ordering::Relaxed);
                                return false;
                            }
                        }
                        tick = tick.wrapping_add(1);
                        !(tick & 0xfff == 0 && stop.load(Ordering::Relaxed))
                    });
                    (best, !done)
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("worker panicked"))
            .collect()
    });
    let stopped = parts.iter().any(|&(_, s)| s);
    let best = parts.iter().map(|&(b, _)| b).min().unwrap_or(u32::MAX);
    (best, stopped)
}

macro_rules! dispatch {
    ($p:expr, $f:ident, $($arg:expr),*) => {
        match ($p.words, $p.quaternary) {
            (1, false) => $f::<1, false>($p, $($arg),*),
            (2, false) => $f::<2, false>($p, $($arg),*),
            (3, false) => $f::<3, false>($p, $($arg),*),
            (4, false) => $f::<4, false>($p, $($arg),*),
            (6, false) => $f::<6, false>($p, $($arg),*),
            (8, false) => $f::<8, false>($p, $($arg),*),
            (2, true) => $f::<2, true>($p, $($arg),*),
            (4, true) => $f::<4, true>($p, $($arg),*),
            (6, true) => $f::<6, true>($p, $($arg),*),
            (8, true) => $f::<8, true>($p, $($arg),*),
            _ => unreachable!("unsupported kernel row width {} (n = {})", $p.words, $p.n),
        }
    };
}

pub(crate) fn check_budget(log2: usize, budget_log2: usize) -> Result<()> {
    if log2 > budget_log2 || log2 > 63 {
        return Err(Error::EnumerationBudget {
            log2,
            budget: budget_log2,
        });
    }
    Ok(())
}

/// Supported lengths: binary up to 512, quaternary up to 256.
pub(crate) fn check_width(p: &PackedRows) -> Result<()> {
    let ok = if p.quaternary {
        matches!(p.words, 2 | 4 | 6 | 8)
    } else {
        matches!(p.words, 1 | 2 | 3 | 4 | 6 | 8)
    };
    if ok || p.rows() == 0 {
        Ok(())
    } else {
        Err(Error::Precondition(format!(
            "length {} unsupported by the enumeration kernel",
            p.n
        )))
    }
}

pub(crate) fn histogram(p: &PackedRows, threads: usize) -> Vec<u64> {
    if p.rows() == 0 {
        let mut h = vec![0u64; p.n + 1];
        h[0] = 1;
        return h;
    }
    dispatch!(p, histogram_impl, threads)
}

/// Minimum nonzero weight; with `stop_at`, returns as soon as a codeword of
/// weight at most `stop_at` is seen. The flag reports an early stop.
pub(crate) fn min_weight(p: &PackedRows, stop_at: Option<u32>, threads: usize) -> (u32, bool) {
    dispatch!(p, min_weight_impl, stop_at, threads)
}
