use super::kernel::{self, PackedRows};
use super::{BinaryCode, QuaternaryCode, WeightEnumerator};
use crate::bits::words_for;
use crate::error::{Error, Result};

/// Default ceiling on the number of enumerated codewords: `2^33` covers a
/// `[66, 33]` binary code.
pub const DEFAULT_BUDGET_LOG2: usize = 33;

/// Controls for the enumeration kernels.
#[derive(Clone, Copy, Debug)]
pub struct EnumOptions {
    /// Worker threads for the Gray-code walk.
    pub threads: usize,
    /// Refuse codes with more than `2^budget_log2` codewords.
    pub budget_log2: usize,
    /// Shuffle generator rows before walking (changes visit order only).
    pub row_order_seed: Option<u64>,
}

impl Default for EnumOptions {
    fn default() -> Self {
        EnumOptions {
            threads: 1,
            budget_log2: DEFAULT_BUDGET_LOG2,
            row_order_seed: None,
        }
    }
}

impl EnumOptions {
    pub fn with_threads(threads: usize) -> Self {
        EnumOptions {
            threads: threads.max(1),
            ..Default::default()
        }
    }
}

/// Result of a minimum-distance computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinDistance {
    Exact(u32),
    /// Early stop: a codeword of this weight exists, so `d` is at most this.
    AtMost(u32),
}

impl MinDistance {
    pub fn value(self) -> u32 {
        match self {
            MinDistance::Exact(d) | MinDistance::AtMost(d) => d,
        }
    }

    pub fn is_exact(self) -> bool {
        matches!(self, MinDistance::Exact(_))
    }
}

fn pack_binary(c: &BinaryCode) -> PackedRows {
    let words = words_for(c.n()).max(1);
    let mut data = Vec::with_capacity(c.k() * words);
    for i in 0..c.k() {
        data.extend_from_slice(c.row_words(i));
        data.resize((i + 1) * words, 0);
    }
    PackedRows {
        n: c.n(),
        words,
        quaternary: false,
        data,
    }
}

fn pack_quaternary(c: &QuaternaryCode) -> PackedRows {
    let half = words_for(c.n()).max(1);
    let mut data = Vec::with_capacity(4 * c.k() * half);
    for i in 0..c.k() {
        let g = c.row(i);
        for v in [g.clone(), g.scale(crate::gf::Gf4::OMEGA)] {
            let mut one = v.one_plane().to_vec();
            let mut om = v.omega_plane().to_vec();
            one.resize(half, 0);
            om.resize(half, 0);
            data.extend(one);
            data.extend(om);
        }
    }
    PackedRows {
        n: c.n(),
        words: 2 * half,
        quaternary: true,
        data,
    }
}

fn enumerate(p: PackedRows, cap: Option<usize>, opts: &EnumOptions) -> Result<WeightEnumerator> {
    kernel::check_budget(p.rows(), opts.budget_log2)?;
    kernel::check_width(&p)?;
    let log2 = p.rows();
    let hist = kernel::histogram(&p, opts.threads);
    Ok(WeightEnumerator::from_histogram(hist, cap, log2))
}

fn distance(mut p: PackedRows, early_stop: Option<u32>, opts: &EnumOptions) -> Result<MinDistance> {
    if p.rows() == 0 {
        return Err(Error::ZeroDimension);
    }
    kernel::check_budget(p.rows(), opts.budget_log2)?;
    kernel::check_width(&p)?;
    if let Some(seed) = opts.row_order_seed {
        p.shuffle(seed);
    }
    let (w, stopped) = kernel::min_weight(&p, early_stop, opts.threads);
    Ok(if stopped {
        MinDistance::AtMost(w)
    } else {
        MinDistance::Exact(w)
    })
}

impl BinaryCode {
    /// Complete weight enumerator, or counts through `cap` only.
    pub fn weight_enumerator(
        &self,
        cap: Option<usize>,
        opts: &EnumOptions,
    ) -> Result<WeightEnumerator> {
        enumerate(pack_binary(self), cap, opts)
    }

    /// Minimum nonzero weight by Gray-code enumeration. With `early_stop`,
    /// stops at the first codeword of weight `≤ early_stop`.
    pub fn min_distance(&self, early_stop: Option<u32>, opts: &EnumOptions) -> Result<MinDistance> {
        distance(pack_binary(self), early_stop, opts)
    }
}

impl QuaternaryCode {
    pub fn weight_enumerator(
        &self,
        cap: Option<usize>,
        opts: &EnumOptions,
    ) -> Result<WeightEnumerator> {
        enumerate(pack_quaternary(self), cap, opts)
    }

    pub fn min_distance(&self, early_stop: Option<u32>, opts: &EnumOptions) -> Result<MinDistance> {
        distance(pack_quaternary(self), early_stop, opts)
    }
}

/// Exact minimum distance with default options.
pub fn min_distance(c: &BinaryCode, early_stop: Option<u32>) -> Result<MinDistance> {
    c.min_distance(early_stop, &EnumOptions::default())
}

/// Weight enumerator with default options.
pub fn weight_enumerator(c: &BinaryCode, cap: Option<usize>) -> Result<WeightEnumerator> {
    c.weight_enumerator(cap, &EnumOptions::default())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bits::BitVector;
    use crate::lincode::Gf4Vector;

    fn code(n: usize, rows: &[&str]) -> BinaryCode {
        let rows: Vec<BitVector> = rows.iter().map(|r| BitVector::parse(r).unwrap()).collect();
        BinaryCode::from_rows(n, &rows).unwrap()
    }

    #[test]
    fn enumerator_examples() {
        assert_eq!(
            weight_enumerator(&code(2, &["11"]), None)
                .unwrap()
                .to_string(),
            "0:1 2:1"
        );
        let even = code(3, &["110", "011"]);
        assert_eq!(
            weight_enumerator(&even, None).unwrap().counts(),
            &[1, 0, 3, 0]
        );
        let cubic = code(6, &["111111", "101101", "011011"]);
        assert_eq!(
            weight_enumerator(&cubic, None).unwrap().counts(),
            &[1, 0, 3, 0, 3, 0, 1]
        );
        let capped = weight_enumerator(&cubic, Some(3)).unwrap();
        assert_eq!(capped.counts(), &[1, 0, 3, 0]);
        assert_eq!(capped.get(4), None);
    }

    #[test]
    fn distance_examples() {
        assert_eq!(
            min_distance(&code(2, &["11"]), None).unwrap(),
            MinDistance::Exact(2)
        );
        assert_eq!(
            min_distance(&code(3, &["111"]), None).unwrap(),
            MinDistance::Exact(3)
        );
        let cubic = code(6, &["111111", "101101", "011011"]);
        assert_eq!(min_distance(&cubic, None).unwrap(), MinDistance::Exact(2));
        assert_eq!(
            min_distance(&BinaryCode::zero(4), None),
            Err(Error::ZeroDimension)
        );
        let d = min_distance(&cubic, Some(2)).unwrap();
        assert_eq!(d, MinDistance::AtMost(2));
    }

    #[test]
    fn budget_refusal() {
        let opts = EnumOptions {
            budget_log2: 2,
            ..Default::default()
        };
        let c = code(3, &["100", "010", "001"]);
        assert!(matches!(
            c.weight_enumerator(None, &opts),
            Err(Error::EnumerationBudget { .. })
        ));
    }

    #[test]
    fn quaternary_enumerator() {
        let c = QuaternaryCode::from_rows(2, &[Gf4Vector::parse("1w").unwrap()]).unwrap();
        let w = c.weight_enumerator(None, &EnumOptions::default()).unwrap();
        assert_eq!(w.to_string(), "0:1 2:3");
        assert_eq!(w.total(), 4);
        assert_eq!(
            c.min_distance(None, &EnumOptions::default()).unwrap(),
            MinDistance::Exact(2)
        );
    }
}
