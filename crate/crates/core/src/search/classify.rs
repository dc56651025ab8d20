use num_bigint::BigUint;

use super::enumerate::{
    enumerate_binary, enumerate_quaternary, DEFAULT_MAX_N_GF2, DEFAULT_MAX_N_GF4,
};
use super::pool::parallel_map;
use crate::equiv::{analyze, canonicalize, CanonOptions};
use crate::error::{Error, Result};
use crate::lincode::{BinaryCode, QuaternaryCode};
use crate::qc::{construct_cubic, CubicComponents};

#[derive(Clone, Debug)]
pub struct ClassRep {
    pub code: BinaryCode,
    pub canonical: BinaryCode,
    pub c1: BinaryCode,
    pub c2: QuaternaryCode,
    pub hash: u128,
    pub aut_order: BigUint,
    pub aut_complete: bool,
    /// Number of (C1, C2) pairs that landed in this class.
    pub hits: usize,
}

#[derive(Clone, Debug)]
pub struct Census {
    pub ell: usize,
    pub binary_classes: usize,
    pub quaternary_codes: usize,
    pub classes: Vec<ClassRep>,
    /// False when some canonicalization ran out of budget.
    pub complete: bool,
}

#[derive(Clone, Copy, Debug)]
pub struct ClassifyOptions {
    pub threads: usize,
    pub canon: CanonOptions,
    pub max_ell: usize,
}

impl Default for ClassifyOptions {
    fn default() -> Self {
        ClassifyOptions {
            threads: 1,
            canon: CanonOptions::default(),
            max_ell: 6,
        }
    }
}

/// Binary cubic self-dual codes of length `3ℓ` up to permutation equivalence.
///
/// `C1` runs over one representative per equivalence class, `C2` over every
/// Hermitian self-dual code of length `ℓ`.
pub fn classify_cubic(ell: usize, opts: &ClassifyOptions) -> Result<Census> {
    if ell > opts.max_ell {
        return Err(Error::Budget(format!(
            "ell={ell} exceeds the classification limit {}",
            opts.max_ell
        )));
    }
    let binaries = enumerate_binary(ell, DEFAULT_MAX_N_GF2.max(ell))?;
    let quats = enumerate_quaternary(ell, DEFAULT_MAX_N_GF4.max(ell))?;
    let mut complete = true;
    let mut reps: Vec<(BinaryCode, BinaryCode)> = Vec::new();
    for c in binaries {
        let f = canonicalize(&c, &opts.canon)?;
        complete &= f.complete;
        if !reps.iter().any(|(m, _)| *m == f.matrix) {
            reps.push((f.matrix, c));
        }
    }
    let pairs: Vec<(usize, usize)> = (0..reps.len())
        .flat_map(|i| (0..quats.len()).map(move |j| (i, j)))
        .collect();
    let forms = parallel_map(pairs.len(), opts.threads, |p| -> Result<_> {
        let (i, j) = pairs[p];
        let parts = CubicComponents::new(reps[i].1.clone(), quats[j].clone())?;
        let code = construct_cubic(&parts)?;
        let f = canonicalize(&code, &opts.canon)?;
        Ok((code, f))
    });
    let mut classes: Vec<ClassRep> = Vec::new();
    for (p, r) in forms.into_iter().enumerate() {
        let (code, f) = r?;
        complete &= f.complete;
        let (i, j) = pairs[p];
        match classes.iter_mut().find(|c| c.canonical == f.matrix) {
            Some(c) => c.hits += 1,
            None => classes.push(ClassRep {
                code,
                canonical: f.matrix,
                c1: reps[i].1.clone(),
                c2: quats[j].clone(),
                hash: f.hash,
                aut_order: BigUint::from(0u32),
                aut_complete: false,
                hits: 1,
            }),
        }
    }
    for c in &mut classes {
        let (_, aut) = analyze(&c.code, &opts.canon)?;
        c.aut_order = aut.order;
        c.aut_complete = aut.complete;
        complete &= aut.complete;
    }
    Ok(Census {
        ell,
        binary_classes: reps.len(),
        quaternary_codes: quats.len(),
        classes,
        complete,
    })
}
