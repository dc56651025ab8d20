use rand::seq::SliceRandom;
use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::catalog::{code_rows, Catalog, CatalogMeta, CodeRecord, Inserted, Provenance};
use super::db::ComponentDb;
use super::pool::parallel_map;
use crate::equiv::{analyze, CanonOptions};
use crate::error::{Error, Result};
use crate::gf::Gf4;
use crate::lincode::{
    BinaryCode, Code, EnumOptions, MinDistance, QuaternaryCode, DEFAULT_BUDGET_LOG2,
};
use crate::qc::{
    builtin_templates, construct_cubic, distance_bound_from, extract_parameter, CubicComponents,
    Extraction, WenumTemplate,
};

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub ell: usize,
    pub d_target: u32,
    /// Transforms tried per component pair; the first is always the identity.
    pub samples: u64,
    pub seed: u64,
    pub scalings: bool,
    pub conjugation: bool,
    pub templates: Vec<WenumTemplate>,
    pub threads: usize,
    pub canon: CanonOptions,
    pub budget_log2: usize,
}

impl SearchConfig {
    pub fn new(ell: usize, d_target: u32, samples: u64, seed: u64) -> SearchConfig {
        SearchConfig {
            ell,
            d_target,
            samples,
            seed,
            scalings: false,
            conjugation: false,
            templates: builtin_templates(),
            threads: 1,
            canon: CanonOptions::default(),
            budget_log2: DEFAULT_BUDGET_LOG2,
        }
    }
}

struct Transform {
    perm: Vec<usize>,
    scales: Vec<Gf4>,
    conjugate: bool,
}

fn draw_transform(cfg: &SearchConfig, sample: u64, rng: &mut ChaCha8Rng) -> Transform {
    let n = cfg.ell;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut scales = vec![Gf4::ONE; n];
    let mut conjugate = false;
    if sample > 0 {
        perm.shuffle(rng);
        if cfg.scalings {
            scales
                .iter_mut()
                .for_each(|s| *s = Gf4::UNITS[rng.random_range(0..3)]);
        }
        if cfg.conjugation {
            conjugate = rng.random_bool(0.5);
        }
    }
    Transform {
        perm,
        scales,
        conjugate,
    }
}

fn item_rng(seed: u64, item: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(item);
    rng
}

/// Rebuilds the cubic code described by `p` from the component database.
pub fn replay(db: &ComponentDb, p: &Provenance) -> Result<BinaryCode> {
    let c1 = db
        .binary_code(&p.c1)
        .ok_or_else(|| Error::Precondition(format!("unknown binary code '{}'", p.c1)))?;
    let c2 = db
        .quaternary_code(&p.c2)
        .ok_or_else(|| Error::Precondition(format!("unknown quaternary code '{}'", p.c2)))?;
    let scales = p
        .scales
        .chars()
        .map(|ch| {
            Gf4::from_char(ch).ok_or_else(|| Error::Precondition(format!("bad scaling '{ch}'")))
        })
        .collect::<Result<Vec<_>>>()?;
    let t = c2.transform(&p.perm, &scales, p.conjugate)?;
    construct_cubic(&CubicComponents::new(c1.clone(), t)?)
}

struct Pair<'a> {
    c1: (&'a str, &'a BinaryCode),
    c2: (&'a str, &'a QuaternaryCode),
}

fn component_distance(code: &Code, opts: &EnumOptions) -> Result<u32> {
    let d = match code {
        Code::Binary(c) => c.min_distance(None, opts)?,
        Code::Quaternary(c) => c.min_distance(None, opts)?,
    };
    Ok(d.value())
}

/// Samples transformed component pairs, keeps cubic codes reaching
/// `d_target`, and catalogs them up to permutation equivalence.
pub fn run_search(db: &ComponentDb, cfg: &SearchConfig) -> Result<Catalog> {
    if cfg.ell == 0 || cfg.ell % 2 == 1 {
        return Err(Error::Precondition(format!(
            "ell must be even, got {}",
            cfg.ell
        )));
    }
    let ell = db.ell()?;
    if ell != cfg.ell {
        return Err(Error::LengthMismatch {
            expected: cfg.ell,
            got: ell,
        });
    }
    let eo = EnumOptions {
        threads: 1,
        budget_log2: cfg.budget_log2,
        row_order_seed: None,
    };
    let mut pairs = Vec::new();
    let d2s: Vec<u32> = db
        .quaternary
        .iter()
        .map(|e| component_distance(&e.code, &eo))
        .collect::<Result<_>>()?;
    for e1 in &db.binary {
        let d1 = component_distance(&e1.code, &eo)?;
        let Code::Binary(c1) = &e1.code else {
            unreachable!()
        };
        for (e2, &d2) in db.quaternary.iter().zip(&d2s) {
            let Code::Quaternary(c2) = &e2.code else {
                unreachable!()
            };
            if distance_bound_from(d1, d2) >= cfg.d_target {
                pairs.push(Pair {
                    c1: (&e1.name, c1),
                    c2: (&e2.name, c2),
                });
            }
        }
    }
    let items = pairs.len() as u64 * cfg.samples;
    let results = parallel_map(items as usize, cfg.threads, |t| {
        evaluate(&pairs, cfg, t as u64)
    });
    let mut meta = CatalogMeta {
        ell,
        d_target: cfg.d_target,
        samples: cfg.samples,
        seed: cfg.seed,
        scalings: cfg.scalings,
        conjugation: cfg.conjugation,
        pairs_eligible: pairs.len(),
        items,
        ..Default::default()
    };
    let mut cat = Catalog::new(CatalogMeta::default());
    for r in results {
        let Some(rec) = r? else { continue };
        meta.survivors += 1;
        let incomplete = !rec.canon_complete || !rec.aut_complete;
        match cat.insert(rec) {
            Inserted::New => meta.incomplete += incomplete as u64,
            Inserted::Duplicate => meta.duplicates += 1,
        }
    }
    cat.meta = meta;
    Ok(cat)
}

fn evaluate(pairs: &[Pair], cfg: &SearchConfig, item: u64) -> Result<Option<CodeRecord>> {
    let pair = &pairs[(item / cfg.samples) as usize];
    let sample = item % cfg.samples;
    let mut rng = item_rng(cfg.seed, item);
    let t = draw_transform(cfg, sample, &mut rng);
    let c2 = pair.c2.1.transform(&t.perm, &t.scales, t.conjugate)?;
    let code = construct_cubic(&CubicComponents::new(pair.c1.1.clone(), c2)?)?;
    let opts = EnumOptions {
        threads: 1,
        budget_log2: cfg.budget_log2,
        row_order_seed: Some(rng.next_u64()),
    };
    match code.min_distance(cfg.d_target.checked_sub(1), &opts)? {
        MinDistance::AtMost(_) => return Ok(None),
        MinDistance::Exact(d) if d < cfg.d_target => return Ok(None),
        MinDistance::Exact(_) => {}
    }
    let opts = EnumOptions {
        row_order_seed: None,
        ..opts
    };
    let w = code.weight_enumerator(None, &opts)?;
    let d = w.min_distance().unwrap_or(0) as u32;
    let extraction = if cfg.templates.iter().any(|t| t.length == code.n()) {
        extract_parameter(&w, &cfg.templates)?
    } else {
        Extraction::NoMatch
    };
    let (form, aut) = analyze(&code, &cfg.canon)?;
    Ok(Some(CodeRecord {
        n: code.n(),
        k: code.k(),
        d,
        enumerator: w.pairs(),
        extraction,
        hash: form.hash_hex(),
        canon_complete: form.complete,
        aut_order: aut.order.to_string(),
        aut_complete: aut.complete,
        group: None,
        rows: code_rows(&code),
        canonical: code_rows(&form.matrix),
        provenance: Provenance {
            c1: pair.c1.0.to_string(),
            c2: pair.c2.0.to_string(),
            perm: t.perm,
            scales: t.scales.iter().map(|s| s.to_char()).collect(),
            conjugate: t.conjugate,
            seed: cfg.seed,
            item,
        },
    }))
}
