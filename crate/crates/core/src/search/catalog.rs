use std::io::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lincode::BinaryCode;
use crate::qc::Extraction;

/// How a cataloged code was produced: `C2` is transformed (conjugated if
/// `conjugate`, coordinate `j` moved to `perm[j]`, then scaled) before the
/// cubic construction with `C1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub c1: String,
    pub c2: String,
    pub perm: Vec<usize>,
    /// One of `1 w W` per coordinate.
    pub scales: String,
    pub conjugate: bool,
    pub seed: u64,
    /// Work-item counter the transform was drawn for.
    pub item: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeRecord {
    pub n: usize,
    pub k: usize,
    pub d: u32,
    /// Nonzero `(i, A_i)` pairs.
    pub enumerator: Vec<(usize, u64)>,
    pub extraction: Extraction,
    pub hash: String,
    pub canon_complete: bool,
    pub aut_order: String,
    pub aut_complete: bool,
    /// Invariant key shared by records that could not be separated.
    pub group: Option<String>,
    /// Generator rows in reduced echelon form.
    pub rows: Vec<String>,
    /// Canonical generator rows.
    pub canonical: Vec<String>,
    pub provenance: Provenance,
}

impl CodeRecord {
    pub fn invariant_key(&self) -> String {
        let w: Vec<String> = self
            .enumerator
            .iter()
            .map(|(i, a)| format!("{i}:{a}"))
            .collect();
        let aut = if self.aut_complete {
            self.aut_order.as_str()
        } else {
            "?"
        };
        format!("d={} aut={} w={}", self.d, aut, w.join(","))
    }

    pub fn code(&self) -> Result<BinaryCode> {
        rows_to_code(self.n, &self.rows)
    }
}

pub(crate) fn code_rows(c: &BinaryCode) -> Vec<String> {
    c.rows().iter().map(|r| r.to_string()).collect()
}

fn rows_to_code(n: usize, rows: &[String]) -> Result<BinaryCode> {
    let vs = rows
        .iter()
        .map(|r| crate::bits::BitVector::parse(r))
        .collect::<Result<Vec<_>>>()?;
    BinaryCode::from_rows(n, &vs)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogMeta {
    pub ell: usize,
    pub d_target: u32,
    pub samples: u64,
    pub seed: u64,
    pub scalings: bool,
    pub conjugation: bool,
    pub pairs_eligible: usize,
    pub items: u64,
    pub survivors: u64,
    pub duplicates: u64,
    pub incomplete: u64,
    pub command: Option<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
enum Line {
    Meta(CatalogMeta),
    Record(Box<CodeRecord>),
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Catalog {
    pub meta: CatalogMeta,
    pub records: Vec<CodeRecord>,
}

/// Outcome of [`Catalog::insert`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Inserted {
    New,
    /// Same canonical matrix as an existing record.
    Duplicate,
}

impl Catalog {
    pub fn new(meta: CatalogMeta) -> Catalog {
        Catalog {
            meta,
            records: Vec::new(),
        }
    }

    /// Adds `rec` unless an existing record has the same canonical matrix.
    /// Records whose canonical form is incomplete carry their invariant key as
    /// a group label, marking them as possibly equivalent to others with it.
    pub fn insert(&mut self, mut rec: CodeRecord) -> Inserted {
        if self
            .records
            .iter()
            .any(|r| r.n == rec.n && r.canonical == rec.canonical)
        {
            return Inserted::Duplicate;
        }
        if !rec.canon_complete {
            rec.group = Some(rec.invariant_key());
        }
        self.records.push(rec);
        Inserted::New
    }

    /// Groups of records with equal invariants, at least one of them lacking
    /// a complete canonical form.
    pub fn possibly_equivalent(&self) -> Vec<Vec<&CodeRecord>> {
        let mut groups: Vec<(String, Vec<&CodeRecord>)> = Vec::new();
        for r in &self.records {
            let key = r.invariant_key();
            match groups.iter_mut().find(|g| g.0 == key) {
                Some(g) => g.1.push(r),
                None => groups.push((key, vec![r])),
            }
        }
        groups
            .into_iter()
            .map(|g| g.1)
            .filter(|g| g.len() > 1 && g.iter().any(|r| !r.canon_complete))
            .collect()
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = serde_json::to_string(&Line::Meta(self.meta.clone())).expect("serializable");
        out.push('\n');
        for r in &self.records {
            out.push_str(
                &serde_json::to_string(&Line::Record(Box::new(r.clone()))).expect("serializable"),
            );
            out.push('\n');
        }
        out
    }

    pub fn from_jsonl(text: &str) -> Result<Catalog> {
        let mut cat = Catalog::default();
        let mut saw_meta = false;
        for (i, line) in text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
        {
            let parsed: Line = serde_json::from_str(line).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })?;
            match parsed {
                Line::Meta(m) => {
                    cat.meta = m;
                    saw_meta = true;
                }
                Line::Record(r) => cat.records.push(*r),
            }
        }
        if !saw_meta && !cat.records.is_empty() {
            return Err(Error::Parse {
                line: 1,
                msg: "catalog has no meta line".into(),
            });
        }
        Ok(cat)
    }

    /// Writes through a temporary file and renames it into place.
    pub fn save(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        let tmp = path.with_extension("tmp");
        {
            let mut f = std::fs::File::create(&tmp)?;
            f.write_all(self.to_jsonl().as_bytes())?;
            f.sync_all()?;
        }
        std::fs::rename(&tmp, path)?;
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Catalog> {
        Catalog::from_jsonl(&std::fs::read_to_string(path)?)
    }
}
