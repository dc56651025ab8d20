use std::path::Path;

use crate::error::{Error, Result};
use crate::lincode::{parse_codes, BinaryCode, Code, CodeEntry, QuaternaryCode};

/// Named self-dual component codes: binary (Euclidean) and quaternary (Hermitian).
#[derive(Clone, Debug, Default)]
pub struct ComponentDb {
    pub binary: Vec<CodeEntry>,
    pub quaternary: Vec<CodeEntry>,
}

impl ComponentDb {
    /// Validates self-duality of every entry and uniqueness of names.
    pub fn from_entries(entries: Vec<CodeEntry>) -> Result<ComponentDb> {
        let mut db = ComponentDb::default();
        for e in entries {
            if db.get(&e.name).is_some() {
                return Err(Error::Precondition(format!(
                    "duplicate code name '{}'",
                    e.name
                )));
            }
            if !e.code.is_self_dual() {
                return Err(Error::NotSelfDual(e.name));
            }
            match e.code {
                Code::Binary(_) => db.binary.push(e),
                Code::Quaternary(_) => db.quaternary.push(e),
            }
        }
        Ok(db)
    }

    pub fn get(&self, name: &str) -> Option<&CodeEntry> {
        self.binary
            .iter()
            .chain(&self.quaternary)
            .find(|e| e.name == name)
    }

    pub fn binary_code(&self, name: &str) -> Option<&BinaryCode> {
        self.binary
            .iter()
            .find(|e| e.name == name)
            .and_then(|e| match &e.code {
                Code::Binary(c) => Some(c),
                Code::Quaternary(_) => None,
            })
    }

    pub fn quaternary_code(&self, name: &str) -> Option<&QuaternaryCode> {
        self.quaternary
            .iter()
            .find(|e| e.name == name)
            .and_then(|e| match &e.code {
                Code::Quaternary(c) => Some(c),
                Code::Binary(_) => None,
            })
    }

    /// The common length of all entries, or an error if lengths differ.
    pub fn ell(&self) -> Result<usize> {
        let mut lens = self
            .binary
            .iter()
            .chain(&self.quaternary)
            .map(|e| e.code.n());
        let first = lens
            .next()
            .ok_or_else(|| Error::Precondition("empty component database".into()))?;
        match lens.find(|&l| l != first) {
            Some(other) => Err(Error::LengthMismatch {
                expected: first,
                got: other,
            }),
            None => Ok(first),
        }
    }
}

pub fn parse_component_db(text: &str) -> Result<ComponentDb> {
    ComponentDb::from_entries(parse_codes(text)?)
}

pub fn load_component_db(path: impl AsRef<Path>) -> Result<ComponentDb> {
    let text = std::fs::read_to_string(path)?;
    parse_component_db(&text)
}
