use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lincode::WeightEnumerator;

/// `A_weight = base + slope·param`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateTerm {
    pub weight: usize,
    pub base: i64,
    pub slope: i64,
}

/// A partially known weight enumerator `1 + Σ (base + slope·p) y^i + …`
/// for extremal self-dual codes of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WenumTemplate {
    pub length: usize,
    pub label: String,
    pub terms: Vec<TemplateTerm>,
    /// Name of the free parameter, `None` for fully determined templates.
    pub param_name: Option<String>,
    pub range: Option<(i64, i64)>,
    /// Number of leading terms that must be known for a match; later terms
    /// are compared only when the enumerator reaches them.
    pub required_terms: usize,
}

impl WenumTemplate {
    fn new(
        length: usize,
        label: &str,
        terms: &[(usize, i64, i64)],
        param: Option<(&str, i64, i64)>,
        required: usize,
    ) -> Self {
        WenumTemplate {
            length,
            label: label.to_string(),
            terms: terms
                .iter()
                .map(|&(weight, base, slope)| TemplateTerm {
                    weight,
                    base,
                    slope,
                })
                .collect(),
            param_name: param.map(|p| p.0.to_string()),
            range: param.map(|p| (p.1, p.2)),
            required_terms: required,
        }
    }

    /// Coefficient of `y^weight` at parameter value `param`.
    pub fn coefficient(&self, weight: usize, param: i64) -> Option<i64> {
        self.terms
            .iter()
            .find(|t| t.weight == weight)
            .map(|t| t.base + t.slope * param)
    }

    pub fn first_weight(&self) -> usize {
        self.terms[0].weight
    }

    pub fn last_weight(&self) -> usize {
        self.terms[self.terms.len() - 1].weight
    }

    pub fn in_range(&self, param: i64) -> bool {
        self.range.is_none_or(|(lo, hi)| (lo..=hi).contains(&param))
    }

    /// Synthetic enumerator known through the last listed weight.
    pub fn evaluate(&self, param: i64) -> Result<WeightEnumerator> {
        let mut pairs = vec![(0usize, 1u64)];
        for t in &self.terms {
            let a = t.base + t.slope * param;
            if a < 0 {
                return Err(Error::Precondition(format!(
                    "{} at parameter {param} has negative A_{}",
                    self.label, t.weight
                )));
            }
            pairs.push((t.weight, a as u64));
        }
        WeightEnumerator::from_pairs(self.length, &pairs, Some(self.last_weight()))
    }

    /// The parameter consistent with `w`, `Some(None)` for a parameter-free
    /// template that matches, `None` when nothing fits.
    fn solve(&self, w: &WeightEnumerator) -> Option<Option<i64>> {
        if w.n() != self.length || w.get(0) != Some(1) {
            return None;
        }
        if (1..self.first_weight()).any(|i| w.get(i) != Some(0)) {
            return None;
        }
        let known: Vec<(TemplateTerm, i64)> = self
            .terms
            .iter()
            .filter_map(|t| w.get(t.weight).map(|a| (*t, a as i64)))
            .collect();
        let mut param = None;
        for (t, a) in &known {
            if t.slope != 0 {
                let diff = a - t.base;
                if diff % t.slope != 0 {
                    return None;
                }
                param = Some(diff / t.slope);
                break;
            }
        }
        let p = param.unwrap_or(0);
        if known.iter().any(|(t, a)| t.base + t.slope * p != *a) {
            return None;
        }
        Some(self.param_name.as_ref().map(|_| p))
    }
}

impl fmt::Display for WenumTemplate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.param_name.as_deref().unwrap_or("");
        write!(f, "{} {}: 1", self.length, self.label)?;
        for t in &self.terms {
            match t.slope {
                0 => write!(f, " + {}y^{}", t.base, t.weight)?,
                s if s < 0 => write!(f, " + ({} - {}*{p})y^{}", t.base, -s, t.weight)?,
                s => write!(f, " + ({} + {s}*{p})y^{}", t.base, t.weight)?,
            }
        }
        write!(f, " + ...")?;
        if let Some((lo, hi)) = self.range {
            write!(f, "  {lo} <= {p} <= {hi}")?;
        }
        Ok(())
    }
}

/// Known enumerators for extremal cubic self-dual codes of lengths 54, 60, 66.
pub fn builtin_templates() -> Vec<WenumTemplate> {
    vec![
        WenumTemplate::new(
            54,
            "W1",
            &[(10, 351, -8), (12, 5031, 24), (14, 48492, 32)],
            Some(("beta", 0, 43)),
            2,
        ),
        WenumTemplate::new(
            54,
            "W2",
            &[(10, 351, -8), (12, 5543, 24), (14, 43884, 32)],
            Some(("beta", 12, 43)),
            2,
        ),
        WenumTemplate::new(
            60,
            "W1",
            &[(12, 2555, 0), (14, 33600, 0), (16, 278865, 0)],
            None,
            3,
        ),
        WenumTemplate::new(
            60,
            "W2",
            &[(12, 2619, 0), (14, 33216, 0), (16, 279441, 0)],
            None,
            3,
        ),
        WenumTemplate::new(
            60,
            "W3",
            &[(12, 3195, 0), (14, 29760, 0), (16, 284625, 0)],
            None,
            3,
        ),
        WenumTemplate::new(
            60,
            "W4",
            &[(12, 3451, 0), (14, 24128, 0), (16, 336081, 0)],
            None,
            3,
        ),
        WenumTemplate::new(
            66,
            "W1",
            &[(12, 858, 8), (14, 18678, 24)],
            Some(("alpha", 0, 778)),
            2,
        ),
        WenumTemplate::new(
            66,
            "W2",
            &[(12, 858, 8), (14, 18166, 24)],
            Some(("alpha", 14, 756)),
            2,
        ),
        WenumTemplate::new(66, "W3", &[(12, 1690, 0), (14, 7990, 0)], None, 2),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TemplateMatch {
    pub length: usize,
    pub label: String,
    pub param_name: Option<String>,
    pub param: Option<i64>,
    pub in_range: bool,
}

impl fmt::Display for TemplateMatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.length, self.label)?;
        if let (Some(name), Some(p)) = (&self.param_name, self.param) {
            write!(f, " {name}={p}")?;
            if !self.in_range {
                write!(f, " (out of range)")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Extraction {
    Match(TemplateMatch),
    NoMatch,
    Ambiguous(Vec<TemplateMatch>),
}

impl Extraction {
    pub fn matched(&self) -> Option<&TemplateMatch> {
        match self {
            Extraction::Match(m) => Some(m),
            _ => None,
        }
    }
}

/// Finds the template (and its parameter) that fits `w`.
///
/// Errors when `w` is not known far enough to test any template of its length.
pub fn extract_parameter(w: &WeightEnumerator, templates: &[WenumTemplate]) -> Result<Extraction> {
    let same_len: Vec<&WenumTemplate> = templates.iter().filter(|t| t.length == w.n()).collect();
    if same_len.is_empty() {
        return Ok(Extraction::NoMatch);
    }
    let usable: Vec<&WenumTemplate> = same_len
        .into_iter()
        .filter(|t| w.known_through() >= t.terms[t.required_terms - 1].weight)
        .collect();
    if usable.is_empty() {
        return Err(Error::Truncated(w.known_through()));
    }
    let mut hits: Vec<TemplateMatch> = usable
        .iter()
        .filter_map(|t| {
            t.solve(w).map(|param| TemplateMatch {
                length: t.length,
                label: t.label.clone(),
                param_name: t.param_name.clone(),
                param,
                in_range: param.is_none_or(|p| t.in_range(p)),
            })
        })
        .collect();
    Ok(match hits.len() {
        0 => Extraction::NoMatch,
        1 => Extraction::Match(hits.pop().unwrap()),
        _ => Extraction::Ambiguous(hits),
    })
}
