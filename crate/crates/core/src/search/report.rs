use std::collections::BTreeSet;
use std::fmt::Write as _;

use super::catalog::Catalog;
use crate::qc::{builtin_templates, Extraction};

/// Previously published parameter values per (length, template).
pub fn published_params(length: usize, label: &str) -> &'static [i64] {
    match (length, label) {
        (54, "W1") => &[0, 3, 6, 9, 12, 15, 18],
        (54, "W2") => &[12, 15, 18, 21, 24, 27],
        (66, "W1") => &[17, 21, 23, 26, 30, 43, 46],
        _ => &[],
    }
}

/// Previously published automorphism group orders per (length, template).
pub fn published_aut_orders(length: usize, label: &str) -> &'static [u64] {
    match (length, label) {
        (60, "W3") => &[3, 6, 12],
        _ => &[],
    }
}

/// `0,3-5,9` style listing of a sorted set.
pub fn compress(values: &BTreeSet<i64>) -> String {
    let v: Vec<i64> = values.iter().copied().collect();
    let mut parts = Vec::new();
    let mut i = 0;
    while i < v.len() {
        let mut j = i;
        while j + 1 < v.len() && v[j + 1] == v[j] + 1 {
            j += 1;
        }
        parts.push(match j - i {
            0 => v[i].to_string(),
            1 => format!("{},{}", v[i], v[j]),
            _ => format!("{}-{}", v[i], v[j]),
        });
        i = j + 1;
    }
    if parts.is_empty() {
        "-".into()
    } else {
        parts.join(",")
    }
}

/// Parameter and automorphism-order coverage of `cat` at `length` against
/// the published values.
pub fn catalog_report(cat: &Catalog, length: usize) -> String {
    let mut out = String::new();
    let records: Vec<_> = cat.records.iter().filter(|r| r.n == length).collect();
    let _ = writeln!(out, "length {length}: {} cataloged codes", records.len());
    let templates: Vec<_> = builtin_templates()
        .into_iter()
        .filter(|t| t.length == length)
        .collect();
    let mut any_new = false;
    for t in &templates {
        let hits: Vec<_> = records
            .iter()
            .filter_map(|r| match &r.extraction {
                Extraction::Match(m) if m.label == t.label => Some((r, m)),
                _ => None,
            })
            .collect();
        let _ = writeln!(out);
        match (&t.param_name, t.range) {
            (Some(name), Some((lo, hi))) => {
                let published: BTreeSet<i64> =
                    published_params(length, &t.label).iter().copied().collect();
                let found: BTreeSet<i64> = hits.iter().filter_map(|(_, m)| m.param).collect();
                let new: BTreeSet<i64> = found.difference(&published).copied().collect();
                let step = if length == 54 { 3 } else { 1 };
                let gaps: BTreeSet<i64> = (lo..=hi)
                    .filter(|p| p % step == 0 && !published.contains(p) && !found.contains(p))
                    .collect();
                any_new |= !new.is_empty();
                let _ = writeln!(out, "{} {lo} <= {name} <= {hi}", t.label);
                let _ = writeln!(out, "  published: {}", compress(&published));
                let _ = writeln!(out, "  found:     {}", compress(&found));
                let _ = writeln!(out, "  new:       {}", compress(&new));
                let _ = writeln!(out, "  gaps:      {}", compress(&gaps));
            }
            _ => {
                let published: BTreeSet<i64> = published_aut_orders(length, &t.label)
                    .iter()
                    .map(|&a| a as i64)
                    .collect();
                let found: BTreeSet<i64> = hits
                    .iter()
                    .filter(|(r, _)| r.aut_complete)
                    .filter_map(|(r, _)| r.aut_order.parse::<i64>().ok())
                    .collect();
                let new: BTreeSet<i64> = found.difference(&published).copied().collect();
                any_new |= !new.is_empty();
                let _ = writeln!(out, "{} ({} codes)", t.label, hits.len());
                let _ = writeln!(out, "  published aut orders: {}", compress(&published));
                let _ = writeln!(out, "  found aut orders:     {}", compress(&found));
                let _ = writeln!(out, "  new:                  {}", compress(&new));
            }
        }
    }
    let unmatched = records
        .iter()
        .filter(|r| !matches!(r.extraction, Extraction::Match(_)))
        .count();
    if unmatched > 0 {
        let _ = writeln!(out, "\nunmatched or ambiguous: {unmatched}");
    }
    let groups = cat.possibly_equivalent();
    if !groups.is_empty() {
        let _ = writeln!(out, "possibly equivalent groups: {}", groups.len());
    }
    if !templates.is_empty() && !any_new {
        let _ = writeln!(
            out,
            "\nno new parameters found in {} samples",
            cat.meta.items
        );
    }
    out
}
