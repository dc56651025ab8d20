//! Plain-text code files.
//!
//! ```text
//! # comment
//! code i2 q=2 n=2 k=1
//! 11
//!
//! code h2 q=4 n=2 k=1 d=2 source=toy
//! 1w
//! ```
//!
//! A header is followed by exactly `k` generator rows; a blank line ends the
//! code. Quaternary rows use `0 1 w W` for `0, 1, ω, ω²`.

use std::fmt::Write as _;
use std::path::Path;

use super::{BinaryCode, Gf4Vector, QuaternaryCode};
use crate::bits::BitVector;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Code {
    Binary(BinaryCode),
    Quaternary(QuaternaryCode),
}

impl Code {
    pub fn n(&self) -> usize {
        match self {
            Code::Binary(c) => c.n(),
            Code::Quaternary(c) => c.n(),
        }
    }

    pub fn k(&self) -> usize {
        match self {
            Code::Binary(c) => c.k(),
            Code::Quaternary(c) => c.k(),
        }
    }

    pub fn q(&self) -> u8 {
        match self {
            Code::Binary(_) => 2,
            Code::Quaternary(_) => 4,
        }
    }

    /// Euclidean self-duality for binary codes, Hermitian for quaternary.
    pub fn is_self_dual(&self) -> bool {
        match self {
            Code::Binary(c) => c.is_self_dual(),
            Code::Quaternary(c) => c.is_hermitian_self_dual(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CodeEntry {
    pub name: String,
    pub code: Code,
    pub claimed_d: Option<u32>,
    pub source: Option<String>,
}

impl CodeEntry {
    pub fn binary(name: impl Into<String>, code: BinaryCode) -> CodeEntry {
        CodeEntry {
            name: name.into(),
            code: Code::Binary(code),
            claimed_d: None,
            source: None,
        }
    }

    pub fn quaternary(name: impl Into<String>, code: QuaternaryCode) -> CodeEntry {
        CodeEntry {
            name: name.into(),
            code: Code::Quaternary(code),
            claimed_d: None,
            source: None,
        }
    }
}

struct Header {
    line: usize,
    name: String,
    q: u8,
    n: usize,
    k: usize,
    d: Option<u32>,
    source: Option<String>,
}

fn parse_header(line: usize, text: &str) -> Result<Header> {
    let err = |msg: String| Error::Parse { line, msg };
    let mut toks = text.split_whitespace();
    if toks.next() != Some("code") {
        return Err(err(format!(
            "expected 'code <name> q=.. n=.. k=..', found '{text}'"
        )));
    }
    let name = toks
        .next()
        .ok_or_else(|| err("missing code name".into()))?
        .to_string();
    let (mut q, mut n, mut k, mut d, mut source) = (None, None, None, None, None);
    for tok in toks {
        let (key, val) = tok
            .split_once('=')
            .ok_or_else(|| err(format!("bad field '{tok}'")))?;
        let num = || {
            val.parse::<usize>()
                .map_err(|_| err(format!("bad number in '{tok}'")))
        };
        match key {
            "q" => q = Some(num()?),
            "n" => n = Some(num()?),
            "k" => k = Some(num()?),
            "d" => d = Some(num()? as u32),
            "source" => source = Some(val.to_string()),
            _ => return Err(err(format!("unknown field '{key}'"))),
        }
    }
    let q = match q {
        Some(2) => 2,
        Some(4) => 4,
        Some(other) => return Err(err(format!("q={other} unsupported (2 or 4)"))),
        None => return Err(err("missing q=".into())),
    };
    let n = n.ok_or_else(|| err("missing n=".into()))?;
    let k = k.ok_or_else(|| err("missing k=".into()))?;
    if k > n {
        return Err(err(format!("k={k} exceeds n={n}")));
    }
    Ok(Header {
        line,
        name,
        q,
        n,
        k,
        d,
        source,
    })
}

fn finish(h: Header, rows: Vec<(usize, String)>) -> Result<CodeEntry> {
    let code = if h.q == 2 {
        let mut vs = Vec::new();
        for (line, r) in &rows {
            let v = BitVector::parse(r).map_err(|e| relabel(e, *line))?;
            check_len(*line, h.n, v.len())?;
            vs.push(v);
        }
        Code::Binary(BinaryCode::from_rows(h.n, &vs)?)
    } else {
        let mut vs = Vec::new();
        for (line, r) in &rows {
            let v = Gf4Vector::parse(r).map_err(|e| relabel(e, *line))?;
            check_len(*line, h.n, v.len())?;
            vs.push(v);
        }
        Code::Quaternary(QuaternaryCode::from_rows(h.n, &vs)?)
    };
    if code.k() != h.k {
        return Err(Error::Parse {
            line: h.line,
            msg: format!(
                "code '{}': rows have rank {}, header says k={}",
                h.name,
                code.k(),
                h.k
            ),
        });
    }
    Ok(CodeEntry {
        name: h.name,
        code,
        claimed_d: h.d,
        source: h.source,
    })
}

fn relabel(e: Error, line: usize) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => other,
    }
}

fn check_len(line: usize, n: usize, got: usize) -> Result<()> {
    if n != got {
        return Err(Error::Parse {
            line,
            msg: format!("row has length {got}, expected {n}"),
        });
    }
    Ok(())
}

/// Parses every code in `text`. Errors carry 1-based line numbers.
pub fn parse_codes(text: &str) -> Result<Vec<CodeEntry>> {
    let mut out = Vec::new();
    let mut current: Option<(Header, Vec<(usize, String)>)> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap().trim();
        let comment_only = content.is_empty() && raw.contains('#');
        if comment_only {
            continue;
        }
        if content.is_empty() {
            if let Some((h, rows)) = current.take() {
                if rows.len() != h.k {
                    return Err(Error::Parse {
                        line,
                        msg: format!(
                            "code '{}' ended after {} of {} rows",
                            h.name,
                            rows.len(),
                            h.k
                        ),
                    });
                }
                out.push(finish(h, rows)?);
            }
            continue;
        }
        match current.as_mut() {
            Some((h, rows)) if rows.len() < h.k => rows.push((line, content.to_string())),
            _ => {
                if let Some((h, rows)) = current.take() {
                    out.push(finish(h, rows)?);
                }
                current = Some((parse_header(line, content)?, Vec::new()));
            }
        }
    }
    if let Some((h, rows)) = current.take() {
        if rows.len() != h.k {
            return Err(Error::Parse {
                line: text.lines().count(),
                msg: format!(
                    "code '{}' ended after {} of {} rows",
                    h.name,
                    rows.len(),
                    h.k
                ),
            });
        }
        out.push(finish(h, rows)?);
    }
    Ok(out)
}

pub fn read_codes(path: impl AsRef<Path>) -> Result<Vec<CodeEntry>> {
    let text = std::fs::read_to_string(path.as_ref())
        .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
    parse_codes(&text)
}

/// Renders one code with its canonical (RREF) generator rows.
pub fn format_code(entry: &CodeEntry) -> String {
    let mut s = String::new();
    let c = &entry.code;
    write!(s, "code {} q={} n={} k={}", entry.name, c.q(), c.n(), c.k()).unwrap();
    if let Some(d) = entry.claimed_d {
        write!(s, " d={d}").unwrap();
    }
    if let Some(src) = &entry.source {
        write!(s, " source={src}").unwrap();
    }
    s.push('\n');
    match c {
        Code::Binary(b) => b.rows().iter().for_each(|r| writeln!(s, "{r}").unwrap()),
        Code::Quaternary(q) => q.rows().iter().for_each(|r| writeln!(s, "{r}").unwrap()),
    }
    s
}

pub fn format_codes(entries: &[CodeEntry]) -> String {
    entries
        .iter()
        .map(format_code)
        .collect::<Vec<_>>()
        .join("\n")
}

#[cfg(test)]
mod tests {
    use super::*;

    const SAMPLE: &str = "\
# two toy codes
code i2 q=2 n=2 k=1
11

code h2 q=4 n=2 k=1 d=2 source=toy
# inline comment lines are skipped
1w
";

    #[test]
    fn parses_sample() {
        let codes = parse_codes(SAMPLE).unwrap();
        assert_eq!(codes.len(), 2);
        assert_eq!(codes[0].name, "i2");
        assert_eq!(codes[1].claimed_d, Some(2));
        assert_eq!(codes[1].source.as_deref(), Some("toy"));
        assert!(codes.iter().all(|c| c.code.is_self_dual()));
    }

    #[test]
    fn format_round_trip() {
        let codes = parse_codes(SAMPLE).unwrap();
        let text = format_codes(&codes);
        assert_eq!(parse_codes(&text).unwrap(), codes);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad = "code a q=2 n=3 k=1\n1101\n";
        assert!(matches!(
            parse_codes(bad),
            Err(Error::Parse { line: 2, .. })
        ));
        let short = "code a q=2 n=2 k=2\n11\n\n";
        assert!(matches!(
            parse_codes(short),
            Err(Error::Parse { line: 3, .. })
        ));
        let dep = "code a q=2 n=2 k=2\n11\n11\n";
        assert!(matches!(
            parse_codes(dep),
            Err(Error::Parse { line: 1, .. })
        ));
        let sym = "code a q=4 n=2 k=1\n1x\n";
        assert!(matches!(
            parse_codes(sym),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_codes("cod a q=2 n=1 k=0"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn consecutive_codes_without_blank_line() {
        let text = "code a q=2 n=2 k=1\n11\ncode b q=2 n=2 k=0\n";
        let codes = parse_codes(text).unwrap();
        assert_eq!(codes.len(), 2);
        assert_eq!(codes[1].code.k(), 0);
    }
}
