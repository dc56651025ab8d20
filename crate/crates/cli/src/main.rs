use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand};

use qcforge_core::equiv::{analyze, CanonOptions, DEFAULT_NODE_BUDGET};
use qcforge_core::gf::factor_cyclotomic;
use qcforge_core::lincode::{
    check_divisibility, classify_type, format_code, read_codes, Code, CodeEntry, EnumOptions,
    MinDistance,
};
use qcforge_core::qc::{
    builtin_templates, check_quasi_cyclic, construct_cubic, crt_decompose, decompose_cubic,
    extract_parameter, verify_decomposition_selfdual, CubicComponents, Extraction, QcShape,
};
use qcforge_core::search::{
    catalog_report, classify_cubic, load_component_db, replay, run_search, Catalog,
    ClassifyOptions, SearchConfig,
};
use qcforge_core::{BinaryCode, Error, QuaternaryCode};

#[derive(Parser)]
#[command(
    name = "qcforge",
    version,
    about = "Binary quasi-cyclic self-dual codes from the cubic construction"
)]
struct Cli {
    /// Worker threads (overrides QCFORGE_THREADS).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Factor Y^m - 1 over GF(2).
    Factor {
        #[arg(long)]
        m: usize,
    },
    /// Build the cubic code (x+a | x+b | x+a+b) from a binary and a quaternary code.
    Construct {
        #[arg(long)]
        c1: PathBuf,
        #[arg(long)]
        c2: PathBuf,
        #[arg(long, default_value = "cubic")]
        name: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Split a length-3l quasi-cyclic code into its binary and quaternary parts.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        /// Select a code by name (default: first in file).
        #[arg(long)]
        code: Option<String>,
        /// Also print CRT component dimensions for Y^m - 1.
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Self-duality, type, quasi-cyclicity and divisibility checks.
    Check {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        code: Option<String>,
        /// Check quasi-cyclicity of index ell with m = n / ell.
        #[arg(long)]
        ell: Option<usize>,
    },
    /// Hamming weight enumerator.
    Wenum {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        code: Option<String>,
        /// Only count weights up to this value.
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Minimum distance.
    Mindist {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        code: Option<String>,
        /// Stop at the first codeword of weight at most this value.
        #[arg(long)]
        early_stop: Option<u32>,
    },
    /// Canonical form hash and automorphism group order.
    Canon {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long)]
        code: Option<String>,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        /// Print the canonical generator matrix.
        #[arg(long)]
        matrix: bool,
    },
    /// Classify binary cubic self-dual codes of length 3*ell exhaustively.
    ClassifySmall {
        #[arg(long)]
        ell: usize,
        #[arg(long, default_value_t = 6)]
        max_ell: usize,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Sample transformed component pairs and catalog good cubic codes.
    Search {
        #[arg(long)]
        db: PathBuf,
        #[arg(long)]
        ell: usize,
        #[arg(long = "d")]
        d_target: u32,
        #[arg(long, default_value_t = 1)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        scalings: bool,
        #[arg(long)]
        conjugation: bool,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
        #[arg(long, default_value = "catalog.jsonl")]
        out: PathBuf,
    },
    /// Replay every catalog record from its provenance and compare.
    Verify {
        #[arg(long)]
        db: PathBuf,
        #[arg(long)]
        catalog: PathBuf,
    },
    /// Parameter coverage of a catalog against published values.
    Report {
        #[arg(long)]
        catalog: PathBuf,
        #[arg(long)]
        length: usize,
    },
    /// Print the built-in weight enumerator templates.
    Templates,
}

fn threads(cli: Option<usize>) -> Result<usize> {
    if let Some(t) = cli {
        return Ok(t.max(1));
    }
    match std::env::var("QCFORGE_THREADS") {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .map(|t| t.max(1))
            .context("QCFORGE_THREADS is not a number"),
        Err(_) => Ok(std::thread::available_parallelism()
            .map(|n| n.get())
            .unwrap_or(1)),
    }
}

fn load_entry(path: &Path, name: Option<&str>) -> Result<CodeEntry> {
    let entries = read_codes(path)?;
    let entry = match name {
        Some(n) => entries.into_iter().find(|e| e.name == n),
        None => entries.into_iter().next(),
    };
    entry.ok_or_else(|| anyhow!("{}: no matching code", path.display()))
}

fn load_binary(path: &Path, name: Option<&str>) -> Result<(String, BinaryCode)> {
    let e = load_entry(path, name)?;
    match e.code {
        Code::Binary(c) => Ok((e.name, c)),
        Code::Quaternary(_) => {
            Err(Error::Precondition(format!("'{}' is not a binary code", e.name)).into())
        }
    }
}

fn load_quaternary(path: &Path) -> Result<QuaternaryCode> {
    let e = load_entry(path, None)?;
    match e.code {
        Code::Quaternary(c) => Ok(c),
        Code::Binary(_) => {
            Err(Error::Precondition(format!("'{}' is not a quaternary code", e.name)).into())
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => std::fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let threads = threads(cli.threads)?;
    let eo = EnumOptions::with_threads(threads);
    match cli.cmd {
        Cmd::Factor { m } => {
            let f = factor_cyclotomic(m)?;
            println!("{}", f.pretty());
            println!("s={} t={}", f.s(), f.t());
        }
        Cmd::Construct { c1, c2, name, out } => {
            let (_, b) = load_binary(&c1, None)?;
            let q = load_quaternary(&c2)?;
            let code = construct_cubic(&CubicComponents::new(b, q)?)?;
            emit(out.as_deref(), &format_code(&CodeEntry::binary(name, code)))?;
        }
        Cmd::Decompose {
            input,
            code,
            m,
            out,
        } => {
            let (name, c) = load_binary(&input, code.as_deref())?;
            let mut text = String::new();
            if let Some(m) = m.filter(|&m| m != 3) {
                if c.n() % m != 0 {
                    bail!(Error::NotADivisor("length".into(), m));
                }
                let parts = crt_decompose(&c, QcShape::new(c.n() / m, m)?)?;
                println!("{}", parts.factorization.pretty());
                for comp in &parts.components {
                    println!(
                        "  {:?} mod {}: dim {}",
                        comp.kind,
                        comp.modulus.pretty(),
                        comp.dim()
                    );
                }
                println!(
                    "self-dual components: {}",
                    yes_no(verify_decomposition_selfdual(&parts))
                );
                return Ok(ExitCode::SUCCESS);
            }
            let parts = decompose_cubic(&c)?;
            text.push_str(&format_code(&CodeEntry::binary(
                format!("{name}_c1"),
                parts.c1,
            )));
            text.push('\n');
            text.push_str(&format_code(&CodeEntry::quaternary(
                format!("{name}_c2"),
                parts.c2,
            )));
            emit(out.as_deref(), &text)?;
        }
        Cmd::Check { input, code, ell } => {
            let e = load_entry(&input, code.as_deref())?;
            let mut ok = e.code.is_self_dual();
            println!(
                "code {} q={} n={} k={}",
                e.name,
                e.code.q(),
                e.code.n(),
                e.code.k()
            );
            println!("self-dual: {}", yes_no(ok));
            if let Code::Binary(c) = &e.code {
                let w = c.weight_enumerator(None, &eo)?;
                println!("type: {}", classify_type(&w, ok)?);
                if let Some(ell) = ell {
                    if ell == 0 || c.n() % ell != 0 {
                        bail!(Error::NotADivisor("length".into(), ell));
                    }
                    let m = c.n() / ell;
                    let qc = check_quasi_cyclic(c, QcShape::new(ell, m)?)?;
                    println!("quasi-cyclic (ell={ell}, m={m}): {}", yes_no(qc));
                    ok &= qc;
                    if qc && e.code.is_self_dual() {
                        let bad = check_divisibility(&w, m as u64)?;
                        println!("divisibility by {m}: {}", yes_no(bad.is_empty()));
                        ok &= bad.is_empty();
                    }
                }
                if let Extraction::Match(t) = extract_parameter(&w, &builtin_templates())? {
                    println!("template: {t}");
                }
            }
            if !ok {
                return Ok(ExitCode::from(2));
            }
        }
        Cmd::Wenum { input, code, cap } => {
            let e = load_entry(&input, code.as_deref())?;
            let w = match &e.code {
                Code::Binary(c) => c.weight_enumerator(cap, &eo)?,
                Code::Quaternary(c) => c.weight_enumerator(cap, &eo)?,
            };
            println!("{w}");
        }
        Cmd::Mindist {
            input,
            code,
            early_stop,
        } => {
            let e = load_entry(&input, code.as_deref())?;
            let d = match &e.code {
                Code::Binary(c) => c.min_distance(early_stop, &eo)?,
                Code::Quaternary(c) => c.min_distance(early_stop, &eo)?,
            };
            match d {
                MinDistance::Exact(d) => println!("d={d}"),
                MinDistance::AtMost(d) => println!("d<={d}"),
            }
        }
        Cmd::Canon {
            input,
            code,
            budget,
            matrix,
        } => {
            let (_, c) = load_binary(&input, code.as_deref())?;
            let (form, aut) = analyze(&c, &CanonOptions::with_budget(budget))?;
            println!("hash: {}", form.hash_hex());
            println!("complete: {}", yes_no(form.complete));
            println!(
                "aut order: {}{}",
                aut.order,
                if aut.complete { "" } else { " (lower bound)" }
            );
            if matrix {
                print!(
                    "{}",
                    format_code(&CodeEntry::binary("canonical", form.matrix))
                );
            }
            if !form.complete {
                return Ok(ExitCode::from(3));
            }
        }
        Cmd::ClassifySmall {
            ell,
            max_ell,
            budget,
        } => {
            let opts = ClassifyOptions {
                threads,
                canon: CanonOptions::with_budget(budget),
                max_ell,
            };
            let census = classify_cubic(ell, &opts)?;
            println!("classes: {}", census.classes.len());
            println!(
                "binary classes: {}, quaternary codes: {}",
                census.binary_classes, census.quaternary_codes
            );
            for (i, c) in census.classes.iter().enumerate() {
                println!(
                    "  {i}: hash {:032x} aut {} pairs {}",
                    c.hash, c.aut_order, c.hits
                );
            }
            if !census.complete {
                println!("incomplete: canonicalization budget exhausted");
                return Ok(ExitCode::from(3));
            }
        }
        Cmd::Search {
            db,
            ell,
            d_target,
            samples,
            seed,
            scalings,
            conjugation,
            budget,
            out,
        } => {
            let db = load_component_db(&db)?;
            let mut cfg = SearchConfig::new(ell, d_target, samples, seed);
            cfg.scalings = scalings;
            cfg.conjugation = conjugation;
            cfg.threads = threads;
            cfg.canon = CanonOptions::with_budget(budget);
            let mut cat = run_search(&db, &cfg)?;
            let args: Vec<String> = std::env::args().skip(1).collect();
            cat.meta.command = Some(format!("qcforge {}", args.join(" ")));
            cat.save(&out)?;
            let m = &cat.meta;
            println!(
                "pairs: {}  items: {}  survivors: {}  duplicates: {}  records: {}",
                m.pairs_eligible,
                m.items,
                m.survivors,
                m.duplicates,
                cat.records.len()
            );
            for r in &cat.records {
                println!(
                    "  [{},{},{}] {} aut {} {:?}",
                    r.n, r.k, r.d, r.hash, r.aut_order, r.extraction
                );
            }
            if m.incomplete > 0 {
                println!("incomplete canonical forms: {}", m.incomplete);
                return Ok(ExitCode::from(3));
            }
        }
        Cmd::Verify { db, catalog } => {
            let db = load_component_db(&db)?;
            let cat = Catalog::load(&catalog)?;
            let mut bad = 0;
            for r in &cat.records {
                if replay(&db, &r.provenance)? != r.code()? {
                    println!("mismatch: {}", r.hash);
                    bad += 1;
                }
            }
            println!("replayed {} records, {bad} mismatches", cat.records.len());
            if bad > 0 {
                return Ok(ExitCode::from(2));
            }
        }
        Cmd::Report { catalog, length } => {
            let cat = Catalog::load(&catalog)
                .with_context(|| format!("reading {}", catalog.display()))?;
            print!("{}", catalog_report(&cat, length));
        }
        Cmd::Templates => {
            for t in builtin_templates() {
                println!("{t}");
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::EnumerationBudget { .. } | Error::Budget(_)) => 3,
        Some(Error::Io(_)) => 1,
        Some(_) => 2,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
