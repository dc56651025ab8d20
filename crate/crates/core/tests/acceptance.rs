//! Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on failure.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use qcforge_core::equiv::{aut_order, canonicalize, CanonOptions};
use qcforge_core::gf::Gf4;
use qcforge_core::lincode::{
    check_divisibility, CodeEntry, EnumOptions, Gf4Vector, MinDistance, WeightEnumerator,
};
use qcforge_core::qc::{
    builtin_templates, check_quasi_cyclic, construct_cubic, cubic_selfdual_check, decompose_cubic,
    distance_bound, extract_parameter, phi_inverse, phi_map, prop22_check, shift_by_block,
    CubicComponents, QcShape,
};
use qcforge_core::search::{
    classify_cubic, enumerate_binary, enumerate_quaternary, quaternary_selfdual_mass, replay,
    run_search, ClassifyOptions, ComponentDb, SearchConfig,
};
use qcforge_core::BinaryCode;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn rng(tag: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(0x5eed_0000 + tag)
}

/// Exact d of a constructed code checked against min(3 d1, 2 d2).
fn bound_holds(parts: &CubicComponents, c: &BinaryCode) -> Result<bool, String> {
    if parts.c1.k() == 0 || parts.c2.k() == 0 || c.k() == 0 {
        return Ok(true);
    }
    let opts = EnumOptions::default();
    let bound = distance_bound(parts, &opts).map_err(|e| e.to_string())?;
    let d = c
        .min_distance(None, &opts)
        .map_err(|e| e.to_string())?
        .value();
    Ok(d <= bound)
}

fn random_parts(ell: usize, rng: &mut impl Rng) -> CubicComponents {
    let c1 = if ell.is_multiple_of(2) && rng.random_bool(0.5) {
        random_selfdual(ell, rng)
    } else {
        random_code(ell, rng.random_range(0..=ell), rng)
    };
    let c2 = if ell.is_multiple_of(2) && rng.random_bool(0.5) {
        random_hermitian_selfdual(ell, rng)
    } else {
        random_quaternary(ell, rng.random_range(0..=ell), rng)
    };
    CubicComponents::new(c1, c2).unwrap()
}

fn random_selfdual_parts(ell: usize, rng: &mut impl Rng) -> CubicComponents {
    CubicComponents::new(
        random_selfdual(ell, rng),
        random_hermitian_selfdual(ell, rng),
    )
    .unwrap()
}

/// Hermitian self-dual codes of length `n` over GF(4), counted by running
/// through every reduced echelon matrix with `n/2` rows.
fn rref_count_quaternary(n: usize) -> usize {
    let k = n / 2;
    let mut count = 0;
    let mut pivots: Vec<usize> = (0..k).collect();
    loop {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                ((pivots[i] + 1)..n)
                    .filter(|j| !pivots.contains(j))
                    .map(move |j| (i, j))
            })
            .collect();
        for assign in 0u64..1 << (2 * free.len()) {
            let mut rows = vec![vec![Gf4::ZERO; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                rows[i][p] = Gf4::ONE;
            }
            for (t, &(i, j)) in free.iter().enumerate() {
                rows[i][j] = Gf4::from_bits((assign >> (2 * t) & 3) as u8);
            }
            let vs: Vec<Gf4Vector> = rows.iter().map(|r| Gf4Vector::from_elems(r)).collect();
            if (0..k).all(|a| (a..k).all(|b| vs[a].hermitian(&vs[b]).is_zero())) {
                count += 1;
            }
        }
        let mut i = k;
        loop {
            if i == 0 {
                return count;
            }
            i -= 1;
            if pivots[i] < n - k + i {
                pivots[i] += 1;
                for t in i + 1..k {
                    pivots[t] = pivots[t - 1] + 1;
                }
                break;
            }
        }
    }
}

fn criterion_1() -> Outcome {
    let brute = rref_count_quaternary(6);
    let listed = enumerate_quaternary(6, 6).map_err(|e| e.to_string())?.len();
    ensure!(
        brute == 891 && listed == 891,
        "length-6 quaternary count: oracle {brute}, enumeration {listed}"
    );
    ensure!(quaternary_selfdual_mass(6) == 891, "mass formula disagrees");
    let opts = ClassifyOptions::default();
    let mut counts = Vec::new();
    for ell in [2, 4, 6] {
        let census = classify_cubic(ell, &opts).map_err(|e| e.to_string())?;
        ensure!(census.complete, "census at ell={ell} incomplete");
        counts.push(census.classes.len());
        if ell == 6 {
            ensure!(
                census.quaternary_codes == 891,
                "census used {} quaternary codes",
                census.quaternary_codes
            );
        }
    }
    ensure!(counts == [1, 2, 3], "class counts {counts:?}");
    Ok(format!(
        "classes {counts:?} at ell 2/4/6, 891 quaternary codes confirmed"
    ))
}

fn criterion_2_and_4() -> (Outcome, usize, usize) {
    let mut r = rng(2);
    let (mut sd, mut checked, mut violations) = (0, 0, 0);
    for i in 0..1200 {
        let ell = r.random_range(1..=8);
        let parts = random_parts(ell, &mut r);
        let c = match construct_cubic(&parts) {
            Ok(c) => c,
            Err(e) => return (Err(e.to_string()), checked, violations),
        };
        let a = c.is_self_dual();
        if a != cubic_selfdual_check(&parts) {
            return (
                Err(format!("disagreement on pair {i} (ell={ell})")),
                checked,
                violations,
            );
        }
        sd += a as usize;
        if c.k() <= 18 {
            checked += 1;
            match bound_holds(&parts, &c) {
                Ok(true) => {}
                Ok(false) => violations += 1,
                Err(e) => return (Err(e), checked, violations),
            }
        }
    }
    (
        Ok(format!("1200 pairs agree, {sd} self-dual")),
        checked,
        violations,
    )
}

fn criterion_3() -> Outcome {
    let mut r = rng(3);
    let mut n = 0;
    for ell in 1..=4 {
        for m in [3, 5, 7] {
            let shape = QcShape::new(ell, m).map_err(|e| e.to_string())?;
            for _ in 0..100 {
                let a = random_bits(shape.len(), &mut r);
                let b = random_bits(shape.len(), &mut r);
                ensure!(
                    prop22_check(&a, &b, shape).map_err(|e| e.to_string())?,
                    "failed at ell={ell} m={m}"
                );
                n += 1;
            }
        }
    }
    Ok(format!("{n} pairs"))
}

fn criterion_4(checked: usize, violations: usize) -> Outcome {
    let mut r = rng(4);
    let mut count = checked;
    for ell in [2, 4, 6] {
        for _ in 0..40 {
            let parts = random_selfdual_parts(ell, &mut r);
            let c = construct_cubic(&parts).map_err(|e| e.to_string())?;
            ensure!(
                bound_holds(&parts, &c)?,
                "violated on a self-dual pair at ell={ell}"
            );
            count += 1;
        }
    }
    ensure!(
        violations == 0,
        "{violations} violations among random pairs"
    );
    Ok(format!("{count} codes, no violations"))
}

fn template(n: usize, label: &str) -> qcforge_core::qc::WenumTemplate {
    builtin_templates()
        .into_iter()
        .find(|t| t.length == n && t.label == label)
        .unwrap()
}

fn criterion_5() -> Outcome {
    let mut r = rng(5);
    let mut n = 0;
    for ell in [2, 4, 6, 8] {
        for _ in 0..50 {
            let c =
                construct_cubic(&random_selfdual_parts(ell, &mut r)).map_err(|e| e.to_string())?;
            let w = c
                .weight_enumerator(None, &EnumOptions::default())
                .map_err(|e| e.to_string())?;
            let bad = check_divisibility(&w, 3).map_err(|e| e.to_string())?;
            ensure!(bad.is_empty(), "cubic code at ell={ell} fails at {bad:?}");
            n += 1;
        }
    }
    let w4 = template(60, "W4").evaluate(0).map_err(|e| e.to_string())?;
    let bad = check_divisibility(&w4, 3).map_err(|e| e.to_string())?;
    ensure!(
        bad.first() == Some(&(14, 24128)),
        "W4 at length 60 gives {bad:?}"
    );
    let w2 = template(66, "W2");
    let (lo, hi) = w2.range.unwrap();
    for alpha in lo..=hi {
        let w = w2.evaluate(alpha).map_err(|e| e.to_string())?;
        let bad = check_divisibility(&w, 3).map_err(|e| e.to_string())?;
        ensure!(
            bad.contains(&(14, (18166 + 24 * alpha) as u64)),
            "W2 at length 66 passes for alpha={alpha}"
        );
    }
    let w3 = template(66, "W3").evaluate(0).map_err(|e| e.to_string())?;
    ensure!(
        check_divisibility(&w3, 3)
            .map_err(|e| e.to_string())?
            .contains(&(14, 7990)),
        "W3 at length 66 passes"
    );
    Ok(format!(
        "{n} cubic codes divisible, W4 (60), W2 and W3 (66) rejected at weight 14"
    ))
}

fn criterion_6() -> Outcome {
    let templates = builtin_templates();
    let mut recovered = 0;
    let mut flagged = 0;
    for t in templates.iter().filter(|t| t.range.is_some()) {
        let (lo, hi) = t.range.unwrap();
        for p in lo..=hi {
            let w = t.evaluate(p).map_err(|e| e.to_string())?;
            let got = extract_parameter(&w, &templates).map_err(|e| e.to_string())?;
            let m = got
                .matched()
                .ok_or(format!("{} {} at {p}: {got:?}", t.length, t.label))?;
            ensure!(
                m.label == t.label && m.param == Some(p) && m.in_range,
                "{} {} at {p}: {m}",
                t.length,
                t.label
            );
            recovered += 1;
        }
        for p in [lo - 1, hi + 1] {
            if let Ok(w) = t.evaluate(p) {
                let got = extract_parameter(&w, &templates).map_err(|e| e.to_string())?;
                let m = got
                    .matched()
                    .ok_or(format!("{} {} at {p}: {got:?}", t.length, t.label))?;
                ensure!(
                    m.param == Some(p) && !m.in_range,
                    "{} {} at {p} not flagged",
                    t.length,
                    t.label
                );
                flagged += 1;
            }
        }
    }
    for label in ["W1", "W2"] {
        let t = template(54, label);
        let (lo, hi) = t.range.unwrap();
        for beta in lo..=hi {
            let w = t.evaluate(beta).map_err(|e| e.to_string())?;
            let passes = check_divisibility(&w, 3)
                .map_err(|e| e.to_string())?
                .is_empty();
            ensure!(
                passes == (beta % 3 == 0),
                "54 {label}: beta={beta} divisibility {passes}"
            );
        }
    }
    ensure!(flagged >= 4, "only {flagged} out-of-range checks");
    Ok(format!("{recovered} parameters recovered, {flagged} out-of-range flagged, self-dual beta = 0 mod 3"))
}

fn random_qc(shape: QcShape, gens: usize, rng: &mut impl Rng) -> BinaryCode {
    let mut rows = Vec::new();
    for _ in 0..gens {
        let mut v = random_bits(shape.len(), rng);
        for _ in 0..shape.m() {
            rows.push(v.clone());
            v = shift_by_block(&v, shape).unwrap();
        }
    }
    BinaryCode::from_rows(shape.len(), &rows).unwrap()
}

fn criterion_7() -> Outcome {
    let mut r = rng(7);
    for i in 0..500 {
        let ell = r.random_range(1..=8);
        let shape = QcShape::cubic(ell).map_err(|e| e.to_string())?;
        let c = random_qc(shape, r.random_range(1..=ell), &mut r);
        ensure!(
            check_quasi_cyclic(&c, shape).map_err(|e| e.to_string())?,
            "generator is not quasi-cyclic"
        );
        let back = construct_cubic(&decompose_cubic(&c).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        ensure!(back == c, "round trip {i} differs at ell={ell}");
        let v = random_bits(shape.len(), &mut r);
        ensure!(
            phi_inverse(&phi_map(&v, shape).map_err(|e| e.to_string())?) == v,
            "phi round trip {i}"
        );
        let n = r.random_range(1..=40);
        let d = random_code(n, r.random_range(0..=n), &mut r);
        ensure!(d.euclidean_dual().euclidean_dual() == d, "double dual {i}");
    }
    Ok("500 cubic, phi and dual round trips".into())
}

fn criterion_8() -> Outcome {
    let mut r = rng(8);
    for i in 0..200 {
        let n = r.random_range(1..=20);
        let c = random_code(n, r.random_range(0..=n.min(10)), &mut r);
        let w = c
            .weight_enumerator(None, &EnumOptions::default())
            .map_err(|e| e.to_string())?;
        let naive = naive_histogram(&c);
        ensure!(w.counts() == naive.as_slice(), "code {i}: {w} vs {naive:?}");
    }
    Ok("200 codes match".into())
}

fn criterion_9() -> Outcome {
    let mut r = rng(9);
    let opts = CanonOptions::default();
    for i in 0..500 {
        let n = r.random_range(2..=24);
        let c = random_nonzero_code(n, r.random_range(1..=n.min(12)), &mut r);
        let p = random_perm(n, &mut r);
        let a = canonicalize(&c, &opts).map_err(|e| e.to_string())?;
        let b = canonicalize(&c.permute(&p), &opts).map_err(|e| e.to_string())?;
        ensure!(a.complete && b.complete, "case {i} incomplete");
        ensure!(
            a.hash == b.hash,
            "case {i}: hash changed under permutation (n={n})"
        );
    }
    let cubic = construct_cubic(&CubicComponents::new(code(2, &["11"]), quat(2, &["1w"])).unwrap())
        .map_err(|e| e.to_string())?;
    let brute = brute_aut_count(&cubic);
    ensure!(brute == 48, "brute force over S_6 gives {brute}");
    let aut = aut_order(&cubic, &opts).map_err(|e| e.to_string())?;
    ensure!(
        aut.complete && aut.order.to_string() == "48",
        "[6,3] cubic aut order {}",
        aut.order
    );
    let rep = aut_order(&code(3, &["111"]), &opts).map_err(|e| e.to_string())?;
    ensure!(
        rep.order.to_string() == "6",
        "repetition aut order {}",
        rep.order
    );
    Ok("500 permutations invariant, |Aut| 48 (brute force 48) and 6".into())
}

fn criterion_10() -> Outcome {
    let mut r = rng(10);
    let parts = random_selfdual_parts(18, &mut r);
    let c = construct_cubic(&parts).map_err(|e| e.to_string())?;
    ensure!(
        c.n() == 54 && c.k() == 27 && c.is_self_dual(),
        "bad [54,27] code"
    );
    let t = Instant::now();
    let w1 = c
        .weight_enumerator(None, &EnumOptions::default())
        .map_err(|e| e.to_string())?;
    let single = t.elapsed();
    let t = Instant::now();
    let w8 = c
        .weight_enumerator(None, &EnumOptions::with_threads(8))
        .map_err(|e| e.to_string())?;
    let eight = t.elapsed();
    ensure!(w1 == w8 && w1.total() == 1 << 27, "enumerators disagree");
    ensure!(
        single <= Duration::from_secs(60),
        "single-threaded enumerator took {single:?}"
    );
    ensure!(
        eight <= Duration::from_secs(15),
        "8-worker enumerator took {eight:?}"
    );
    check_bound(&parts, &c, &w1)?;

    let parts = random_selfdual_parts(22, &mut r);
    let c = construct_cubic(&parts).map_err(|e| e.to_string())?;
    ensure!(c.n() == 66 && c.k() == 33, "bad [66,33] code");
    let t = Instant::now();
    let d = c
        .min_distance(Some(11), &EnumOptions::default())
        .map_err(|e| e.to_string())?;
    let md = t.elapsed();
    ensure!(
        md <= Duration::from_secs(600),
        "[66,33] min distance took {md:?}"
    );
    let cores = std::thread::available_parallelism()
        .map(|n| n.get())
        .unwrap_or(1);
    let d = match d {
        MinDistance::Exact(d) => format!("d={d}"),
        MinDistance::AtMost(d) => format!("d<={d}"),
    };
    Ok(format!(
        "[54,27] enumerator {:.2}s on 1 thread, {:.2}s on 8 ({cores} cores); [66,33] {d} in {:.2}s",
        single.as_secs_f64(),
        eight.as_secs_f64(),
        md.as_secs_f64()
    ))
}

fn check_bound(
    parts: &CubicComponents,
    c: &BinaryCode,
    w: &WeightEnumerator,
) -> Result<(), String> {
    if let (Some(d), Ok(b)) = (
        w.min_distance(),
        distance_bound(parts, &EnumOptions::default()),
    ) {
        ensure!(
            d as u32 <= b,
            "[{},{}] code has d={d} above bound {b}",
            c.n(),
            c.k()
        );
    }
    Ok(())
}

fn criterion_11() -> Outcome {
    let t = Instant::now();
    let mut entries = Vec::new();
    let bins = enumerate_binary(6, 6).map_err(|e| e.to_string())?;
    for (i, c) in bins.into_iter().enumerate().step_by(3) {
        entries.push(CodeEntry::binary(format!("b{i}"), c));
    }
    for (i, c) in enumerate_quaternary(6, 6)
        .map_err(|e| e.to_string())?
        .into_iter()
        .enumerate()
        .step_by(45)
    {
        entries.push(CodeEntry::quaternary(format!("q{i}"), c));
    }
    let db = ComponentDb::from_entries(entries).map_err(|e| e.to_string())?;
    let mut cfg = SearchConfig::new(6, 4, 4, 11);
    cfg.scalings = true;
    cfg.conjugation = true;
    let cat = run_search(&db, &cfg).map_err(|e| e.to_string())?;
    ensure!(!cat.records.is_empty(), "no records");
    let shape = QcShape::cubic(6).map_err(|e| e.to_string())?;
    let mut hashes = HashSet::new();
    for rec in &cat.records {
        let c = replay(&db, &rec.provenance).map_err(|e| e.to_string())?;
        ensure!(
            c == rec.code().map_err(|e| e.to_string())?,
            "record {} does not replay",
            rec.hash
        );
        ensure!(c.is_self_dual(), "record {} not self-dual", rec.hash);
        ensure!(
            check_quasi_cyclic(&c, shape).map_err(|e| e.to_string())?,
            "record {} not quasi-cyclic",
            rec.hash
        );
        let w = c
            .weight_enumerator(None, &EnumOptions::default())
            .map_err(|e| e.to_string())?;
        ensure!(
            check_divisibility(&w, 3)
                .map_err(|e| e.to_string())?
                .is_empty(),
            "record {} not divisible",
            rec.hash
        );
        ensure!(
            w.min_distance().unwrap_or(0) >= 4 && rec.d >= 4,
            "record {} has d < 4",
            rec.hash
        );
        ensure!(
            hashes.insert(rec.hash.clone()),
            "duplicate record {}",
            rec.hash
        );
        let parts = decompose_cubic(&c).map_err(|e| e.to_string())?;
        check_bound(&parts, &c, &w)?;
    }
    let elapsed = t.elapsed();
    ensure!(elapsed < Duration::from_secs(60), "search took {elapsed:?}");
    Ok(format!(
        "{} records from {} items, all invariants hold, {:.2}s",
        cat.records.len(),
        cat.meta.items,
        elapsed.as_secs_f64()
    ))
}

fn main() -> ExitCode {
    let mut results: Vec<Outcome> = Vec::new();
    let mut run = |id: u32, name: &'static str, f: &mut dyn FnMut() -> Outcome| {
        let t = Instant::now();
        let out = f();
        let el = t.elapsed();
        let (tag, detail) = match &out {
            Ok(s) => ("PASS", s.clone()),
            Err(s) => ("FAIL", s.clone()),
        };
        println!(
            "{tag} criterion {id:>2} {name}: {detail} [{:.1}s]",
            el.as_secs_f64()
        );
        results.push(out);
    };
    let mut stats = (0, 0);
    run(1, "classification counts", &mut criterion_1);
    run(2, "self-duality equivalence", &mut || {
        let (out, checked, violations) = criterion_2_and_4();
        stats = (checked, violations);
        out
    });
    run(3, "duality commutation", &mut criterion_3);
    run(4, "distance bound", &mut || criterion_4(stats.0, stats.1));
    run(5, "divisibility", &mut criterion_5);
    run(6, "template extraction", &mut criterion_6);
    run(7, "round trips", &mut criterion_7);
    run(8, "gray code oracle", &mut criterion_8);
    run(9, "equivalence engine", &mut criterion_9);
    run(10, "performance", &mut criterion_10);
    run(11, "search invariants", &mut criterion_11);
    let failed = results.iter().filter(|r| r.is_err()).count();
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
