//! Acceptance suite. Run with
//! `cargo test -p frobkit --test acceptance -- --nocapture`
//! to see one PASS/FAIL line per criterion.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use frobkit_core::{
    apery_table, build_family, denumerant, denumerant_table, enumerate_representations,
    expected_count, g_exact, g_star, g_star_via_reduction, n_star, n_star_via_reduction,
    canonical_representations, theorem1_value, verify_theorem1, Generators, TripathiFamily,
    DEFAULT_ENUMERATION_CAP,
};
use num_integer::Integer;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const BASES: &[&[u64]] = &[&[2, 3, 5], &[2, 3, 7], &[3, 4, 5], &[3, 5, 7], &[2, 3, 5, 7]];

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, budget: Duration) -> Result<(), String> {
    let spent = start.elapsed();
    ensure(spent < budget, || format!("took {spent:?}, budget {budget:?}"))
}

fn family(base: &[u64]) -> TripathiFamily {
    build_family(&Generators::new(base.to_vec()).unwrap()).unwrap()
}

fn gcd(values: &[u64]) -> u64 {
    values.iter().fold(0, |acc, v| acc.gcd(v))
}

/// Nested-loop count of all coefficient vectors, histogrammed by value.
fn brute_counts(limit: u64, values: &[u64]) -> Vec<u64> {
    fn nest(values: &[u64], partial: u64, limit: u64, out: &mut [u64]) {
        match values.split_first() {
            None => out[partial as usize] += 1,
            Some((&a, rest)) => {
                let mut p = partial;
                while p <= limit {
                    nest(rest, p, limit, out);
                    p += a;
                }
            }
        }
    }
    let mut out = vec![0; limit as usize + 1];
    nest(values, 0, limit, &mut out);
    out
}

fn random_tuple(rng: &mut ChaCha8Rng, max_k: usize, max_v: u64) -> Vec<u64> {
    loop {
        let k = rng.gen_range(2..=max_k);
        let v: Vec<u64> = (0..k).map(|_| rng.gen_range(1..=max_v)).collect();
        if gcd(&v) == 1 {
            return v;
        }
    }
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0001);
    let mut pairs = Vec::new();
    while pairs.len() < 30 {
        let (a, b) = (rng.gen_range(2..=60u64), rng.gen_range(2..=60u64));
        if a.gcd(&b) == 1 {
            pairs.push((a, b));
        }
    }
    for &(a, b) in &pairs {
        let g = Generators::new(vec![a, b]).unwrap();
        for s in 0..=5u64 {
            let closed = (s as i64 + 1) * (a * b) as i64 - a as i64 - b as i64;
            let got = g_exact(&g, s).map_err(|e| e.to_string())?;
            ensure(got == Some(closed as u64), || {
                format!("({a}, {b}), s = {s}: g_exact {got:?}, closed form {closed}")
            })?;
        }
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("30 pairs x s = 0..5 exact ({:?})", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    for base in BASES {
        let f = family(base);
        let closed = (f.k() as i64 - 1) * f.pi() as i64 - f.sigma() as i64;
        let got = g_star(f.generators(), 0).map_err(|e| e.to_string())?;
        ensure(got == closed, || format!("base {base:?}: g*_0 {got}, (k-1)Π - Σ = {closed}"))?;
    }
    within(start, Duration::from_secs(60))?;
    Ok(format!("g*_0(A) = (k-1)Π - Σ on {} bases", BASES.len()))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for base in BASES {
        let f = family(base);
        for t in 1..=4u32 {
            let value = theorem1_value(&f, t).map_err(|e| e.to_string())? as u64;
            let expected = expected_count(f.k(), t).map_err(|e| e.to_string())?;
            let count: u64 = denumerant(value, f.generators()).map_err(|e| e.to_string())?;
            ensure(count == expected, || {
                format!("base {base:?}, t = {t}: {count} representations, expected {expected}")
            })?;
            let found: BTreeSet<_> =
                enumerate_representations(value, f.generators(), DEFAULT_ENUMERATION_CAP)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .collect();
            let canonical: BTreeSet<_> = canonical_representations(&f, t)
                .map_err(|e| e.to_string())?
                .into_iter()
                .collect();
            ensure(found == canonical, || {
                format!("base {base:?}, t = {t}: representation set differs from canonical")
            })?;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok("exact counts and canonical sets for t = 1..4".into())
}

fn criterion_4() -> Outcome {
    for base in BASES {
        let f = family(base);
        for t in 1..=3u32 {
            let low = theorem1_value(&f, t).map_err(|e| e.to_string())? as u64;
            let high = theorem1_value(&f, t + 1).map_err(|e| e.to_string())? as u64;
            let table = denumerant_table::<u64>(high, f.generators()).map_err(|e| e.to_string())?;
            let min = *table.counts()[low as usize + 1..=high as usize].iter().min().unwrap();
            let bound = expected_count(f.k(), t + 1).map_err(|e| e.to_string())?;
            ensure(min >= bound, || {
                format!("base {base:?}, t = {t}: window minimum {min} < {bound}")
            })?;
            let report = verify_theorem1(&f, t).map_err(|e| e.to_string())?;
            ensure(report.window_min_count == min && report.holds(), || {
                format!("base {base:?}, t = {t}: verifier disagrees: {report:?}")
            })?;
        }
    }
    Ok("window minima reach C(k+t-1, k-1) for t = 1..3".into())
}

fn criterion_5() -> Outcome {
    let f = family(&[2, 3, 5]);
    let mut checked = Vec::new();
    for t in 1..=3u32 {
        let value = theorem1_value(&f, t).map_err(|e| e.to_string())?;
        let from = expected_count(3, t).map_err(|e| e.to_string())?;
        let to = expected_count(3, t + 1).map_err(|e| e.to_string())? - 1;
        for s in from..=to {
            let got = g_star(f.generators(), s).map_err(|e| e.to_string())?;
            ensure(got == value, || format!("t = {t}, s' = {s}: g* = {got}, expected {value}"))?;
            checked.push(s);
        }
    }
    ensure(g_star(f.generators(), 3) == Ok(89), || "s' = 3 must give 89".into())?;
    Ok(format!("plateau holds for s' in {checked:?}"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0006);
    for _ in 0..20 {
        let values = random_tuple(&mut rng, 4, 40);
        let g = Generators::new(values.clone()).unwrap();
        for s in 0..=2u64 {
            let table = apery_table(&g, s, g.min_index()).map_err(|e| e.to_string())?;
            let star = table.g_star().map_err(|e| e.to_string())?;
            let top = (star + 2 * table.modulus() as i64).max(0) as u64;
            let counts = denumerant_table::<u64>(top, &g).map_err(|e| e.to_string())?;
            let scanned = counts
                .counts()
                .iter()
                .rposition(|&c| c <= s)
                .map_or(-1, |x| x as i64);
            ensure(scanned == star, || {
                format!("{values:?}, s = {s}: table g* {star}, scan {scanned}")
            })?;
            let direct = counts.counts().iter().filter(|&&c| c <= s).count() as u64;
            let formula = table.n_star().map_err(|e| e.to_string())?;
            ensure(direct == formula, || {
                format!("{values:?}, s = {s}: n* formula {formula}, direct count {direct}")
            })?;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok("20 random tuples x s = 0..2".into())
}

fn criterion_7() -> Outcome {
    for values in [&[5u64, 6, 9, 21][..], &[15, 10, 6], &[7, 4, 6, 10]] {
        let g = Generators::new(values.to_vec()).unwrap();
        let step = g.reduce_step().ok_or_else(|| format!("{values:?} does not reduce"))?;
        for s in 0..=3u64 {
            let direct = g_star(&g, s).map_err(|e| e.to_string())?;
            let reduced = g_star_via_reduction(&step, s).map_err(|e| e.to_string())?;
            ensure(direct == reduced, || format!("{values:?}, s = {s}: g* {direct} vs {reduced}"))?;
            let direct = n_star(&g, s).map_err(|e| e.to_string())?;
            let reduced = n_star_via_reduction(&step, s).map_err(|e| e.to_string())?;
            ensure(direct == reduced, || format!("{values:?}, s = {s}: n* {direct} vs {reduced}"))?;

            let mut lhs = apery_table(&g, s, 0).map_err(|e| e.to_string())?.entries().to_vec();
            let mut rhs: Vec<u64> = apery_table(&step.reduced, s, 0)
                .map_err(|e| e.to_string())?
                .entries()
                .iter()
                .map(|e| e * step.d)
                .collect();
            lhs.sort_unstable();
            rhs.sort_unstable();
            ensure(lhs == rhs, || format!("{values:?}, s = {s}: {lhs:?} vs {rhs:?}"))?;
        }
    }
    Ok("g*, n* and residue-minimum multisets agree for s = 0..3".into())
}

fn criterion_8() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0008);
    for _ in 0..10_000 {
        let values = random_tuple(&mut rng, 4, 30);
        let x = rng.gen_range(0..=300u64);
        let a = values[rng.gen_range(0..values.len())];
        let g = Generators::new(values.clone()).unwrap();
        let table = denumerant_table::<u64>(x + a, &g).map_err(|e| e.to_string())?;
        let (lo, hi) = (table.counts()[x as usize], table.counts()[(x + a) as usize]);
        ensure(hi >= lo, || format!("{values:?}: count({}) = {hi} < count({x}) = {lo}", x + a))?;
    }
    let mut tuples = 0;
    for _ in 0..40 {
        let values = random_tuple(&mut rng, 4, 30);
        let g = Generators::new(values.clone()).unwrap();
        let table = denumerant_table::<u64>(200, &g).map_err(|e| e.to_string())?;
        let oracle = brute_counts(200, &values);
        ensure(table.counts() == &oracle[..], || format!("{values:?}: DP differs from nested loops"))?;
        for x in 0..=200u64 {
            let reps = enumerate_representations(x, &g, DEFAULT_ENUMERATION_CAP)
                .map_err(|e| e.to_string())?;
            ensure(reps.len() as u64 == oracle[x as usize], || {
                format!("{values:?}, x = {x}: {} listed, {} counted", reps.len(), oracle[x as usize])
            })?;
        }
        tuples += 1;
    }
    Ok(format!("10^4 monotonicity triples; {tuples} tuples agree with the oracle on x <= 200"))
}

fn normalize(json: &str) -> String {
    json.lines()
        .map(|line| match line.find("\"elapsed_ms\":") {
            Some(i) => {
                let tail = if line.trim_end().ends_with(',') { "," } else { "" };
                format!("{}\"elapsed_ms\": 0{tail}", &line[..i])
            }
            None => line.to_string(),
        })
        .collect::<Vec<_>>()
        .join("\n")
        + "\n"
}

fn criterion_9() -> Outcome {
    let run = || {
        let out = Command::new(env!("CARGO_BIN_EXE_frobkit"))
            .args(["family", "--base", "2,3,5", "--t-max", "3", "--format", "json"])
            .output()
            .map_err(|e| e.to_string())?;
        ensure(out.status.code() == Some(0), || format!("exit status {:?}", out.status))?;
        String::from_utf8(out.stdout).map_err(|e| e.to_string())
    };
    let first = normalize(&run()?);
    let second = normalize(&run()?);
    ensure(first == second, || "two runs differ".into())?;
    let golden = include_str!("golden/family_2_3_5_t3.json");
    ensure(first == golden, || format!("output differs from golden file:\n{first}"))?;
    Ok("byte-identical to golden file across two runs".into())
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 9] = [
        ("1 two-generator closed forms", criterion_1),
        ("2 family Frobenius number (k-1)Π - Σ", criterion_2),
        ("3 family exact counts and canonical sets", criterion_3),
        ("4 family post-threshold lower bound", criterion_4),
        ("5 family g*_s plateau", criterion_5),
        ("6 Apéry-table g*_s / n*_s vs direct scan", criterion_6),
        ("7 common-factor reduction identities", criterion_7),
        ("8 property suite", criterion_8),
        ("9 CLI determinism", criterion_9),
    ];
    let mut failures = Vec::new();
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(detail) => {
                println!("FAIL  criterion {name}: {detail}");
                failures.push(name);
            }
        }
    }
    assert!(failures.is_empty(), "failed criteria: {failures:?}");
}
