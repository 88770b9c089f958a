//! Acceptance gate: every criterion runs at its stated tolerance and time
//! budget and prints one PASS/FAIL line. The process exits nonzero if any
//! criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rayon::prelude::*;

use schubert_core::chamber::chamber_of;
use schubert_core::cohomology::weight_interval_check;
use schubert_core::demazure::demazure_word;
use schubert_core::relative::{tau, tau_step, unique_maximum, w_sets, Side};
use schubert_core::weyl::length_counts;
use schubert_core::{
    bruhat_domination_check, bwb_full_flag, cross_check, demazure_character, demazure_step, resolve, Character, Mode,
    Outcome, WeightVec, WeylElt, WeylGroup,
};

struct Criterion {
    name: &'static str,
    budget: Duration,
    run: fn(&mut Shared) -> Result<String, String>,
}

/// Resolved instances collected by the cross-check criterion and reused by
/// the interval and Euler criteria.
#[derive(Default)]
struct Shared {
    resolved: Vec<Resolved>,
}

struct Resolved {
    gcm: &'static str,
    w: WeylElt,
    phi: WeylElt,
    lambda: WeightVec,
}

fn group(name: &str) -> WeylGroup {
    WeylGroup::preset(name).expect("preset")
}

fn elements(g: &WeylGroup, max_length: usize) -> Vec<WeylElt> {
    g.elements_up_to(max_length).expect("within budget")
}

fn seed_for(k: usize) -> u64 {
    0x5EED_0000 + k as u64
}

fn weyl_counts(_: &mut Shared) -> Result<String, String> {
    let cases: [(&str, usize, Vec<usize>); 5] = [
        ("A2", 20, vec![1, 2, 2, 1]),
        ("B2", 20, vec![1, 2, 2, 2, 1]),
        ("G2", 20, vec![1, 2, 2, 2, 2, 2, 1]),
        ("A3", 20, vec![1, 3, 5, 6, 5, 3, 1]),
        ("A1~", 10, std::iter::once(1).chain(std::iter::repeat_n(2, 10)).collect()),
    ];
    for (name, max_length, want) in cases {
        let g = group(name);
        let els = elements(&g, max_length);
        let mut got = length_counts(&els, max_length);
        while got.len() > 1 && got.last() == Some(&0) {
            got.pop();
        }
        if got != want {
            return Err(format!("{name}: counts {got:?}, expected {want:?}"));
        }
    }
    let a3 = elements(&group("A3"), 20).len();
    if a3 != 24 {
        return Err(format!("A3 total {a3}"));
    }
    Ok("A2, B2, G2, A3 (24), A1~ (2 per length to 10)".into())
}

const RELATIVE_RANGES: [(&str, usize); 5] = [("A2", 6), ("B2", 6), ("G2", 6), ("A3", 5), ("A1~", 8)];

fn pairs(g: &WeylGroup, max_length: usize) -> Vec<(WeylElt, WeylElt)> {
    let els = elements(g, max_length);
    els.iter().flat_map(|w| els.iter().map(move |phi| (w.clone(), phi.clone()))).collect()
}

fn relative_equivalence(_: &mut Shared) -> Result<String, String> {
    let mut total = 0;
    for (name, max_length) in RELATIVE_RANGES {
        let g = group(name);
        let ps = pairs(&g, max_length);
        total += ps.len();
        let failures: Vec<String> = ps
            .par_iter()
            .flat_map_iter(|(w, phi)| {
                let mut bad = Vec::new();
                let (plus, minus) = w_sets(&g, w, phi);
                for (side, set) in [(Side::Plus, &plus), (Side::Minus, &minus)] {
                    let rec = tau(&g, side, w, phi, Mode::Recursive);
                    let brute = tau(&g, side, w, phi, Mode::Brute);
                    if rec != brute {
                        bad.push(format!("{name} w={w} phi={phi} {side:?}: recursive {rec} brute {brute}"));
                    }
                    if unique_maximum(&g, set).as_ref() != Some(&rec) {
                        bad.push(format!("{name} w={w} phi={phi} {side:?}: no unique maximum equal to {rec}"));
                    }
                    for i in w.right_descents() {
                        let via = tau_step(&g, side, w, phi, i);
                        if via != rec {
                            bad.push(format!("{name} w={w} phi={phi} {side:?}: descent {} gives {via}", i + 1));
                        }
                    }
                }
                bad
            })
            .collect();
        if let Some(first) = failures.first() {
            return Err(format!("{} failures, first: {first}", failures.len()));
        }
    }
    Ok(format!("{total} pairs, recursive = brute, unique maxima, descent-independent"))
}

fn domination(_: &mut Shared) -> Result<String, String> {
    let mut comparisons = 0;
    for (name, max_length) in RELATIVE_RANGES {
        let g = group(name);
        let reports: Vec<_> =
            pairs(&g, max_length).par_iter().map(|(w, phi)| bruhat_domination_check(&g, w, phi)).collect();
        comparisons += reports.iter().map(|r| r.comparisons).sum::<usize>();
        if let Some(v) = reports.iter().flat_map(|r| r.violations.iter()).next() {
            return Err(format!("{name}: {v:?}"));
        }
    }
    Ok(format!("{comparisons} comparisons, 0 violations"))
}

fn demazure_words(_: &mut Shared) -> Result<String, String> {
    use rand::{Rng, SeedableRng};
    let mut checked = 0;
    for name in ["A2", "B2", "G2"] {
        let g = group(name);
        let els = elements(&g, 6);
        let results: Vec<Result<usize, String>> = els
            .par_iter()
            .enumerate()
            .map(|(k, w)| {
                let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed_for(k));
                let words = g.reduced_words(w);
                let mut n = 0;
                for _ in 0..20 {
                    let lambda = WeightVec((0..g.rank()).map(|_| rng.gen_range(-6..=6)).collect());
                    let single = Character::exp(lambda.clone());
                    let reference = demazure_word(&g, &words[0], &single);
                    for word in &words {
                        n += 1;
                        if demazure_word(&g, word, &single) != reference {
                            return Err(format!("{name} w={w} lambda={lambda}: word {word:?} differs"));
                        }
                    }
                    for i in 0..g.rank() {
                        for c in [&single, &reference] {
                            let once = demazure_step(&g, i, c);
                            if demazure_step(&g, i, &once) != once {
                                return Err(format!("{name} D_{} not idempotent on {c}", i + 1));
                            }
                        }
                    }
                }
                Ok(n)
            })
            .collect();
        for r in results {
            checked += r?;
        }
    }
    Ok(format!("{checked} (word, weight) evaluations agree; D_i idempotent"))
}

fn full_flag(shared: &mut Shared) -> Result<String, String> {
    let g = group("A2");
    let w0 = g.longest_element().map_err(|e| e.to_string())?;
    let mut regular = 0;
    for a in -5..=5i64 {
        for b in -5..=5i64 {
            let lambda = WeightVec(vec![a, b]);
            let Ok(chamber) = chamber_of(&g, &lambda, 10_000) else { continue };
            regular += 1;
            let outcome = resolve(&g, &w0, &lambda).outcome;
            let Outcome::Resolved { degree, character } = &outcome else {
                return Err(format!("lambda={lambda}: {}", outcome.label()));
            };
            if *degree != chamber.phi.length() {
                return Err(format!("lambda={lambda}: degree {degree}, l(phi) = {}", chamber.phi.length()));
            }
            let bwb = bwb_full_flag(&g, &lambda).map_err(|e| e.to_string())?.map(|(_, c)| c);
            if bwb.as_ref() != Some(character) {
                return Err(format!("lambda={lambda}: character differs from the full-flag answer"));
            }
            // Weyl dimension formula, independent of the Demazure machinery
            let (p, q) = (chamber.dominant_image.0[0], chamber.dominant_image.0[1]);
            let dim = (p + 1) * (q + 1) * (p + q + 2) / 2;
            if character.total_multiplicity() != dim {
                return Err(format!("lambda={lambda}: dimension {} vs {dim}", character.total_multiplicity()));
            }
            shared.resolved.push(Resolved { gcm: "A2", w: w0.clone(), phi: chamber.phi.clone(), lambda });
        }
    }
    let spot = resolve(&g, &w0, &WeightVec(vec![-3, 0])).outcome;
    if spot != (Outcome::Resolved { degree: 2, character: Character::exp(WeightVec(vec![0, 0])) }) {
        return Err(format!("lambda=(-3,0): {spot:?}"));
    }
    // s1 . (-3,4) = (1,2)
    match resolve(&g, &w0, &WeightVec(vec![-3, 4])).outcome {
        Outcome::Resolved { degree: 1, character } if character.total_multiplicity() == 15 => {}
        other => return Err(format!("lambda=(-3,4): {other:?}")),
    }
    Ok(format!("{regular} regular weights agree; (-3,0) -> degree 2, mult 1; dim 15 at (1,2)"))
}

fn degree_windows(shared: &mut Shared) -> Result<String, String> {
    let mut summary = Vec::new();
    for (name, max_length, margin) in [("A2", 20, 10), ("B2", 20, 10), ("A1~", 8, 6)] {
        let g = group(name);
        let ps = pairs(&g, max_length);
        let reports: Vec<_> =
            ps.par_iter().enumerate().map(|(k, (w, phi))| cross_check(&g, w, phi, margin, 5, seed_for(k))).collect();
        let (mut resolved, mut total, mut violations) = (0, 0, Vec::new());
        for (r, (w, phi)) in reports.iter().zip(&ps) {
            total += r.instances.len();
            resolved += r.resolved;
            for inst in &r.instances {
                violations.extend(
                    inst.violations.iter().map(|v| format!("{name} w={w} phi={phi} lambda={}: {v:?}", inst.lambda)),
                );
                if inst.outcome != "indeterminate" {
                    shared.resolved.push(Resolved {
                        gcm: name,
                        w: w.clone(),
                        phi: phi.clone(),
                        lambda: inst.lambda.clone(),
                    });
                }
            }
        }
        if let Some(first) = violations.first() {
            return Err(format!("{} violations, first: {first}", violations.len()));
        }
        summary.push(format!("{name} {resolved}/{total} resolved ({:.1}%)", 100.0 * resolved as f64 / total as f64));
    }
    Ok(format!("0 violations; {}", summary.join(", ")))
}

fn weight_interval(shared: &mut Shared) -> Result<String, String> {
    let finite: Vec<&Resolved> = shared.resolved.iter().filter(|r| r.gcm != "A1~").collect();
    let groups = [("A2", group("A2")), ("B2", group("B2"))];
    let lookup = |name: &str| &groups.iter().find(|(n, _)| *n == name).expect("finite preset").1;
    let failures: Vec<String> = finite
        .par_iter()
        .filter_map(|r| {
            let g = lookup(r.gcm);
            let trace = resolve(g, &r.w, &r.lambda);
            match weight_interval_check(g, &trace, &r.w, &r.phi, &r.lambda) {
                Ok(report) if report.passed() => None,
                Ok(report) => {
                    Some(format!("{} w={} phi={} lambda={}: {:?}", r.gcm, r.w, r.phi, r.lambda, report.violations[0]))
                }
                Err(e) => Some(e.to_string()),
            }
        })
        .collect();
    match failures.first() {
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
        None => Ok(format!("{} resolved finite-type instances inside the weight interval", finite.len())),
    }
}

fn euler(shared: &mut Shared) -> Result<String, String> {
    let groups = [("A2", group("A2")), ("B2", group("B2")), ("A1~", group("A1~"))];
    let lookup = |name: &str| &groups.iter().find(|(n, _)| *n == name).expect("preset").1;
    let failures: Vec<String> = shared
        .resolved
        .par_iter()
        .filter_map(|r| {
            let g = lookup(r.gcm);
            let chi = resolve(g, &r.w, &r.lambda).outcome.euler_characteristic()?;
            let direct = demazure_character(g, &r.w, &r.lambda);
            (chi != direct).then(|| format!("{} w={} lambda={}: {chi} vs {direct}", r.gcm, r.w, r.lambda))
        })
        .collect();
    match failures.first() {
        Some(first) => Err(format!("{} failures, first: {first}", failures.len())),
        None => Ok(format!("{} resolved instances match D_w(e^lambda)", shared.resolved.len())),
    }
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { name: "1 weyl engine counts", budget: Duration::from_secs(5), run: weyl_counts },
        Criterion { name: "2 tau mode equivalence", budget: Duration::from_secs(60), run: relative_equivalence },
        Criterion { name: "3 bruhat domination", budget: Duration::from_secs(60), run: domination },
        Criterion { name: "4 demazure word independence", budget: Duration::from_secs(30), run: demazure_words },
        Criterion { name: "5 oracle = full flag", budget: Duration::from_secs(30), run: full_flag },
        Criterion { name: "6 degree windows", budget: Duration::from_secs(120), run: degree_windows },
        Criterion { name: "7 weight interval", budget: Duration::from_secs(30), run: weight_interval },
        Criterion { name: "8 euler consistency", budget: Duration::from_secs(30), run: euler },
    ];
    let mut shared = Shared::default();
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let result = (c.run)(&mut shared);
        let elapsed = start.elapsed();
        let result = match result {
            Ok(detail) if elapsed > c.budget => Err(format!("{detail}; over budget")),
            other => other,
        };
        let (status, detail) = match &result {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        if result.is_err() {
            failed += 1;
        }
        println!("{status} [{}] {:.2}s / {}s: {detail}", c.name, elapsed.as_secs_f64(), c.budget.as_secs());
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
