//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria 4 and 5 fail on catalog data. For those the suite checks that
//! the failures are exactly the known counterexamples, so the process
//! still exits non-zero on any unexpected outcome.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use isoclin_core::catalog::{self, named_pair, NAMED_PAIRS};
use isoclin_core::degrees::{
    commutativity_degree, nilpotency_degree, nilpotency_degree_naive, relative_commutativity_degree,
    relative_nilpotency_degree,
};
use isoclin_core::iso::{find_isomorphism, DEFAULT_SEARCH_BUDGET};
use isoclin_core::isoclinism::{are_n_isoclinic, are_relative_n_isoclinic, check_diagram};
use isoclin_core::structure::{all_subgroups, gamma};
use isoclin_core::verify::{
    catalog_pairs, run_claim, verify_theorem_b_sweep, NamedPair, SweepOptions, Verdict, VerificationReport,
};
use isoclin_core::{ExactRatio, Subgroup};

struct Outcome {
    pass: bool,
    detail: String,
    /// Descriptions of failing instances, for criteria with known failures.
    failures: Vec<String>,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into(), failures: Vec::new() }
    }
}

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
    /// `Some` when the criterion is known to fail; returns whether the
    /// observed failures are exactly the known ones.
    known_failure: Option<fn(&[String]) -> bool>,
}

fn r(n: u128, d: u128) -> ExactRatio {
    ExactRatio::new(n, d)
}

fn failures(report: &VerificationReport) -> Vec<String> {
    report
        .instances()
        .iter()
        .filter(|i| matches!(i.verdict, Verdict::Fail | Verdict::Error))
        .map(|i| format!("{} | {}", i.description, i.actual))
        .collect()
}

fn exact_values() -> Outcome {
    let mut wrong = Vec::new();
    for name in ["d8-a", "d8-a2b", "d8-a2ab"] {
        let (h, g) = named_pair(name).unwrap();
        let d = relative_commutativity_degree(&h, &g).unwrap();
        if d != r(3, 4) {
            wrong.push(format!("{name}: {d}"));
        }
    }
    let s3 = catalog::get("symmetric:3").unwrap();
    if commutativity_degree(&s3) != r(1, 2) {
        wrong.push(format!("d(S3) = {}", commutativity_degree(&s3)));
    }
    for (name, order) in [("sl25", 120), ("psl25", 60)] {
        let g = catalog::get(name).unwrap();
        let derived = gamma(&g, 2).order();
        if derived != order {
            wrong.push(format!("|[{name}, {name}]| = {derived}"));
        }
    }
    Outcome::new(wrong.is_empty(), if wrong.is_empty() { "all values exact".into() } else { wrong.join("; ") })
}

fn dihedral_quaternion() -> Outcome {
    let d8 = catalog::get("dihedral:8").unwrap();
    let q8 = catalog::get("quaternion8").unwrap();
    let witness = are_n_isoclinic(&d8, &q8, 1).unwrap();
    let validated =
        witness.as_ref().is_some_and(|w| check_diagram(w, &Subgroup::whole(&d8), &d8, &Subgroup::whole(&q8), &q8, 1));
    let isomorphic = find_isomorphism(&d8, &q8, None).unwrap().is_some();
    Outcome::new(validated && !isomorphic, format!("witness validated: {validated}, isomorphic: {isomorphic}"))
}

fn special_linear_pair() -> Outcome {
    let (z, sl) = named_pair("sl25-center").unwrap();
    let (one, psl) = named_pair("psl25-trivial").unwrap();
    let witness = are_relative_n_isoclinic(&z, &sl, &one, &psl, 1).unwrap();
    let validated = witness.as_ref().is_some_and(|w| check_diagram(w, &z, &sl, &one, &psl, 1));
    Outcome::new(validated, format!("witness validated: {validated}"))
}

fn theorem_e_sweep() -> Outcome {
    let report = run_claim("theorem-e", &SweepOptions::default()).unwrap().remove(0);
    let failures = failures(&report);
    Outcome { pass: report.overall(), detail: report.summary(), failures }
}

fn theorem_e_known(failures: &[String]) -> bool {
    failures
        == [
            "dihedral:16, H = <a^2> (order 4) | d = 3/4, not isoclinic",
            "dicyclic:16, H = <a^2> (order 4) | d = 3/4, not isoclinic",
        ]
}

fn bound_suite() -> Outcome {
    let report = run_claim("bounds", &SweepOptions::default()).unwrap().remove(0);
    let (mut five_eighths, mut subgroup) = ((0, 0), (0, 0));
    for inst in report.instances().iter().filter(|i| i.verdict != Verdict::Skipped) {
        let tally = if inst.description.contains("d(H, G)") { &mut subgroup } else { &mut five_eighths };
        tally.0 += 1;
        if inst.verdict != Verdict::Pass {
            tally.1 += 1;
        }
    }
    let detail = format!(
        "5/8 bound: {} of {} checks fail; subgroup bound: {} of {} checks fail",
        five_eighths.1, five_eighths.0, subgroup.1, subgroup.0
    );
    Outcome { pass: report.overall(), detail, failures: failures(&report) }
}

fn bound_known(failures: &[String]) -> bool {
    failures.len() == 94
        && failures.iter().all(|f| f.contains("d(H, G) <= (1 + |Z(G) u Z(H)|/|G|)/2"))
        && failures.iter().any(|f| f.starts_with("symmetric:3, H = 1:") && f.ends_with("d = 1"))
        && failures.iter().any(|f| f.starts_with("dihedral:8, H = <b> (order 2):") && f.ends_with("d = 3/4"))
}

fn oracle_pairs() -> Vec<NamedPair> {
    let mut pairs = catalog_pairs(48).unwrap();
    for name in ["sl25", "psl25"] {
        pairs.push(NamedPair::whole(name).unwrap());
    }
    for name in NAMED_PAIRS {
        pairs.push(NamedPair::named(name).unwrap());
    }
    pairs
}

fn oracle_equivalence() -> Outcome {
    let (mut checked, mut wrong) = (0usize, Vec::new());
    for p in oracle_pairs() {
        for n in 1..=3u32 {
            if (p.h.order() as u128).pow(n) * (p.g.order() as u128) > 1_000_000 {
                continue;
            }
            let fast = relative_nilpotency_degree(&p.h, &p.g, n as usize).unwrap();
            let naive = nilpotency_degree_naive(&p.h, &p.g, n as usize).unwrap();
            checked += 1;
            if fast != naive {
                wrong.push(format!("{} n={n}: {fast} vs {naive}", p.name));
            }
        }
    }
    Outcome::new(wrong.is_empty(), format!("{checked} (H, G, n) checked, {} mismatches {wrong:?}", wrong.len()))
}

fn theorem_b_sweep() -> Outcome {
    let mut pairs = catalog_pairs(24).unwrap();
    for name in NAMED_PAIRS {
        pairs.push(NamedPair::named(name).unwrap());
    }
    let mut summaries = Vec::new();
    let mut pass = true;
    for n in 1..=2 {
        let report = verify_theorem_b_sweep(&pairs, n, DEFAULT_SEARCH_BUDGET).unwrap();
        pass &= report.overall();
        summaries.push(format!("n={n}: {}", report.summary()));
    }
    Outcome::new(pass, summaries.join("; "))
}

fn harness_claims() -> Outcome {
    let mut pass = true;
    let mut parts = Vec::new();
    for claim in ["theorem-a", "theorem-c", "theorem-d", "escalation"] {
        let start = Instant::now();
        let report = run_claim(claim, &SweepOptions::default()).unwrap().remove(0);
        let in_time = start.elapsed() < Duration::from_secs(120);
        pass &= report.overall() && in_time;
        parts.push(format!("{} [{:.2?}]", report.summary(), start.elapsed()));
    }
    Outcome::new(pass, parts.join("; "))
}

fn degree_laws() -> Outcome {
    let mut wrong = Vec::new();
    let mut checks = 0usize;
    for name in catalog::sweep(32) {
        let g = catalog::get(&name).unwrap();
        checks += 1;
        if nilpotency_degree(&g, 1).unwrap() != commutativity_degree(&g) {
            wrong.push(format!("{name}: d(1) != d"));
        }
        for n in 1..=4 {
            checks += 1;
            let all_trivial = nilpotency_degree(&g, n).unwrap().is_one();
            if all_trivial != gamma(&g, n + 1).is_trivial() {
                wrong.push(format!("{name}, n={n}: d(n) = 1 is {all_trivial}"));
            }
        }
        for h in all_subgroups(&g, None).unwrap() {
            let mut prev = relative_nilpotency_degree(&h, &g, 1).unwrap();
            checks += 1;
            if prev != relative_commutativity_degree(&h, &g).unwrap() {
                wrong.push(format!("{name}, |H| = {}: relative d(1) != d", h.order()));
            }
            for n in 2..=4 {
                let next = relative_nilpotency_degree(&h, &g, n).unwrap();
                checks += 1;
                if next < prev {
                    wrong.push(format!("{name}, |H| = {}, n={n}: {next} < {prev}", h.order()));
                }
                prev = next;
            }
        }
    }
    Outcome::new(wrong.is_empty(), format!("{checks} checks, {} violations {wrong:?}", wrong.len()))
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            id: 1,
            title: "exact values",
            limit: Duration::from_secs(5),
            run: exact_values,
            known_failure: None,
        },
        Criterion {
            id: 2,
            title: "D8 ~1 Q8, not isomorphic",
            limit: Duration::from_secs(5),
            run: dihedral_quaternion,
            known_failure: None,
        },
        Criterion {
            id: 3,
            title: "(Z(SL(2,5)), SL(2,5)) ~1 (1, PSL(2,5))",
            limit: Duration::from_secs(60),
            run: special_linear_pair,
            known_failure: None,
        },
        Criterion {
            id: 4,
            title: "d(H,G) = 3/4 characterization, order <= 16",
            limit: Duration::from_secs(120),
            run: theorem_e_sweep,
            known_failure: Some(theorem_e_known),
        },
        Criterion {
            id: 5,
            title: "commutativity bounds",
            limit: Duration::from_secs(120),
            run: bound_suite,
            known_failure: Some(bound_known),
        },
        Criterion {
            id: 6,
            title: "DP degree equals naive enumeration",
            limit: Duration::from_secs(300),
            run: oracle_equivalence,
            known_failure: None,
        },
        Criterion {
            id: 7,
            title: "isoclinic pairs share relative degrees",
            limit: Duration::from_secs(300),
            run: theorem_b_sweep,
            known_failure: None,
        },
        Criterion {
            id: 8,
            title: "theorem-a, theorem-c, theorem-d, escalation sweeps",
            limit: Duration::from_secs(480),
            run: harness_claims,
            known_failure: None,
        },
        Criterion {
            id: 9,
            title: "degree laws",
            limit: Duration::from_secs(300),
            run: degree_laws,
            known_failure: None,
        },
    ];
    let mut unexpected = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let pass = outcome.pass && elapsed <= c.limit;
        println!(
            "criterion {}: {} - {} - {} [{:.2?}, limit {:?}]",
            c.id,
            if pass { "PASS" } else { "FAIL" },
            c.title,
            outcome.detail,
            elapsed,
            c.limit
        );
        for f in outcome.failures.iter().take(5) {
            println!("    counterexample: {f}");
        }
        match c.known_failure {
            None if !pass => unexpected.push(format!("criterion {} failed", c.id)),
            Some(_) if pass => unexpected.push(format!("criterion {} passed but has known counterexamples", c.id)),
            Some(known) if !known(&outcome.failures) => {
                unexpected.push(format!("criterion {} failed differently from its known counterexamples", c.id))
            }
            _ => {}
        }
    }
    let failing: Vec<u32> = criteria.iter().filter(|c| c.known_failure.is_some()).map(|c| c.id).collect();
    if unexpected.is_empty() {
        println!(
            "acceptance: {} of {} criteria pass; {failing:?} fail on their known counterexamples",
            criteria.len() - failing.len(),
            criteria.len()
        );
        ExitCode::SUCCESS
    } else {
        for u in &unexpected {
            println!("unexpected: {u}");
        }
        ExitCode::FAILURE
    }
}
