//! Acceptance criteria, one line per criterion.
//!
//! Runs as a plain binary (`harness = false`) so the PASS/FAIL lines always
//! reach the `cargo test` output. Every check is exact equality; the process
//! exits nonzero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rickart::gen::GenConfig;
use rickart::harness::{run_all, run_suite_with, Execution, Suite, SuiteOps, SuiteReport};
use rickart::order::join_bounded;

struct Criterion {
    id: u32,
    title: &'static str,
    suites: &'static [Suite],
}

const CRITERIA: &[Criterion] = &[
    Criterion { id: 2, title: "annihilator axiom, 500 pairs", suites: &[Suite::RickartAxiom] },
    Criterion { id: 3, title: "annihilator properties (a)-(h), 500 instances", suites: &[Suite::AnnihilatorProperties] },
    Criterion {
        id: 4,
        title: "four definitional pairs agree on 1000 pairs; order axioms on chains",
        suites: &[Suite::StarOrderDefinitions],
    },
    Criterion {
        id: 5,
        title: "characterizations (a)-(f) on 500 comparable + 500 random pairs; projection monotonicity",
        suites: &[Suite::StarOrderCharacterizations, Suite::RightProjectionMonotone],
    },
    Criterion {
        id: 6,
        title: "bounded meet/join on 500 quadruples: bound independence, 20 sampled bounds each, projection identities",
        suites: &[Suite::BoundedMeetJoin, Suite::BoundedCorollaries],
    },
    Criterion {
        id: 7,
        title: "general meet on 500 pairs with 20 sampled lower bounds; glb fold order on 200 triples",
        suites: &[Suite::GeneralMeet, Suite::GlbSet],
    },
    Criterion {
        id: 8,
        title: "coherence items (a)-(d) on 300 coherent and 300 non-coherent bounded pairs",
        suites: &[Suite::Coherence],
    },
    Criterion { id: 9, title: "star-minus (a)-(c) and reconstruction on 500 pairs", suites: &[Suite::StarMinus] },
    Criterion {
        id: 10,
        title: "projection lattice laws on 1000 pairs; commutant closure on 300 triples",
        suites: &[Suite::ProjectionLattice, Suite::CommutantLattice],
    },
    Criterion {
        id: 11,
        title: "self-adjoint equivalences on 500 pairs; closure on 500 bounded triples",
        suites: &[Suite::Hermitian],
    },
];

fn report_line(ok: bool, id: u32, title: &str, detail: &str) -> bool {
    println!("{} [{id:>2}] {title}{}", if ok { "PASS" } else { "FAIL" }, detail);
    ok
}

fn summarize(reports: &[&SuiteReport]) -> (bool, String) {
    let ok = reports.iter().all(|r| r.passed());
    let parts: Vec<String> = reports
        .iter()
        .map(|r| match r.failures.first() {
            None => format!("{} {}/{}", r.suite, r.trials, r.trials),
            Some(f) => format!(
                "{} {} failures, first trial {} ({}): {}",
                r.suite,
                r.failures.len(),
                f.trial,
                f.property,
                f.counterexample
            ),
        })
        .collect();
    (ok, format!(" -- {}", parts.join("; ")))
}

fn mutated_meet(a: &rickart::Matrix, b: &rickart::Matrix, x: &rickart::Matrix) -> Result<rickart::Matrix, rickart::Error> {
    // x (a'' ∨ b'') in place of x (a'' ∧ b'')
    join_bounded(a, b, x)
}

fn main() -> ExitCode {
    let mut all_ok = true;

    let penrose_cfg = GenConfig { dim: 5, trials: 1000, ..GenConfig::default() };
    let start = Instant::now();
    let penrose = run_suite_with(Suite::Penrose, &penrose_cfg, SuiteOps::default(), Execution::Auto);
    let elapsed = start.elapsed();
    let (ok, detail) = summarize(&[&penrose]);
    let fast = elapsed < Duration::from_secs(30);
    all_ok &= report_line(
        ok && fast,
        1,
        "Penrose equations on 1000 matrices, n <= 5, under 30 s",
        &format!("{detail}, {:.1} s", elapsed.as_secs_f64()),
    );

    let start = Instant::now();
    let reports = run_all(&GenConfig::default(), None, Execution::Auto);
    let full = start.elapsed();
    for c in CRITERIA {
        let picked: Vec<&SuiteReport> =
            c.suites.iter().map(|s| reports.iter().find(|r| r.suite == *s).expect("suite ran")).collect();
        let trials_ok = picked.iter().all(|r| r.trials == r.suite.default_trials());
        let (ok, detail) = summarize(&picked);
        all_ok &= report_line(ok && trials_ok, c.id, c.title, &detail);
    }

    let ops = SuiteOps { meet_bounded: mutated_meet, ..SuiteOps::default() };
    let cfg = GenConfig { trials: 50, ..GenConfig::default() };
    let mutated = run_suite_with(Suite::BoundedMeetJoin, &cfg, ops, Execution::Auto);
    all_ok &= report_line(
        !mutated.passed(),
        12,
        "meet formula with ∨ in place of ∧ is caught within 50 trials",
        &format!(" -- {} of 50 trials fail", mutated.failures.len()),
    );

    let everything_ok = reports.iter().all(|r| r.passed());
    all_ok &= report_line(
        everything_ok && full < Duration::from_secs(300),
        13,
        "verify all at defaults under 5 minutes",
        &format!(" -- {} suites, {:.1} s", reports.len(), full.as_secs_f64()),
    );

    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
