//! Runs every acceptance criterion at its stated size and tolerance and
//! prints one line per criterion. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use epsymp::suite::{
    bound_suite, certificate_suite, constants_suite, decomposition_suite, homotopy_suite,
    limit_suite, moser_suite, norm_suite, shear_fixture, spectrum_suite, CheckOutcome,
    DEFAULT_SEED,
};

struct Criterion {
    id: u32,
    title: &'static str,
    limit: Duration,
    run: fn(u64) -> Vec<CheckOutcome>,
}

fn one(c: CheckOutcome) -> Vec<CheckOutcome> {
    vec![c]
}

fn main() -> ExitCode {
    let seed = DEFAULT_SEED;
    let criteria = [
        Criterion {
            id: 1,
            title: "shear fixture defects 0.1 / 0.2 / 0.2 (1e-12)",
            limit: Duration::from_secs(1),
            run: |_| one(shear_fixture()),
        },
        Criterion {
            id: 2,
            title: "norm suite, 10 000 covectors (1e-10)",
            limit: Duration::from_secs(30),
            run: |s| one(norm_suite(s, 10_000, 64)),
        },
        Criterion {
            id: 3,
            title: "homotopy identity, 500 forms (exact)",
            limit: Duration::from_secs(60),
            run: |s| one(homotopy_suite(s, 500)),
        },
        Criterion {
            id: 4,
            title: "homotopy bounds, 100 forms x 100 points (-1e-9)",
            limit: Duration::from_secs(10),
            run: |s| one(bound_suite(s, 100, 100)),
        },
        Criterion {
            id: 5,
            title: "spectrum invariance and scaling, 1 000 pairs (1e-8 / 1e-10)",
            limit: Duration::from_secs(30),
            run: |s| one(spectrum_suite(s, 1_000)),
        },
        Criterion {
            id: 6,
            title: "defect decomposition, 1 000 maps (1e-8)",
            limit: Duration::from_secs(30),
            run: |s| one(decomposition_suite(s, 1_000)),
        },
        Criterion {
            id: 7,
            title: "eps-symplectic certificates, 500 maps x 50 ellipsoids",
            limit: Duration::from_secs(120),
            run: |s| one(certificate_suite(s, 500, 50)),
        },
        Criterion {
            id: 8,
            title: "Moser correction: scalings, 100 random maps, order 16 +- 2",
            limit: Duration::from_secs(60),
            run: |s| moser_suite(s, 100),
        },
        Criterion {
            id: 9,
            title: "constants z0, c_rho, K(eps)",
            limit: Duration::from_secs(1),
            run: |_| one(constants_suite()),
        },
        Criterion {
            id: 10,
            title: "defect of limits of eps_k-symplectic sequences (1e-8)",
            limit: Duration::from_secs(5),
            run: |s| one(limit_suite(s)),
        },
    ];

    let mut all = true;
    for c in &criteria {
        let start = Instant::now();
        let outcomes = (c.run)(seed);
        let elapsed = start.elapsed();
        let checks_ok = outcomes.iter().all(|o| o.pass);
        let time_ok = elapsed <= c.limit;
        let ok = checks_ok && time_ok;
        all &= ok;
        println!(
            "[{}] criterion {:>2}: {} ({:.2}s, limit {}s)",
            if ok { "PASS" } else { "FAIL" },
            c.id,
            c.title,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
        for o in &outcomes {
            println!(
                "         {}: {} cases, {} failures, {} = {:.3e}",
                o.name, o.cases, o.failures, o.metric, o.worst
            );
            for n in &o.notes {
                println!("           note: {n}");
            }
        }
        if !time_ok {
            println!("         over time limit");
        }
    }
    println!(
        "acceptance: {}",
        if all { "all criteria pass" } else { "FAILURES" }
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
