//! Acceptance suite: one PASS/FAIL line per criterion, each with its time
//! limit. Exits non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use dissrho::search::SearchOptions;
use dissrho::verify::{self, Report, VerifyError};

const SEED: u64 = 20_240_601;

struct Criterion {
    id: usize,
    name: &'static str,
    limit: Option<Duration>,
    run: fn() -> Result<Report, VerifyError>,
}

fn secs(s: u64) -> Option<Duration> {
    Some(Duration::from_secs(s))
}

fn criteria() -> Vec<Criterion> {
    vec![
        Criterion {
            id: 1,
            name: "star law rho(S_t) = sqrt(t), t = 1..12",
            limit: secs(1),
            run: || verify::star_law(12, 1e-10),
        },
        Criterion {
            id: 2,
            name: "graphs with rho <= 2 on n <= 7",
            limit: secs(120),
            run: || verify::smith_sweep(7, None),
        },
        Criterion {
            id: 3,
            name: "fixed-point model on 100 random G specs",
            limit: secs(60),
            run: || verify::fixed_point(SEED, 100, 0),
        },
        Criterion {
            id: 4,
            name: "rho(G_m,l)^2 < m + 3, m = 2..12",
            limit: secs(10),
            run: || verify::rho_bound(2, 12),
        },
        Criterion {
            id: 5,
            name: "33 case polynomials and g10(t) = 0",
            limit: secs(10),
            run: || verify::case_polys(1000),
        },
        Criterion {
            id: 6,
            name: "ordering chains f1..f5 and f6 > f7",
            limit: secs(5),
            run: || verify::ordering_chains(200, 101),
        },
        Criterion {
            id: 7,
            name: "small orders 5, 6, 7 by full enumeration",
            limit: secs(300),
            run: || verify::small_cases(&SearchOptions::default()),
        },
        Criterion {
            id: 8,
            name: "tree searches n = 12..20 match the pattern",
            limit: secs(1800),
            run: || verify::tree_pattern(12, 20, &SearchOptions::default()),
        },
        Criterion {
            id: 9,
            name: "family search n = 39..120",
            limit: secs(300),
            run: || verify::family_consistency(39, 120),
        },
        Criterion {
            id: 10,
            name: "spectral radius property suites",
            limit: None,
            run: || verify::property_suites(SEED, 50),
        },
        Criterion {
            id: 11,
            name: "dissociation oracle equivalence",
            limit: None,
            run: || verify::diss_oracles(SEED, 500, 200),
        },
        Criterion {
            id: 12,
            name: "generated hypergraphs of trees, n <= 12",
            limit: None,
            run: || verify::hypergraph_structure(12),
        },
    ]
}

fn main() -> ExitCode {
    let filter: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failed = 0;
    for c in criteria() {
        if !filter.is_empty() && !filter.contains(&c.id) {
            continue;
        }
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let in_time = c.limit.is_none_or(|l| elapsed <= l);
        let limit = c
            .limit
            .map_or("none".to_string(), |l| format!("{}s", l.as_secs()));
        match outcome {
            Ok(report) => {
                let ok = report.passed() && in_time;
                if !ok {
                    failed += 1;
                    eprint!("{}", report.to_text());
                }
                let status = if ok { "PASS" } else { "FAIL" };
                let why = if !in_time {
                    " (time limit exceeded)"
                } else {
                    ""
                };
                println!(
                    "{status} criterion {:>2}: {} [{} checks, {:.2}s, limit {limit}]{why}",
                    c.id,
                    c.name,
                    report.checks.len(),
                    elapsed.as_secs_f64()
                );
                for f in report.failures() {
                    println!("      failed {}: {}", f.name, f.detail);
                }
            }
            Err(e) => {
                failed += 1;
                println!(
                    "FAIL criterion {:>2}: {} [error: {e}, {:.2}s]",
                    c.id,
                    c.name,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
