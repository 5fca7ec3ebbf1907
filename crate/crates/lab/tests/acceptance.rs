//! Acceptance suite: every check of the `reproduce` suite under the default
//! configuration, one PASS/FAIL line each, with wall-clock budgets.
//!
//! The random-threefold surveys are shared by several checks, so they are built
//! once up front and their cost is reported on its own line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use gorenstein_lab::config::RunConfig;
use gorenstein_lab::reproduce::{run_check, CHECK_IDS};
use gorenstein_lab::survey::cached_survey;

/// Per-check budgets in seconds; `None` where only the suite total is bounded.
const BUDGETS: [(&str, Option<u64>); 12] = [
    ("normal-form-hf", Some(5)),
    ("fourfold-nonunimodal", Some(60)),
    ("d5-dichotomy", Some(60)),
    ("d6-classification", Some(120)),
    ("wlp-hf-criterion", None),
    ("unimodality", None),
    ("hessian-vanishing", Some(10)),
    ("jordan-table", Some(120)),
    ("dominance-chain", None),
    ("non-lefschetz-strings", None),
    ("rank-bounds", None),
    ("property-suites", None),
];

const TOTAL_BUDGET: Duration = Duration::from_secs(600);

fn main() -> ExitCode {
    let cfg = RunConfig::default();
    let start = Instant::now();
    let mut failed = 0;

    for d in cfg.d_min..=cfg.d_max {
        let t = Instant::now();
        match cached_survey(d, &cfg) {
            Ok(records) => println!(
                "[INFO] survey d={d}: {} samples in {:.1} s",
                records.len(),
                t.elapsed().as_secs_f64()
            ),
            Err(e) => {
                println!("[FAIL] survey d={d}: {e}");
                failed += 1;
            }
        }
    }

    for (n, id) in CHECK_IDS.iter().enumerate() {
        let budget = BUDGETS.iter().find(|(b, _)| b == id).and_then(|(_, s)| *s);
        let check = run_check(id, &cfg);
        let secs = check.runtime.as_secs_f64();
        let in_budget = budget.map_or(true, |b| check.runtime <= Duration::from_secs(b));
        let ok = check.passed() && in_budget;
        failed += usize::from(!ok);
        let budget_text = budget.map_or(String::new(), |b| format!(", budget {b} s"));
        println!(
            "[{}] AC-{} {id} ({secs:.1} s{budget_text}): {}",
            if ok { "PASS" } else { "FAIL" },
            n + 1,
            check.computed
        );
        if !check.passed() {
            println!("       expected: {}", check.expected);
        } else if !in_budget {
            println!("       exceeded its time budget");
        }
    }

    let total = start.elapsed();
    let total_ok = total <= TOTAL_BUDGET;
    failed += usize::from(!total_ok);
    println!(
        "[{}] total {:.1} s (budget {} s)",
        if total_ok { "PASS" } else { "FAIL" },
        total.as_secs_f64(),
        TOTAL_BUDGET.as_secs()
    );
    println!("{} of {} acceptance criteria passed", CHECK_IDS.len() - failed.min(CHECK_IDS.len()), CHECK_IDS.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
