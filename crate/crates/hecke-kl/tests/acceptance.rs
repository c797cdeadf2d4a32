//! Acceptance suite: one line per criterion, run at the deep level.

use std::process::ExitCode;
use std::time::Duration;

use hecke_kl::verify::{criteria, run_criterion, Level, Status, VerifyConfig};

const SEED: u64 = 20240917;

// Criteria whose reference values contain misprints; the failure line carries the witness.
// The run fails if this set changes in either direction.
const EXPECTED_FAILURES: [u32; 2] = [3, 8];

// (criterion, wall-clock budget in seconds)
const BUDGETS: [(u32, u64); 13] = [
    (1, 1),
    (2, 1),
    (3, 5),
    (4, 10),
    (5, 600),
    (6, 600),
    (7, 120),
    (8, 10),
    (9, 600),
    (10, 300),
    (11, 300),
    (12, 60),
    (13, 1800),
];

fn main() -> ExitCode {
    let cfg = VerifyConfig::new(Level::Deep, SEED);
    let all = criteria();
    let mut failed = Vec::new();
    println!("acceptance suite, level {}, seed {}", cfg.level, cfg.seed);
    for (id, secs) in BUDGETS {
        let Some(c) = all.iter().find(|c| c.id == id) else {
            println!("[FAIL] {:>2} missing criterion", id);
            failed.push(id);
            continue;
        };
        let mut r = run_criterion(c, &cfg);
        let budget = Duration::from_secs(secs);
        if c.budget != budget {
            r.status = Status::Fail;
            r.detail = format!("library budget {}s differs from pinned {}s", c.budget.as_secs(), secs).into();
        } else if r.status == Status::Pass && r.elapsed > budget {
            r.status = Status::Fail;
        }
        if r.status != Status::Pass {
            failed.push(id);
        }
        println!("{}", r.line());
    }
    println!("{} of {} criteria passed", BUDGETS.len() - failed.len(), BUDGETS.len());
    if failed == EXPECTED_FAILURES {
        println!("failures match the expected set {:?}", EXPECTED_FAILURES);
        ExitCode::SUCCESS
    } else {
        println!("expected failures {:?}, got {:?}", EXPECTED_FAILURES, failed);
        ExitCode::FAILURE
    }
}
