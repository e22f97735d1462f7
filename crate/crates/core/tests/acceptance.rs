//! One line per acceptance criterion; exits non-zero when any fails.

use std::path::PathBuf;
use std::process::ExitCode;

use dirfac::selftest::{run_all, Config};

fn main() -> ExitCode {
    let cfg = Config { data_dir: Some(PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("data/base")), ..Config::default() };
    let outcomes = run_all(&cfg);
    for o in &outcomes {
        println!("{o}");
    }
    let failed = outcomes.iter().filter(|o| !o.pass).count();
    println!("{} of {} criteria pass", outcomes.len() - failed, outcomes.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
