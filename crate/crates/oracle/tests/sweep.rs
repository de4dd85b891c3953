use std::time::Duration;

use tspread_oracle::sweep::{run_suite, Suite};

#[test]
fn quick_suite_matches_and_is_fast() {
    let outcome = run_suite(Suite::Quick);
    println!("{outcome}");
    assert!(outcome.all_passed(), "{outcome}");
    assert!(outcome.elapsed < Duration::from_secs(30));
}

#[test]
#[ignore]
fn full_suite_timing() {
    let outcome = run_suite(Suite::Full);
    println!("{outcome}");
    assert!(outcome.all_passed());
}
