use tspread_oracle::realize::cross_validate;

#[test]
fn smallest_ambients_agree_with_exhaustion() {
    let outcome = cross_validate(7..=8, 2);
    assert!(outcome.passed(), "{:?}", outcome.failures);
    assert!(outcome.feasible > 0 && outcome.infeasible > 0);
}

#[test]
#[ignore]
fn timing_up_to_twelve() {
    let start = std::time::Instant::now();
    let o = cross_validate(7..=12, 2);
    println!("{} specs, {} feasible, {} infeasible, {} witnesses, {:?}", o.specs, o.feasible, o.infeasible, o.witnesses_checked, start.elapsed());
    println!("{:?}", &o.failures[..o.failures.len().min(10)]);
    assert!(o.passed());
}
