use partscat::suites::{SuiteConfig, SUITES};

#[test]
fn acceptance_criteria() {
    let cfg = SuiteConfig::default();
    let mut failed = Vec::new();
    for suite in SUITES {
        let r = suite.run(&cfg);
        println!(
            "criterion {:>2} {:<24} {} ({} ms, budget {} s)",
            r.criterion,
            r.name,
            if r.passed() { "PASS" } else { "FAIL" },
            r.elapsed.as_millis(),
            r.budget.as_secs()
        );
        for line in r.lines() {
            println!("{line}");
        }
        if !r.passed() {
            failed.push(r.name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
