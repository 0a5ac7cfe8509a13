use partscat::par;
use partscat::suites::{run_suite, SuiteConfig};

#[test]
fn sequential_and_parallel_agree() {
    let cfg = SuiteConfig::default();
    let mut outputs = Vec::new();
    for mode in [false, true] {
        par::set_parallel(mode);
        let lines: Vec<Vec<String>> = ["trinomial", "pseudoregulus", "form11-counts"]
            .iter()
            .map(|n| run_suite(n, &cfg).unwrap().checks.iter().map(|c| format!("{} {}", c.name, c.detail)).collect())
            .collect();
        outputs.push(lines);
    }
    par::set_parallel(true);
    assert_eq!(outputs[0], outputs[1]);
}
