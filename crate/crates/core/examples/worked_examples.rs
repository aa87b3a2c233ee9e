//! The regression suite of worked examples, as text or JSON (`--json`).

use polymat::lab::{describe, regression_suite};
use polymat::{Characteristic, Limits};

fn main() {
    let report = regression_suite(Characteristic::ZERO, &Limits::default());
    if std::env::args().any(|a| a == "--json") {
        println!("{}", report.deterministic_json());
        return;
    }
    for item in &report.items {
        println!("{}", describe(item));
    }
    println!("passed: {}", report.passed());
}
