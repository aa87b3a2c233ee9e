//! Check the characterizations on a handful of ideals and on all squarefree
//! ideals in four variables.

use polymat::lab::{run_harness, verify_equivalences, Harness, IdealSpace};
use polymat::{Characteristic, Limits, MonomialIdeal};

fn main() -> polymat::Result<()> {
    let limits = Limits::default();
    let ch = Characteristic::ZERO;
    for (text, n) in [
        ("x1*x2, x1*x3, x2*x3", 3),
        ("x1^2, x1*x2, x3^2, x2*x3", 3),
        ("x1^2*x3, x1*x2*x3, x1*x3^2, x2^2*x3", 3),
    ] {
        let i = MonomialIdeal::parse(text, n)?;
        let r = verify_equivalences(&i, ch, &limits)?;
        println!("({i}): {:?} violation = {}", r.verdicts(), r.is_violation());
    }

    let report = run_harness(
        Harness::Squarefree { kmax: 3 },
        &[IdealSpace::squarefree(4)],
        ch,
        &limits,
    )?;
    println!(
        "{} squarefree ideals, {} violations",
        report.items.len(),
        report.summary.violations.len()
    );
    Ok(())
}
