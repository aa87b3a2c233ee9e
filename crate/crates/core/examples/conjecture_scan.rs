//! Scan an ideal space for ideals whose localizations all have linear
//! resolutions without the ideal being polymatroidal.
//!
//! Usage: `cargo run --release --example conjecture_scan [nvars] [max_degree] [max_gens] [samples]`

use polymat::lab::{describe, scan_conjecture, IdealSpace};
use polymat::{Characteristic, Limits};

fn main() -> polymat::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let arg = |k: usize, d: usize| args.get(k).copied().unwrap_or(d);
    let (n, deg, gens) = (arg(0, 3), arg(1, 3) as u32, arg(2, 4));
    let space = match args.get(3) {
        Some(&count) => IdealSpace::sampled(n, deg, gens, count, 2024),
        None => IdealSpace::exhaustive(n, deg, gens),
    };
    let report = scan_conjecture(&space, Characteristic::ZERO, &Limits::default())?;
    for k in &report.summary.counterexamples {
        println!("{}", describe(&report.items[*k]));
    }
    println!(
        "{} ideals, {} counterexamples, {} skipped",
        report.items.len(),
        report.summary.counterexamples.len(),
        report.summary.skipped.len()
    );
    Ok(())
}
