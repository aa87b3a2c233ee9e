//! Graded Betti tables, in characteristic 0 and 2.

use polymat::resolution::{betti_table, has_linear_relations, has_linear_resolution};
use polymat::{Characteristic, MonomialIdeal};

fn main() -> polymat::Result<()> {
    let ideals = [
        ("x1*x2, x1*x3, x2*x3", 3),
        ("x1*x2, x3*x4", 4),
        ("x1^2, x1*x2, x2^2", 2),
        // Stanley-Reisner ideal of the 6-vertex triangulation of the real
        // projective plane: its resolution depends on the characteristic.
        (
            "x1*x2*x3, x1*x2*x4, x1*x3*x5, x1*x4*x6, x1*x5*x6, x2*x3*x6, x2*x4*x5, x2*x5*x6, x3*x4*x5, x3*x4*x6",
            6,
        ),
    ];
    for (text, n) in ideals {
        let i = MonomialIdeal::parse(text, n)?;
        println!("({i})");
        for ch in [Characteristic::ZERO, Characteristic::new(2)?] {
            let t = betti_table(&i, ch)?;
            println!("char {ch}:\n{t}");
            println!(
                "linear resolution {}, linear relations {}\n",
                has_linear_resolution(&i, ch)?,
                has_linear_relations(&i, ch)?
            );
        }
    }
    Ok(())
}
