//! Irreducible decompositions, associated primes and transversal ideals.

use polymat::primes::{associated_primes, irreducible_decomposition, transversal};
use polymat::{Limits, MonomialIdeal, VarSubset};

fn main() -> polymat::Result<()> {
    for (text, n) in [
        ("x1^2, x1*x2", 2),
        ("x1*x2, x1*x3, x2*x3", 3),
        ("x1^2*x2, x2^3, x1*x3", 3),
    ] {
        let i = MonomialIdeal::parse(text, n)?;
        let comps = irreducible_decomposition(&i)?;
        let shown: Vec<String> = comps.iter().map(|c| c.to_string()).collect();
        println!("({i}) = {}", shown.join(" ∩ "));
        let ass = associated_primes(&i, &Limits::default())?;
        for p in &ass.primes {
            println!("  {} witness {}", p.prime, p.witness);
        }
        println!("  height {}, embedded {}", ass.height, ass.has_embedded);
    }

    let primes = [
        VarSubset::from_one_based(&[1, 2], 4)?,
        VarSubset::from_one_based(&[3, 4], 4)?,
    ];
    println!("P1 P2 = {}", transversal(4, &primes, &[1, 1])?);
    println!("P1^2 P2 = {}", transversal(4, &primes, &[2, 1])?);
    Ok(())
}
