//! Colons, saturation, localization and the ideal operations.

use polymat::{CombineOp, Monomial, MonomialIdeal, VarSubset};

fn main() -> polymat::Result<()> {
    let i = MonomialIdeal::parse("x1*x2*x3, x2*x3*x4, x3*x5*x6", 6)?;
    println!("I          = {i}");

    let ones = VarSubset::from_one_based(&[4], 6)?;
    println!("I(x4 = 1)  = {}", i.localize(&ones)?);

    let u = Monomial::new(vec![0, 1, 1, 0, 0, 0]);
    println!("I : x2x3   = {}", i.colon(&u)?);
    println!("I : x3^oo  = {}", i.saturate(&Monomial::var(6, 2))?);

    let m = MonomialIdeal::maximal(6);
    for op in [CombineOp::Sum, CombineOp::Product, CombineOp::Intersect] {
        println!(
            "{op:?} with m: {} generators",
            i.combine(op, &m)?.num_gens()
        );
    }

    let j = MonomialIdeal::parse("x1^2, x1*x2^2, x2^3", 2)?;
    println!("J^2        = {}", j.power(2)?);
    for d in 2..=4 {
        println!("J_<{d}>      = {}", j.component(d)?);
    }
    Ok(())
}
