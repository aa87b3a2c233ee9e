//! Linear-quotients certificates: checking orders, searching, revlex, and
//! Veronese extensions.

use polymat::polymatroid::VeroneseParams;
use polymat::quotients::{
    check_lq_order, componentwise_veronese_lq, extend_lq_veronese, find_lq_order, revlex_lq,
    RevlexConvention,
};
use polymat::{Limits, MonomialIdeal};

fn main() -> polymat::Result<()> {
    let i = MonomialIdeal::parse("x1*x2, x1*x3^2, x2*x3^2", 3)?;
    let zero = MonomialIdeal::zero(3);
    match find_lq_order(&zero, i.gens(), &Limits::default())? {
        Some(c) => {
            println!("order for ({i}):");
            for (g, s) in c.appended.iter().zip(&c.steps) {
                println!("  {g:<10} colon by {s}");
            }
            println!("verified: {}", c.verify());
        }
        None => println!("({i}) has no linear quotients"),
    }

    let j = MonomialIdeal::parse("x1*x2, x3*x4", 4)?;
    println!(
        "({j}) in given order: {:?}",
        check_lq_order(&MonomialIdeal::zero(4), j.gens())?
    );

    let t = MonomialIdeal::parse("x1*x2, x1*x3, x2*x3", 3)?;
    for conv in [RevlexConvention::Decreasing, RevlexConvention::Increasing] {
        println!(
            "revlex {conv:?}: certified = {}",
            revlex_lq(&t, conv)?.is_certified()
        );
    }

    let p = VeroneseParams::new(2, vec![1, 1, 1])?;
    let q = VeroneseParams::new(3, vec![3, 3, 3])?;
    let ext = extend_lq_veronese(&p, &q)?;
    println!(
        "I_{p} m extends to I_{q} by {} generators",
        ext.appended.len()
    );

    let cw = MonomialIdeal::parse("x1^2, x1*x2^2, x2^3", 2)?;
    if let Some(outcome) = componentwise_veronese_lq(&cw)? {
        println!(
            "({cw}): componentwise Veronese order certified = {}",
            outcome.is_certified()
        );
    }
    Ok(())
}
