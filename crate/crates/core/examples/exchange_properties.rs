//! Exchange properties, Veronese type and their componentwise versions.

use polymat::polymatroid::{
    detect_veronese, has_nonpure_exchange, has_strong_exchange, is_componentwise_polymatroidal,
    is_matroidal, is_polymatroidal, veronese, VeroneseParams,
};
use polymat::MonomialIdeal;

fn main() -> polymat::Result<()> {
    let ideals = [
        ("x1^2, x1*x2, x3^2, x2*x3", 3),
        ("x1*x2, x1*x3, x2*x3", 3),
        ("x1*x3, x1*x4, x2*x3, x2*x4", 4),
        ("x1*x2, x1*x3^2, x2*x3^2", 3),
    ];
    for (text, n) in ideals {
        let i = MonomialIdeal::parse(text, n)?;
        let p = is_polymatroidal(&i)?;
        println!("({i})");
        println!("  polymatroidal   {}", p.holds);
        if let Some(w) = p.witness() {
            println!("    fails at u = {}, v = {}, i = {}", w.u, w.v, w.i + 1);
        }
        println!("  matroidal       {}", is_matroidal(&i)?.holds);
        println!("  strong exchange {}", has_strong_exchange(&i)?.holds);
        println!("  non-pure        {}", has_nonpure_exchange(&i)?.holds);
        println!(
            "  componentwise   {}",
            is_componentwise_polymatroidal(&i, 1)?.holds
        );
        if i.is_single_degree()? {
            if let Some(v) = detect_veronese(&i)? {
                println!("  Veronese type   {v}");
            }
        }
    }

    let v = veronese(&VeroneseParams::new(3, vec![2, 1, 2])?);
    println!("I_(3; 2, 1, 2) = {v}");
    Ok(())
}
