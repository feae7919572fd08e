//! The full twist is central, so conjugacy classes are only defined up to
//! powers of it once a braid is read off a mapping class.
//!
//!     cargo run --example full_twist

use snbraid::garside::{conjugate_mod_full_twist, equal, full_twist};
use snbraid::BraidWord;

fn main() -> snbraid::Result<()> {
    for n in 2..=5 {
        let t = full_twist(n)?;
        let c = BraidWord::parse(n, "s1 S1 s1")?;
        println!(
            "B_{n}: Δ² = {t} (exponent sum {}), commutes with σ1: {}",
            t.exponent_sum(),
            equal(&t.conjugated_by(&c)?, &t)?
        );
    }

    let t = full_twist(3)?;
    let b = BraidWord::parse(3, "s1 S2")?;
    let twisted = b.compose(&t)?.compose(&t)?;
    let r = conjugate_mod_full_twist(&twisted, &b)?;
    println!(
        "(σ1σ2⁻¹)·Δ⁴ vs σ1σ2⁻¹: {}",
        serde_json::to_string(&r).expect("serializable")
    );

    let r = conjugate_mod_full_twist(&BraidWord::parse(3, "s1")?, &BraidWord::parse(3, "S2")?)?;
    println!(
        "σ1 vs σ2⁻¹ (gap 2 is not a multiple of 6): {}",
        r.result.conjugate
    );
    Ok(())
}
