//! Conjugacy with witnesses, via summit sets.
//!
//!     cargo run --example conjugacy

use snbraid::garside::{canonical_form, equal, is_conjugate, ultra_summit_set};
use snbraid::BraidWord;

fn main() -> snbraid::Result<()> {
    let a = BraidWord::parse(3, "s1")?;
    let b = BraidWord::parse(3, "s2")?;
    let r = is_conjugate(&a, &b)?;
    let c = r.witness.clone().expect("σ1 and σ2 are conjugate");
    println!(
        "σ1 ~ σ2 with c = {c}; c·σ2·c⁻¹ = σ1: {}",
        equal(&a, &b.conjugated_by(&c)?)?
    );

    let r = is_conjugate(&a, &a.invert())?;
    println!("σ1 ~ σ1⁻¹: {}", r.conjugate);

    // a hidden conjugate in B_5
    let b = BraidWord::parse(5, "s1 s2 S3 s4 s4 s2 S1 s3")?;
    let c = BraidWord::parse(5, "s2 S4 s1 s3 s3 S2")?;
    let a = b.conjugated_by(&c)?;
    let r = is_conjugate(&a, &b)?;
    println!("{}", serde_json::to_string(&r).expect("serializable"));

    let uss = ultra_summit_set(&canonical_form(&b));
    println!("ultra summit set of {b}: {} element(s)", uss.len());
    for x in uss.iter().take(4) {
        println!("  inf {} sup {}: {}", x.inf(), x.sup(), x.to_word());
    }
    Ok(())
}
