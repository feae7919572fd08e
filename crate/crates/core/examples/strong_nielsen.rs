//! Deciding strong Nielsen equivalence of two periodic orbits relative to an
//! invariant set, in both algebraic formulations.
//!
//!     cargo run --example strong_nielsen

use snbraid::mixed;
use snbraid::sn::{sn_equivalent_rel_a, sn_equivalent_twisted, SearchBudget, SnInstance};
use snbraid::BraidWord;

fn show(label: &str, inst: &SnInstance) -> snbraid::Result<()> {
    let budget = SearchBudget::default();
    let a = sn_equivalent_rel_a(inst, budget)?;
    let t = sn_equivalent_twisted(inst, budget)?;
    println!("{label}");
    println!(
        "  rel A:   {}",
        serde_json::to_string(&a).expect("serializable")
    );
    println!(
        "  twisted: {}",
        serde_json::to_string(&t).expect("serializable")
    );
    for w in inst.period_warnings() {
        println!("  note: {w}");
    }
    Ok(())
}

fn main() -> snbraid::Result<()> {
    // one fixed puncture, orbit braids winding twice and four times
    show(
        "exponent sums differ",
        &SnInstance::parse(1, 1, "", "s1 s1", "s1 s1 s1 s1")?,
    )?;

    // a period-2 orbit around a pair of swapped punctures, and a copy of it
    // moved by the kernel element c = A_1 σ3: β_ox = φ(c)·β_oy·c⁻¹
    let (n, m) = (2, 2);
    let beta_a = BraidWord::parse(n, "s1")?;
    let oy = BraidWord::parse(n + m, "s3 s2 s2")?;
    let c = BraidWord::parse(n + m, "s2 s1 s1 S2 s3")?;
    let ox = mixed::act(&beta_a, &c, m)?
        .compose(&oy)?
        .compose(&c.invert())?
        .free_reduce();
    show(
        "moved by a kernel element",
        &SnInstance::new(n, m, beta_a, ox, oy)?,
    )?;

    // loops around different punctures: separated by linking when β_A is
    // pure, identified when β_A swaps the punctures
    show(
        "A_1 vs A_2 over σ1²",
        &SnInstance::parse(2, 1, "s1 s1", "s2 s1 s1 S2", "s2 s2")?,
    )?;
    show(
        "A_1 vs A_2 over σ1",
        &SnInstance::parse(2, 1, "s1", "s2 s1 s1 S2", "s2 s2")?,
    )?;
    Ok(())
}
