//! The action of B_n on the kernel, φ_β(γ) = ι(β)⁻¹ γ ι(β).
//!
//!     cargo run --example twisted_action

use snbraid::garside::equal;
use snbraid::mixed;
use snbraid::BraidWord;

fn main() -> snbraid::Result<()> {
    let sigma1 = BraidWord::parse(2, "s1")?;
    let a2 = BraidWord::parse(3, "s2 s2")?;
    let phi = mixed::act(&sigma1, &a2, 1)?;
    let a1 = BraidWord::parse(3, "s2 s1 s1 S2")?;
    println!(
        "φ_σ1(A_2) = {phi}; equals A_1 = {a1}: {}",
        equal(&phi, &a1)?
    );

    // composition order: φ_{β1β2} = φ_{β2} ∘ φ_{β1}
    let b1 = BraidWord::parse(2, "s1")?;
    let b2 = BraidWord::parse(2, "s1 s1 s1")?;
    let gamma = BraidWord::parse(3, "s2 s2 s2 s1 s1 S2")?;
    let lhs = mixed::act(&b1.compose(&b2)?, &gamma, 1)?;
    let rhs = mixed::act(&b2, &mixed::act(&b1, &gamma, 1)?, 1)?;
    println!("φ_(β1β2)(γ) = φ_β2(φ_β1(γ)): {}", equal(&lhs, &rhs)?);

    // the full twist of the invariant set acts by conjugation with a loop
    let twist = BraidWord::parse(2, "s1 s1")?;
    println!("φ_(σ1²)(A_2) = {}", mixed::act(&twist, &a2, 1)?);
    Ok(())
}
