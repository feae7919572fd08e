//! Mixed braids split as a lifted braid of the invariant set times a braid
//! of the orbit strands in the punctured disc.
//!
//!     cargo run --example mixed_decomposition

use snbraid::garside::equal;
use snbraid::mixed::{self, MixedBraid};
use snbraid::BraidWord;

fn main() -> snbraid::Result<()> {
    // n = 2 invariant strands, m = 1 orbit strand
    match MixedBraid::parse(2, 1, "s2") {
        Err(e) => println!("s2 is not mixed: {e}"),
        Ok(_) => unreachable!(),
    }

    let b = MixedBraid::parse(2, 1, "s2 s1 s2 S1 S2 s1 s2 s2")?;
    let d = mixed::decompose(&b);
    println!("b = {}", b.word());
    println!("  project(b) = {}", mixed::project(&b));
    println!("  base {} · kernel {}", d.base, d.kernel_part);
    let lifted = mixed::section(2, 1, &d.base)?.into_word();
    println!(
        "  reassembles: {}",
        equal(&lifted.compose(&d.kernel_part)?, b.word())?
    );

    println!("kernel generators of B_(2,2):");
    for g in mixed::kernel_generators(2, 2)? {
        println!("  {g}");
    }
    let loop_around_1 = BraidWord::parse(3, "s2 s1 s1 S2")?;
    println!(
        "A_1 in kernel: {}, s1 s1 in kernel: {}",
        mixed::in_kernel(2, 1, &loop_around_1)?,
        mixed::in_kernel(2, 1, &BraidWord::parse(3, "s1 s1")?)?
    );
    Ok(())
}
