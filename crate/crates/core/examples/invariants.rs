//! Conjugacy invariants used as non-equivalence certificates.
//!
//!     cargo run --example invariants

use snbraid::invariants::{self, burau_charpoly, closure_linking};
use snbraid::mixed::MixedBraid;
use snbraid::BraidWord;

fn main() -> snbraid::Result<()> {
    let hopf = BraidWord::parse(2, "s1 s1")?;
    println!("closure of σ1²: lk = {:?}", closure_linking(&hopf).matrix);

    let trefoil = BraidWord::parse(2, "s1 s1 s1")?;
    println!("Burau charpoly of σ1³: {}", burau_charpoly(&trefoil));

    for (n, m, w) in [
        (2, 1, "s2 s1 s1 S2"),
        (2, 1, "s1 s2 s2"),
        (0, 3, "s1 s2"),
        (1, 2, "s1 s1 s2"),
    ] {
        let b = MixedBraid::parse(n, m, w)?;
        println!("(n={n}, m={m}) {w}");
        for r in invariants::report(&b) {
            println!("  {}: {}", r.name, r.value);
        }
    }
    Ok(())
}
