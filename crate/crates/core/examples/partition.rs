//! Sorting a list of orbits into strong Nielsen classes.
//!
//!     cargo run --example partition

use snbraid::mixed;
use snbraid::partition::partition_sn_classes;
use snbraid::sn::SearchBudget;
use snbraid::BraidWord;

fn main() -> snbraid::Result<()> {
    let (n, m) = (2, 1);
    let beta_a = BraidWord::parse(n, "s1 s1")?;
    let g = mixed::kernel_generators(n, m)?;
    let (a1, a2) = (&g[0], &g[1]);
    // twisted conjugates φ(c)·x·c⁻¹ are equivalent to x
    let copy = |x: &BraidWord, c: &BraidWord| -> snbraid::Result<BraidWord> {
        let phi = mixed::act(&beta_a, c, m)?;
        Ok(phi.compose(x)?.compose(&c.invert())?.free_reduce())
    };
    let orbits = vec![
        a1.clone(),
        a2.clone(),
        copy(a1, a2)?,
        a1.compose(a2)?,
        copy(a2, &a1.compose(a2)?)?,
        BraidWord::identity(3),
    ];
    for (i, o) in orbits.iter().enumerate() {
        println!("{i}: {o}");
    }
    let p = partition_sn_classes(n, m, &beta_a, &orbits, SearchBudget::default(), 2)?;
    println!(
        "{}",
        serde_json::to_string_pretty(&p).expect("serializable")
    );
    Ok(())
}
