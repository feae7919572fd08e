//! Fixed points (period one): the kernel is the free group on the loops
//! around the punctures.
//!
//!     cargo run --example fixed_points

use snbraid::mixed;
use snbraid::sn::{fixed_point_case, SearchBudget};
use snbraid::BraidWord;

fn main() -> snbraid::Result<()> {
    let n = 3;
    let loops = mixed::kernel_generators(n, 1)?;
    for (i, g) in loops.iter().enumerate() {
        println!("A_{} = {g}", i + 1);
    }
    // β_A cycles the three punctures
    let beta_a = BraidWord::parse(n, "s1 s2")?;
    let budget = SearchBudget::default();
    for (i, j) in [(0, 0), (0, 1), (0, 2), (1, 2)] {
        let v = fixed_point_case(n, &beta_a, &loops[i], &loops[j], budget)?;
        println!(
            "A_{} vs A_{}: {}",
            i + 1,
            j + 1,
            serde_json::to_string(&v).expect("serializable")
        );
    }
    let u = loops[0].compose(&loops[1])?;
    let v = fixed_point_case(n, &beta_a, &u, &loops[2], budget)?;
    println!("A_1 A_2 vs A_3: {:?}", v.status);
    Ok(())
}
