//! Left canonical forms decide equality of braid words.
//!
//!     cargo run --example word_problem

use rand::rngs::StdRng;
use rand::SeedableRng;
use snbraid::garside::{canonical_form, delta, equal};
use snbraid::random::{random_rewrite, random_word_of_len};
use snbraid::BraidWord;

fn main() -> snbraid::Result<()> {
    let half_twist = BraidWord::parse(3, "s1 s2 s1")?;
    let nf = canonical_form(&half_twist);
    println!("{half_twist} = Δ^{} · {:?}", nf.delta_power(), nf.factors());
    println!("Δ_3 spelled out: {}", delta(3)?);

    // the braid relation, read both ways
    let other = BraidWord::parse(3, "s2 s1 s2")?;
    println!("s1 s2 s1 == s2 s1 s2: {}", equal(&half_twist, &other)?);

    // a negative letter forces a Δ⁻¹
    let w = BraidWord::parse(4, "s1 S3 s2 s2 S1")?;
    let nf = canonical_form(&w);
    println!(
        "{w}: inf {}, sup {}, back to a word: {}",
        nf.inf(),
        nf.sup(),
        nf.to_word()
    );
    println!("{}", serde_json::to_string(&nf).expect("serializable"));

    // scrambling a word with relation moves never changes its normal form
    let mut rng = StdRng::seed_from_u64(3);
    let w = random_word_of_len(&mut rng, 5, 16);
    let mut v = w.clone();
    for _ in 0..50 {
        v = random_rewrite(&mut rng, &v);
    }
    println!(
        "{w}\n  rewritten to {v}\n  same normal form: {}",
        canonical_form(&w) == canonical_form(&v)
    );
    Ok(())
}
