//! Random instance builders shared by the integration tests.
#![allow(dead_code)]

use rand::Rng;
use snbraid::mixed::{self, MixedBraid};
use snbraid::random::{random_product, random_word};
use snbraid::BraidWord;

/// Random element of `B_{n,m}`: a lifted `B_n` word times a kernel word.
pub fn random_mixed<R: Rng>(rng: &mut R, n: usize, m: usize, len: usize) -> MixedBraid {
    let base = random_word(rng, n.max(1), len);
    let gens = mixed::kernel_generators(n, m).unwrap();
    let kernel = random_product(rng, n + m, &gens, len);
    let w = mixed::section(n, m, &base)
        .unwrap()
        .into_word()
        .compose(&kernel)
        .unwrap();
    // scramble with a conjugation by a lifted braid so words do not always
    // start with the base part
    let c = mixed::section(n, m, &random_word(rng, n.max(1), 3))
        .unwrap()
        .into_word();
    MixedBraid::validate(n, m, w.conjugated_by(&c).unwrap()).unwrap()
}

pub fn random_kernel<R: Rng>(rng: &mut R, n: usize, m: usize, gens_len: usize) -> BraidWord {
    let gens = mixed::kernel_generators(n, m).unwrap();
    random_product(rng, n + m, &gens, gens_len)
}

/// Projection computed by deleting the orbit strands one at a time, the
/// highest starting position first, each deletion re-reading the word.
pub fn project_one_at_a_time(b: &MixedBraid) -> BraidWord {
    let (n, m) = b.blocks();
    let mut strands = n + m;
    let mut letters = b.word().letters().to_vec();
    for start in (n..n + m).rev() {
        let mut pos = start;
        let mut kept = Vec::new();
        for &l in &letters {
            let k = l.unsigned_abs() as usize - 1;
            if k == pos {
                pos += 1;
            } else if k + 1 == pos {
                pos -= 1;
            } else if k > pos {
                kept.push(l.signum() * (l.abs() - 1));
            } else {
                kept.push(l);
            }
        }
        letters = kept;
        strands -= 1;
    }
    BraidWord::new(strands.max(1), letters).unwrap()
}

/// An instance whose orbits are constructed equivalent through the kernel
/// conjugator `c` (returned), or two independent random kernel words.
pub fn random_sn_instance<R: Rng>(
    rng: &mut R,
    n: usize,
    m: usize,
    len: usize,
    conj_len: usize,
    equivalent: bool,
) -> (snbraid::sn::SnInstance, Option<BraidWord>) {
    let beta_a = random_word(rng, n.max(1), len);
    let oy = random_kernel(rng, n, m, len);
    let (ox, c) = if equivalent {
        let c = random_kernel(rng, n, m, conj_len);
        let phi_c = mixed::act(&beta_a, &c, m).unwrap();
        let ox = phi_c
            .compose(&oy)
            .unwrap()
            .compose(&c.invert())
            .unwrap()
            .free_reduce();
        (ox, Some(c))
    } else {
        (random_kernel(rng, n, m, len), None)
    };
    (
        snbraid::sn::SnInstance::new(n, m, beta_a, ox, oy).unwrap(),
        c,
    )
}
