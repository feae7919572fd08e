//! Seeded generators for random braid words and for random rewrites that
//! preserve the group element. Used by the self-check harness and the tests.

use rand::Rng;

use crate::word::BraidWord;

/// A word of uniformly random length in `0..=max_len` over `σ_1^{±1}, …,
/// σ_{n−1}^{±1}`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands.max(1));
    }
    let len = rng.gen_range(0..=max_len);
    random_word_of_len(rng, strands, len)
}

pub fn random_word_of_len<R: Rng + ?Sized>(rng: &mut R, strands: usize, len: usize) -> BraidWord {
    if strands < 2 {
        return BraidWord::identity(strands.max(1));
    }
    let letters = (0..len)
        .map(|_| {
            let k = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                k
            } else {
                -k
            }
        })
        .collect();
    BraidWord::from_raw(strands, letters)
}

/// A product of `0..=max_len` randomly chosen entries of `generators` or
/// their inverses.
pub fn random_product<R: Rng + ?Sized>(
    rng: &mut R,
    strands: usize,
    generators: &[BraidWord],
    max_len: usize,
) -> BraidWord {
    let mut letters = Vec::new();
    if !generators.is_empty() {
        for _ in 0..rng.gen_range(0..=max_len) {
            let g = &generators[rng.gen_range(0..generators.len())];
            if rng.gen_bool(0.5) {
                letters.extend_from_slice(g.letters());
            } else {
                letters.extend(g.letters().iter().rev().map(|l| -l));
            }
        }
    }
    BraidWord::from_raw(strands, letters)
}

/// Applies one randomly chosen defining-relation move. Commutations and braid
/// relations are tried first; a cancelling pair is inserted if none applies.
pub fn random_rewrite<R: Rng + ?Sized>(rng: &mut R, word: &BraidWord) -> BraidWord {
    let n = word.strands();
    if n < 2 {
        return word.clone();
    }
    let mut l = word.letters().to_vec();
    for _ in 0..16 {
        let move_kind = rng.gen_range(0..4);
        match move_kind {
            0 if l.len() >= 2 => {
                let i = rng.gen_range(0..l.len() - 1);
                if (l[i].abs() - l[i + 1].abs()).abs() > 1 {
                    l.swap(i, i + 1);
                    return BraidWord::from_raw(n, l);
                }
            }
            1 if l.len() >= 3 => {
                let i = rng.gen_range(0..l.len() - 2);
                let (a, b, c) = (l[i], l[i + 1], l[i + 2]);
                let same_sign = a.signum() == b.signum() && b.signum() == c.signum();
                if same_sign && a == c && (a.abs() - b.abs()).abs() == 1 {
                    l[i] = b;
                    l[i + 1] = a;
                    l[i + 2] = b;
                    return BraidWord::from_raw(n, l);
                }
            }
            2 if l.len() >= 2 => {
                let i = rng.gen_range(0..l.len() - 1);
                if l[i] == -l[i + 1] {
                    l.drain(i..i + 2);
                    return BraidWord::from_raw(n, l);
                }
            }
            _ => {}
        }
    }
    let i = rng.gen_range(0..=l.len());
    let k = rng.gen_range(1..n as i32);
    let k = if rng.gen_bool(0.5) { k } else { -k };
    l.splice(i..i, [k, -k]);
    BraidWord::from_raw(n, l)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn rewrites_keep_permutation_and_exponent_sum() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.gen_range(2..=8);
            let w = random_word(&mut rng, n, 40);
            let mut v = w.clone();
            for _ in 0..20 {
                v = random_rewrite(&mut rng, &v);
                assert_eq!(v.permutation(), w.permutation());
                assert_eq!(v.exponent_sum(), w.exponent_sum());
            }
        }
    }

    #[test]
    fn words_respect_strand_bounds() {
        let mut rng = StdRng::seed_from_u64(1);
        for n in 1..6 {
            let w = random_word(&mut rng, n, 30);
            assert!(BraidWord::new(n, w.letters().to_vec()).is_ok());
        }
    }
}
