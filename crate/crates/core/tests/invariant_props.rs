mod common;

use common::{random_kernel, random_mixed};
use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use snbraid::garside::full_twist;
use snbraid::invariants::{self, Laurent, LaurentMatrix};
use snbraid::mixed::MixedBraid;
use snbraid::random::random_word;
use snbraid::BraidWord;

#[test]
fn invariants_survive_kernel_conjugation() {
    let mut rng = StdRng::seed_from_u64(31);
    for _ in 0..200 {
        let (n, m) = (rng.gen_range(0..=3), rng.gen_range(1..=3));
        let b = random_mixed(&mut rng, n, m, 6);
        let c = random_kernel(&mut rng, n, m, 5);
        let conj = MixedBraid::validate(n, m, b.word().conjugated_by(&c).unwrap()).unwrap();
        assert_eq!(
            invariants::report(&b),
            invariants::report(&conj),
            "{b:?} by {c}"
        );
    }
}

#[test]
fn burau_is_multiplicative() {
    let mut rng = StdRng::seed_from_u64(32);
    for _ in 0..100 {
        let n = rng.gen_range(2..=5);
        let a = random_word(&mut rng, n, 8);
        let b = random_word(&mut rng, n, 8);
        let ab = invariants::burau_matrix(&a.compose(&b).unwrap());
        assert_eq!(
            ab,
            invariants::burau_matrix(&a).mul(&invariants::burau_matrix(&b))
        );
        let id = invariants::burau_matrix(&a.compose(&a.invert()).unwrap());
        assert_eq!(id, LaurentMatrix::identity(n));
    }
}

/// Coefficients (highest degree first) of `∏ (x^ℓ − 1)` over cycle lengths.
fn cycle_polynomial(lengths: &[usize]) -> Vec<i64> {
    let mut p = vec![1i64];
    for &l in lengths {
        let mut next = vec![0i64; p.len() + l];
        for (i, &c) in p.iter().enumerate() {
            next[i] += c;
            next[i + l] -= c;
        }
        p = next;
    }
    p
}

#[test]
fn charpoly_at_one_is_the_permutation_charpoly() {
    let mut rng = StdRng::seed_from_u64(33);
    for _ in 0..100 {
        let n = rng.gen_range(1..=6);
        let w = random_word(&mut rng, n, 12);
        let lengths: Vec<usize> = w.permutation().cycle_type();
        let expected: Vec<BigInt> = cycle_polynomial(&lengths)
            .into_iter()
            .map(BigInt::from)
            .collect();
        let got: Vec<BigInt> = invariants::burau_charpoly(&w)
            .coefficients
            .iter()
            .map(Laurent::eval_at_one)
            .collect();
        assert_eq!(got, expected, "{w}");
    }
}

#[test]
fn full_twist_adds_products_of_cycle_lengths() {
    let mut rng = StdRng::seed_from_u64(34);
    for _ in 0..100 {
        let n = rng.gen_range(2..=6);
        let w = random_word(&mut rng, n, 12);
        let before = invariants::closure_linking(&w);
        let after = invariants::closure_linking(&w.compose(&full_twist(n).unwrap()).unwrap());
        assert_eq!(before.components, after.components);
        let comps = &before.components;
        for i in 0..comps.len() {
            for j in 0..comps.len() {
                let bump = if i == j {
                    0
                } else {
                    (comps[i].len() * comps[j].len()) as i64
                };
                assert_eq!(after.matrix[i][j], before.matrix[i][j] + bump);
            }
        }
    }
}

#[test]
fn hopf_link_and_loop_linking() {
    let hopf = invariants::closure_linking(&BraidWord::parse(2, "s1 s1").unwrap());
    assert_eq!(hopf.matrix, vec![vec![0, 1], vec![1, 0]]);
    let trivial = MixedBraid::parse(2, 2, "").unwrap();
    assert!(invariants::linking_matrix(&trivial)
        .iter()
        .all(|e| e.to_string().ends_with("=0")));
}
