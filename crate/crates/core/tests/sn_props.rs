mod common;

use common::random_sn_instance;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use snbraid::garside::equal;
use snbraid::mixed;
use snbraid::sn::{
    braid_type_equal, certificate_stability, sn_equivalent_rel_a, sn_equivalent_twisted,
    SearchBudget, SnInstance, SnStatus,
};

const SMALL: SearchBudget = SearchBudget {
    max_length: 4,
    max_states: 20_000,
};

#[test]
fn formulations_agree_and_constructed_pairs_resolve() {
    let mut rng = StdRng::seed_from_u64(21);
    for i in 0..60 {
        let (n, m) = (rng.gen_range(0..=3), rng.gen_range(1..=2));
        let (inst, c) = random_sn_instance(&mut rng, n, m, 6, 3, i % 2 == 0);
        let a = sn_equivalent_rel_a(&inst, SMALL).unwrap();
        let b = sn_equivalent_twisted(&inst, SMALL).unwrap();
        assert_eq!(a.status, b.status, "{inst:?}");
        assert_eq!(a.budget, b.budget);
        if c.is_some() {
            assert_eq!(a.status, SnStatus::Equivalent, "{inst:?}");
        }
        if let Some(w) = &a.witness {
            let bx = inst.beta_x().into_word();
            let by = inst.beta_y().into_word();
            assert!(mixed::in_kernel(n, m, w).unwrap());
            assert!(equal(&bx, &by.conjugated_by(w).unwrap()).unwrap());
        }
    }
}

#[test]
fn reflexive_and_symmetric() {
    let mut rng = StdRng::seed_from_u64(22);
    for i in 0..40 {
        let (n, m) = (rng.gen_range(0..=3), rng.gen_range(1..=2));
        let (inst, _) = random_sn_instance(&mut rng, n, m, 6, 3, i % 3 == 0);
        let same = SnInstance::new(
            n,
            m,
            inst.beta_a().clone(),
            inst.beta_ox().clone(),
            inst.beta_ox().clone(),
        )
        .unwrap();
        assert_eq!(
            sn_equivalent_rel_a(&same, SMALL).unwrap().status,
            SnStatus::Equivalent
        );
        let xy = sn_equivalent_rel_a(&inst, SMALL).unwrap().status;
        let yx = sn_equivalent_rel_a(&inst.swapped(), SMALL).unwrap().status;
        if xy != SnStatus::Inconclusive && yx != SnStatus::Inconclusive {
            assert_eq!(xy, yx, "{inst:?}");
        }
    }
}

#[test]
fn larger_budgets_only_resolve_inconclusive() {
    let mut rng = StdRng::seed_from_u64(23);
    let tiny = SearchBudget {
        max_length: 1,
        max_states: 50,
    };
    for i in 0..40 {
        let (n, m) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
        let (inst, _) = random_sn_instance(&mut rng, n, m, 5, 3, i % 2 == 0);
        let small = sn_equivalent_rel_a(&inst, tiny).unwrap().status;
        let large = sn_equivalent_rel_a(&inst, SMALL).unwrap().status;
        if small != SnStatus::Inconclusive {
            assert_eq!(small, large, "{inst:?}");
        }
    }
}

#[test]
fn empty_invariant_set_is_braid_type() {
    let mut rng = StdRng::seed_from_u64(24);
    for i in 0..60 {
        let m = rng.gen_range(1..=4);
        let (inst, _) = random_sn_instance(&mut rng, 0, m, 8, 4, i % 2 == 0);
        let v = sn_equivalent_rel_a(&inst, SearchBudget::default()).unwrap();
        let bt = braid_type_equal(inst.beta_ox(), inst.beta_oy()).unwrap();
        assert_ne!(v.status, SnStatus::Inconclusive);
        assert_eq!(v.status == SnStatus::Equivalent, bt.conjugate);
    }
}

#[test]
fn certificates_are_stable() {
    let mut rng = StdRng::seed_from_u64(25);
    let mut seen = 0;
    for _ in 0..60 {
        let (n, m) = (rng.gen_range(1..=3), rng.gen_range(1..=2));
        let (inst, _) = random_sn_instance(&mut rng, n, m, 6, 0, false);
        let v = sn_equivalent_rel_a(&inst, SMALL).unwrap();
        if let Some(cert) = v.certificate {
            seen += 1;
            assert_eq!(
                certificate_stability(&inst, &cert, 30, 5, &mut rng).unwrap(),
                30,
                "{cert:?}"
            );
        }
    }
    assert!(seen > 20);
}

#[test]
fn half_twist_of_the_invariant_set_swaps_the_loops() {
    // over β_A = σ1, taking c = A_2 gives φ(A_2)·A_2·A_2⁻¹ = φ(A_2) = A_1, so
    // the loops around the two punctures are equivalent; over a pure β_A
    // they are separated by linking with the punctures
    let g = mixed::kernel_generators(2, 1).unwrap();
    let word = |s: &str| snbraid::BraidWord::parse(2, s).unwrap();
    let swap = SnInstance::new(2, 1, word("s1"), g[0].clone(), g[1].clone()).unwrap();
    for v in [
        sn_equivalent_rel_a(&swap, SearchBudget::default()).unwrap(),
        sn_equivalent_twisted(&swap, SearchBudget::default()).unwrap(),
    ] {
        assert_eq!(v.status, SnStatus::Equivalent);
    }
    let phi = mixed::act(&word("s1"), &g[1], 1).unwrap();
    assert!(equal(&phi, &g[0]).unwrap());
    for pure in ["", "s1 s1", "S1 S1 S1 S1"] {
        let inst = SnInstance::new(2, 1, word(pure), g[0].clone(), g[1].clone()).unwrap();
        let v = sn_equivalent_twisted(&inst, SearchBudget::default()).unwrap();
        assert_eq!(v.status, SnStatus::NotEquivalent);
        assert_eq!(v.certificate.unwrap().invariant, "linking_matrix");
    }
}
