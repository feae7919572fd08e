//! Classical Garside structure on `B_n`: permutation braids, left normal
//! forms, and the summit-set conjugacy machinery.

pub mod conjugacy;
pub mod normal_form;
pub mod simple;

pub use conjugacy::{
    conjugate_mod_full_twist, is_conjugate, super_summit_set, ultra_summit_set, ConjugacyResult,
    SummitSet, TwistConjugacy,
};
pub use normal_form::{canonical_form, delta, equal, full_twist, CanonicalForm};
pub use simple::PermutationBraid;
