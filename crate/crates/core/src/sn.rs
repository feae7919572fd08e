//! Strong Nielsen equivalence of periodic orbits relative to an invariant
//! set, reduced to conjugacy questions in the mixed braid group.
//!
//! An instance fixes the braid `β_A ∈ B_n` of the invariant set and the
//! kernel braids `β_ox`, `β_oy` of two period-`m` orbits, so that
//! `β_x = ι(β_A)·β_ox` and `β_y = ι(β_A)·β_oy`. The orbits are equivalent iff
//! `β_x = c·β_y·c⁻¹` for a kernel element `c`, equivalently iff
//! `β_ox = φ_{β_A}(c)·β_oy·c⁻¹`.
//!
//! Both formulations screen with cheap invariants and test full conjugacy in
//! `B_{n+m}` before a bounded breadth-first search over kernel conjugators.
//! The search is the only incomplete stage, so verdicts are three-valued.

use rand::Rng;
use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::garside::{equal, is_conjugate, CanonicalForm, ConjugacyResult};
use crate::invariants::{self, InvariantValue};
use crate::mixed::{self, MixedBraid};
use crate::random::random_product;
use crate::word::BraidWord;

/// Limits for the kernel conjugator search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximum conjugator length, counted in kernel generators.
    pub max_length: usize,
    /// Maximum number of distinct conjugates enumerated.
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        Self {
            max_length: 8,
            max_states: 200_000,
        }
    }
}

/// Two periodic orbits over a common invariant set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnInstance {
    n: usize,
    m: usize,
    beta_a: BraidWord,
    beta_ox: BraidWord,
    beta_oy: BraidWord,
}

impl SnInstance {
    /// `beta_a` lives on `n` strands (one strand standing in for the empty
    /// braid when `n = 0`); the orbit braids live on `n + m` strands and must
    /// lie in the kernel.
    pub fn new(
        n: usize,
        m: usize,
        beta_a: BraidWord,
        beta_ox: BraidWord,
        beta_oy: BraidWord,
    ) -> Result<Self> {
        if m == 0 {
            return Err(BraidError::Invalid("an orbit needs period m ≥ 1".into()));
        }
        if beta_a.strands() != n.max(1) || (n == 0 && !beta_a.is_empty()) {
            return Err(BraidError::StrandMismatch {
                left: beta_a.strands(),
                right: n,
            });
        }
        mixed::require_kernel(n, m, &beta_ox)?;
        mixed::require_kernel(n, m, &beta_oy)?;
        Ok(Self {
            n,
            m,
            beta_a,
            beta_ox,
            beta_oy,
        })
    }

    pub fn parse(n: usize, m: usize, beta_a: &str, ox: &str, oy: &str) -> Result<Self> {
        Self::new(
            n,
            m,
            BraidWord::parse(n.max(1), beta_a)?,
            BraidWord::parse(n + m, ox)?,
            BraidWord::parse(n + m, oy)?,
        )
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn beta_a(&self) -> &BraidWord {
        &self.beta_a
    }

    pub fn beta_ox(&self) -> &BraidWord {
        &self.beta_ox
    }

    pub fn beta_oy(&self) -> &BraidWord {
        &self.beta_oy
    }

    fn lifted_a(&self) -> BraidWord {
        mixed::section(self.n, self.m, &self.beta_a)
            .expect("validated on construction")
            .into_word()
    }

    /// `ι(β_A) · β_ox`.
    pub fn beta_x(&self) -> MixedBraid {
        let w = self
            .lifted_a()
            .compose(&self.beta_ox)
            .expect("same strands");
        MixedBraid::validate(self.n, self.m, w).expect("kernel times section is mixed")
    }

    /// `ι(β_A) · β_oy`.
    pub fn beta_y(&self) -> MixedBraid {
        let w = self
            .lifted_a()
            .compose(&self.beta_oy)
            .expect("same strands");
        MixedBraid::validate(self.n, self.m, w).expect("kernel times section is mixed")
    }

    /// The instance with the two orbits exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            beta_ox: self.beta_oy.clone(),
            beta_oy: self.beta_ox.clone(),
            ..self.clone()
        }
    }

    /// Notes for orbit braids whose permutation is not a single `m`-cycle on
    /// the orbit block. The algebra does not need it; a genuine period-`m`
    /// orbit has it.
    pub fn period_warnings(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (label, b) in [("x", self.beta_x()), ("y", self.beta_y())] {
            let t = invariants::cycle_type(&b);
            if t.orbit != [self.m] {
                out.push(format!(
                    "orbit {label}: permutation on the orbit block has cycle type {:?}, not a single {}-cycle",
                    t.orbit, self.m
                ));
            }
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SnStatus {
    Equivalent,
    NotEquivalent,
    Inconclusive,
}

/// A machine-checked reason for non-equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub invariant: String,
    pub lhs: serde_json::Value,
    pub rhs: serde_json::Value,
}

/// Name used for certificates coming from the full conjugacy test.
pub const FULL_CONJUGACY: &str = "full_conjugacy";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BudgetReport {
    pub max_len: usize,
    pub states: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SnVerdict {
    pub status: SnStatus,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BraidWord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub certificate: Option<Certificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub budget: Option<BudgetReport>,
}

impl SnVerdict {
    fn equivalent(witness: BraidWord) -> Self {
        Self {
            status: SnStatus::Equivalent,
            witness: Some(witness),
            certificate: None,
            budget: None,
        }
    }

    fn not_equivalent(certificate: Certificate) -> Self {
        Self {
            status: SnStatus::NotEquivalent,
            witness: None,
            certificate: Some(certificate),
            budget: None,
        }
    }

    fn inconclusive(report: BudgetReport) -> Self {
        Self {
            status: SnStatus::Inconclusive,
            witness: None,
            certificate: None,
            budget: Some(report),
        }
    }
}

/// Braid-type equality of two period-`m` orbits with no invariant set:
/// plain conjugacy in `B_m`.
pub fn braid_type_equal(a: &BraidWord, b: &BraidWord) -> Result<ConjugacyResult> {
    is_conjugate(a, b)
}

/// Invariants checked before any search, in order.
pub const SCREENING_INVARIANTS: [&str; 4] = [
    "exponent_sum",
    "cycle_type",
    "linking_matrix",
    "burau_charpoly",
];

/// Value of a named screening invariant on a mixed braid `ι(β_A)·γ`.
/// `exponent_sum` is taken on the kernel part `γ`.
pub fn invariant_of(name: &str, beta_a: &BraidWord, b: &MixedBraid) -> Result<InvariantValue> {
    Ok(match name {
        "exponent_sum" => InvariantValue::Integer(b.word().exponent_sum() - beta_a.exponent_sum()),
        "cycle_type" => InvariantValue::Encoded(invariants::cycle_type(b).to_string()),
        "linking_matrix" => {
            InvariantValue::Encoded(invariants::encode_linking(&invariants::linking_matrix(b)))
        }
        "burau_charpoly" => {
            InvariantValue::Encoded(invariants::burau_charpoly(b.word()).to_string())
        }
        other => return Err(BraidError::Invalid(format!("unknown invariant `{other}`"))),
    })
}

fn screen(inst: &SnInstance) -> Result<Option<Certificate>> {
    let (bx, by) = (inst.beta_x(), inst.beta_y());
    for name in SCREENING_INVARIANTS {
        let lhs = invariant_of(name, &inst.beta_a, &bx)?;
        let rhs = invariant_of(name, &inst.beta_a, &by)?;
        if lhs != rhs {
            return Ok(Some(Certificate {
                invariant: name.to_string(),
                lhs: lhs.to_json(),
                rhs: rhs.to_json(),
            }));
        }
    }
    Ok(None)
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Formulation {
    /// states are `c·β_y·c⁻¹`, target `β_x`
    MixedConjugacy,
    /// states are `φ_{β_A}(c)·β_oy·c⁻¹`, target `β_ox`
    Twisted,
}

/// Checks a candidate witness against the requested formulation and kernel
/// membership.
fn witness_verifies(inst: &SnInstance, c: &BraidWord, form: Formulation) -> Result<bool> {
    if !mixed::in_kernel(inst.n, inst.m, c)? {
        return Ok(false);
    }
    match form {
        Formulation::MixedConjugacy => {
            let by = inst.beta_y().into_word();
            equal(inst.beta_x().word(), &by.conjugated_by(c)?)
        }
        Formulation::Twisted => {
            let phi_c = mixed::act_unchecked(inst.n, inst.m, &inst.beta_a, c)?;
            let rhs = phi_c.compose(&inst.beta_oy)?.compose(&c.invert())?;
            equal(&inst.beta_ox, &rhs)
        }
    }
}

fn decide(inst: &SnInstance, budget: SearchBudget, form: Formulation) -> Result<SnVerdict> {
    if let Some(cert) = screen(inst)? {
        return Ok(SnVerdict::not_equivalent(cert));
    }
    let (bx, by) = (inst.beta_x(), inst.beta_y());
    let full = is_conjugate(bx.word(), by.word())?;
    let Some(c) = full.witness else {
        return Ok(SnVerdict::not_equivalent(Certificate {
            invariant: FULL_CONJUGACY.to_string(),
            lhs: serde_json::Value::from(format!("not conjugate in B_{}", inst.n + inst.m)),
            rhs: serde_json::Value::from(format!("{} vs {}", bx.word(), by.word())),
        }));
    };
    // the unrestricted conjugator may already lie in the kernel (always so
    // when n = 0)
    if witness_verifies(inst, &c, form)? {
        return Ok(SnVerdict::equivalent(c));
    }
    kernel_search(inst, budget, form)
}

/// Breadth-first search over kernel conjugators `c`, extended on the left by
/// one generator (or inverse) at a time, deduplicated by the canonical form
/// of the resulting conjugate.
fn kernel_search(inst: &SnInstance, budget: SearchBudget, form: Formulation) -> Result<SnVerdict> {
    let (n, m) = (inst.n, inst.m);
    let gens = mixed::kernel_generators(n, m)?;
    let mut moves: Vec<BraidWord> = Vec::with_capacity(2 * gens.len());
    for g in &gens {
        moves.push(g.clone());
        moves.push(g.invert());
    }
    // a state s steps to left(g)·s·right(g)
    let (left, right): (Vec<CanonicalForm>, Vec<CanonicalForm>) = moves
        .iter()
        .map(|g| -> Result<_> {
            let l = match form {
                Formulation::MixedConjugacy => g.clone(),
                Formulation::Twisted => mixed::act_unchecked(n, m, &inst.beta_a, g)?,
            };
            Ok((
                CanonicalForm::from_word(&l),
                CanonicalForm::from_word(&g.invert()),
            ))
        })
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .unzip();
    let (start, target) = match form {
        Formulation::MixedConjugacy => (
            CanonicalForm::from_word(inst.beta_y().word()),
            CanonicalForm::from_word(inst.beta_x().word()),
        ),
        Formulation::Twisted => (
            CanonicalForm::from_word(&inst.beta_oy),
            CanonicalForm::from_word(&inst.beta_ox),
        ),
    };

    let mut seen = std::collections::HashMap::from([(start.clone(), 0usize)]);
    let mut parent: Vec<Option<(usize, usize)>> = vec![None];
    let mut states = vec![start];
    let mut level = vec![0usize];
    let mut depth = 0;
    let mut found = None;
    'search: while depth < budget.max_length && !level.is_empty() {
        depth += 1;
        let mut next = Vec::new();
        for &i in &level {
            for (mv, (l, r)) in left.iter().zip(&right).enumerate() {
                if states.len() >= budget.max_states {
                    break 'search;
                }
                let s = l.product(&states[i])?.product(r)?;
                if seen.contains_key(&s) {
                    continue;
                }
                let j = states.len();
                seen.insert(s.clone(), j);
                parent.push(Some((i, mv)));
                let hit = s == target;
                states.push(s);
                if hit {
                    found = Some(j);
                    break 'search;
                }
                next.push(j);
            }
        }
        level = next;
    }

    let Some(mut j) = found else {
        return Ok(SnVerdict::inconclusive(BudgetReport {
            max_len: depth,
            states: states.len(),
        }));
    };
    // c = g_k ⋯ g_1 where g_1 was applied first
    let mut letters = Vec::new();
    while let Some((p, mv)) = parent[j] {
        letters.extend_from_slice(moves[mv].letters());
        j = p;
    }
    let c = BraidWord::new(n + m, letters)?.free_reduce();
    if !witness_verifies(inst, &c, form)? {
        return Err(BraidError::Invalid(format!(
            "kernel search produced a bad witness {c}"
        )));
    }
    Ok(SnVerdict::equivalent(c))
}

/// Equivalence relative to the invariant set, as kernel-restricted conjugacy
/// of `β_x` and `β_y` in `B_{n,m}`.
pub fn sn_equivalent_rel_a(inst: &SnInstance, budget: SearchBudget) -> Result<SnVerdict> {
    decide(inst, budget, Formulation::MixedConjugacy)
}

/// The same question as twisted conjugacy of the kernel braids under
/// `φ_{β_A}`.
pub fn sn_equivalent_twisted(inst: &SnInstance, budget: SearchBudget) -> Result<SnVerdict> {
    decide(inst, budget, Formulation::Twisted)
}

/// Fixed points (`m = 1`): the kernel is free on the loop generators and the
/// question becomes conjugacy in `B_{n,1}` by an element of that free group.
pub fn fixed_point_case(
    n: usize,
    beta_a: &BraidWord,
    u: &BraidWord,
    v: &BraidWord,
    budget: SearchBudget,
) -> Result<SnVerdict> {
    let inst = SnInstance::new(n, 1, beta_a.clone(), u.clone(), v.clone())?;
    sn_equivalent_rel_a(&inst, budget)
}

/// Re-checks a certificate by evaluating its invariant on `trials` random
/// kernel conjugates of `β_y` (conjugators of up to `max_len` generators).
/// Returns the number of trials on which the value stayed equal to the
/// certificate's right-hand side (for invariant certificates) or on which the
/// conjugate stayed non-conjugate to `β_x` (for full-conjugacy certificates).
pub fn certificate_stability<R: Rng + ?Sized>(
    inst: &SnInstance,
    cert: &Certificate,
    trials: usize,
    max_len: usize,
    rng: &mut R,
) -> Result<usize> {
    let (n, m) = (inst.n, inst.m);
    let gens = mixed::kernel_generators(n, m)?;
    let by = inst.beta_y().into_word();
    let bx = inst.beta_x().into_word();
    let mut stable = 0;
    for _ in 0..trials {
        let c = random_product(rng, n + m, &gens, max_len);
        let conj = MixedBraid::validate(n, m, by.conjugated_by(&c)?)?;
        let ok = if cert.invariant == FULL_CONJUGACY {
            !is_conjugate(&bx, conj.word())?.conjugate
        } else {
            invariant_of(&cert.invariant, &inst.beta_a, &conj)?.to_json() == cert.rhs
        };
        if ok {
            stable += 1;
        }
    }
    Ok(stable)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn identical_orbits() {
        let inst = SnInstance::parse(2, 1, "s1", "s2 s1 s1 S2", "s2 s1 s1 S2").unwrap();
        let v = sn_equivalent_rel_a(&inst, SearchBudget::default()).unwrap();
        assert_eq!(v.status, SnStatus::Equivalent);
        assert!(v.witness.unwrap().is_empty());
    }

    #[test]
    fn exponent_sum_certificate() {
        let inst = SnInstance::parse(1, 1, "", "s1 s1", "s1 s1 s1 s1").unwrap();
        let v = sn_equivalent_rel_a(&inst, SearchBudget::default()).unwrap();
        assert_eq!(v.status, SnStatus::NotEquivalent);
        let c = v.certificate.unwrap();
        assert_eq!(c.invariant, "exponent_sum");
        assert_eq!((c.lhs, c.rhs), (2.into(), 4.into()));
    }

    #[test]
    fn loop_conjugate_is_found() {
        let n = 2;
        let a1 = w(3, "s2 s1 s1 S2");
        let beta_a = w(2, "s1");
        let oy = w(3, "s2 s2");
        let by = mixed::section(n, 1, &beta_a)
            .unwrap()
            .into_word()
            .compose(&oy)
            .unwrap();
        let conj = MixedBraid::validate(n, 1, by.conjugated_by(&a1).unwrap()).unwrap();
        let ox = mixed::decompose(&conj).kernel_part;
        let inst = SnInstance::new(n, 1, beta_a, ox, oy).unwrap();
        for v in [
            sn_equivalent_rel_a(&inst, SearchBudget::default()).unwrap(),
            sn_equivalent_twisted(&inst, SearchBudget::default()).unwrap(),
        ] {
            assert_eq!(v.status, SnStatus::Equivalent);
            let c = v.witness.unwrap();
            assert!(witness_verifies(&inst, &c, Formulation::MixedConjugacy).unwrap());
            assert!(witness_verifies(&inst, &c, Formulation::Twisted).unwrap());
        }
    }

    #[test]
    fn loops_around_different_punctures() {
        let gens = mixed::kernel_generators(2, 1).unwrap();
        let v =
            fixed_point_case(2, &w(2, ""), &gens[0], &gens[1], SearchBudget::default()).unwrap();
        assert_eq!(v.status, SnStatus::NotEquivalent);
        assert_eq!(v.certificate.unwrap().invariant, "linking_matrix");
    }

    #[test]
    fn rejects_non_kernel_orbits() {
        assert!(matches!(
            SnInstance::parse(2, 1, "", "s1", ""),
            Err(BraidError::NotInKernel(_))
        ));
        assert!(SnInstance::parse(2, 0, "", "", "").is_err());
        assert!(SnInstance::parse(2, 1, "s1", "", "s2 s2").is_ok());
    }

    #[test]
    fn period_warning() {
        let inst = SnInstance::parse(1, 2, "", "s2", "s2 s2").unwrap();
        let warnings = inst.period_warnings();
        assert_eq!(warnings.len(), 1);
        assert!(warnings[0].starts_with("orbit y"));
    }

    #[test]
    fn tiny_budget_is_inconclusive() {
        // β_x and β_y are conjugate in B_3 only through a braid outside the
        // kernel; the kernel conjugator A_1 takes one search step
        let inst = SnInstance::parse(2, 1, "S1", "s1 s2 s1 s1 S2 S1", "s2 s1 s1 S2").unwrap();
        let full = is_conjugate(inst.beta_x().word(), inst.beta_y().word()).unwrap();
        assert!(!mixed::in_kernel(2, 1, &full.witness.unwrap()).unwrap());
        let tight = SearchBudget {
            max_length: 0,
            max_states: 10,
        };
        for v in [
            sn_equivalent_rel_a(&inst, tight).unwrap(),
            sn_equivalent_twisted(&inst, tight).unwrap(),
        ] {
            assert_eq!(v.status, SnStatus::Inconclusive);
            assert_eq!(
                v.budget,
                Some(BudgetReport {
                    max_len: 0,
                    states: 1
                })
            );
        }
        let v = sn_equivalent_rel_a(&inst, SearchBudget::default()).unwrap();
        assert_eq!(v.status, SnStatus::Equivalent);
        assert_eq!(v.witness.unwrap(), w(3, "s2 s1 s1 S2"));
    }
}
