//! Conjugacy invariants used as non-equivalence certificates.
//!
//! Every invariant here is constant on kernel-conjugacy classes of mixed
//! braids. Conjugating by a kernel element fixes each invariant-set strand
//! and only relabels orbit strands, which leaves the permutation data and
//! linking numbers alone as long as orbit cycles are keyed by length. The
//! Burau characteristic polynomial is a similarity invariant.

pub mod laurent;

use std::fmt;

use num_traits::Signed;
use serde::{Serialize, Serializer};

use crate::mixed::MixedBraid;
use crate::sn::SnInstance;
use crate::word::BraidWord;
pub use laurent::{Laurent, LaurentMatrix};

/// Canonical value of an invariant. Equality is literal comparison.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum InvariantValue {
    Integer(i64),
    Encoded(String),
}

impl InvariantValue {
    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Self::Integer(i) => serde_json::Value::from(*i),
            Self::Encoded(s) => serde_json::Value::from(s.clone()),
        }
    }
}

impl fmt::Display for InvariantValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Integer(i) => write!(f, "{i}"),
            Self::Encoded(s) => f.write_str(s),
        }
    }
}

impl Serialize for InvariantValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InvariantReport {
    pub name: String,
    pub value: InvariantValue,
}

impl InvariantReport {
    fn new(name: &str, value: InvariantValue) -> Self {
        Self {
            name: name.to_string(),
            value,
        }
    }
}

/// Cycle types of the permutation restricted to each block.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BlockCycleTypes {
    pub invariant_set: Vec<usize>,
    pub orbit: Vec<usize>,
}

impl fmt::Display for BlockCycleTypes {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{:?} O{:?}", self.invariant_set, self.orbit)
    }
}

pub fn cycle_type(b: &MixedBraid) -> BlockCycleTypes {
    let n = b.n();
    let mut out = BlockCycleTypes {
        invariant_set: Vec::new(),
        orbit: Vec::new(),
    };
    for c in b.word().permutation().cycles() {
        if c[0] < n {
            out.invariant_set.push(c.len());
        } else {
            out.orbit.push(c.len());
        }
    }
    out.invariant_set.sort_unstable();
    out.orbit.sort_unstable();
    out
}

/// Linking numbers between the components of a braid closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureLinking {
    /// Components as 0-based start positions, ordered by smallest element.
    pub components: Vec<Vec<usize>>,
    /// `lk[i][j]` for components `i ≠ j`; the diagonal is zero.
    pub matrix: Vec<Vec<i64>>,
}

/// Half the signed count of crossings between strands of distinct
/// components of the closure.
pub fn closure_linking(w: &BraidWord) -> ClosureLinking {
    let components = w.permutation().cycles();
    let mut component_of = vec![0usize; w.strands()];
    for (ci, c) in components.iter().enumerate() {
        for &s in c {
            component_of[s] = ci;
        }
    }
    let k = components.len();
    let mut twice = vec![vec![0i64; k]; k];
    let mut at: Vec<usize> = (0..w.strands()).collect();
    for &l in w.letters() {
        let p = l.unsigned_abs() as usize - 1;
        let (a, b) = (component_of[at[p]], component_of[at[p + 1]]);
        if a != b {
            twice[a][b] += l.signum() as i64;
            twice[b][a] += l.signum() as i64;
        }
        at.swap(p, p + 1);
    }
    let matrix = twice
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|x| {
                    debug_assert!(x % 2 == 0);
                    x / 2
                })
                .collect()
        })
        .collect();
    ClosureLinking { components, matrix }
}

/// One entry of the linking report. Invariant-set cycles are labelled by
/// their smallest position (1-based); orbit cycles only by length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum LinkingEntry {
    InvariantPair {
        first: usize,
        second: usize,
        lk: i64,
    },
    InvariantOrbit {
        puncture: usize,
        orbit_len: usize,
        lk: i64,
    },
    OrbitPair {
        len_a: usize,
        len_b: usize,
        lk: i64,
    },
}

impl fmt::Display for LinkingEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::InvariantPair { first, second, lk } => write!(f, "AA({first},{second})={lk}"),
            Self::InvariantOrbit {
                puncture,
                orbit_len,
                lk,
            } => write!(f, "AO({puncture},len{orbit_len})={lk}"),
            Self::OrbitPair { len_a, len_b, lk } => write!(f, "OO(len{len_a},len{len_b})={lk}"),
        }
    }
}

/// Sorted multiset of cycle-pair linking numbers of the closure of `b`.
pub fn linking_matrix(b: &MixedBraid) -> Vec<LinkingEntry> {
    let n = b.n();
    let link = closure_linking(b.word());
    let comps = &link.components;
    let mut out = Vec::new();
    for i in 0..comps.len() {
        for j in i + 1..comps.len() {
            let lk = link.matrix[i][j];
            let (ci, cj) = (&comps[i], &comps[j]);
            let entry = match (ci[0] < n, cj[0] < n) {
                (true, true) => LinkingEntry::InvariantPair {
                    first: ci[0] + 1,
                    second: cj[0] + 1,
                    lk,
                },
                (true, false) => LinkingEntry::InvariantOrbit {
                    puncture: ci[0] + 1,
                    orbit_len: cj.len(),
                    lk,
                },
                (false, true) => LinkingEntry::InvariantOrbit {
                    puncture: cj[0] + 1,
                    orbit_len: ci.len(),
                    lk,
                },
                (false, false) => LinkingEntry::OrbitPair {
                    len_a: ci.len().min(cj.len()),
                    len_b: ci.len().max(cj.len()),
                    lk,
                },
            };
            out.push(entry);
        }
    }
    out.sort();
    out
}

pub fn encode_linking(entries: &[LinkingEntry]) -> String {
    entries
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

/// `(exponent_sum(β_ox), exponent_sum(β_oy))`.
pub fn kernel_exponent_sum(inst: &SnInstance) -> (i64, i64) {
    (inst.beta_ox().exponent_sum(), inst.beta_oy().exponent_sum())
}

/// Unreduced Burau matrix, `σ_i ↦ I ⊕ [[1−t, t], [1, 0]] ⊕ I`.
pub fn burau_matrix(w: &BraidWord) -> LaurentMatrix {
    let n = w.strands();
    let one = Laurent::one();
    let t = Laurent::monomial(1, 1);
    let t_inv = Laurent::monomial(1, -1);
    let mut acc = LaurentMatrix::identity(n);
    for &l in w.letters() {
        let k = l.unsigned_abs() as usize - 1;
        let mut g = LaurentMatrix::identity(n);
        if l > 0 {
            g.set(k, k, &one - &t);
            g.set(k, k + 1, t.clone());
            g.set(k + 1, k, one.clone());
            g.set(k + 1, k + 1, Laurent::zero());
        } else {
            g.set(k, k, Laurent::zero());
            g.set(k, k + 1, one.clone());
            g.set(k + 1, k, t_inv.clone());
            g.set(k + 1, k + 1, &one - &t_inv);
        }
        acc = acc.mul(&g);
    }
    acc
}

/// Characteristic polynomial of the Burau matrix, as coefficients of
/// `x^n, …, x^0`, shifted so the smallest `t`-exponent is zero and signed so
/// the leading coefficient is positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BurauCharpoly {
    pub coefficients: Vec<Laurent>,
}

impl fmt::Display for BurauCharpoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.coefficients.len().saturating_sub(1);
        for (i, c) in self.coefficients.iter().enumerate() {
            if i > 0 {
                f.write_str(" | ")?;
            }
            write!(f, "x^{}: {c}", n - i)?;
        }
        Ok(())
    }
}

pub fn burau_charpoly(w: &BraidWord) -> BurauCharpoly {
    let mut coefficients = burau_matrix(w).characteristic_polynomial();
    let min = coefficients
        .iter()
        .filter_map(Laurent::min_degree)
        .min()
        .unwrap_or(0);
    if min != 0 {
        coefficients = coefficients.iter().map(|c| c.shifted(-min)).collect();
    }
    let lead_negative = coefficients
        .iter()
        .find_map(|c| c.leading_coefficient())
        .is_some_and(|c| c.is_negative());
    if lead_negative {
        coefficients = coefficients.iter().map(|c| -c).collect();
    }
    BurauCharpoly { coefficients }
}

/// All invariants of a mixed braid, for display.
pub fn report(b: &MixedBraid) -> Vec<InvariantReport> {
    vec![
        InvariantReport::new(
            "exponent_sum",
            InvariantValue::Integer(b.word().exponent_sum()),
        ),
        InvariantReport::new(
            "cycle_type",
            InvariantValue::Encoded(cycle_type(b).to_string()),
        ),
        InvariantReport::new(
            "linking_matrix",
            InvariantValue::Encoded(encode_linking(&linking_matrix(b))),
        ),
        InvariantReport::new(
            "burau_charpoly",
            InvariantValue::Encoded(burau_charpoly(b.word()).to_string()),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mixed::kernel_generators;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn block_cycle_types() {
        let t = cycle_type(&MixedBraid::parse(2, 1, "s1 s2 s2").unwrap());
        assert_eq!((t.invariant_set, t.orbit), (vec![2], vec![1]));
        let t = cycle_type(&MixedBraid::parse(2, 2, "").unwrap());
        assert_eq!((t.invariant_set, t.orbit), (vec![1, 1], vec![1, 1]));
        let t = cycle_type(&MixedBraid::parse(0, 3, "s1 s2").unwrap());
        assert_eq!(t.orbit, vec![3]);
        assert!(t.invariant_set.is_empty());
    }

    #[test]
    fn hopf_link() {
        let l = closure_linking(&w(2, "s1 s1"));
        assert_eq!(l.matrix[0][1], 1);
        let e = linking_matrix(&MixedBraid::parse(0, 2, "s1 s1").unwrap());
        assert_eq!(
            e,
            vec![LinkingEntry::OrbitPair {
                len_a: 1,
                len_b: 1,
                lk: 1
            }]
        );
        let l = closure_linking(&w(4, ""));
        assert!(l.matrix.iter().flatten().all(|&x| x == 0));
    }

    #[test]
    fn loop_generator_links_its_puncture() {
        let a1 = &kernel_generators(2, 1).unwrap()[0];
        let e = linking_matrix(&MixedBraid::validate(2, 1, a1.clone()).unwrap());
        assert!(e.contains(&LinkingEntry::InvariantOrbit {
            puncture: 1,
            orbit_len: 1,
            lk: 1
        }));
        assert!(e.contains(&LinkingEntry::InvariantOrbit {
            puncture: 2,
            orbit_len: 1,
            lk: 0
        }));
        assert!(e.contains(&LinkingEntry::InvariantPair {
            first: 1,
            second: 2,
            lk: 0
        }));
    }

    #[test]
    fn burau_identity_and_inverse() {
        // ε ↦ (x − 1)^3 = x³ − 3x² + 3x − 1
        let cp = burau_charpoly(&w(3, ""));
        assert_eq!(
            cp.to_string(),
            "x^3: 1@0 | x^2: -3@0 | x^1: 3@0 | x^0: -1@0"
        );
        let m = burau_matrix(&w(3, "s1 S1"));
        assert_eq!(m, LaurentMatrix::identity(3));
        let m = burau_matrix(&w(4, "S2 s3 s2 S3 s3 S2 S3 s2"));
        assert_eq!(m, LaurentMatrix::identity(4));
    }

    #[test]
    fn burau_is_multiplicative() {
        let a = w(4, "s1 S2 s3 s1");
        let b = w(4, "s2 s2 S3 S1");
        assert_eq!(
            burau_matrix(&a.compose(&b).unwrap()),
            burau_matrix(&a).mul(&burau_matrix(&b))
        );
    }

    #[test]
    fn report_encodings() {
        let b = MixedBraid::parse(1, 1, "s1 s1").unwrap();
        let r = report(&b);
        assert_eq!(r[0].value, InvariantValue::Integer(2));
        assert_eq!(r[1].value.to_string(), "A[1] O[1]");
        assert_eq!(r[2].value.to_string(), "AO(1,len1)=1");
        let json = serde_json::to_string(&r[0]).unwrap();
        assert_eq!(json, r#"{"name":"exponent_sum","value":"2"}"#);
    }
}
