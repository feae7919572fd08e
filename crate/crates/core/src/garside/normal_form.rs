//! Left normal form `Δ^p A_1 ⋯ A_k` and group operations on it.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::simple::{left_weight, PermutationBraid};
use crate::error::{BraidError, Result};
use crate::word::BraidWord;

/// Garside left normal form. Two braids are equal iff their forms are equal,
/// so this type doubles as the hash key for every visited-set in the crate.
///
/// The derived ordering compares strand count, then `Δ` power, then the
/// factor tables lexicographically; summit-set searches use it to break ties.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<PermutationBraid>,
}

impl CanonicalForm {
    pub fn identity(strands: usize) -> Self {
        Self {
            strands,
            delta_power: 0,
            factors: Vec::new(),
        }
    }

    pub fn delta_power_of(strands: usize, p: i64) -> Self {
        let mut f = Self::identity(strands);
        if strands > 1 {
            f.delta_power = p;
        }
        f
    }

    pub fn from_word(word: &BraidWord) -> Self {
        let n = word.strands();
        if n < 2 {
            return Self::identity(n);
        }
        // Each σ_k⁻¹ = Δ⁻¹ · (Δσ_k⁻¹). Moving every Δ⁻¹ to the front twists
        // each earlier factor once per negative letter after it.
        let letters = word.letters();
        let mut negatives_after = letters.iter().filter(|&&l| l < 0).count() as i64;
        let delta_power = -negatives_after;
        let mut factors = Vec::with_capacity(letters.len());
        for &l in letters {
            let k = l.unsigned_abs() as usize - 1;
            let atom = PermutationBraid::atom(n, k);
            let simple = if l > 0 {
                atom
            } else {
                negatives_after -= 1;
                atom.left_complement()
            };
            factors.push(simple.tau_pow(negatives_after));
        }
        let mut f = Self {
            strands: n,
            delta_power,
            factors,
        };
        f.normalize();
        f
    }

    /// Builds a form from raw parts and normalizes it; the factors need not be
    /// left-weighted.
    pub fn from_parts(
        strands: usize,
        delta_power: i64,
        factors: Vec<PermutationBraid>,
    ) -> Result<Self> {
        if factors.iter().any(|f| f.strands() != strands) {
            return Err(BraidError::Invalid("factor strand count mismatch".into()));
        }
        let mut f = Self {
            strands,
            delta_power: if strands > 1 { delta_power } else { 0 },
            factors: if strands > 1 { factors } else { Vec::new() },
        };
        f.normalize();
        Ok(f)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    pub fn factors(&self) -> &[PermutationBraid] {
        &self.factors
    }

    /// Canonical length `k`.
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn inf(&self) -> i64 {
        self.delta_power
    }

    pub fn sup(&self) -> i64 {
        self.delta_power + self.factors.len() as i64
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    fn normalize(&mut self) {
        let len = self.factors.len();
        if len >= 2 {
            loop {
                let mut changed = false;
                for i in (0..self.factors.len() - 1).rev() {
                    let (a, b) = self.factors.split_at_mut(i + 1);
                    if left_weight(&mut a[i], &mut b[0]) {
                        changed = true;
                    }
                }
                if !changed {
                    break;
                }
            }
        }
        let lead = self.factors.iter().take_while(|f| f.is_delta()).count();
        if lead > 0 {
            self.delta_power += lead as i64;
            self.factors.drain(..lead);
        }
        while self.factors.last().is_some_and(|f| f.is_identity()) {
            self.factors.pop();
        }
    }

    fn twist_factors(&mut self, q: i64) {
        if q.rem_euclid(2) == 1 {
            for f in &mut self.factors {
                *f = f.tau();
            }
        }
    }

    /// `self · other`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        let mut out = self.clone();
        // A Δ^q = Δ^q τ^q(A)
        out.twist_factors(other.delta_power);
        out.delta_power += other.delta_power;
        out.factors.extend(other.factors.iter().cloned());
        out.normalize();
        Ok(out)
    }

    pub fn inverse(&self) -> Self {
        // (A_1⋯A_k)⁻¹ = ∂A_k Δ⁻¹ ⋯ ∂A_1 Δ⁻¹, then collect the Δ⁻¹ at the front
        let k = self.factors.len() as i64;
        let p = self.delta_power;
        let factors = self
            .factors
            .iter()
            .rev()
            .enumerate()
            .map(|(j, a)| a.right_complement().tau_pow(k - j as i64 + p))
            .collect();
        let mut out = Self {
            strands: self.strands,
            delta_power: -p - k,
            factors,
        };
        out.normalize();
        out
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Self) -> Self {
        g.inverse()
            .product(self)
            .and_then(|x| x.product(g))
            .expect("strand counts agree")
    }

    /// `s⁻¹ · self · s` for a simple `s`.
    pub fn conjugate_by_simple(&self, s: &PermutationBraid) -> Self {
        let g = Self::from_simple(s.clone());
        self.conjugate_by(&g)
    }

    pub fn from_simple(s: PermutationBraid) -> Self {
        let n = s.strands();
        let mut f = Self {
            strands: n,
            delta_power: 0,
            factors: vec![s],
        };
        f.normalize();
        f
    }

    /// A word spelling this form: `Δ^p` followed by the positive words of the
    /// factors.
    pub fn to_word(&self) -> BraidWord {
        let n = self.strands;
        let mut letters = Vec::new();
        if n > 1 {
            let delta = PermutationBraid::delta(n).positive_word();
            for _ in 0..self.delta_power.max(0) {
                letters.extend_from_slice(&delta);
            }
            for _ in 0..(-self.delta_power).max(0) {
                letters.extend(delta.iter().rev().map(|l| -l));
            }
            for f in &self.factors {
                letters.extend(f.positive_word());
            }
        }
        BraidWord::from_raw(n.max(1), letters)
    }

    /// Left-weightedness of every adjacent pair, checked directly.
    pub fn is_left_weighted(&self) -> bool {
        self.factors.windows(2).all(|w| {
            let fin = w[0].finishing_set();
            w[1].starting_set().iter().all(|k| fin.contains(k))
        })
    }

    /// Byte encoding: `Δ` power (little-endian) followed by the factor tables.
    pub fn encoding(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(8 + self.factors.len() * self.strands);
        out.extend_from_slice(&self.delta_power.to_le_bytes());
        for f in &self.factors {
            out.extend_from_slice(f.table());
        }
        out
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.delta_power)?;
        for a in &self.factors {
            write!(f, " {:?}", a.images())?;
        }
        Ok(())
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CanonicalForm", 3)?;
        s.serialize_field("n", &self.strands)?;
        s.serialize_field("delta_power", &self.delta_power)?;
        let factors: Vec<Vec<usize>> = self.factors.iter().map(|f| f.images()).collect();
        s.serialize_field("factors", &factors)?;
        s.end()
    }
}

/// Word problem.
pub fn equal(a: &BraidWord, b: &BraidWord) -> Result<bool> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(CanonicalForm::from_word(a) == CanonicalForm::from_word(b))
}

pub fn canonical_form(a: &BraidWord) -> CanonicalForm {
    CanonicalForm::from_word(a)
}

/// The half twist `(σ1)(σ2σ1)⋯(σ_{n−1}⋯σ1)`.
pub fn delta(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::TooFewStrands {
            what: "delta",
            min: 2,
            got: n,
        });
    }
    let mut letters = Vec::new();
    for top in 1..n as i32 {
        letters.extend((1..=top).rev());
    }
    Ok(BraidWord::from_raw(n, letters))
}

/// The full twist `(σ1⋯σ_{n−1})^n`.
pub fn full_twist(n: usize) -> Result<BraidWord> {
    if n < 2 {
        return Err(BraidError::TooFewStrands {
            what: "full_twist",
            min: 2,
            got: n,
        });
    }
    let row: Vec<i32> = (1..n as i32).collect();
    Ok(BraidWord::from_raw(n, row.repeat(n)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    fn nf(n: usize, s: &str) -> CanonicalForm {
        canonical_form(&w(n, s))
    }

    #[test]
    fn half_twist_is_delta() {
        let f = nf(3, "s1 s2 s1");
        assert_eq!(f.delta_power(), 1);
        assert!(f.factors().is_empty());
    }

    #[test]
    fn cancelling_pair_is_identity() {
        assert!(nf(3, "s1 S1").is_identity());
        assert!(nf(5, "S2 s3 S3 s2").is_identity());
    }

    #[test]
    fn b2_generator_is_delta() {
        let f = nf(2, "s1 s1");
        assert_eq!(f.delta_power(), 2);
        assert!(f.factors().is_empty());
        assert_eq!(nf(2, "S1 S1 S1").delta_power(), -3);
    }

    #[test]
    fn braid_relations_hold() {
        assert!(equal(&w(3, "s1 s2 s1"), &w(3, "s2 s1 s2")).unwrap());
        assert!(!equal(&w(3, "s1"), &w(3, "s2")).unwrap());
        assert!(equal(&w(4, "s1 s3"), &w(4, "s3 s1")).unwrap());
        assert!(equal(&w(4, "S1 s3 S2"), &w(4, "s3 S1 S2")).unwrap());
        assert!(equal(&w(3, "s1"), &w(4, "s1")).is_err());
    }

    #[test]
    fn inverse_and_product() {
        let x = nf(4, "s1 S2 s3 s3 S1 s2 S3");
        assert!(x.product(&x.inverse()).unwrap().is_identity());
        assert!(x.inverse().product(&x).unwrap().is_identity());
        assert_eq!(CanonicalForm::from_word(&x.to_word()), x);
    }

    #[test]
    fn negative_letter_form() {
        // σ1⁻¹ = Δ⁻¹ · σ1σ2 in B_3
        let f = nf(3, "S1");
        assert_eq!(f.delta_power(), -1);
        assert_eq!(f.factors().len(), 1);
        assert_eq!(f.factors()[0].positive_word(), vec![1, 2]);
    }

    #[test]
    fn deltas_and_full_twists() {
        assert_eq!(delta(2).unwrap(), w(2, "s1"));
        assert_eq!(full_twist(2).unwrap(), w(2, "s1 s1"));
        assert_eq!(full_twist(3).unwrap().exponent_sum(), 6);
        for n in 2..7 {
            let d = delta(n).unwrap();
            assert_eq!(canonical_form(&d).delta_power(), 1);
            assert!(equal(&full_twist(n).unwrap(), &d.compose(&d).unwrap()).unwrap());
        }
        assert!(delta(1).is_err());
        assert!(full_twist(0).is_err());
    }

    #[test]
    fn forms_are_left_weighted() {
        let f = nf(5, "s1 s2 s3 s4 s1 S2 s3 s3 s1 s4 S1 s2 s2");
        assert!(f.is_left_weighted());
        assert!(f
            .factors()
            .iter()
            .all(|a| !a.is_delta() && !a.is_identity()));
    }

    #[test]
    fn serializes_images() {
        let json = serde_json::to_string(&nf(3, "s1 s2")).unwrap();
        assert_eq!(json, r#"{"n":3,"delta_power":0,"factors":[[3,1,2]]}"#);
    }

    #[test]
    fn one_strand_is_trivial() {
        let f = canonical_form(&BraidWord::identity(1));
        assert!(f.is_identity());
        assert_eq!(f.to_word(), BraidWord::identity(1));
    }
}
