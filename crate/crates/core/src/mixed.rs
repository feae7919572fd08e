//! The mixed braid group `B_{n,m} ⊂ B_{n+m}`: braids whose permutation keeps
//! the block `{1..n}` (the invariant set) and the block `{n+1..n+m}` (the
//! orbit) separate.
//!
//! Forgetting the orbit strands is a split surjection `p: B_{n,m} → B_n`; its
//! section adds `m` vertical strands on the right. Every `b` factors uniquely
//! as `ι(β) · γ` with `γ` in the kernel, the braid group of `m` strands in the
//! disc with `n` punctures, and `B_n` acts on the kernel by
//! `φ_β(γ) = β⁻¹ γ β`. Note `φ_{β1β2} = φ_{β2} ∘ φ_{β1}`.

use serde::Serialize;

use crate::error::{BraidError, Result};
use crate::garside::equal;
use crate::word::BraidWord;

/// A validated element of `B_{n,m}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MixedBraid {
    n: usize,
    m: usize,
    word: BraidWord,
}

/// `b = ι(base) · kernel_part`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub base: BraidWord,
    pub kernel_part: BraidWord,
}

fn total(n: usize, m: usize) -> Result<usize> {
    if n + m == 0 {
        return Err(BraidError::NoStrands);
    }
    Ok(n + m)
}

impl MixedBraid {
    /// Checks block preservation.
    pub fn validate(n: usize, m: usize, word: BraidWord) -> Result<Self> {
        let total = total(n, m)?;
        if word.strands() != total {
            return Err(BraidError::StrandMismatch {
                left: word.strands(),
                right: total,
            });
        }
        let perm = word.permutation();
        // report orbit strands first: they are the ones leaving their block
        for start in (n..total).chain(0..n) {
            let end = perm.image(start);
            if (start < n) != (end < n) {
                return Err(BraidError::BlockViolation {
                    strand: start + 1,
                    end: end + 1,
                });
            }
        }
        Ok(Self { n, m, word })
    }

    pub fn parse(n: usize, m: usize, text: &str) -> Result<Self> {
        Self::validate(n, m, BraidWord::parse(total(n, m)?, text)?)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn blocks(&self) -> (usize, usize) {
        (self.n, self.m)
    }

    pub fn word(&self) -> &BraidWord {
        &self.word
    }

    pub fn into_word(self) -> BraidWord {
        self.word
    }

    pub fn compose(&self, other: &Self) -> Result<Self> {
        if self.blocks() != other.blocks() {
            return Err(BraidError::Invalid(format!(
                "block sizes {:?} and {:?} differ",
                self.blocks(),
                other.blocks()
            )));
        }
        Ok(Self {
            n: self.n,
            m: self.m,
            word: self.word.compose(&other.word)?,
        })
    }

    pub fn invert(&self) -> Self {
        Self {
            n: self.n,
            m: self.m,
            word: self.word.invert(),
        }
    }
}

/// Deletes the strands that start in the orbit block, scanning letters while
/// tracking which positions those strands occupy.
pub fn project(b: &MixedBraid) -> BraidWord {
    let (n, m) = b.blocks();
    if n == 0 {
        return BraidWord::identity(1);
    }
    let mut deleted: Vec<bool> = (0..n + m).map(|p| p >= n).collect();
    let mut letters = Vec::new();
    for &l in b.word.letters() {
        let k = l.unsigned_abs() as usize - 1;
        if !deleted[k] && !deleted[k + 1] {
            let shift = deleted[..k].iter().filter(|&&d| d).count() as i32;
            letters.push(l.signum() * (l.abs() - shift));
        }
        deleted.swap(k, k + 1);
    }
    BraidWord::from_raw(n, letters)
}

/// Same letters read on `n + m` strands.
pub fn section(n: usize, m: usize, beta: &BraidWord) -> Result<MixedBraid> {
    if beta.strands() != n.max(1) || (n == 0 && !beta.is_empty()) {
        return Err(BraidError::StrandMismatch {
            left: beta.strands(),
            right: n,
        });
    }
    let word = beta.widen(total(n, m)?)?;
    Ok(MixedBraid { n, m, word })
}

pub fn decompose(b: &MixedBraid) -> Decomposition {
    let base = project(b);
    let lifted = section(b.n, b.m, &base).expect("projection lives in B_n");
    let kernel_part = lifted
        .word
        .invert()
        .compose(&b.word)
        .expect("same strand count")
        .free_reduce();
    Decomposition { base, kernel_part }
}

/// Kernel membership: the permutation fixes `{1..n}` pointwise and the
/// projection is trivial in `B_n`.
pub fn in_kernel(n: usize, m: usize, w: &BraidWord) -> Result<bool> {
    let total = total(n, m)?;
    if w.strands() != total {
        return Err(BraidError::StrandMismatch {
            left: w.strands(),
            right: total,
        });
    }
    let perm = w.permutation();
    if (0..n).any(|i| perm.image(i) != i) {
        return Ok(false);
    }
    let Ok(b) = MixedBraid::validate(n, m, w.clone()) else {
        return Ok(false);
    };
    let p = project(&b);
    equal(&p, &BraidWord::identity(p.strands()))
}

pub fn require_kernel(n: usize, m: usize, w: &BraidWord) -> Result<()> {
    if in_kernel(n, m, w)? {
        Ok(())
    } else {
        Err(BraidError::NotInKernel(w.to_string()))
    }
}

/// Standard generators of the kernel: the internal crossings
/// `σ_{n+1}, …, σ_{n+m−1}` followed by the loops
/// `A_i = (σ_n ⋯ σ_{i+1}) σ_i² (σ_{i+1}⁻¹ ⋯ σ_n⁻¹)`, `i = 1..n`, of strand
/// `n+1` around puncture `i`.
pub fn kernel_generators(n: usize, m: usize) -> Result<Vec<BraidWord>> {
    if m < 1 {
        return Err(BraidError::Invalid("the orbit block needs m ≥ 1".into()));
    }
    let total = n + m;
    let mut out = Vec::with_capacity(n + m - 1);
    for k in n + 1..n + m {
        out.push(BraidWord::from_raw(total, vec![k as i32]));
    }
    for i in 1..=n as i32 {
        let down: Vec<i32> = (i + 1..=n as i32).rev().collect();
        let mut letters = down.clone();
        letters.extend([i, i]);
        letters.extend(down.iter().rev().map(|l| -l));
        out.push(BraidWord::from_raw(total, letters));
    }
    Ok(out)
}

/// `φ_β(γ) = ι(β)⁻¹ · γ · ι(β)`, freely reduced. The block size `n` is
/// read off `γ`, which lives on `n + m` strands.
pub fn act(beta: &BraidWord, gamma: &BraidWord, m: usize) -> Result<BraidWord> {
    let n = gamma
        .strands()
        .checked_sub(m)
        .ok_or(BraidError::StrandMismatch {
            left: gamma.strands(),
            right: m,
        })?;
    require_kernel(n, m, gamma)?;
    act_unchecked(n, m, beta, gamma)
}

pub(crate) fn act_unchecked(
    n: usize,
    m: usize,
    beta: &BraidWord,
    gamma: &BraidWord,
) -> Result<BraidWord> {
    let lifted = section(n, m, beta)?.word;
    Ok(lifted
        .invert()
        .compose(gamma)?
        .compose(&lifted)?
        .free_reduce())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(n: usize, s: &str) -> BraidWord {
        BraidWord::parse(n, s).unwrap()
    }

    #[test]
    fn validation() {
        let err = MixedBraid::parse(2, 1, "s2").unwrap_err();
        assert_eq!(err, BraidError::BlockViolation { strand: 3, end: 2 });
        assert!(MixedBraid::parse(2, 1, "s2 s2").is_ok());
        assert!(MixedBraid::parse(2, 1, "s1").is_ok());
        assert!(MixedBraid::parse(0, 0, "").is_err());
    }

    #[test]
    fn projection_examples() {
        let p = project(&MixedBraid::parse(2, 1, "s2 s2").unwrap());
        assert!(p.is_empty());
        assert_eq!(p.strands(), 2);
        assert_eq!(
            project(&MixedBraid::parse(2, 1, "s1 s2 s2").unwrap()),
            w(2, "s1")
        );
        let beta = w(3, "s1 S2 s1 s2");
        assert_eq!(project(&section(3, 2, &beta).unwrap()), beta);
    }

    #[test]
    fn projection_reindexes_past_deleted_strands() {
        // orbit strand 3 moves to position 1; the crossing of strands 1 and 2
        // then happens at positions 2,3 and must come back as σ1
        let b = MixedBraid::parse(2, 1, "s2 s1 s2 S1 S2").unwrap();
        assert_eq!(project(&b), w(2, "s1"));
    }

    #[test]
    fn sections() {
        assert_eq!(section(2, 1, &w(2, "s1")).unwrap().word(), &w(3, "s1"));
        assert!(section(2, 2, &w(2, "")).unwrap().word().is_empty());
        assert_eq!(
            section(3, 1, &w(3, "s1 s2")).unwrap().word(),
            &w(4, "s1 s2")
        );
        assert!(section(2, 1, &w(3, "s1")).is_err());
    }

    #[test]
    fn decompositions() {
        let d = decompose(&MixedBraid::parse(2, 1, "s1 s2 s2").unwrap());
        assert_eq!(d.base, w(2, "s1"));
        assert!(equal(&d.kernel_part, &w(3, "s2 s2")).unwrap());

        let d = decompose(&MixedBraid::parse(2, 1, "s1").unwrap());
        assert_eq!(d.base, w(2, "s1"));
        assert!(d.kernel_part.is_empty());

        let d = decompose(&MixedBraid::parse(2, 1, "s2 s2").unwrap());
        assert!(d.base.is_empty());
        assert_eq!(d.kernel_part, w(3, "s2 s2"));
    }

    #[test]
    fn generators() {
        let g = kernel_generators(2, 1).unwrap();
        assert_eq!(g, vec![w(3, "s2 s1 s1 S2"), w(3, "s2 s2")]);
        for x in &g {
            assert!(in_kernel(2, 1, x).unwrap());
        }
        assert_eq!(
            kernel_generators(0, 3).unwrap(),
            vec![w(3, "s1"), w(3, "s2")]
        );
        assert_eq!(kernel_generators(4, 1).unwrap().len(), 4);
        let g = kernel_generators(3, 2).unwrap();
        assert_eq!(g[0], w(5, "s4"));
        assert!(g.iter().all(|x| in_kernel(3, 2, x).unwrap()));
        assert!(kernel_generators(2, 0).is_err());
    }

    #[test]
    fn kernel_membership() {
        assert!(!in_kernel(2, 1, &w(3, "s1 s1")).unwrap());
        assert!(!in_kernel(2, 1, &w(3, "s1")).unwrap());
        assert!(in_kernel(2, 2, &w(4, "s3")).unwrap());
        assert!(in_kernel(0, 2, &w(2, "s1")).unwrap());
    }

    #[test]
    fn action_on_loop() {
        // φ_{σ1}(σ2²) = σ1⁻¹σ2²σ1 = σ2σ1²σ2⁻¹
        let phi = act(&w(2, "s1"), &w(3, "s2 s2"), 1).unwrap();
        assert!(equal(&phi, &w(3, "s2 s1 s1 S2")).unwrap());
        assert!(in_kernel(2, 1, &phi).unwrap());
        assert_eq!(act(&w(2, ""), &w(3, "s2 s2"), 1).unwrap(), w(3, "s2 s2"));
        assert!(act(&w(2, "s1"), &w(3, "s1"), 1).is_err());
    }
}
