//! Permutation braids: positive braids in which every pair of strands crosses
//! at most once. They are in bijection with permutations and form the lattice
//! `[1, Δ]` under the prefix order.

use std::fmt;

use crate::word::Permutation;

/// A simple element, stored as its 0-based permutation table
/// (`img[i]` = end position of the strand starting at position `i`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationBraid {
    img: Box<[u8]>,
}

impl PermutationBraid {
    pub fn identity(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "too many strands");
        Self {
            img: (0..n as u8).collect(),
        }
    }

    /// The half twist `Δ_n`.
    pub fn delta(n: usize) -> Self {
        assert!(n <= u8::MAX as usize, "too many strands");
        Self {
            img: (0..n as u8).rev().collect(),
        }
    }

    /// `σ_{k+1}` for a 0-based position `k`.
    pub fn atom(n: usize, k: usize) -> Self {
        let mut s = Self::identity(n);
        s.img.swap(k, k + 1);
        s
    }

    pub fn from_permutation(p: &Permutation) -> Self {
        Self {
            img: (0..p.size()).map(|i| p.image(i) as u8).collect(),
        }
    }

    pub(crate) fn from_table(img: Vec<u8>) -> Self {
        Self {
            img: img.into_boxed_slice(),
        }
    }

    pub fn strands(&self) -> usize {
        self.img.len()
    }

    pub fn table(&self) -> &[u8] {
        &self.img
    }

    pub fn permutation(&self) -> Permutation {
        let images: Vec<usize> = self.img.iter().map(|&i| i as usize + 1).collect();
        Permutation::from_images(&images).expect("simple elements carry bijections")
    }

    /// 1-based images, as used in serialized canonical forms.
    pub fn images(&self) -> Vec<usize> {
        self.img.iter().map(|&i| i as usize + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.img.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    pub fn is_delta(&self) -> bool {
        let n = self.img.len();
        self.img
            .iter()
            .enumerate()
            .all(|(i, &j)| j as usize == n - 1 - i)
    }

    /// Number of crossings.
    pub fn length(&self) -> usize {
        let n = self.img.len();
        let mut c = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.img[i] > self.img[j] {
                    c += 1;
                }
            }
        }
        c
    }

    fn inverse_table(&self) -> Vec<u8> {
        let mut inv = vec![0u8; self.img.len()];
        for (i, &j) in self.img.iter().enumerate() {
            inv[j as usize] = i as u8;
        }
        inv
    }

    /// `σ_{k+1}` is a prefix of `self`.
    pub fn starts_with(&self, k: usize) -> bool {
        self.img[k] > self.img[k + 1]
    }

    /// `σ_{k+1}` is a suffix of `self`.
    pub fn ends_with(&self, k: usize) -> bool {
        let a = self.img.iter().position(|&x| x as usize == k).unwrap();
        let b = self.img.iter().position(|&x| x as usize == k + 1).unwrap();
        a > b
    }

    pub fn starting_set(&self) -> Vec<usize> {
        (0..self.img.len().saturating_sub(1))
            .filter(|&k| self.starts_with(k))
            .collect()
    }

    pub fn finishing_set(&self) -> Vec<usize> {
        let inv = self.inverse_table();
        (0..self.img.len().saturating_sub(1))
            .filter(|&k| inv[k] > inv[k + 1])
            .collect()
    }

    /// Conjugation by the half twist, `Δ s Δ⁻¹`.
    pub fn tau(&self) -> Self {
        let n = self.img.len();
        Self {
            img: (0..n)
                .map(|i| (n - 1) as u8 - self.img[n - 1 - i])
                .collect(),
        }
    }

    /// `τ^p`; `τ` is an involution.
    pub fn tau_pow(&self, p: i64) -> Self {
        if p.rem_euclid(2) == 1 {
            self.tau()
        } else {
            self.clone()
        }
    }

    /// `∂s = s⁻¹ Δ`, so that `s · ∂s = Δ`.
    pub fn right_complement(&self) -> Self {
        let n = self.img.len() as u8;
        let inv = self.inverse_table();
        Self::from_table(inv.into_iter().map(|i| n - 1 - i).collect())
    }

    /// `Δ s⁻¹`, so that `(Δ s⁻¹) · s = Δ`.
    pub fn left_complement(&self) -> Self {
        let n = self.img.len();
        let inv = self.inverse_table();
        Self::from_table((0..n).map(|i| inv[n - 1 - i]).collect())
    }

    /// Right-multiplies by `σ_{k+1}`; caller guarantees `k` is not in the
    /// finishing set.
    pub(crate) fn push_atom(&mut self, k: usize) {
        for x in self.img.iter_mut() {
            if *x as usize == k {
                *x += 1;
            } else if *x as usize == k + 1 {
                *x -= 1;
            }
        }
    }

    /// Removes a leading `σ_{k+1}`; caller guarantees `k` is in the starting
    /// set.
    pub(crate) fn pop_front_atom(&mut self, k: usize) {
        self.img.swap(k, k + 1);
    }

    /// The product `self · other`, which must itself be simple.
    pub fn then(&self, other: &Self) -> Self {
        Self {
            img: self.img.iter().map(|&i| other.img[i as usize]).collect(),
        }
    }

    /// `self⁻¹ · other`, valid when `self ≼ other`.
    pub fn left_divide(&self, other: &Self) -> Self {
        let inv = self.inverse_table();
        Self::from_table(inv.iter().map(|&i| other.img[i as usize]).collect())
    }

    fn crosses(&self, i: usize, j: usize) -> bool {
        (self.img[i] > self.img[j]) == (i < j)
    }

    /// Prefix order: `self ≼ other` iff `other = self · t` for a simple `t`,
    /// iff every crossing of `self` is a crossing of `other`.
    pub fn is_prefix_of(&self, other: &Self) -> bool {
        let n = self.img.len();
        for i in 0..n {
            for j in i + 1..n {
                if self.crosses(i, j) && !other.crosses(i, j) {
                    return false;
                }
            }
        }
        true
    }

    /// Least common multiple in the prefix order. Its crossing set is the
    /// transitive closure of the union of the two crossing sets.
    pub fn join(&self, other: &Self) -> Self {
        let n = self.img.len();
        let mut rel = vec![false; n * n];
        for i in 0..n {
            for j in i + 1..n {
                rel[i * n + j] = self.crosses(i, j) || other.crosses(i, j);
            }
        }
        // i < j < k: (i,j) and (j,k) force (i,k). Sweeping the middle index
        // outermost closes the relation.
        for j in 0..n {
            for i in 0..j {
                if !rel[i * n + j] {
                    continue;
                }
                for k in j + 1..n {
                    if rel[j * n + k] {
                        rel[i * n + k] = true;
                    }
                }
            }
        }
        let img = (0..n)
            .map(|i| {
                let right = (i + 1..n).filter(|&j| rel[i * n + j]).count();
                let left = (0..i).filter(|&j| rel[j * n + i]).count();
                (i + right - left) as u8
            })
            .collect::<Vec<_>>();
        debug_assert!({
            let mut s = img.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| i == x as usize)
        });
        Self::from_table(img)
    }

    /// A positive word spelling this element (1-based generator letters).
    pub fn positive_word(&self) -> Vec<i32> {
        let mut t = self.img.to_vec();
        let mut out = Vec::new();
        'outer: loop {
            for k in 0..t.len().saturating_sub(1) {
                if t[k] > t[k + 1] {
                    out.push(k as i32 + 1);
                    t.swap(k, k + 1);
                    continue 'outer;
                }
            }
            break;
        }
        out
    }
}

/// Makes the pair `(a, b)` left-weighted by moving leading atoms of `b` onto
/// the end of `a`. Returns whether anything moved.
pub(crate) fn left_weight(a: &mut PermutationBraid, b: &mut PermutationBraid) -> bool {
    let n = a.strands();
    let mut moved = false;
    'outer: loop {
        for k in 0..n.saturating_sub(1) {
            if b.starts_with(k) && !a.ends_with(k) {
                a.push_atom(k);
                b.pop_front_atom(k);
                moved = true;
                continue 'outer;
            }
        }
        return moved;
    }
}

/// Minimal simple `v` with `u ≼ p_1 ⋯ p_r · v`, for positive factors `p_i`.
pub(crate) fn complement_through(
    factors: &[PermutationBraid],
    u: &PermutationBraid,
) -> PermutationBraid {
    let mut w = u.clone();
    for p in factors {
        if w.is_identity() {
            break;
        }
        w = p.left_divide(&p.join(&w));
    }
    w
}

impl fmt::Debug for PermutationBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Simple{:?}", self.images())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_simples(n: usize) -> Vec<PermutationBraid> {
        fn rec(prefix: &mut Vec<u8>, used: &mut Vec<bool>, out: &mut Vec<PermutationBraid>) {
            let n = used.len();
            if prefix.len() == n {
                out.push(PermutationBraid::from_table(prefix.clone()));
                return;
            }
            for v in 0..n {
                if !used[v] {
                    used[v] = true;
                    prefix.push(v as u8);
                    rec(prefix, used, out);
                    prefix.pop();
                    used[v] = false;
                }
            }
        }
        let mut out = Vec::new();
        rec(&mut Vec::new(), &mut vec![false; n], &mut out);
        out
    }

    #[test]
    fn delta_and_complements() {
        let d = PermutationBraid::delta(4);
        assert_eq!(d.length(), 6);
        for s in all_simples(4) {
            assert!(s.then(&s.right_complement()).is_delta());
            assert!(s.left_complement().then(&s).is_delta());
            assert_eq!(s.tau().tau(), s);
            assert_eq!(s.tau().length(), s.length());
        }
    }

    #[test]
    fn positive_word_spells_the_element() {
        for s in all_simples(4) {
            let word = s.positive_word();
            assert_eq!(word.len(), s.length());
            let mut acc = PermutationBraid::identity(4);
            for l in word {
                acc = acc.then(&PermutationBraid::atom(4, l as usize - 1));
            }
            assert_eq!(acc, s);
        }
    }

    #[test]
    fn prefix_order_matches_length_additivity() {
        let all = all_simples(4);
        for s in &all {
            for t in &all {
                // s ≼ t iff s⁻¹t is simple with length(t) - length(s) crossings
                let q = s.left_divide(t);
                let additive = s.length() + q.length() == t.length();
                assert_eq!(s.is_prefix_of(t), additive, "{s:?} {t:?}");
            }
        }
    }

    #[test]
    fn join_is_least_upper_bound() {
        let all = all_simples(4);
        for a in &all {
            for b in &all {
                let j = a.join(b);
                assert!(a.is_prefix_of(&j) && b.is_prefix_of(&j));
                let brute = all
                    .iter()
                    .filter(|c| a.is_prefix_of(c) && b.is_prefix_of(c))
                    .min_by_key(|c| c.length())
                    .unwrap();
                assert_eq!(&j, brute);
            }
        }
    }

    #[test]
    fn starting_and_finishing_sets() {
        let s = PermutationBraid::atom(3, 0).then(&PermutationBraid::atom(3, 1)); // σ1σ2
        assert_eq!(s.starting_set(), vec![0]);
        assert_eq!(s.finishing_set(), vec![1]);
        assert_eq!(PermutationBraid::delta(3).starting_set(), vec![0, 1]);
    }

    #[test]
    fn complement_through_one_factor_reaches_the_join() {
        let all = all_simples(3);
        for p in &all {
            for u in &all {
                let v = complement_through(std::slice::from_ref(p), u);
                assert_eq!(p.then(&v), p.join(u));
                assert_eq!(p.length() + v.length(), p.join(u).length());
            }
        }
    }
}
