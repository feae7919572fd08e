//! Conjugacy decision with conjugator extraction.
//!
//! Both braids are driven into their super summit sets by cycling and
//! decycling. The summit set of one of them is then closed under minimal
//! simple conjugators (computed by the convexity iteration below), looking for
//! an ultra summit representative of the other. Each discovered element
//! records its parent and the simple element connecting them so that a
//! witness can be assembled.
//!
//! Convention for tracked conjugators: an element `y` reached from `x` by `g`
//! satisfies `y = g⁻¹ · x · g`.

use std::collections::HashMap;

use serde::Serialize;

use super::normal_form::CanonicalForm;
use super::simple::{complement_through, PermutationBraid};
use crate::error::{BraidError, Result};
use crate::word::BraidWord;

/// Outcome of a conjugacy test. When `conjugate` holds, `witness` is a word
/// `c` with `c · b · c⁻¹ = a`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjugacyResult {
    pub conjugate: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<BraidWord>,
}

impl ConjugacyResult {
    pub fn no() -> Self {
        Self {
            conjugate: false,
            witness: None,
        }
    }

    pub fn yes(witness: BraidWord) -> Self {
        Self {
            conjugate: true,
            witness: Some(witness),
        }
    }
}

/// Result of [`conjugate_mod_full_twist`]: `a` is conjugate to `b · Δ^{2k}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TwistConjugacy {
    #[serde(flatten)]
    pub result: ConjugacyResult,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<i64>,
}

fn simple_word(s: &PermutationBraid) -> Vec<i32> {
    s.positive_word()
}

fn simple_inverse_word(s: &PermutationBraid) -> Vec<i32> {
    s.positive_word().into_iter().rev().map(|l| -l).collect()
}

/// One cycling step. Returns `(c(x), conjugator letters)`; `x` must have
/// positive canonical length.
pub fn cycle(x: &CanonicalForm) -> (CanonicalForm, Vec<i32>) {
    let c = x.factors()[0].tau_pow(x.delta_power());
    (x.conjugate_by_simple(&c), simple_word(&c))
}

/// One decycling step, conjugating by the inverse of the last factor.
pub fn decycle(x: &CanonicalForm) -> (CanonicalForm, Vec<i32>) {
    let last = x
        .factors()
        .last()
        .expect("decycling needs a factor")
        .clone();
    let g = CanonicalForm::from_simple(last.clone()).inverse();
    (x.conjugate_by(&g), simple_inverse_word(&last))
}

fn delta_length(n: usize) -> usize {
    n * (n.saturating_sub(1)) / 2
}

/// A super summit element conjugate to `x`, with the tracked conjugator
/// letters.
pub fn super_summit(x: &CanonicalForm) -> (CanonicalForm, Vec<i32>) {
    let bound = delta_length(x.strands()).max(1);
    let mut cur = x.clone();
    let mut conj: Vec<i32> = Vec::new();
    loop {
        let start = (cur.inf(), cur.sup());
        // raise the infimum
        'inf: loop {
            let mut y = cur.clone();
            let mut trail = Vec::new();
            for _ in 0..bound {
                if y.canonical_length() == 0 {
                    break;
                }
                let (next, c) = cycle(&y);
                trail.extend(c);
                y = next;
                if y.inf() > cur.inf() {
                    cur = y;
                    conj.extend(trail);
                    continue 'inf;
                }
            }
            break;
        }
        // lower the supremum
        'sup: loop {
            let mut y = cur.clone();
            let mut trail = Vec::new();
            for _ in 0..bound {
                if y.canonical_length() == 0 {
                    break;
                }
                let (next, c) = decycle(&y);
                trail.extend(c);
                y = next;
                if y.sup() < cur.sup() && y.inf() >= cur.inf() {
                    cur = y;
                    conj.extend(trail);
                    continue 'sup;
                }
            }
            break;
        }
        if (cur.inf(), cur.sup()) == start {
            return (cur, conj);
        }
    }
}

/// A summit element lying on a cycling circuit (an ultra summit element),
/// falling back to the super summit element when no circuit closes within
/// `10·n²` cyclings.
pub fn ultra_summit(x: &CanonicalForm) -> (CanonicalForm, Vec<i32>) {
    let (sss, mut conj) = super_summit(x);
    if sss.canonical_length() == 0 {
        return (sss, conj);
    }
    let limit = 10 * x.strands() * x.strands();
    let mut seen: HashMap<CanonicalForm, usize> = HashMap::new();
    let mut trail: Vec<Vec<i32>> = Vec::new();
    let mut y = sss.clone();
    for step in 0..=limit {
        if let Some(&first) = seen.get(&y) {
            for c in &trail[..first] {
                conj.extend_from_slice(c);
            }
            let mut z = sss;
            for _ in 0..first {
                z = cycle(&z).0;
            }
            return (z, conj);
        }
        seen.insert(y.clone(), step);
        let (next, c) = cycle(&y);
        trail.push(c);
        y = next;
    }
    (sss, conj)
}

/// Minimal simple `s` with `σ_{k+1} ≼ s` and `s⁻¹ u s` in the super summit
/// set of `u`, where `u` is itself a super summit element.
///
/// With `u = Δ^p P` and `u⁻¹ = Δ^q Q`, `inf(s⁻¹us) ≥ p` iff `τ^p(s) ≼ P s`,
/// and the supremum bound is the same condition for `u⁻¹`. Iterating
/// `s ← s ∨ P\τ^p(s) ∨ Q\τ^q(s)` from the atom reaches the least solution.
pub fn minimal_summit_conjugator(
    u: &CanonicalForm,
    u_inv: &CanonicalForm,
    k: usize,
) -> PermutationBraid {
    let n = u.strands();
    let p = u.delta_power();
    let q = u_inv.delta_power();
    let mut s = PermutationBraid::atom(n, k);
    loop {
        let a = complement_through(u.factors(), &s.tau_pow(p));
        let b = complement_through(u_inv.factors(), &s.tau_pow(q));
        let next = s.join(&a).join(&b);
        if next == s {
            return s;
        }
        s = next;
    }
}

/// The distinct minimal elements among the per-atom minimal conjugators.
pub fn minimal_summit_conjugators(u: &CanonicalForm) -> Vec<PermutationBraid> {
    let n = u.strands();
    if n < 2 {
        return Vec::new();
    }
    let inv = u.inverse();
    let mut all: Vec<PermutationBraid> = (0..n - 1)
        .map(|k| minimal_summit_conjugator(u, &inv, k))
        .collect();
    all.sort();
    all.dedup();
    let keep: Vec<bool> = all
        .iter()
        .map(|s| !all.iter().any(|t| t != s && t.is_prefix_of(s)))
        .collect();
    all.into_iter()
        .zip(keep)
        .filter_map(|(s, k)| k.then_some(s))
        .collect()
}

/// A closed summit set, with a spanning tree of simple conjugators back to
/// the first element.
#[derive(Debug, Clone)]
pub struct SummitSet {
    elements: Vec<CanonicalForm>,
    parents: Vec<Option<(usize, PermutationBraid)>>,
    index: HashMap<CanonicalForm, usize>,
}

impl SummitSet {
    pub fn elements(&self) -> &[CanonicalForm] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &CanonicalForm) -> bool {
        self.index.contains_key(x)
    }

    /// Letters of `h` with `element = h⁻¹ · root · h`.
    pub fn conjugator_to(&self, x: &CanonicalForm) -> Option<Vec<i32>> {
        let mut i = *self.index.get(x)?;
        let mut chain = Vec::new();
        while let Some((parent, s)) = &self.parents[i] {
            chain.push(s.clone());
            i = *parent;
        }
        Some(chain.iter().rev().flat_map(simple_word).collect())
    }

    /// Elements lying on cycling circuits: the ultra summit set.
    pub fn ultra_summit_elements(&self) -> Vec<CanonicalForm> {
        if self.elements.iter().all(|e| e.canonical_length() == 0) {
            return self.elements.clone();
        }
        let next: Vec<usize> = self
            .elements
            .iter()
            .map(|e| self.index[&cycle(e).0])
            .collect();
        // an index is on a cycle iff iterating `next` from it returns to it
        let m = self.elements.len();
        let mut on_cycle = vec![false; m];
        let mut state = vec![0u8; m]; // 0 new, 1 in progress, 2 done
        for start in 0..m {
            if state[start] != 0 {
                continue;
            }
            let mut path = Vec::new();
            let mut i = start;
            while state[i] == 0 {
                state[i] = 1;
                path.push(i);
                i = next[i];
            }
            if state[i] == 1 {
                let pos = path.iter().position(|&j| j == i).unwrap();
                for &j in &path[pos..] {
                    on_cycle[j] = true;
                }
            }
            for j in path {
                state[j] = 2;
            }
        }
        self.elements
            .iter()
            .zip(on_cycle)
            .filter(|&(_, c)| c)
            .map(|(e, _)| e.clone())
            .collect()
    }
}

/// Closes `{root}` under minimal summit conjugators, breadth first, taking
/// each level in lexicographic order of canonical forms. Stops early once
/// `target` is discovered.
fn close_summit_set(root: CanonicalForm, target: Option<&CanonicalForm>) -> SummitSet {
    let mut set = SummitSet {
        elements: vec![root.clone()],
        parents: vec![None],
        index: HashMap::from([(root.clone(), 0)]),
    };
    if target == Some(&root) || root.canonical_length() == 0 {
        return set;
    }
    let mut level = vec![0usize];
    while !level.is_empty() {
        level.sort_by(|&a, &b| set.elements[a].cmp(&set.elements[b]));
        let mut next_level = Vec::new();
        for &i in &level {
            let u = set.elements[i].clone();
            for s in minimal_summit_conjugators(&u) {
                let v = u.conjugate_by_simple(&s);
                if set.index.contains_key(&v) {
                    continue;
                }
                let j = set.elements.len();
                set.index.insert(v.clone(), j);
                set.elements.push(v.clone());
                set.parents.push(Some((i, s)));
                if target == Some(&v) {
                    return set;
                }
                next_level.push(j);
            }
        }
        level = next_level;
    }
    set
}

/// The super summit set of `x`, rooted at its cycled/decycled representative.
pub fn super_summit_set(x: &CanonicalForm) -> SummitSet {
    close_summit_set(super_summit(x).0, None)
}

/// The ultra summit set of `x`.
pub fn ultra_summit_set(x: &CanonicalForm) -> Vec<CanonicalForm> {
    super_summit_set(x).ultra_summit_elements()
}

fn check_strands(a: &BraidWord, b: &BraidWord) -> Result<()> {
    if a.strands() != b.strands() {
        return Err(BraidError::StrandMismatch {
            left: a.strands(),
            right: b.strands(),
        });
    }
    Ok(())
}

/// Decides whether `a` and `b` are conjugate in `B_n`; a positive answer
/// carries `c` with `c · b · c⁻¹ = a`.
pub fn is_conjugate(a: &BraidWord, b: &BraidWord) -> Result<ConjugacyResult> {
    check_strands(a, b)?;
    let n = a.strands();
    if a.exponent_sum() != b.exponent_sum()
        || a.permutation().cycle_type() != b.permutation().cycle_type()
    {
        return Ok(ConjugacyResult::no());
    }
    if n < 2 {
        return Ok(ConjugacyResult::yes(BraidWord::identity(n)));
    }
    let fa = CanonicalForm::from_word(a);
    let fb = CanonicalForm::from_word(b);
    let (ya, ga) = ultra_summit(&fa);
    let (yb, gb) = ultra_summit(&fb);
    if (ya.inf(), ya.sup()) != (yb.inf(), yb.sup()) {
        return Ok(ConjugacyResult::no());
    }
    let set = close_summit_set(yb, Some(&ya));
    let Some(h) = set.conjugator_to(&ya) else {
        return Ok(ConjugacyResult::no());
    };
    // ya = h⁻¹ yb h, yb = gb⁻¹ b gb, ya = ga⁻¹ a ga  ⇒  a = c b c⁻¹ with
    // c = ga · h⁻¹ · gb⁻¹
    let ga = BraidWord::from_raw(n, ga);
    let h = BraidWord::from_raw(n, h);
    let gb = BraidWord::from_raw(n, gb);
    let c = ga
        .compose(&h.invert())?
        .compose(&gb.invert())?
        .free_reduce();
    debug_assert_eq!(
        CanonicalForm::from_word(&b.conjugated_by(&c)?),
        fa,
        "conjugator chain does not verify"
    );
    Ok(ConjugacyResult::yes(c))
}

/// Decides whether `a` is conjugate to `b · Δ^{2k}` for some integer `k`.
/// The exponent sum forces `k = (e(a) − e(b)) / (n(n−1))`.
pub fn conjugate_mod_full_twist(a: &BraidWord, b: &BraidWord) -> Result<TwistConjugacy> {
    check_strands(a, b)?;
    let n = a.strands();
    if n < 2 {
        return Ok(TwistConjugacy {
            result: ConjugacyResult::yes(BraidWord::identity(n)),
            k: Some(0),
        });
    }
    let twist_exp = (n * (n - 1)) as i64;
    let gap = a.exponent_sum() - b.exponent_sum();
    if gap % twist_exp != 0 {
        return Ok(TwistConjugacy {
            result: ConjugacyResult::no(),
            k: None,
        });
    }
    let k = gap / twist_exp;
    let twist = super::normal_form::full_twist(n)?;
    let twist = if k < 0 { twist.invert() } else { twist };
    let mut shifted = b.clone();
    for _ in 0..k.abs() {
        shifted = shifted.compose(&twist)?;
    }
    let result = is_conjugate(a, &shifted)?;
    let k = result.conjugate.then_some(k);
    Ok(TwistConjugacy { result, k })
}
