//! Braid words over the Artin generators and their underlying permutations.
//!
//! Conventions used throughout the crate:
//!
//! * letter `k > 0` is `σ_k`, the positive crossing of the strands at
//!   positions `k` and `k+1` (the strand at `k` passes over the one at `k+1`);
//!   letter `-k` is `σ_k⁻¹`.
//! * words are read left to right: `a b` means `a` happens first, stacking
//!   cylinders bottom to top.
//!
//! Text syntax: whitespace separated items, each one of `s3` (σ3), `S3`
//! (σ3⁻¹), `3` or `-3`. The strand count is always supplied separately.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{BraidError, Result};

/// An element of `B_n` spelled as a sequence of signed generator indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= strands {
                return Err(BraidError::LetterOutOfRange { letter: l, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub(crate) fn from_raw(strands: usize, letters: Vec<i32>) -> Self {
        debug_assert!(Self::new(strands, letters.clone()).is_ok());
        Self { strands, letters }
    }

    /// The identity of `B_n`.
    pub fn identity(strands: usize) -> Self {
        assert!(strands > 0, "a braid needs at least one strand");
        Self {
            strands,
            letters: Vec::new(),
        }
    }

    /// The single generator `σ_k` (or its inverse for negative `k`).
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, vec![letter])
    }

    /// Parses a word in the text grammar. Errors carry line 1 and a 1-based
    /// column; use [`parse_line`](Self::parse_line) to report another line.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        Self::parse_line(strands, text, 1)
    }

    pub fn parse_line(strands: usize, text: &str, line: usize) -> Result<Self> {
        if strands == 0 {
            return Err(BraidError::NoStrands);
        }
        let mut letters = Vec::new();
        for (column, token) in tokens(text) {
            let bad = || BraidError::Parse {
                line,
                column,
                token: token.to_string(),
            };
            let letter: i32 = if let Some(rest) = token.strip_prefix('s') {
                parse_index(rest).ok_or_else(bad)?
            } else if let Some(rest) = token.strip_prefix('S') {
                -parse_index(rest).ok_or_else(bad)?
            } else {
                token.parse::<i32>().map_err(|_| bad())?
            };
            if letter == 0 || letter.unsigned_abs() as usize >= strands {
                return Err(bad());
            }
            letters.push(letter);
        }
        Ok(Self { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: other.strands,
            });
        }
        Ok(())
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(Self {
            strands: self.strands,
            letters,
        })
    }

    /// Composes a sequence of words on the same strand count.
    pub fn product<'a, I>(strands: usize, words: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BraidWord>,
    {
        let mut acc = Self::identity(strands);
        for w in words {
            acc.check_same(w)?;
            acc.letters.extend_from_slice(&w.letters);
        }
        Ok(acc)
    }

    pub fn invert(&self) -> Self {
        Self {
            strands: self.strands,
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    /// Cancels adjacent `σ_k σ_k⁻¹` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            strands: self.strands,
            letters: out,
        }
    }

    /// `c · self · c⁻¹`.
    pub fn conjugated_by(&self, c: &Self) -> Result<Self> {
        c.compose(self)?.compose(&c.invert())
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn permutation(&self) -> Permutation {
        let mut at: Vec<usize> = (0..self.strands).collect(); // at[pos] = strand
        for &l in &self.letters {
            let k = l.unsigned_abs() as usize - 1;
            at.swap(k, k + 1);
        }
        let mut images = vec![0; self.strands];
        for (pos, &strand) in at.iter().enumerate() {
            images[strand] = pos;
        }
        Permutation { images }
    }

    /// The same letters read on a larger strand count.
    pub fn widen(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(BraidError::StrandMismatch {
                left: self.strands,
                right: strands,
            });
        }
        Ok(Self {
            strands,
            letters: self.letters.clone(),
        })
    }

    /// Shifts every generator index by `offset` and reads the result on
    /// `strands` strands.
    pub fn shifted(&self, offset: usize, strands: usize) -> Result<Self> {
        let letters = self
            .letters
            .iter()
            .map(|&l| l.signum() * (l.abs() + offset as i32))
            .collect();
        Self::new(strands, letters)
    }
}

fn tokens(text: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, ch) in text.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s, &text[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s, &text[s..]));
    }
    out.into_iter()
        .map(move |(byte, tok)| (text[..byte].chars().count() + 1, tok))
}

fn parse_index(s: &str) -> Option<i32> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, &l) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if l > 0 {
                write!(f, "s{l}")?;
            } else {
                write!(f, "S{}", -l)?;
            }
        }
        Ok(())
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// The permutation induced on strand start positions: `image(i)` is the end
/// position of the strand starting at `i`. Positions are 0-based internally
/// and 1-based in [`images`](Self::images) and in serialized output.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(size: usize) -> Self {
        Self {
            images: (0..size).collect(),
        }
    }

    /// Builds a permutation from 1-based images.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &i in images {
            if i == 0 || i > n || seen[i - 1] {
                return Err(BraidError::Invalid(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[i - 1] = true;
            out.push(i - 1);
        }
        Ok(Self { images: out })
    }

    pub fn size(&self) -> usize {
        self.images.len()
    }

    /// 1-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    /// 0-based image of the 0-based position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` first, then `other`.
    pub fn then(&self, other: &Self) -> Self {
        assert_eq!(self.size(), other.size());
        Self {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        }
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.size()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Self { images }
    }

    /// Cycles as lists of 0-based positions, each starting at its smallest
    /// element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.size()];
        let mut out = Vec::new();
        for start in 0..self.size() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.images[i];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted cycle lengths.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        t.sort_unstable();
        t
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.images())
    }
}
