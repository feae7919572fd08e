//! Integer Laurent polynomials in one variable `t`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// Sparse `exponent → coefficient` map with no zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Laurent {
    terms: BTreeMap<i64, BigInt>,
}

impl Laurent {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    /// `c · t^e`.
    pub fn monomial(c: i64, e: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(e, BigInt::from(c));
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_degree(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coefficient(&self) -> Option<&BigInt> {
        self.terms.values().next_back()
    }

    /// Multiplies by `t^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&e, c)| (e + shift, c.clone()))
                .collect(),
        }
    }

    fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(e).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Evaluation at an integer point, for tests and sanity checks.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |acc, c| acc + c)
    }
}

impl Add for &Laurent {
    type Output = Laurent;
    fn add(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, c.clone());
        }
        out
    }
}

impl Sub for &Laurent {
    type Output = Laurent;
    fn sub(self, rhs: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, c) in &rhs.terms {
            out.add_term(e, -c.clone());
        }
        out
    }
}

impl Neg for &Laurent {
    type Output = Laurent;
    fn neg(self) -> Laurent {
        Laurent {
            terms: self.terms.iter().map(|(&e, c)| (e, -c.clone())).collect(),
        }
    }
}

impl Mul for &Laurent {
    type Output = Laurent;
    fn mul(self, rhs: &Laurent) -> Laurent {
        let mut out = Laurent::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl fmt::Display for Laurent {
    /// `c@e` terms in increasing exponent order, e.g. `1@0 -1@1`; `0` for the
    /// zero polynomial.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}@{e}")?;
        }
        Ok(())
    }
}

/// Square matrix over `Z[t, t⁻¹]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentMatrix {
    size: usize,
    entries: Vec<Laurent>,
}

impl LaurentMatrix {
    pub fn identity(size: usize) -> Self {
        let mut entries = vec![Laurent::zero(); size * size];
        for i in 0..size {
            entries[i * size + i] = Laurent::one();
        }
        Self { size, entries }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &Laurent {
        &self.entries[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Laurent) {
        self.entries[i * self.size + j] = v;
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut out = Self {
            size: n,
            entries: vec![Laurent::zero(); n * n],
        };
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cell = &mut out.entries[i * n + j];
                    *cell = &*cell + &(a * b);
                }
            }
        }
        out
    }

    /// Coefficients `c_0, …, c_n` of `det(x·I − M) = Σ c_i x^{n−i}`, via the
    /// division-free Berkowitz recursion.
    pub fn characteristic_polynomial(&self) -> Vec<Laurent> {
        let n = self.size;
        if n == 0 {
            return vec![Laurent::one()];
        }
        let mut v = vec![Laurent::one(), -self.get(0, 0)];
        for r in 1..n {
            // leading principal block M (r×r), column C = M[0..r][r], row R = M[r][0..r]
            let col: Vec<Laurent> = (0..r).map(|i| self.get(i, r).clone()).collect();
            let row: Vec<Laurent> = (0..r).map(|j| self.get(r, j).clone()).collect();
            let mut t = Vec::with_capacity(r + 2);
            t.push(Laurent::one());
            t.push(-self.get(r, r));
            // -R M^k C for k = 0..r-1
            let mut mk_c = col;
            for _ in 0..r {
                let dot = row
                    .iter()
                    .zip(&mk_c)
                    .fold(Laurent::zero(), |acc, (a, b)| &acc + &(a * b));
                t.push(-&dot);
                mk_c = (0..r)
                    .map(|i| {
                        (0..r).fold(Laurent::zero(), |acc, j| {
                            &acc + &(self.get(i, j) * &mk_c[j])
                        })
                    })
                    .collect();
            }
            let mut next = vec![Laurent::zero(); r + 2];
            for (i, slot) in next.iter_mut().enumerate() {
                for (j, vj) in v.iter().enumerate().take(i + 1) {
                    if let Some(ti) = t.get(i - j) {
                        *slot = &*slot + &(ti * vj);
                    }
                }
            }
            v = next;
        }
        v
    }
}
