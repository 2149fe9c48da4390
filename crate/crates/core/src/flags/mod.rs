// SPDX-License-Identifier: Apache-2.0

//! Ordered independent tuples, their combinatorial flags, and the weighted
//! flag sum.
//!
//! For a tuple `W = (w_{i_1}, ..., w_{i_n})` of independent normals put
//! `L_l(W) = span(w_{i_{n-l+1}}, ..., w_{i_n})` and `q_l = |L_l(W) ∩ H|`. The
//! flag of `W` is `(q_n, ..., q_1)` and `W[H]` is the product of its entries.
//! Summing `(1 - Σ_{j ∈ L_n(W) ∩ H} p_j) / W[H]` over all such tuples gives
//! the top homology rank of the non-spanning complex, for every weight vector
//! `p` with total weight one.
//!
//! Indices are 0-based throughout the API; `Display` impls print them 1-based
//! (`w1`, `w2`, ...).

mod enumerate;
mod montecarlo;
mod order;

use std::fmt;
use std::path::Path;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use crate::arrangement::MemberSet;
use crate::error::{Error, Result};

pub use enumerate::{corollary_bound, theorem1_sum, FlagSystem};
pub use montecarlo::{monte_carlo_expectation, MonteCarloEstimate};
pub use order::{basis_bsigma, count_admissible_orders, lambda_count};

/// Indices `(i_1, ..., i_n)` into a vector set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexTuple(pub Vec<usize>);

impl IndexTuple {
    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The suffix spanning `L_l`: the last `l` entries.
    pub fn suffix(&self, l: usize) -> &[usize] {
        &self.0[self.0.len() - l..]
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, i) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "w{}", i + 1)?;
        }
        write!(f, ")")
    }
}

/// Full combinatorial flag of an independent tuple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullFlag {
    /// `(q_n, q_{n-1}, ..., q_1)`.
    pub q: Vec<usize>,
    /// `W[H] = q_n · ... · q_1`.
    pub product: BigUint,
    /// Members of `L_n(W)`.
    pub top_members: MemberSet,
}

/// Real weights `p_1..p_T` with `Σ p_i = 1`. Entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector(Vec<BigRational>);

impl WeightVector {
    pub fn new(weights: Vec<BigRational>) -> Result<Self> {
        let total: BigRational = weights.iter().sum();
        if !total.is_one() {
            return Err(Error::WeightSum(total.to_string()));
        }
        Ok(WeightVector(weights))
    }

    pub fn uniform(t: usize) -> Self {
        assert!(t > 0);
        let w = BigRational::new(1.into(), (t as u64).into());
        WeightVector(vec![w; t])
    }

    /// All weight on one index.
    pub fn point(t: usize, at: usize) -> Self {
        assert!(at < t);
        let mut w = vec![BigRational::zero(); t];
        w[at] = BigRational::one();
        WeightVector(w)
    }

    /// Random weights: the first `t - 1` entries are `a/b` with
    /// `1 ≤ b ≤ 100` and `|a| ≤ b`, and the last entry makes the sum one (it
    /// may well be negative).
    pub fn random<R: Rng + ?Sized>(t: usize, rng: &mut R) -> Self {
        assert!(t > 0);
        let mut w: Vec<BigRational> = (0..t - 1)
            .map(|_| {
                let b: i64 = rng.random_range(1..=100);
                let a: i64 = rng.random_range(-b..=b);
                BigRational::new(a.into(), b.into())
            })
            .collect();
        let rest: BigRational = w.iter().sum();
        w.push(BigRational::one() - rest);
        WeightVector(w)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weights(&self) -> &[BigRational] {
        &self.0
    }

    pub fn has_negative(&self) -> bool {
        self.0.iter().any(Signed::is_negative)
    }

    /// `Σ_{j ∈ members} p_j`.
    pub fn mass(&self, members: MemberSet) -> BigRational {
        members.iter().map(|j| &self.0[j]).sum()
    }

    pub(crate) fn check_len(&self, t: usize) -> Result<()> {
        if self.0.len() != t {
            return Err(Error::WeightCount {
                expected: t,
                got: self.0.len(),
            });
        }
        Ok(())
    }

    /// One rational (`a/b` or an integer) per line; blank lines and `#`
    /// comments are skipped. The total must be exactly one.
    pub fn parse(text: &str) -> Result<Self> {
        let mut w = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let x: BigRational = line.parse().map_err(|e| Error::Parse {
                line: i + 1,
                message: format!("bad rational `{line}`: {e}"),
            })?;
            w.push(x);
        }
        Self::new(w)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_text(&self) -> String {
        self.0.iter().map(|x| format!("{x}\n")).collect()
    }
}

/// A total order on the vector set, as a permutation `γ` of `0..T`.
///
/// `perm[k]` is the vector in position `k` (so `perm[0]` is the `γ`-first
/// vector); `inv[i]` is the position of vector `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderPermutation {
    perm: Vec<usize>,
    inv: Vec<usize>,
}

impl OrderPermutation {
    pub fn identity(t: usize) -> Self {
        let perm: Vec<usize> = (0..t).collect();
        OrderPermutation {
            inv: perm.clone(),
            perm,
        }
    }

    pub fn new(perm: Vec<usize>) -> Result<Self> {
        let t = perm.len();
        let mut inv = vec![usize::MAX; t];
        for (k, &i) in perm.iter().enumerate() {
            if i >= t || inv[i] != usize::MAX {
                return Err(Error::Precondition(format!(
                    "{perm:?} is not a permutation of 0..{t}"
                )));
            }
            inv[i] = k;
        }
        Ok(OrderPermutation { perm, inv })
    }

    pub fn random<R: Rng + ?Sized>(t: usize, rng: &mut R) -> Self {
        let mut perm: Vec<usize> = (0..t).collect();
        perm.shuffle(rng);
        Self::new(perm).expect("shuffle is a permutation")
    }

    /// `first` in position 0, the rest uniformly shuffled.
    pub fn random_with_first<R: Rng + ?Sized>(t: usize, first: usize, rng: &mut R) -> Self {
        let mut perm: Vec<usize> = Vec::with_capacity(t);
        perm.push(first);
        perm.extend((0..t).filter(|&i| i != first));
        perm[1..].shuffle(rng);
        Self::new(perm).expect("shuffle is a permutation")
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    /// Position of vector `i`.
    pub fn position(&self, i: usize) -> usize {
        self.inv[i]
    }

    pub fn first(&self) -> usize {
        self.perm[0]
    }

    /// The member that comes first in this order.
    pub fn min_of(&self, members: MemberSet) -> Option<usize> {
        members.iter().min_by_key(|&i| self.inv[i])
    }
}
