// SPDX-License-Identifier: Apache-2.0

//! Threshold functions counted from the definition.
//!
//! `f` is a threshold function iff some `α` has `⟨α, (1, x)⟩ ≥ 0` exactly on
//! the inputs with `f(x) = 1`. Scaling `α` turns the strict side into a
//! margin, so the test is feasibility of
//!
//! ```text
//! ⟨α, (1, x)⟩ ≥  0   for f(x) = 1
//! ⟨α, (1, x)⟩ ≤ -1   for f(x) = -1
//! ```
//!
//! decided by exact Fourier–Motzkin elimination.

mod fm;
mod report;

use rayon::prelude::*;

use crate::arrangement::generate_e;
use crate::error::{Error, Result};
use fm::Inequality;

pub use report::{bounds_report, BoundsReport, WeightChoice};

/// Largest arity accepted by [`is_threshold`].
pub const MAX_SINGLE_ARITY: usize = 10;
/// Largest arity accepted by [`count_threshold_functions`].
pub const MAX_COUNT_ARITY: usize = 4;

/// A Boolean function of `n` variables.
///
/// `truth[k]` is the value on the input `(b_1, ..., b_n)` of the `k`-th
/// vector of `E` (bit `j` of `k`, most significant first, set means
/// `b_{j+1} = -1`); `true` stands for the output `1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BooleanFunction {
    n: usize,
    truth: Vec<bool>,
}

impl BooleanFunction {
    pub fn new(n: usize, truth: Vec<bool>) -> Result<Self> {
        if truth.len() != 1 << n {
            return Err(Error::DimensionMismatch {
                expected: 1 << n,
                found: truth.len(),
            });
        }
        Ok(BooleanFunction { n, truth })
    }

    /// Bit `k` of `index` is `truth[k]`. Needs `2^n ≤ 64`.
    pub fn from_index(n: usize, index: u64) -> Self {
        assert!(n <= 6);
        BooleanFunction {
            n,
            truth: (0..1usize << n).map(|k| index >> k & 1 == 1).collect(),
        }
    }

    /// The function with value `f(b)` on input `b ∈ {±1}^n`.
    pub fn from_fn(n: usize, f: impl Fn(&[i64]) -> bool) -> Self {
        let truth = (0..1usize << n).map(|k| f(&input(n, k))).collect();
        BooleanFunction { n, truth }
    }

    pub fn arity(&self) -> usize {
        self.n
    }

    pub fn truth(&self) -> &[bool] {
        &self.truth
    }

    pub fn negate(&self) -> Self {
        BooleanFunction {
            n: self.n,
            truth: self.truth.iter().map(|b| !b).collect(),
        }
    }
}

/// The input `(b_1, ..., b_n)` of the `k`-th vector of `E`.
pub fn input(n: usize, k: usize) -> Vec<i64> {
    (0..n)
        .map(|j| if k >> (n - 1 - j) & 1 == 0 { 1 } else { -1 })
        .collect()
}

fn check_arity(n: usize, max: usize) -> Result<()> {
    if n > max {
        return Err(Error::guard("threshold arity", max as u64, n as u64));
    }
    Ok(())
}

pub fn is_threshold(f: &BooleanFunction) -> Result<bool> {
    check_arity(f.n, MAX_SINGLE_ARITY)?;
    let rows = f
        .truth
        .iter()
        .enumerate()
        .map(|(k, &value)| {
            let mut row = Vec::with_capacity(f.n + 2);
            row.push(1);
            row.extend(input(f.n, k));
            if value {
                row.push(0);
            } else {
                row.iter_mut().for_each(|x| *x = -*x);
                row.push(-1);
            }
            Inequality(row)
        })
        .collect();
    fm::feasible(rows)
}

/// Number of threshold functions of `n` variables, by testing all
/// `2^(2^n)` truth tables.
pub fn count_threshold_functions(n: usize) -> Result<u64> {
    check_arity(n, MAX_COUNT_ARITY)?;
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            min: 1,
            max: MAX_COUNT_ARITY as i64,
        });
    }
    debug_assert_eq!(generate_e(n)?.len(), 1 << n);
    let total: u64 = 1 << (1 << n);
    (0..total)
        .into_par_iter()
        .map(|idx| is_threshold(&BooleanFunction::from_index(n, idx)).map(u64::from))
        .try_reduce(|| 0, |a, b| Ok(a + b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants_are_threshold() {
        for n in 1..=4 {
            assert!(is_threshold(&BooleanFunction::from_fn(n, |_| true)).unwrap());
            assert!(is_threshold(&BooleanFunction::from_fn(n, |_| false)).unwrap());
        }
    }

    #[test]
    fn xor_is_not() {
        let xor = BooleanFunction::from_fn(2, |x| x[0] != x[1]);
        assert!(!is_threshold(&xor).unwrap());
        assert!(!is_threshold(&xor.negate()).unwrap());
        let and = BooleanFunction::from_fn(2, |x| x[0] == 1 && x[1] == 1);
        assert!(is_threshold(&and).unwrap());
    }

    #[test]
    fn majority_and_parity_of_three() {
        let maj = BooleanFunction::from_fn(3, |x| x.iter().sum::<i64>() > 0);
        assert!(is_threshold(&maj).unwrap());
        let parity = BooleanFunction::from_fn(3, |x| x.iter().product::<i64>() == 1);
        assert!(!is_threshold(&parity).unwrap());
    }

    #[test]
    fn small_counts() {
        assert_eq!(count_threshold_functions(1).unwrap(), 4);
        assert_eq!(count_threshold_functions(2).unwrap(), 14);
        assert_eq!(count_threshold_functions(3).unwrap(), 104);
    }

    #[test]
    fn guards() {
        assert!(count_threshold_functions(5).is_err());
        assert!(count_threshold_functions(0).is_err());
        let big = BooleanFunction::new(11, vec![true; 1 << 11]).unwrap();
        assert!(matches!(is_threshold(&big), Err(Error::Guard { .. })));
        assert!(BooleanFunction::new(2, vec![true; 3]).is_err());
    }

    #[test]
    fn input_order_matches_e() {
        let e = generate_e(3).unwrap();
        for k in 0..8 {
            assert_eq!(e.vector(k).to_i64s().unwrap()[1..], input(3, k)[..]);
        }
        let f = BooleanFunction::from_index(2, 0b0001);
        assert_eq!(f.truth(), &[true, false, false, false]);
    }
}
