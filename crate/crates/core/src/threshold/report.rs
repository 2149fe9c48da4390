// SPDX-License-Identifier: Apache-2.0

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;

use super::{count_threshold_functions, MAX_COUNT_ARITY};
use crate::arrangement::{generate_e, schlafli_bound};
use crate::error::{Error, Result};
use crate::flags::{FlagSystem, OrderPermutation, WeightVector};

/// Largest `n` for which the lattice and flag computations are attempted.
pub const MAX_REPORT_ARITY: usize = 5;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WeightChoice {
    Uniform,
    Given(WeightVector),
}

/// All bounds for one `n`, from the cheapest to the most expensive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub n: usize,
    pub corollary_lower_bound: BigRational,
    pub two_lambda: u64,
    pub chamber_count: u64,
    /// Present for `n ≤ 4`.
    pub brute_force_count: Option<u64>,
    pub schlafli_upper_bound: BigUint,
}

impl BoundsReport {
    /// `corollary = 2Λ ≤ C(E) ≤ Schläfli`, and the brute-force count equals
    /// `C(E)` when present.
    pub fn chain_holds(&self) -> bool {
        let two_lambda = BigRational::from_integer(BigInt::from(self.two_lambda));
        self.corollary_lower_bound == two_lambda
            && self.two_lambda <= self.chamber_count
            && BigUint::from(self.chamber_count) <= self.schlafli_upper_bound
            && self
                .brute_force_count
                .is_none_or(|b| b == self.chamber_count)
    }
}

pub fn bounds_report(n: usize, weights: &WeightChoice) -> Result<BoundsReport> {
    if !(1..=MAX_REPORT_ARITY).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: 1,
            max: MAX_REPORT_ARITY as i64,
        });
    }
    let e = generate_e(n)?;
    let p = match weights {
        WeightChoice::Uniform => WeightVector::uniform(e.len()),
        WeightChoice::Given(p) => p.clone(),
    };
    let flags = FlagSystem::new(&e)?;
    let corollary = flags.theorem1_sum(&p)? * BigRational::from_integer(2.into());
    let lambda = flags.lambda_count(&OrderPermutation::identity(e.len()))?;
    let brute_force_count = if n <= MAX_COUNT_ARITY {
        Some(count_threshold_functions(n)?)
    } else {
        None
    };
    Ok(BoundsReport {
        n,
        corollary_lower_bound: corollary,
        two_lambda: 2 * lambda,
        chamber_count: flags.lattice().chamber_count(),
        brute_force_count,
        schlafli_upper_bound: schlafli_bound(n)?,
    })
}
