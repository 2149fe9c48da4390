// SPDX-License-Identifier: Apache-2.0

//! Sampling orders from the weighted distribution on permutations: the first
//! vector is drawn with probability `p_i`, the remaining positions uniformly.
//! The number of tuples meeting the order conditions does not depend on the
//! order, so every sample should return the same value.

use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{FlagSystem, OrderPermutation, WeightVector};
use crate::arrangement::VectorSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct MonteCarloEstimate {
    pub samples: u64,
    pub mean: BigRational,
    /// Standard error of the mean; approximate (floating point).
    pub stderr: f64,
    pub min: u64,
    pub max: u64,
}

impl FlagSystem {
    pub fn monte_carlo_expectation(
        &self,
        p: &WeightVector,
        samples: u64,
        seed: u64,
    ) -> Result<MonteCarloEstimate> {
        let t = self.vectors().len();
        p.check_len(t)?;
        if samples == 0 {
            return Err(Error::Precondition("at least one sample is needed".into()));
        }
        if let Some((index, value)) = p
            .weights()
            .iter()
            .enumerate()
            .find(|(_, x)| x.is_negative())
        {
            return Err(Error::NegativeWeight {
                index,
                value: value.to_string(),
            });
        }
        let probs: Vec<f64> = p
            .weights()
            .iter()
            .map(|x| x.to_f64().unwrap_or(0.0))
            .collect();
        let first = WeightedIndex::new(&probs)
            .map_err(|e| Error::Precondition(format!("weights cannot be sampled: {e}")))?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        let (mut sum, mut sum_sq) = (0u128, 0u128);
        let (mut min, mut max) = (u64::MAX, 0u64);
        for _ in 0..samples {
            let order = OrderPermutation::random_with_first(t, first.sample(&mut rng), &mut rng);
            let value = self.lambda_count(&order)?;
            sum += u128::from(value);
            sum_sq += u128::from(value) * u128::from(value);
            min = min.min(value);
            max = max.max(value);
        }
        let mean = BigRational::new(sum.into(), samples.into());
        let stderr = if samples > 1 {
            let nf = samples as f64;
            let m = sum as f64 / nf;
            let var = ((sum_sq as f64 - nf * m * m) / (nf - 1.0)).max(0.0);
            (var / nf).sqrt()
        } else {
            0.0
        };
        Ok(MonteCarloEstimate {
            samples,
            mean,
            stderr,
            min,
            max,
        })
    }
}

pub fn monte_carlo_expectation(
    h: &VectorSet,
    p: &WeightVector,
    samples: u64,
    seed: u64,
) -> Result<MonteCarloEstimate> {
    FlagSystem::new(h)?.monte_carlo_expectation(p, samples, seed)
}
