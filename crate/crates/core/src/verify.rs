// SPDX-License-Identifier: Apache-2.0

//! The identity suite: every exact relation between the counts, checked on
//! `E(1), ..., E(n)` and on seeded random vector sets.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::arrangement::{chamber_count_dr, generate_e, schlafli_bound, VectorSet};
use crate::error::{Error, Result};
use crate::flags::{count_admissible_orders, FlagSystem, OrderPermutation, WeightVector};
use crate::homology::{homology_rank, mobius_via_homology, Coefficients};
use crate::threshold::{count_threshold_functions, MAX_COUNT_ARITY};

/// How much of the suite to run.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Level {
    /// `n ≤ 3`, five weight vectors, short Monte-Carlo runs.
    Fast,
    /// `n ≤ 4` plus the `n = 5` lattice path.
    Full,
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "fast" => Ok(Level::Fast),
            "full" => Ok(Level::Full),
            _ => Err(Error::Parse {
                line: 0,
                message: format!("level must be `fast` or `full`, got `{s}`"),
            }),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Level::Fast => "fast",
            Level::Full => "full",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

struct Budget {
    max_n: usize,
    weights: usize,
    orders: usize,
    samples: u64,
    random_sets: usize,
}

impl Level {
    fn budget(self) -> Budget {
        match self {
            Level::Fast => Budget {
                max_n: 3,
                weights: 5,
                orders: 5,
                samples: 500,
                random_sets: 5,
            },
            Level::Full => Budget {
                max_n: 5,
                weights: 10,
                orders: 20,
                samples: 10_000,
                random_sets: 20,
            },
        }
    }
}

fn all_equal<T: PartialEq>(xs: &[T]) -> bool {
    xs.windows(2).all(|p| p[0] == p[1])
}

/// Runs the suite on `E(1), ..., E(min(n, cap))`, where the cap is 3 for
/// [`Level::Fast`] and 5 for [`Level::Full`] (the `n = 5` path skips the
/// checks that need brute force or homology). `seed` drives every random
/// choice.
pub fn verify(n: usize, level: Level, seed: u64) -> Result<Vec<Check>> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            min: 1,
            max: level.budget().max_n as i64,
        });
    }
    let budget = level.budget();
    let top = n.min(budget.max_n);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    for k in 1..=top {
        let e = generate_e(k)?;
        let t = e.len();
        let sys = FlagSystem::new(&e)?;
        let lat = sys.lattice();
        let lambda = sys.lambda_count(&OrderPermutation::identity(t))?;
        let chambers = lat.chamber_count();
        let dr = chamber_count_dr(&e)?;

        // chamber counts
        let mut counts = vec![chambers, dr];
        let mut detail = format!("lattice {chambers}, deletion-restriction {dr}");
        if k <= MAX_COUNT_ARITY {
            let brute = count_threshold_functions(k)?;
            counts.push(brute);
            detail += &format!(", threshold functions {brute}");
        }
        checks.push(Check::new(
            format!("chambers n={k}"),
            all_equal(&counts),
            detail,
        ));

        // weighted flag sum against Λ
        let target = BigRational::from_integer(lambda.into());
        let mut values = vec![sys.theorem1_sum(&WeightVector::uniform(t))?];
        let mut negative = 0;
        for _ in 0..budget.weights {
            let p = WeightVector::random(t, &mut rng);
            negative += usize::from(p.has_negative());
            values.push(sys.theorem1_sum(&p)?);
        }
        checks.push(Check::new(
            format!("flag sum n={k}"),
            values.iter().all(|v| *v == target),
            format!(
                "{} weight vectors ({negative} with a negative entry), Λ = {lambda}",
                values.len()
            ),
        ));

        // order independence
        let mut lambdas = Vec::new();
        let mut basis_ok = true;
        for j in 0..budget.orders {
            let order = OrderPermutation::random(t, &mut rng);
            let c = sys.lambda_count(&order)?;
            if j < 5 && k <= 4 {
                basis_ok &= sys.basis_bsigma(&order)?.len() as u64 == c;
            }
            lambdas.push(c);
        }
        checks.push(Check::new(
            format!("order independence n={k}"),
            basis_ok && lambdas.iter().all(|&c| c == lambda),
            format!("{} random orders", lambdas.len()),
        ));

        // the bound chain
        let schlafli = schlafli_bound(k)?;
        checks.push(Check::new(
            format!("bound chain n={k}"),
            2 * lambda <= chambers && BigUint::from(chambers) <= schlafli,
            format!("2Λ = {} ≤ C = {chambers} ≤ {schlafli}", 2 * lambda),
        ));

        if k <= 3 {
            let mut ok = true;
            for (id, flat) in lat.flats().iter().enumerate().skip(1) {
                ok &= mobius_via_homology(&e, flat, Coefficients::Prime(2))?
                    == lat.mobius(id).unsigned_abs();
            }
            checks.push(Check::new(
                format!("möbius via homology n={k}"),
                ok,
                format!("{} flats", lat.len() - 1),
            ));
        }

        if k <= 4 {
            let fields = [
                Coefficients::Prime(2),
                Coefficients::Prime(3),
                Coefficients::Rationals,
            ];
            let ranks = fields
                .iter()
                .map(|&f| homology_rank(&e, k as i64 - 1, f))
                .collect::<Result<Vec<_>>>()?;
            checks.push(Check::new(
                format!("homology n={k}"),
                ranks.iter().all(|&r| r == lambda),
                format!("ranks over GF(2), GF(3), Q: {ranks:?}"),
            ));
        }

        if (2..=3).contains(&k) {
            let mc =
                sys.monte_carlo_expectation(&WeightVector::uniform(t), budget.samples, seed)?;
            checks.push(Check::new(
                format!("monte carlo n={k}"),
                mc.min == lambda && mc.max == lambda,
                format!("{} samples, mean {}", mc.samples, mc.mean),
            ));
        }

        if k == 2 {
            checks.push(admissible_orders_check("admissible orders E(2)", &e)?);
        }
    }

    if level == Level::Full {
        for j in 0..5 {
            let h = VectorSet::random_spanning(3, 5 + j % 2, 3, &mut rng);
            checks.push(admissible_orders_check(
                &format!("admissible orders random #{}", j + 1),
                &h,
            )?);
        }
    }

    for j in 0..budget.random_sets {
        let d = 3 + j % 2;
        let h = VectorSet::random_spanning(d, d + 1 + j % 4, 3, &mut rng);
        checks.push(random_set_check(j, &h, &mut rng)?);
    }
    Ok(checks)
}

/// Every independent tuple `W` and every admissible first vector `i`:
/// `count · W[H] = (T - 1)!`.
fn admissible_orders_check(name: &str, h: &VectorSet) -> Result<Check> {
    let t = h.len();
    let fact: BigUint = (1..t as u64).product();
    let sys = FlagSystem::new(h)?;
    let mut cases = Vec::new();
    sys.enumerate_tuples(|w, flag| {
        for i in (0..t).filter(|&i| !flag.top_members.contains(i)) {
            cases.push((w.clone(), i, flag.product.clone()));
        }
    });
    let mut ok = true;
    for (w, i, product) in &cases {
        ok &= count_admissible_orders(h, w, *i)? * product == fact;
    }
    Ok(Check::new(
        name,
        ok,
        format!("{} (tuple, first) pairs, T = {t}", cases.len()),
    ))
}

fn random_set_check(j: usize, h: &VectorSet, rng: &mut ChaCha8Rng) -> Result<Check> {
    let t = h.len();
    let sys = FlagSystem::new(h)?;
    let lambda = sys.lambda_count(&OrderPermutation::identity(t))?;
    let target = BigRational::from_integer(lambda.into());
    let mut ok = true;
    for _ in 0..3 {
        ok &= sys.theorem1_sum(&WeightVector::random(t, rng))? == target;
        ok &= sys.lambda_count(&OrderPermutation::random(t, rng))? == lambda;
    }
    let chambers = sys.lattice().chamber_count();
    ok &= chambers == chamber_count_dr(h)?;
    Ok(Check::new(
        format!("random set #{}", j + 1),
        ok,
        format!(
            "T = {t}, d = {}, Λ = {lambda}, C = {chambers}",
            h.ambient_dim()
        ),
    ))
}
