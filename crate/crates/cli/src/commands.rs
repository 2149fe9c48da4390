// SPDX-License-Identifier: Apache-2.0

use std::fmt::Write as _;
use std::path::Path;

use anyhow::{bail, Context, Result};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use flagbound_core::arrangement::{chamber_count_dr, generate_e, VectorSet};
use flagbound_core::flags::{FlagSystem, OrderPermutation, WeightVector};
use flagbound_core::homology::{homology_rank, Coefficients};
use flagbound_core::threshold::{bounds_report, count_threshold_functions, WeightChoice};
use flagbound_core::verify::{verify, Level};
use flagbound_core::BigRational;

use crate::args::{Command, LevelArg, Source};

/// A finished run: both renderings, and whether every check passed.
pub struct Outcome {
    pub ok: bool,
    pub text: String,
    pub json: String,
}

fn outcome<T: Serialize>(ok: bool, text: String, value: &T) -> Result<Outcome> {
    Ok(Outcome {
        ok,
        text,
        json: serde_json::to_string(value)?,
    })
}

fn load(source: &Source) -> Result<VectorSet> {
    match (source.n, &source.input) {
        (Some(n), None) => Ok(generate_e(n)?),
        (None, Some(path)) => {
            VectorSet::read(path).with_context(|| format!("reading {}", path.display()))
        }
        _ => bail!("give exactly one of --n and --input"),
    }
}

fn source_label(source: &Source) -> String {
    match (source.n, &source.input) {
        (Some(n), _) => format!("E({n})"),
        (_, Some(path)) => path.display().to_string(),
        _ => String::new(),
    }
}

/// `uniform`, `random:<seed>:<count>`, or a weight file.
fn weight_vectors(choice: &str, t: usize) -> Result<Vec<WeightVector>> {
    if choice == "uniform" {
        return Ok(vec![WeightVector::uniform(t)]);
    }
    if let Some(rest) = choice.strip_prefix("random:") {
        let (seed, count) = rest
            .split_once(':')
            .context("random weights are given as random:<seed>:<count>")?;
        let seed: u64 = seed.parse().context("bad seed")?;
        let count: usize = count.parse().context("bad count")?;
        if count == 0 {
            bail!("at least one weight vector is needed");
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        return Ok((0..count)
            .map(|_| WeightVector::random(t, &mut rng))
            .collect());
    }
    let p = WeightVector::read(Path::new(choice))
        .with_context(|| format!("reading weights {choice}"))?;
    if p.len() != t {
        bail!("{choice} holds {} weights, expected {t}", p.len());
    }
    Ok(vec![p])
}

fn rat(x: &BigRational) -> String {
    x.to_string()
}

pub fn run(command: &Command) -> Result<Outcome> {
    match command {
        Command::GenE { n, out } => {
            let e = generate_e(*n)?;
            match out {
                Some(path) => {
                    e.write(path)
                        .with_context(|| format!("writing {}", path.display()))?;
                    #[derive(Serialize)]
                    struct Written {
                        n: usize,
                        vectors: String,
                        path: String,
                    }
                    let path = path.display().to_string();
                    let text = format!("wrote {} vectors to {path}", e.len());
                    outcome(
                        true,
                        text,
                        &Written {
                            n: *n,
                            vectors: e.len().to_string(),
                            path,
                        },
                    )
                }
                None => {
                    #[derive(Serialize)]
                    struct Vectors {
                        n: usize,
                        vectors: Vec<Vec<i64>>,
                    }
                    let vectors = e
                        .vectors()
                        .iter()
                        .map(|v| v.to_i64s().expect("entries are ±1"))
                        .collect();
                    outcome(true, e.to_text(), &Vectors { n: *n, vectors })
                }
            }
        }

        Command::Chambers { source, oracle } => {
            let h = load(source)?;
            let lattice = FlagSystem::new(&h)?;
            let c = lattice.lattice().chamber_count();
            let dr = if *oracle {
                Some(chamber_count_dr(&h)?)
            } else {
                None
            };
            let agree = dr.is_none_or(|d| d == c);
            #[derive(Serialize)]
            struct Chambers {
                source: String,
                flats: String,
                chambers: String,
                oracle: Option<String>,
                agree: bool,
            }
            let mut text = format!(
                "{}: {c} chambers ({} flats)",
                source_label(source),
                lattice.lattice().len()
            );
            if let Some(d) = dr {
                write!(
                    text,
                    "\ndeletion-restriction: {d} ({})",
                    if agree { "agrees" } else { "DISAGREES" }
                )?;
            }
            let value = Chambers {
                source: source_label(source),
                flats: lattice.lattice().len().to_string(),
                chambers: c.to_string(),
                oracle: dr.map(|d| d.to_string()),
                agree,
            };
            outcome(agree, text, &value)
        }

        Command::Lambda {
            source,
            order_seed,
            order_trials,
        } => {
            let h = load(source)?;
            let sys = FlagSystem::new(&h)?;
            let t = h.len();
            let identity = sys.lambda_count(&OrderPermutation::identity(t))?;
            let mut rng = ChaCha8Rng::seed_from_u64(*order_seed);
            let mut trials = Vec::with_capacity(*order_trials);
            for _ in 0..*order_trials {
                trials.push(sys.lambda_count(&OrderPermutation::random(t, &mut rng))?);
            }
            let independent = trials.iter().all(|&x| x == identity);
            #[derive(Serialize)]
            struct Lambda {
                source: String,
                identity: String,
                order_seed: String,
                random_orders: Vec<String>,
                order_independent: bool,
            }
            let mut text = format!(
                "{}: Λ = {identity} under the identity order",
                source_label(source)
            );
            if !trials.is_empty() {
                write!(
                    text,
                    "\n{} random orders (seed {order_seed}): {:?}\norder independent: {independent}",
                    trials.len(),
                    trials
                )?;
            }
            let value = Lambda {
                source: source_label(source),
                identity: identity.to_string(),
                order_seed: order_seed.to_string(),
                random_orders: trials.iter().map(u64::to_string).collect(),
                order_independent: independent,
            };
            outcome(independent, text, &value)
        }

        Command::Bound { n, weights } => {
            let e = generate_e(*n)?;
            let sys = FlagSystem::new(&e)?;
            let ps = weight_vectors(weights, e.len())?;
            let two = BigRational::from_integer(2.into());
            let values = ps
                .iter()
                .map(|p| sys.theorem1_sum(p))
                .collect::<Result<Vec<_>, _>>()?;
            let independent = values.windows(2).all(|w| w[0] == w[1]);
            #[derive(Serialize)]
            struct Bound {
                n: usize,
                weights: String,
                values: Vec<String>,
                doubled: Vec<String>,
                lower_bound: String,
                p_independent: bool,
            }
            let doubled: Vec<String> = values.iter().map(|v| rat(&(v * &two))).collect();
            let mut text = String::new();
            for (k, (v, d)) in values.iter().zip(&doubled).enumerate() {
                let neg = if ps[k].has_negative() {
                    " (has a negative weight)"
                } else {
                    ""
                };
                writeln!(text, "weights #{}: sum {v}, bound {d}{neg}", k + 1)?;
            }
            write!(
                text,
                "P(2,{n}) ≥ {}\np-independent: {independent}",
                doubled[0]
            )?;
            let value = Bound {
                n: *n,
                weights: weights.clone(),
                values: values.iter().map(rat).collect(),
                lower_bound: doubled[0].clone(),
                doubled,
                p_independent: independent,
            };
            outcome(independent, text, &value)
        }

        Command::Homology {
            source,
            degree,
            field,
        } => {
            let h = load(source)?;
            let field: Coefficients = field.parse()?;
            let rank = homology_rank(&h, *degree, field)?;
            #[derive(Serialize)]
            struct Homology {
                source: String,
                degree: i64,
                field: String,
                rank: String,
            }
            let text = format!(
                "{}: rank H~_{degree} over {field} = {rank}",
                source_label(source)
            );
            let value = Homology {
                source: source_label(source),
                degree: *degree,
                field: field.to_string(),
                rank: rank.to_string(),
            };
            outcome(true, text, &value)
        }

        Command::CountThreshold { n } => {
            let count = count_threshold_functions(*n)?;
            #[derive(Serialize)]
            struct Count {
                n: usize,
                count: String,
            }
            outcome(
                true,
                format!("P(2,{n}) = {count}"),
                &Count {
                    n: *n,
                    count: count.to_string(),
                },
            )
        }

        Command::MonteCarlo {
            source,
            weights,
            samples,
            seed,
        } => {
            let h = load(source)?;
            let sys = FlagSystem::new(&h)?;
            let p = weight_vectors(weights, h.len())?
                .into_iter()
                .next()
                .expect("at least one weight vector");
            let est = sys.monte_carlo_expectation(&p, *samples, *seed)?;
            let lambda = sys.lambda_count(&OrderPermutation::identity(h.len()))?;
            let constant = est.min == lambda && est.max == lambda;
            #[derive(Serialize)]
            struct MonteCarlo {
                source: String,
                samples: String,
                seed: String,
                mean: String,
                min: String,
                max: String,
                lambda: String,
                /// Floating point, unlike every other field.
                stderr_approx: f64,
                constant: bool,
            }
            let text = format!(
                "{}: {} samples, mean {} (min {}, max {}), stderr ≈ {:.3e}\nΛ = {lambda}, every sample equal: {constant}",
                source_label(source),
                est.samples,
                est.mean,
                est.min,
                est.max,
                est.stderr
            );
            let value = MonteCarlo {
                source: source_label(source),
                samples: est.samples.to_string(),
                seed: seed.to_string(),
                mean: rat(&est.mean),
                min: est.min.to_string(),
                max: est.max.to_string(),
                lambda: lambda.to_string(),
                stderr_approx: est.stderr,
                constant,
            };
            outcome(constant, text, &value)
        }

        Command::Verify { n, level, seed } => {
            let level = match level {
                LevelArg::Fast => Level::Fast,
                LevelArg::Full => Level::Full,
            };
            let checks = verify(*n, level, *seed)?;
            let all = checks.iter().all(|c| c.passed);
            #[derive(Serialize)]
            struct CheckOut<'a> {
                name: &'a str,
                passed: bool,
                detail: &'a str,
            }
            #[derive(Serialize)]
            struct Verify<'a> {
                n: usize,
                level: String,
                seed: String,
                checks: Vec<CheckOut<'a>>,
                passed: String,
                failed: String,
                all_passed: bool,
            }
            let mut text = String::new();
            for c in &checks {
                writeln!(
                    text,
                    "{} {}: {}",
                    if c.passed { "PASS" } else { "FAIL" },
                    c.name,
                    c.detail
                )?;
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            write!(text, "{} passed, {failed} failed", checks.len() - failed)?;
            let value = Verify {
                n: *n,
                level: level.to_string(),
                seed: seed.to_string(),
                checks: checks
                    .iter()
                    .map(|c| CheckOut {
                        name: &c.name,
                        passed: c.passed,
                        detail: &c.detail,
                    })
                    .collect(),
                passed: (checks.len() - failed).to_string(),
                failed: failed.to_string(),
                all_passed: all,
            };
            outcome(all, text, &value)
        }

        Command::Report { n } => {
            let r = bounds_report(*n, &WeightChoice::Uniform)?;
            #[derive(Serialize)]
            struct Report {
                n: usize,
                lower_bound: String,
                two_lambda: String,
                chambers: String,
                brute_force: Option<String>,
                schlafli: String,
            }
            let value = Report {
                n: r.n,
                lower_bound: rat(&r.corollary_lower_bound),
                two_lambda: r.two_lambda.to_string(),
                chambers: r.chamber_count.to_string(),
                brute_force: r.brute_force_count.map(|b| b.to_string()),
                schlafli: r.schlafli_upper_bound.to_string(),
            };
            let ok = r.chain_holds();
            let mut text = String::new();
            writeln!(text, "n = {n}")?;
            writeln!(text, "lower bound            {}", value.lower_bound)?;
            writeln!(text, "2Λ                     {}", value.two_lambda)?;
            writeln!(text, "chambers C(E)          {}", value.chambers)?;
            writeln!(
                text,
                "threshold functions    {}",
                value.brute_force.as_deref().unwrap_or("(not computed)")
            )?;
            writeln!(text, "Schläfli upper bound   {}", value.schlafli)?;
            write!(text, "chain holds: {ok}")?;
            outcome(ok, text, &value)
        }
    }
}
