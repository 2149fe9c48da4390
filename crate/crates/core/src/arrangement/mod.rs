// SPDX-License-Identifier: Apache-2.0

//! Central hyperplane arrangements given by their normal vectors.
//!
//! A [`VectorSet`] is the list of normals `w_1..w_T` in `Z^d`. The set `E` of
//! `(1, ±1, ..., ±1)` vectors is produced by [`generate_e`]; its chambers are
//! in bijection with threshold functions of `n` variables.

mod deletion;
mod lattice;
mod members;

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::Rng;

use crate::error::{Error, Result};
use crate::exactlin::{self, IntegerVector};

pub use deletion::chamber_count_dr;
pub use lattice::{build_lattice, chamber_count, Flat, FlatId, IntersectionLattice};
pub use members::MemberSet;

/// Largest `n` accepted by [`generate_e`].
pub const MAX_E_ARITY: usize = 20;

/// Ordered normals of a central arrangement.
///
/// Invariants: all vectors share the ambient dimension `d`, none is zero, no
/// two are parallel, and together they span `Q^d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorSet {
    vectors: Vec<IntegerVector>,
    ambient_dim: usize,
}

impl VectorSet {
    pub fn new(vectors: Vec<IntegerVector>) -> Result<Self> {
        let Some(first) = vectors.first() else {
            return Err(Error::TooFewVectors { needed: 1, got: 0 });
        };
        let d = first.dim();
        let mut directions: HashMap<Vec<BigInt>, usize> = HashMap::with_capacity(vectors.len());
        for (i, v) in vectors.iter().enumerate() {
            if v.dim() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: v.dim(),
                });
            }
            if v.is_zero() {
                return Err(Error::ZeroVector(i));
            }
            if let Some(&j) = directions.get(&exactlin::primitive_direction(v.coords())) {
                return Err(Error::ParallelVectors(j, i));
            }
            directions.insert(exactlin::primitive_direction(v.coords()), i);
        }
        if vectors.len() < d {
            return Err(Error::TooFewVectors {
                needed: d,
                got: vectors.len(),
            });
        }
        let r = exactlin::rank(&vectors)?;
        if r != d {
            return Err(Error::NotSpanning {
                rank: r,
                ambient: d,
            });
        }
        Ok(VectorSet {
            vectors,
            ambient_dim: d,
        })
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let vectors = rows
            .iter()
            .map(|r| IntegerVector::new(r.iter().map(|&x| BigInt::from(x)).collect()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vectors)
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Number of positions in a full tuple: `d - 1`.
    pub fn tuple_len(&self) -> usize {
        self.ambient_dim - 1
    }

    pub fn vectors(&self) -> &[IntegerVector] {
        &self.vectors
    }

    pub fn vector(&self, i: usize) -> &IntegerVector {
        &self.vectors[i]
    }

    /// Parses the text format: a `T d` header followed by `T` lines of `d`
    /// integers. Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            message: "missing `T d` header".into(),
        })?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Parse {
                line: hline,
                message: format!("bad header: {e}"),
            })?;
        let [t, d] = nums[..] else {
            return Err(Error::Parse {
                line: hline,
                message: "header must be `T d`".into(),
            });
        };
        let mut vectors = Vec::with_capacity(t);
        for (lineno, line) in lines {
            let coords: Vec<BigInt> = line
                .split_whitespace()
                .map(|tok| tok.parse::<BigInt>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse {
                    line: lineno,
                    message: format!("bad integer: {e}"),
                })?;
            if coords.len() != d {
                return Err(Error::Parse {
                    line: lineno,
                    message: format!("expected {d} integers, found {}", coords.len()),
                });
            }
            vectors.push(IntegerVector::new(coords)?);
        }
        if vectors.len() != t {
            return Err(Error::Parse {
                line: hline,
                message: format!("header announces {t} vectors, found {}", vectors.len()),
            });
        }
        Self::new(vectors)
    }

    pub fn read(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.len(), self.ambient_dim);
        for v in &self.vectors {
            let parts: Vec<String> = v.coords().iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", parts.join(" "));
        }
        out
    }

    pub fn write(&self, path: impl AsRef<Path>) -> Result<()> {
        std::fs::write(path, self.to_text())?;
        Ok(())
    }

    /// Random spanning set of `t` pairwise non-parallel vectors in `Z^d` with
    /// entries in `[-bound, bound]`. Zero vectors and parallels are dropped
    /// while drawing; draws repeat until the result spans.
    pub fn random_spanning<R: Rng + ?Sized>(d: usize, t: usize, bound: i64, rng: &mut R) -> Self {
        assert!(d >= 1 && t >= d && bound >= 1);
        loop {
            let mut seen = HashMap::new();
            let mut rows: Vec<Vec<i64>> = Vec::with_capacity(t);
            let mut attempts = 0;
            while rows.len() < t && attempts < 10_000 {
                attempts += 1;
                let v: Vec<i64> = (0..d).map(|_| rng.random_range(-bound..=bound)).collect();
                if v.iter().all(|&x| x == 0) {
                    continue;
                }
                let big: Vec<BigInt> = v.iter().map(|&x| x.into()).collect();
                if seen
                    .insert(exactlin::primitive_direction(&big), ())
                    .is_none()
                {
                    rows.push(v);
                }
            }
            if let Ok(h) = Self::from_rows(&rows) {
                if h.len() == t {
                    return h;
                }
            }
        }
    }
}

/// The `2^n` vectors `(1, b_1, ..., b_n)`, `b_i = ±1`.
///
/// Vector `k` (0-based) takes `b_{j+1} = -1` exactly when bit `j` of `k`,
/// counted from the most significant of `n` bits, is set.
pub fn generate_e(n: usize) -> Result<VectorSet> {
    if !(1..=MAX_E_ARITY).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: 1,
            max: MAX_E_ARITY as i64,
        });
    }
    let vectors = (0..1usize << n)
        .map(|k| {
            let mut c = Vec::with_capacity(n + 1);
            c.push(BigInt::one());
            for j in 0..n {
                let bit = (k >> (n - 1 - j)) & 1;
                c.push(BigInt::from(if bit == 0 { 1 } else { -1 }));
            }
            IntegerVector::new(c).expect("nonempty")
        })
        .collect();
    // E is parallel-free and spans by construction
    Ok(VectorSet {
        vectors,
        ambient_dim: n + 1,
    })
}

/// Upper bound `2 * sum_{i=0}^{n} C(2^n - 1, i)` on the chambers of `E`.
pub fn schlafli_bound(n: usize) -> Result<BigUint> {
    if !(1..=62).contains(&n) {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            min: 1,
            max: 62,
        });
    }
    let m = BigUint::from((1u64 << n) - 1);
    let mut term = BigUint::one();
    let mut sum = BigUint::zero();
    for i in 0..=n {
        if i > 0 {
            // C(m, i) = C(m, i-1) * (m - i + 1) / i
            term = term * (&m - BigUint::from(i - 1)) / BigUint::from(i);
        }
        sum += &term;
    }
    Ok(sum * 2u32)
}
