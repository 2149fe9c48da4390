// SPDX-License-Identifier: Apache-2.0

//! Exact linear algebra over the integers and rationals.
//!
//! Everything here is exact. Vectors are integer valued; subspaces are kept
//! as rational bases in reduced row-echelon form with unit pivots, which is
//! unique for a given subspace. Two [`SubspaceBasis`] values therefore compare
//! equal (and hash equal) exactly when they describe the same subspace.
//!
//! Elimination itself runs fraction-free over [`BigInt`]; rationals only
//! appear when the canonical form is produced.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A vector in `Z^d`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntegerVector(Vec<BigInt>);

impl IntegerVector {
    pub fn new(coords: Vec<BigInt>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::DimensionMismatch {
                expected: 1,
                found: 0,
            });
        }
        Ok(IntegerVector(coords))
    }

    /// Panics on an empty slice.
    pub fn from_i64s(coords: &[i64]) -> Self {
        assert!(
            !coords.is_empty(),
            "IntegerVector needs at least one coordinate"
        );
        IntegerVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Coordinates as machine integers, if they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.0.iter().map(ToPrimitive::to_i64).collect()
    }
}

impl fmt::Display for IntegerVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// Canonical basis of a linear subspace of `Q^d`.
///
/// Rows are in reduced row-echelon form: each row starts with a 1 in its
/// pivot column, pivot columns are zero in every other row, and rows are
/// sorted by pivot. The zero subspace has no rows.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    ambient_dim: usize,
    rows: Vec<Vec<BigRational>>,
}

impl SubspaceBasis {
    pub fn zero(ambient_dim: usize) -> Self {
        SubspaceBasis {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let rows = (0..ambient_dim)
            .map(|i| {
                (0..ambient_dim)
                    .map(|j| {
                        if i == j {
                            BigRational::one()
                        } else {
                            BigRational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        SubspaceBasis { ambient_dim, rows }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.rows
    }

    /// Pivot column of each row, ascending.
    pub fn pivots(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .position(|x| !x.is_zero())
                    .expect("basis rows are nonzero")
            })
            .collect()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient_dim
    }

    pub fn contains(&self, v: &IntegerVector) -> Result<bool> {
        Ok(self.coordinates(v)?.is_some())
    }

    /// Coordinates of `v` with respect to the basis rows, or `None` if `v`
    /// is outside the subspace. Because of the unit pivots these are just the
    /// entries of `v` at the pivot columns, so they are integers.
    pub fn coordinates(&self, v: &IntegerVector) -> Result<Option<Vec<BigInt>>> {
        check_dim(self.ambient_dim, v.dim())?;
        let pivots = self.pivots();
        let coeffs: Vec<BigInt> = pivots.iter().map(|&p| v.coords()[p].clone()).collect();
        for col in 0..self.ambient_dim {
            let mut acc = BigRational::from_integer(v.coords()[col].clone());
            for (row, c) in self.rows.iter().zip(&coeffs) {
                if !row[col].is_zero() && !c.is_zero() {
                    acc -= &row[col] * BigRational::from_integer(c.clone());
                }
            }
            if !acc.is_zero() {
                return Ok(None);
            }
        }
        Ok(Some(coeffs))
    }

    /// Integer vectors whose span is this subspace: each row scaled by the
    /// lcm of its denominators.
    pub fn integer_rows(&self) -> Vec<IntegerVector> {
        self.rows
            .iter()
            .map(|row| {
                let lcm = row.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
                IntegerVector(row.iter().map(|x| x.numer() * (&lcm / x.denom())).collect())
            })
            .collect()
    }
}

impl fmt::Display for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "span[")?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", parts.join(" "))?;
        }
        write!(f, "] in Q^{}", self.ambient_dim)
    }
}

fn check_dim(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Integer row echelon form built one vector at a time.
///
/// Rows are kept primitive (content 1) and sorted by pivot column; every row
/// is zero left of its pivot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationState {
    ambient_dim: usize,
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl EliminationState {
    pub fn new(ambient_dim: usize) -> Self {
        EliminationState {
            ambient_dim,
            rows: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &IntegerVector) -> Result<Vec<BigInt>> {
        check_dim(self.ambient_dim, v.dim())?;
        let mut w = v.coords().to_vec();
        for (pivot, row) in &self.rows {
            if w[*pivot].is_zero() {
                continue;
            }
            let a = &row[*pivot];
            let b = w[*pivot].clone();
            for (x, r) in w.iter_mut().zip(row) {
                *x = &*x * a - &b * r;
            }
            make_primitive(&mut w);
        }
        Ok(w)
    }

    /// Whether `v` lies in the span of the absorbed vectors.
    pub fn contains(&self, v: &IntegerVector) -> Result<bool> {
        Ok(self.reduce(v)?.iter().all(Zero::is_zero))
    }

    /// Absorbs `v`; returns `true` iff the rank grew.
    pub fn absorb(&mut self, v: &IntegerVector) -> Result<bool> {
        let w = self.reduce(v)?;
        let Some(pivot) = w.iter().position(|x| !x.is_zero()) else {
            return Ok(false);
        };
        let at = self.rows.partition_point(|(p, _)| *p < pivot);
        self.rows.insert(at, (pivot, w));
        Ok(true)
    }

    /// Value-semantics variant of [`absorb`](Self::absorb).
    pub fn extend(&self, v: &IntegerVector) -> Result<(EliminationState, bool)> {
        let mut next = self.clone();
        let grew = next.absorb(v)?;
        Ok((next, grew))
    }

    /// Canonical rational RREF of the absorbed span.
    pub fn to_basis(&self) -> SubspaceBasis {
        let mut rows: Vec<(usize, Vec<BigRational>)> = self
            .rows
            .iter()
            .map(|(p, row)| {
                let lead = &row[*p];
                let r = row
                    .iter()
                    .map(|x| BigRational::new(x.clone(), lead.clone()))
                    .collect();
                (*p, r)
            })
            .collect();
        for i in (0..rows.len()).rev() {
            let (head, tail) = rows.split_at_mut(i);
            let (pivot, row_i) = (tail[0].0, &tail[0].1);
            for (_, row) in head.iter_mut() {
                if row[pivot].is_zero() {
                    continue;
                }
                let f = row[pivot].clone();
                for (x, r) in row.iter_mut().zip(row_i) {
                    if !r.is_zero() {
                        *x -= &f * r;
                    }
                }
            }
        }
        SubspaceBasis {
            ambient_dim: self.ambient_dim,
            rows: rows.into_iter().map(|(_, r)| r).collect(),
        }
    }
}

fn make_primitive(w: &mut [BigInt]) {
    let g = w.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g > BigInt::one() {
        for x in w.iter_mut() {
            *x /= &g;
        }
    }
}

fn common_dim(vectors: &[IntegerVector]) -> Result<Option<usize>> {
    let Some(first) = vectors.first() else {
        return Ok(None);
    };
    let d = first.dim();
    for v in vectors {
        check_dim(d, v.dim())?;
    }
    Ok(Some(d))
}

/// Canonical basis of the span of `vectors` inside `Q^ambient_dim`.
pub fn span_in(ambient_dim: usize, vectors: &[IntegerVector]) -> Result<SubspaceBasis> {
    let mut state = EliminationState::new(ambient_dim);
    for v in vectors {
        state.absorb(v)?;
    }
    Ok(state.to_basis())
}

/// Canonical basis of the span. An empty list spans the zero subspace of
/// `Q^0`; use [`span_in`] to fix the ambient dimension explicitly.
pub fn span(vectors: &[IntegerVector]) -> Result<SubspaceBasis> {
    let d = common_dim(vectors)?.unwrap_or(0);
    span_in(d, vectors)
}

pub fn contains(s: &SubspaceBasis, v: &IntegerVector) -> Result<bool> {
    s.contains(v)
}

pub fn rank(vectors: &[IntegerVector]) -> Result<usize> {
    let Some(d) = common_dim(vectors)? else {
        return Ok(0);
    };
    let mut state = EliminationState::new(d);
    let mut r = 0;
    for v in vectors {
        if state.absorb(v)? {
            r += 1;
        }
    }
    Ok(r)
}

/// Primitive representative of the line through `v`: content divided out and
/// the first nonzero entry made positive. Zero stays zero.
pub fn primitive_direction(v: &[BigInt]) -> Vec<BigInt> {
    let mut w = v.to_vec();
    make_primitive(&mut w);
    if w.iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        for x in w.iter_mut() {
            *x = -&*x;
        }
    }
    w
}
