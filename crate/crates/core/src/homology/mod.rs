// SPDX-License-Identifier: Apache-2.0

//! Homology of the complex of non-spanning subsets.
//!
//! The complex `K^H` has the vectors of `H` as vertices; a set of vertices is
//! a simplex iff its span is a proper subspace. Being a simplex is inherited
//! by subsets, so candidate vertex sets are grown by backtracking and cut off
//! as soon as they reach full rank.
//!
//! Homology is reduced: the empty simplex sits in degree `-1` and every
//! vertex has boundary `[∅]`. In particular the complex `{∅}` has
//! `H̃_{-1}` of rank one.

mod field;
mod sparse;

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::arrangement::{Flat, VectorSet};
use crate::error::{Error, Result};
use crate::exactlin::{EliminationState, IntegerVector};

pub use field::Coefficients;
use field::{Field, PrimeField, RationalField};
use sparse::Row;

/// Upper limit on the number of simplices a slice may store.
pub const MAX_SIMPLICES: u64 = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Augmentation {
    Reduced,
    Unreduced,
}

/// Simplices of `K^H` in degrees `m - 1`, `m`, `m + 1`.
///
/// Simplices are sorted vertex lists; within each degree they are listed in
/// lexicographic order.
#[derive(Clone, Debug)]
pub struct ComplexSlice {
    degree: i64,
    /// `levels[j]` holds the simplices of degree `degree - 1 + j`.
    levels: [Vec<Vec<usize>>; 3],
}

impl ComplexSlice {
    pub fn build(h: &VectorSet, degree: i64) -> Result<Self> {
        if degree < -1 {
            return Err(Error::Precondition(format!("degree {degree} < -1")));
        }
        let d = h.ambient_dim();
        // vertex counts k + 1 for degrees k = m-1, m, m+1
        let sizes: [i64; 3] = [degree, degree + 1, degree + 2];
        let max_size = sizes[2] as usize;
        let mut levels: [Vec<Vec<usize>>; 3] = Default::default();
        let mut stored = 0u64;

        let mut stack: Vec<(usize, Vec<usize>, EliminationState)> =
            vec![(0, Vec::new(), EliminationState::new(d))];
        while let Some((start, chosen, state)) = stack.pop() {
            if let Some(slot) = sizes.iter().position(|&s| s == chosen.len() as i64) {
                stored += 1;
                if stored > MAX_SIMPLICES {
                    return Err(Error::guard("stored simplices", MAX_SIMPLICES, stored));
                }
                levels[slot].push(chosen.clone());
            }
            if chosen.len() == max_size {
                continue;
            }
            // reverse so that the stack pops in lexicographic order
            for i in (start..h.len()).rev() {
                let (next, _) = state.extend(h.vector(i))?;
                if next.rank() == d {
                    continue;
                }
                let mut c = chosen.clone();
                c.push(i);
                stack.push((i + 1, c, next));
            }
        }
        for level in levels.iter_mut() {
            level.sort();
        }
        Ok(ComplexSlice { degree, levels })
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    /// Simplices of degree `k`, for `k` in `m-1 ..= m+1`.
    pub fn simplices(&self, k: i64) -> &[Vec<usize>] {
        let j = k - (self.degree - 1);
        assert!((0..3).contains(&j), "degree {k} not stored in this slice");
        &self.levels[j as usize]
    }

    /// Rows of `∂_k` for `k ∈ {m, m+1}`: one row per `k`-simplex, indexed by
    /// the `(k-1)`-simplices.
    fn boundary_rows<F: Field>(
        &self,
        field: &F,
        k: i64,
        aug: Augmentation,
    ) -> (usize, Vec<Row<F::Elem>>) {
        let faces = self.simplices(k - 1);
        let cols = faces.len();
        if k == 0 && aug == Augmentation::Unreduced {
            return (cols, vec![Vec::new(); self.simplices(0).len()]);
        }
        let index: HashMap<&[usize], usize> = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.as_slice(), i))
            .collect();
        let rows = self
            .simplices(k)
            .iter()
            .map(|s| {
                let mut row: Row<F::Elem> = (0..s.len())
                    .map(|j| {
                        let mut face = s.clone();
                        face.remove(j);
                        let col = index[face.as_slice()];
                        let sign = if j % 2 == 0 { 1 } else { -1 };
                        (col, field.embed(sign))
                    })
                    .filter(|(_, v)| !field.is_zero(v))
                    .collect();
                row.sort_by_key(|e| e.0);
                row
            })
            .collect();
        (cols, rows)
    }

    fn rank_of<F: Field>(&self, field: &F, k: i64, aug: Augmentation) -> usize {
        if k - 1 < -1 {
            return 0;
        }
        let (cols, rows) = self.boundary_rows(field, k, aug);
        sparse::rank(field, cols, rows)
    }

    fn homology<F: Field>(&self, field: &F, aug: Augmentation) -> u64 {
        let m = self.degree;
        let chains = self.simplices(m).len();
        let out = self.rank_of(field, m, aug);
        let inc = self.rank_of(field, m + 1, aug);
        (chains - out - inc) as u64
    }

    /// `rank H_m` over `field`.
    pub fn rank(&self, field: Coefficients, aug: Augmentation) -> Result<u64> {
        Ok(match field.validate()? {
            Coefficients::Prime(p) => self.homology(&PrimeField(p), aug),
            Coefficients::Rationals => self.homology(&RationalField, aug),
        })
    }

    /// Whether `∂_m ∘ ∂_{m+1}` vanishes over `field`.
    pub fn boundary_squared_is_zero(&self, field: Coefficients) -> Result<bool> {
        Ok(match field.validate()? {
            Coefficients::Prime(p) => self.dd_zero(&PrimeField(p)),
            Coefficients::Rationals => self.dd_zero(&RationalField),
        })
    }

    fn dd_zero<F: Field>(&self, field: &F) -> bool {
        let m = self.degree;
        if m - 1 < -1 {
            return true;
        }
        let (_, outer) = self.boundary_rows(field, m, Augmentation::Reduced);
        let (_, inner) = self.boundary_rows(field, m + 1, Augmentation::Reduced);
        inner.iter().all(|row| {
            let mut acc: HashMap<usize, F::Elem> = HashMap::new();
            for (c, v) in row {
                for (c2, v2) in &outer[*c] {
                    let e = acc.entry(*c2).or_insert_with(|| field.zero());
                    *e = field.add(e, &field.mul(v, v2));
                }
            }
            acc.values().all(|x| field.is_zero(x))
        })
    }
}

/// Rank of the reduced homology `H̃_m(K^H)` over `field`.
pub fn homology_rank(h: &VectorSet, degree: i64, field: Coefficients) -> Result<u64> {
    homology_rank_with(h, degree, field, Augmentation::Reduced)
}

pub fn homology_rank_with(
    h: &VectorSet,
    degree: i64,
    field: Coefficients,
    aug: Augmentation,
) -> Result<u64> {
    let field = field.validate()?;
    ComplexSlice::build(h, degree)?.rank(field, aug)
}

/// The members of `u` written in the coordinates of its canonical basis, as
/// a spanning vector set of `Q^{dim u}`.
pub fn restrict_to_flat(h: &VectorSet, u: &Flat) -> Result<VectorSet> {
    let vectors = u
        .members()
        .iter()
        .map(|i| {
            let coords: Vec<BigInt> = u
                .subspace()
                .coordinates(h.vector(i))?
                .expect("members lie in the flat");
            IntegerVector::new(coords)
        })
        .collect::<Result<Vec<_>>>()?;
    VectorSet::new(vectors)
}

/// `rank H̃_{dim u - 2}(K^{H ∩ u})`, which equals `|μ(0̂, u)|`.
pub fn mobius_via_homology(h: &VectorSet, u: &Flat, field: Coefficients) -> Result<u64> {
    if u.dim() == 0 {
        return Err(Error::Precondition(
            "the bottom flat has no restriction complex".into(),
        ));
    }
    let restricted = restrict_to_flat(h, u)?;
    homology_rank(&restricted, u.dim() as i64 - 2, field)
}
