// SPDX-License-Identifier: Apache-2.0

//! The intersection lattice of a central arrangement and its Möbius function.
//!
//! Flats are built layer by layer. For a flat `F` of dimension `k` we keep an
//! integer basis `y_1..y_r` of its orthogonal complement (`r = d - k`). The
//! map `w -> (y_1·w, ..., y_r·w)` is the quotient map onto `Q^d / F`, so the
//! flats covering `F` correspond exactly to the lines through the images of
//! the non-members. Grouping the non-members by image direction yields every
//! cover with its full member set in one pass.

use std::collections::HashMap;
use std::ops::Range;

use rayon::prelude::*;

use super::members::{MemberSet, MAX_MEMBERS};
use super::VectorSet;
use crate::error::{Error, Result};
use crate::exactlin::{self, IntegerVector, SubspaceBasis};

pub type FlatId = usize;

/// A flat of the arrangement: the span of some subset of the normals.
#[derive(Clone, Debug)]
pub struct Flat {
    subspace: SubspaceBasis,
    members: MemberSet,
    generators: Vec<usize>,
    upper: Vec<FlatId>,
    lower: Vec<FlatId>,
}

impl Flat {
    pub fn subspace(&self) -> &SubspaceBasis {
        &self.subspace
    }

    /// Indices of every normal lying in the flat.
    pub fn members(&self) -> MemberSet {
        self.members
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    /// Independent members spanning the flat, in discovery order.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// Flats of dimension `dim + 1` containing this one.
    pub fn upper_covers(&self) -> &[FlatId] {
        &self.upper
    }

    /// Flats of dimension `dim - 1` contained in this one.
    pub fn lower_covers(&self) -> &[FlatId] {
        &self.lower
    }
}

/// All flats of a [`VectorSet`], ordered by dimension, with `μ(0̂, ·)`.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    ambient_dim: usize,
    flats: Vec<Flat>,
    layer_start: Vec<usize>,
    by_members: HashMap<MemberSet, FlatId>,
    mobius: Vec<i64>,
}

impl IntersectionLattice {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, id: FlatId) -> &Flat {
        &self.flats[id]
    }

    pub fn bottom(&self) -> FlatId {
        0
    }

    pub fn top(&self) -> FlatId {
        self.flats.len() - 1
    }

    /// Ids of the flats of dimension `k`.
    pub fn layer(&self, k: usize) -> Range<FlatId> {
        self.layer_start[k]..self.layer_start[k + 1]
    }

    pub fn find(&self, members: MemberSet) -> Option<FlatId> {
        self.by_members.get(&members).copied()
    }

    /// `μ(0̂, flat)`.
    pub fn mobius(&self, id: FlatId) -> i64 {
        self.mobius[id]
    }

    /// `s ≤ t` in the lattice order (subspace inclusion).
    pub fn le(&self, s: FlatId, t: FlatId) -> bool {
        self.flats[s].members.is_subset(self.flats[t].members)
    }

    /// Number of chambers, `Σ_t |μ(0̂, t)|` over every flat including `1̂`.
    pub fn chamber_count(&self) -> u64 {
        self.mobius.iter().map(|m| m.unsigned_abs()).sum()
    }
}

pub(crate) fn small_vectors(h: &VectorSet) -> Result<Vec<Vec<i64>>> {
    h.vectors()
        .iter()
        .map(|v| {
            v.to_i64s()
                .ok_or(Error::Overflow("normal does not fit in i64"))
        })
        .collect()
}

fn dot(a: &[i64], b: &[i64]) -> Result<i64> {
    a.iter().zip(b).try_fold(0i64, |acc, (x, y)| {
        x.checked_mul(*y)
            .and_then(|p| acc.checked_add(p))
            .ok_or(Error::Overflow("dot product"))
    })
}

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

/// Divides out the content and makes the first nonzero entry positive.
fn normalize(v: &mut [i64]) {
    let g = v.iter().fold(0, |g, &x| gcd(g, x));
    if g > 1 {
        v.iter_mut().for_each(|x| *x /= g);
    }
    if v.iter().find(|&&x| x != 0).is_some_and(|&x| x < 0) {
        v.iter_mut().for_each(|x| *x = -*x);
    }
}

/// Complement basis of `F + a` from the complement basis `normals` of `F`,
/// given the pairings `c_j = y_j · a` (not all zero).
fn extend_normals(normals: &[Vec<i64>], c: &[i64]) -> Result<Vec<Vec<i64>>> {
    let j0 = c.iter().position(|&x| x != 0).expect("a lies outside F");
    let mut out = Vec::with_capacity(normals.len() - 1);
    for (j, y) in normals.iter().enumerate() {
        if j == j0 {
            continue;
        }
        let mut z = Vec::with_capacity(y.len());
        for (yj, y0) in y.iter().zip(&normals[j0]) {
            let v = c[j0]
                .checked_mul(*yj)
                .zip(c[j].checked_mul(*y0))
                .and_then(|(p, q)| p.checked_sub(q))
                .ok_or(Error::Overflow("complement update"))?;
            z.push(v);
        }
        normalize(&mut z);
        out.push(z);
    }
    Ok(out)
}

struct Pending {
    members: MemberSet,
    generators: Vec<usize>,
    normals: Vec<Vec<i64>>,
    lower: Vec<FlatId>,
}

/// Builds every flat of `h` with cover relations and Möbius values.
pub fn build_lattice(h: &VectorSet) -> Result<IntersectionLattice> {
    let t = h.len();
    if t > MAX_MEMBERS {
        return Err(Error::guard(
            "vectors per lattice",
            MAX_MEMBERS as u64,
            t as u64,
        ));
    }
    let d = h.ambient_dim();
    let w = small_vectors(h)?;

    let identity: Vec<Vec<i64>> = (0..d)
        .map(|i| (0..d).map(|j| i64::from(i == j)).collect())
        .collect();
    let mut layer = vec![Pending {
        members: MemberSet::EMPTY,
        generators: Vec::new(),
        normals: identity,
        lower: Vec::new(),
    }];
    let mut flats: Vec<Flat> = Vec::new();
    let mut layer_start = vec![0];

    for _k in 0..=d {
        let base = flats.len();
        let mut next: Vec<Pending> = Vec::new();
        let mut next_index: HashMap<MemberSet, usize> = HashMap::new();
        let mut uppers: Vec<Vec<FlatId>> = vec![Vec::new(); layer.len()];

        for (local, f) in layer.iter().enumerate() {
            let fid = base + local;
            // direction of the quotient image -> (group members, representative)
            let mut groups: Vec<(MemberSet, usize, Vec<i64>)> = Vec::new();
            let mut group_of: HashMap<Vec<i64>, usize> = HashMap::new();
            for (i, wi) in w.iter().enumerate() {
                if f.members.contains(i) {
                    continue;
                }
                let sig: Vec<i64> = f
                    .normals
                    .iter()
                    .map(|y| dot(y, wi))
                    .collect::<Result<_>>()?;
                let mut dir = sig.clone();
                normalize(&mut dir);
                match group_of.get(&dir) {
                    Some(&g) => groups[g].0.insert(i),
                    None => {
                        group_of.insert(dir, groups.len());
                        groups.push((MemberSet::singleton(i), i, sig));
                    }
                }
            }
            for (group, rep, sig) in groups {
                let members = f.members.union(group);
                let slot = match next_index.get(&members) {
                    Some(&s) => s,
                    None => {
                        let mut generators = f.generators.clone();
                        generators.push(rep);
                        next.push(Pending {
                            members,
                            generators,
                            normals: extend_normals(&f.normals, &sig)?,
                            lower: Vec::new(),
                        });
                        next_index.insert(members, next.len() - 1);
                        next.len() - 1
                    }
                };
                let gid = base + layer.len() + slot;
                uppers[local].push(gid);
                next[slot].lower.push(fid);
            }
        }

        let finished: Vec<Flat> = layer
            .into_par_iter()
            .zip(uppers)
            .map(|(p, upper)| {
                let gens: Vec<IntegerVector> =
                    p.generators.iter().map(|&i| h.vector(i).clone()).collect();
                let subspace = exactlin::span_in(d, &gens)?;
                Ok(Flat {
                    subspace,
                    members: p.members,
                    generators: p.generators,
                    upper,
                    lower: p.lower,
                })
            })
            .collect::<Result<_>>()?;
        flats.extend(finished);
        layer_start.push(flats.len());
        layer = next;
        if layer.is_empty() {
            break;
        }
    }
    debug_assert!(layer.is_empty());

    let top = flats.last().expect("lattice has a bottom");
    if top.subspace.dim() != d {
        return Err(Error::NotSpanning {
            rank: top.subspace.dim(),
            ambient: d,
        });
    }

    let by_members = flats
        .iter()
        .enumerate()
        .map(|(id, f)| (f.members, id))
        .collect();
    let mut lattice = IntersectionLattice {
        ambient_dim: d,
        flats,
        layer_start,
        by_members,
        mobius: Vec::new(),
    };
    lattice.mobius = compute_mobius(&lattice);
    Ok(lattice)
}

/// `μ(0̂, 0̂) = 1`, `μ(0̂, t) = -Σ_{s < t} μ(0̂, s)`, one dimension at a time.
fn compute_mobius(lat: &IntersectionLattice) -> Vec<i64> {
    let n = lat.flats.len();
    let mut mobius = vec![0i64; n];
    mobius[0] = 1;
    for k in 1..lat.layer_start.len() - 1 {
        let range = lat.layer(k);
        let values: Vec<i64> = range
            .clone()
            .into_par_iter()
            .map_init(
                || (vec![0u32; n], 0u32),
                |(stamps, epoch), t| {
                    *epoch += 1;
                    let mut stack: Vec<FlatId> = lat.flats[t].lower.clone();
                    for &s in &stack {
                        stamps[s] = *epoch;
                    }
                    let mut sum = 0i64;
                    while let Some(s) = stack.pop() {
                        sum += mobius[s];
                        for &r in &lat.flats[s].lower {
                            if stamps[r] != *epoch {
                                stamps[r] = *epoch;
                                stack.push(r);
                            }
                        }
                    }
                    -sum
                },
            )
            .collect();
        mobius[range].copy_from_slice(&values);
    }
    mobius
}

/// Chamber count of `h` from the Möbius function of its lattice.
pub fn chamber_count(h: &VectorSet) -> Result<u64> {
    Ok(build_lattice(h)?.chamber_count())
}
