// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::{FullFlag, IndexTuple, WeightVector};
use crate::arrangement::{build_lattice, generate_e, FlatId, IntersectionLattice, VectorSet};
use crate::error::{Error, Result};

/// A vector set together with its lattice of flats.
///
/// `q_l` only depends on the suffix `(w_{i_{n-l+1}}, ..., w_{i_n})`, i.e. on
/// the flat `L_l`. Tuples are therefore built from the innermost flat
/// outward: choosing `i_n`, then `i_{n-1}`, and so on walks a chain of cover
/// relations `L_1 ⋖ L_2 ⋖ ... ⋖ L_n` in the lattice, and the member set of
/// every `L_l` is looked up instead of recomputed.
#[derive(Clone, Debug)]
pub struct FlagSystem {
    h: VectorSet,
    lattice: IntersectionLattice,
}

/// Tuples grouped by top flat and flag product.
type Groups = BTreeMap<u128, BTreeMap<FlatId, u128>>;

impl FlagSystem {
    pub fn new(h: &VectorSet) -> Result<Self> {
        Ok(FlagSystem {
            h: h.clone(),
            lattice: build_lattice(h)?,
        })
    }

    pub fn vectors(&self) -> &VectorSet {
        &self.h
    }

    pub fn lattice(&self) -> &IntersectionLattice {
        &self.lattice
    }

    /// Tuple length `n = d - 1`.
    pub fn n(&self) -> usize {
        self.h.tuple_len()
    }

    /// Calls `visit` once for every ordered tuple of `n` distinct,
    /// linearly independent vectors, together with its flag.
    pub fn enumerate_tuples<F: FnMut(&IndexTuple, &FullFlag)>(&self, mut visit: F) {
        let n = self.n();
        let mut chain: Vec<FlatId> = Vec::with_capacity(n);
        let mut picks: Vec<usize> = Vec::with_capacity(n);
        self.walk(self.lattice.bottom(), n, &mut chain, &mut picks, &mut visit);
    }

    fn walk<F: FnMut(&IndexTuple, &FullFlag)>(
        &self,
        at: FlatId,
        n: usize,
        chain: &mut Vec<FlatId>,
        picks: &mut Vec<usize>,
        visit: &mut F,
    ) {
        if chain.len() == n {
            let tuple = IndexTuple(picks.iter().rev().copied().collect());
            let q: Vec<usize> = chain
                .iter()
                .rev()
                .map(|&f| self.lattice.flat(f).members().len())
                .collect();
            let product = q.iter().map(|&x| BigUint::from(x)).product();
            let flag = FullFlag {
                q,
                product,
                top_members: self.lattice.flat(*chain.last().expect("n ≥ 1")).members(),
            };
            visit(&tuple, &flag);
            return;
        }
        let here = self.lattice.flat(at).members();
        for &g in self.lattice.flat(at).upper_covers() {
            let fresh = self.lattice.flat(g).members().difference(here);
            chain.push(g);
            for v in fresh.iter() {
                picks.push(v);
                self.walk(g, n, chain, picks, visit);
                picks.pop();
            }
            chain.pop();
        }
    }

    /// For each flat of dimension `≤ n`, the number of tuple suffixes
    /// spanning it, keyed by the partial product `q_l · ... · q_1`.
    fn suffix_counts(&self) -> Result<Vec<HashMap<u128, u128>>> {
        let lat = &self.lattice;
        let mut counts: Vec<HashMap<u128, u128>> = vec![HashMap::new(); lat.len()];
        counts[lat.bottom()].insert(1, 1);
        for k in 1..=self.n() {
            let range = lat.layer(k);
            let layer: Vec<HashMap<u128, u128>> = range
                .clone()
                .into_par_iter()
                .map(|g| {
                    let flat = lat.flat(g);
                    let size = flat.members().len() as u128;
                    let mut acc: HashMap<u128, u128> = HashMap::new();
                    for &f in flat.lower_covers() {
                        let choices = (flat.members().len() - lat.flat(f).members().len()) as u128;
                        for (&prod, &c) in &counts[f] {
                            let p = prod
                                .checked_mul(size)
                                .ok_or(Error::Overflow("flag product"))?;
                            let c = c
                                .checked_mul(choices)
                                .ok_or(Error::Overflow("tuple count"))?;
                            let slot = acc.entry(p).or_insert(0);
                            *slot = slot.checked_add(c).ok_or(Error::Overflow("tuple count"))?;
                        }
                    }
                    Ok(acc)
                })
                .collect::<Result<_>>()?;
            for (g, c) in range.zip(layer) {
                counts[g] = c;
            }
        }
        Ok(counts)
    }

    /// Number of tuples per `(W[H], top flat)`.
    fn groups(&self) -> Result<Groups> {
        let counts = self.suffix_counts()?;
        let mut groups = Groups::new();
        for top in self.lattice.layer(self.n()) {
            for (&prod, &c) in &counts[top] {
                groups.entry(prod).or_default().insert(top, c);
            }
        }
        Ok(groups)
    }

    /// Number of ordered independent `n`-tuples.
    pub fn tuple_count(&self) -> Result<u128> {
        let mut total: u128 = 0;
        for by_top in self.groups()?.values() {
            for &c in by_top.values() {
                total = total.checked_add(c).ok_or(Error::Overflow("tuple count"))?;
            }
        }
        Ok(total)
    }

    /// `Σ_W (1 - Σ_{j ∈ L_n(W) ∩ H} p_j) / W[H]`, evaluated per group of
    /// tuples sharing the top flat and the flag product.
    pub fn theorem1_sum(&self, p: &WeightVector) -> Result<BigRational> {
        p.check_len(self.h.len())?;
        let one = BigRational::one();
        let mut total = BigRational::zero();
        for (prod, by_top) in self.groups()? {
            let mut numer = BigRational::zero();
            for (top, count) in by_top {
                let outside = &one - p.mass(self.lattice.flat(top).members());
                numer += outside * BigRational::from_integer(count.into());
            }
            total += numer / BigRational::from_integer(prod.into());
        }
        Ok(total)
    }

    /// Same value as [`theorem1_sum`](Self::theorem1_sum), one rational
    /// term per tuple.
    pub fn theorem1_sum_reference(&self, p: &WeightVector) -> Result<BigRational> {
        p.check_len(self.h.len())?;
        let one = BigRational::one();
        let mut total = BigRational::zero();
        self.enumerate_tuples(|_, flag| {
            let outside = &one - p.mass(flag.top_members);
            total += outside / BigRational::from_integer(flag.product.clone().into());
        });
        Ok(total)
    }
}

/// Weighted flag sum of `h` under weights `p`.
pub fn theorem1_sum(h: &VectorSet, p: &WeightVector) -> Result<BigRational> {
    FlagSystem::new(h)?.theorem1_sum(p)
}

/// Twice the weighted flag sum for `E(n)`: a lower bound on the number of
/// threshold functions of `n` variables.
pub fn corollary_bound(n: usize, p: &WeightVector) -> Result<BigRational> {
    let e = generate_e(n)?;
    Ok(theorem1_sum(&e, p)? * BigRational::from_integer(2.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::generate_e;
    use crate::exactlin;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    fn collect(fs: &FlagSystem) -> Vec<(IndexTuple, FullFlag)> {
        let mut out = Vec::new();
        fs.enumerate_tuples(|t, f| out.push((t.clone(), f.clone())));
        out
    }

    #[test]
    fn e1_tuples() {
        let fs = FlagSystem::new(&generate_e(1).unwrap()).unwrap();
        let all = collect(&fs);
        assert_eq!(all.len(), 2);
        for (_, f) in &all {
            assert_eq!(f.q, vec![1]);
            assert_eq!(f.product, BigUint::from(1u32));
        }
    }

    #[test]
    fn e2_tuples_are_all_pairs() {
        let fs = FlagSystem::new(&generate_e(2).unwrap()).unwrap();
        let all = collect(&fs);
        assert_eq!(all.len(), 12);
        assert_eq!(fs.tuple_count().unwrap(), 12);
        for (t, f) in &all {
            assert_ne!(t.indices()[0], t.indices()[1]);
            assert_eq!(f.q, vec![2, 1]);
            assert_eq!(f.product, BigUint::from(2u32));
        }
    }

    #[test]
    fn e3_square_flag() {
        let h = generate_e(3).unwrap();
        let fs = FlagSystem::new(&h).unwrap();
        let find = |c: &[i64]| {
            h.vectors()
                .iter()
                .position(|v| v.to_i64s().unwrap() == c)
                .unwrap()
        };
        let target = IndexTuple(vec![
            find(&[1, 1, 1, 1]),
            find(&[1, 1, -1, 1]),
            find(&[1, -1, 1, 1]),
        ]);
        let extra = find(&[1, -1, -1, 1]);
        let (_, flag) = collect(&fs)
            .into_iter()
            .find(|(t, _)| *t == target)
            .unwrap();
        assert_eq!(flag.q, vec![4, 2, 1]);
        assert_eq!(flag.product, BigUint::from(8u32));
        assert_eq!(flag.top_members.len(), 4);
        assert!(flag.top_members.contains(extra));
    }

    #[test]
    fn flag_entries_match_fresh_spans() {
        let h = generate_e(3).unwrap();
        let fs = FlagSystem::new(&h).unwrap();
        let mut seen = std::collections::HashSet::new();
        fs.enumerate_tuples(|t, f| {
            assert!(seen.insert(t.clone()));
            let n = t.len();
            for l in 1..=n {
                let gens: Vec<_> = t.suffix(l).iter().map(|&i| h.vector(i).clone()).collect();
                let s = exactlin::span(&gens).unwrap();
                assert_eq!(s.dim(), l);
                let q = h
                    .vectors()
                    .iter()
                    .filter(|v| s.contains(v).unwrap())
                    .count();
                assert_eq!(f.q[n - l], q);
            }
            for w in f.q.windows(2) {
                assert!(w[0] > w[1]);
            }
        });
        assert_eq!(seen.len() as u128, fs.tuple_count().unwrap());
    }

    #[test]
    fn theorem1_small_values() {
        let e1 = FlagSystem::new(&generate_e(1).unwrap()).unwrap();
        let p = WeightVector::new(vec![q(7, 3), q(-4, 3)]).unwrap();
        assert_eq!(e1.theorem1_sum(&p).unwrap(), q(1, 1));

        let e2 = FlagSystem::new(&generate_e(2).unwrap()).unwrap();
        assert_eq!(e2.theorem1_sum(&WeightVector::uniform(4)).unwrap(), q(3, 1));
        assert_eq!(
            e2.theorem1_sum(&WeightVector::point(4, 0)).unwrap(),
            q(3, 1)
        );
        assert_eq!(
            e2.theorem1_sum_reference(&WeightVector::uniform(4))
                .unwrap(),
            q(3, 1)
        );
    }

    #[test]
    fn weight_count_is_checked() {
        let e2 = FlagSystem::new(&generate_e(2).unwrap()).unwrap();
        assert!(matches!(
            e2.theorem1_sum(&WeightVector::uniform(3)),
            Err(Error::WeightCount {
                expected: 4,
                got: 3
            })
        ));
    }

    #[test]
    fn corollary_small_values() {
        let half = WeightVector::uniform(2);
        assert_eq!(corollary_bound(1, &half).unwrap(), q(2, 1));
        assert_eq!(
            corollary_bound(2, &WeightVector::uniform(4)).unwrap(),
            q(6, 1)
        );
        let skew = WeightVector::new(vec![q(2, 1), q(-1, 3), q(-1, 3), q(-1, 3)]).unwrap();
        assert_eq!(corollary_bound(2, &skew).unwrap(), q(6, 1));
    }
}
