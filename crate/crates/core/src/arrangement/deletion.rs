// SPDX-License-Identifier: Apache-2.0

//! Region counting by deletion and restriction, independent of the lattice.
//!
//! `r(A) = r(A \ h) + r(A^h)` where `A^h` is the arrangement cut out on the
//! hyperplane `h` by the remaining hyperplanes. Each leaf of the recursion
//! contributes at least one region, so the call tree has fewer than `2 r(A)`
//! nodes.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::Zero;

use super::VectorSet;
use crate::error::{Error, Result};
use crate::exactlin::primitive_direction;

/// Number of chambers of the central arrangement with normals `h`.
pub fn chamber_count_dr(h: &VectorSet) -> Result<u64> {
    let normals = canonical(h.vectors().iter().map(|v| v.coords().to_vec()));
    regions(&normals).ok_or(Error::Overflow("region count"))
}

/// Drops zero vectors and merges parallel ones; sorted for determinism.
fn canonical(vectors: impl Iterator<Item = Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    vectors
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .map(|v| primitive_direction(&v))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Normals of the arrangement induced on `w^⊥`, in coordinates of the
/// integer basis `b_j = w_p e_j - w_j e_p` (`j ≠ p`, `w_p ≠ 0`).
fn restrict(w: &[BigInt], others: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let p = w.iter().position(|x| !x.is_zero()).expect("nonzero normal");
    canonical(others.iter().map(|u| {
        (0..w.len())
            .filter(|&j| j != p)
            .map(|j| &w[p] * &u[j] - &w[j] * &u[p])
            .collect()
    }))
}

fn regions(normals: &[Vec<BigInt>]) -> Option<u64> {
    match normals {
        [] => Some(1),
        [_] => Some(2),
        [rest @ .., last] => {
            let deleted = regions(rest)?;
            let restricted = regions(&restrict(last, rest))?;
            deleted.checked_add(restricted)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::generate_e;

    fn big(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect()
    }

    #[test]
    fn base_cases() {
        assert_eq!(regions(&[]), Some(1));
        assert_eq!(regions(&big(&[&[0, 1, 0]])), Some(2));
    }

    #[test]
    fn small_e() {
        assert_eq!(chamber_count_dr(&generate_e(1).unwrap()).unwrap(), 4);
        assert_eq!(chamber_count_dr(&generate_e(2).unwrap()).unwrap(), 14);
        assert_eq!(chamber_count_dr(&generate_e(3).unwrap()).unwrap(), 104);
    }

    #[test]
    fn restriction_merges_parallels() {
        // on z = 0, the planes x = 0 and x + z = 0 induce the same line
        let r = restrict(
            &big(&[&[0, 0, 1]])[0],
            &big(&[&[1, 0, 0], &[1, 0, 1], &[0, 1, 0]]),
        );
        assert_eq!(r.len(), 2);
    }

    #[test]
    fn coordinate_arrangement() {
        // the d coordinate hyperplanes cut R^d into 2^d orthants
        let h = VectorSet::from_rows(&[
            vec![1, 0, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, 0],
            vec![0, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(chamber_count_dr(&h).unwrap(), 16);
    }
}
