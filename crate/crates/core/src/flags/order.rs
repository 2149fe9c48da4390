// SPDX-License-Identifier: Apache-2.0

//! Order-dependent counts: the tuples whose every suffix span starts, in a
//! given order, with the tuple entry that was added last.

use itertools::Itertools;

use super::{FlagSystem, IndexTuple, OrderPermutation};
use crate::arrangement::{FlatId, MemberSet, VectorSet};
use crate::error::{Error, Result};
use crate::exactlin;

/// Largest vector count accepted by [`count_admissible_orders`].
pub const MAX_ORDER_ENUMERATION: usize = 8;

impl FlagSystem {
    fn check_order(&self, order: &OrderPermutation) -> Result<()> {
        if order.len() != self.vectors().len() {
            return Err(Error::DimensionMismatch {
                expected: self.vectors().len(),
                found: order.len(),
            });
        }
        Ok(())
    }

    /// Walks the tuples satisfying, under `order`:
    ///
    /// * the first vector of the order lies outside `L_n(W)`, and
    /// * for every `l`, the first member of `L_l(W) ∩ H` is `w_{i_{n-l+1}}`.
    ///
    /// The second condition is checked as each entry is added, so a failing
    /// suffix is never extended.
    fn walk_ordered<F: FnMut(&[usize])>(&self, order: &OrderPermutation, visit: &mut F) {
        let n = self.n();
        let mut picks = Vec::with_capacity(n);
        self.walk_ordered_from(self.lattice().bottom(), n, order, &mut picks, visit);
    }

    fn walk_ordered_from<F: FnMut(&[usize])>(
        &self,
        at: FlatId,
        n: usize,
        order: &OrderPermutation,
        picks: &mut Vec<usize>,
        visit: &mut F,
    ) {
        let lat = self.lattice();
        let here: MemberSet = lat.flat(at).members();
        if picks.len() == n {
            if !here.contains(order.first()) {
                visit(picks);
            }
            return;
        }
        for &g in lat.flat(at).upper_covers() {
            let first = order
                .min_of(lat.flat(g).members())
                .expect("covers are nonempty");
            if here.contains(first) {
                continue;
            }
            picks.push(first);
            self.walk_ordered_from(g, n, order, picks, visit);
            picks.pop();
        }
    }

    /// Number of tuples meeting both order conditions.
    pub fn lambda_count(&self, order: &OrderPermutation) -> Result<u64> {
        self.check_order(order)?;
        let mut count = 0u64;
        self.walk_ordered(order, &mut |_| count += 1);
        Ok(count)
    }

    /// The tuples counted by [`lambda_count`](Self::lambda_count), as
    /// `(i_1, ..., i_n)` vector indices, sorted.
    pub fn basis_bsigma(&self, order: &OrderPermutation) -> Result<Vec<IndexTuple>> {
        self.check_order(order)?;
        let mut out = Vec::new();
        self.walk_ordered(order, &mut |picks| {
            out.push(IndexTuple(picks.iter().rev().copied().collect()))
        });
        out.sort();
        Ok(out)
    }
}

pub fn lambda_count(h: &VectorSet, order: &OrderPermutation) -> Result<u64> {
    FlagSystem::new(h)?.lambda_count(order)
}

pub fn basis_bsigma(h: &VectorSet, order: &OrderPermutation) -> Result<Vec<IndexTuple>> {
    FlagSystem::new(h)?.basis_bsigma(order)
}

/// Counts the orders `γ` with `γ`-first vector `first` under which `w`
/// satisfies both order conditions and its entries appear in increasing
/// position, by trying all `(T-1)!` of them.
pub fn count_admissible_orders(h: &VectorSet, w: &IndexTuple, first: usize) -> Result<u64> {
    let t = h.len();
    if t > MAX_ORDER_ENUMERATION {
        return Err(Error::guard(
            "vectors for order enumeration",
            MAX_ORDER_ENUMERATION as u64,
            t as u64,
        ));
    }
    let n = h.tuple_len();
    if w.len() != n || !w.indices().iter().all_unique() || w.indices().iter().any(|&i| i >= t) {
        return Err(Error::Precondition(format!(
            "{w} is not a tuple of {n} distinct indices below {t}"
        )));
    }
    if first >= t {
        return Err(Error::Precondition(format!("index {first} out of range")));
    }

    // members of L_l for l = 1..n
    let mut flats: Vec<MemberSet> = Vec::with_capacity(n);
    for l in 1..=n {
        let gens: Vec<_> = w.suffix(l).iter().map(|&i| h.vector(i).clone()).collect();
        let span = exactlin::span_in(h.ambient_dim(), &gens)?;
        if span.dim() != l {
            return Err(Error::Precondition(format!("{w} is linearly dependent")));
        }
        let mut members = MemberSet::EMPTY;
        for (i, v) in h.vectors().iter().enumerate() {
            if span.contains(v)? {
                members.insert(i);
            }
        }
        flats.push(members);
    }
    if flats[n - 1].contains(first) {
        return Err(Error::Precondition(format!(
            "w{} lies in the span of {w}",
            first + 1
        )));
    }

    let rest: Vec<usize> = (0..t).filter(|&i| i != first).collect();
    let mut count = 0u64;
    for tail in rest.iter().copied().permutations(rest.len()) {
        let mut perm = Vec::with_capacity(t);
        perm.push(first);
        perm.extend(tail);
        let order = OrderPermutation::new(perm)?;
        let increasing = w
            .indices()
            .windows(2)
            .all(|p| order.position(p[0]) < order.position(p[1]));
        let minimal = (1..=n).all(|l| order.min_of(flats[l - 1]) == Some(w.indices()[n - l]));
        let outside = !flats[n - 1].contains(order.first());
        if increasing && minimal && outside {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangement::generate_e;

    #[test]
    fn lambda_small_e() {
        let e1 = FlagSystem::new(&generate_e(1).unwrap()).unwrap();
        assert_eq!(e1.lambda_count(&OrderPermutation::identity(2)).unwrap(), 1);
        assert_eq!(
            e1.basis_bsigma(&OrderPermutation::identity(2)).unwrap(),
            vec![IndexTuple(vec![1])]
        );

        let e2 = FlagSystem::new(&generate_e(2).unwrap()).unwrap();
        assert_eq!(e2.lambda_count(&OrderPermutation::identity(4)).unwrap(), 3);
        assert_eq!(
            e2.basis_bsigma(&OrderPermutation::identity(4)).unwrap(),
            vec![
                IndexTuple(vec![1, 2]),
                IndexTuple(vec![1, 3]),
                IndexTuple(vec![2, 3])
            ]
        );
        for perm in (0..4).permutations(4) {
            let g = OrderPermutation::new(perm).unwrap();
            assert_eq!(e2.lambda_count(&g).unwrap(), 3);
        }
    }

    #[test]
    fn order_length_is_checked() {
        let e2 = FlagSystem::new(&generate_e(2).unwrap()).unwrap();
        assert!(e2.lambda_count(&OrderPermutation::identity(3)).is_err());
    }

    #[test]
    fn admissible_order_examples() {
        let e2 = generate_e(2).unwrap();
        assert_eq!(
            count_admissible_orders(&e2, &IndexTuple(vec![0, 1]), 2).unwrap(),
            3
        );
        let e1 = generate_e(1).unwrap();
        assert_eq!(
            count_admissible_orders(&e1, &IndexTuple(vec![1]), 0).unwrap(),
            1
        );
    }

    #[test]
    fn admissible_order_preconditions() {
        let e2 = generate_e(2).unwrap();
        assert!(matches!(
            count_admissible_orders(&e2, &IndexTuple(vec![0, 1]), 1),
            Err(Error::Precondition(_))
        ));
        assert!(count_admissible_orders(&e2, &IndexTuple(vec![0, 0]), 2).is_err());
        assert!(count_admissible_orders(&e2, &IndexTuple(vec![0]), 2).is_err());
        let e4 = generate_e(4).unwrap();
        assert!(matches!(
            count_admissible_orders(&e4, &IndexTuple(vec![0, 1, 2, 3]), 5),
            Err(Error::Guard { .. })
        ));
    }
}
