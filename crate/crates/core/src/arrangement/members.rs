// SPDX-License-Identifier: Apache-2.0

use std::fmt;

/// Largest vector count a [`MemberSet`] can index.
pub const MAX_MEMBERS: usize = 64;

/// Set of vector indices `< 64`, stored as a bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MemberSet(u64);

impl MemberSet {
    pub const EMPTY: MemberSet = MemberSet(0);

    pub fn from_bits(bits: u64) -> Self {
        MemberSet(bits)
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!(i < MAX_MEMBERS);
        MemberSet(1 << i)
    }

    /// The first `t` indices.
    pub fn full(t: usize) -> Self {
        debug_assert!(t <= MAX_MEMBERS);
        if t == MAX_MEMBERS {
            MemberSet(u64::MAX)
        } else {
            MemberSet((1u64 << t) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, i: usize) -> bool {
        i < MAX_MEMBERS && self.0 >> i & 1 == 1
    }

    pub fn insert(&mut self, i: usize) {
        debug_assert!(i < MAX_MEMBERS);
        self.0 |= 1 << i;
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: MemberSet) -> MemberSet {
        MemberSet(self.0 | other.0)
    }

    pub fn difference(self, other: MemberSet) -> MemberSet {
        MemberSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: MemberSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest index, if any.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Indices in ascending order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let i = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(i)
        })
    }
}

impl FromIterator<usize> for MemberSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = MemberSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl fmt::Debug for MemberSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_set_operations() {
        let a: MemberSet = [0, 3, 5].into_iter().collect();
        let b: MemberSet = [3, 63].into_iter().collect();
        assert_eq!(a.len(), 3);
        assert!(a.contains(5) && !a.contains(4) && !a.contains(200));
        assert_eq!(a.union(b).iter().collect::<Vec<_>>(), vec![0, 3, 5, 63]);
        assert_eq!(a.difference(b).iter().collect::<Vec<_>>(), vec![0, 5]);
        assert!(MemberSet::singleton(3).is_subset(a));
        assert!(!b.is_subset(a));
        assert_eq!(b.first(), Some(3));
        assert_eq!(MemberSet::EMPTY.first(), None);
        assert_eq!(MemberSet::full(64).len(), 64);
        assert_eq!(MemberSet::full(4).bits(), 0b1111);
    }
}
