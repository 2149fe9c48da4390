// SPDX-License-Identifier: Apache-2.0

use flagbound_core::exactlin::{self, EliminationState, IntegerVector};
use flagbound_core::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

/// Textbook Gauss–Jordan on a dense rational matrix; returns the nonzero
/// rows of its RREF.
fn naive_rref(rows: &[Vec<i64>], cols: usize) -> Vec<Vec<BigRational>> {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| {
            r.iter()
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let mut lead = 0;
    for c in 0..cols {
        let Some(p) = (lead..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(lead, p);
        let pv = m[lead][c].clone();
        for x in m[lead].iter_mut() {
            *x = &*x / &pv;
        }
        for r in 0..m.len() {
            if r != lead && !m[r][c].is_zero() {
                let f = m[r][c].clone();
                let pivot = m[lead].clone();
                for (x, y) in m[r].iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        lead += 1;
    }
    m.truncate(lead);
    m
}

fn vectors(rows: &[Vec<i64>]) -> Vec<IntegerVector> {
    rows.iter().map(|r| IntegerVector::from_i64s(r)).collect()
}

fn matrix() -> impl Strategy<Value = (usize, Vec<Vec<i64>>)> {
    (1usize..=5).prop_flat_map(|d| {
        (
            Just(d),
            prop::collection::vec(prop::collection::vec(-10i64..=10, d), 0..7),
        )
    })
}

proptest! {
    #[test]
    fn span_matches_naive_elimination((d, rows) in matrix()) {
        let s = exactlin::span_in(d, &vectors(&rows)).unwrap();
        prop_assert_eq!(s.rows().to_vec(), naive_rref(&rows, d));
        prop_assert_eq!(exactlin::rank(&vectors(&rows)).unwrap(), s.dim());
    }

    #[test]
    fn canonical_form_is_idempotent_and_order_free((d, rows) in matrix(), seed in any::<u64>()) {
        let v = vectors(&rows);
        let s = exactlin::span_in(d, &v).unwrap();
        let again = exactlin::span_in(d, &s.integer_rows()).unwrap();
        prop_assert_eq!(&again, &s);

        let mut shuffled = v.clone();
        let k = shuffled.len();
        if k > 1 {
            let r = (seed as usize) % k;
            shuffled.rotate_left(r);
            shuffled.swap(0, k - 1);
        }
        prop_assert_eq!(exactlin::span_in(d, &shuffled).unwrap(), s.clone());
        for x in &v {
            prop_assert!(s.contains(x).unwrap());
        }
    }

    #[test]
    fn incremental_rank_agrees((d, rows) in matrix()) {
        let v = vectors(&rows);
        let mut state = EliminationState::new(d);
        let mut grew = 0;
        for x in &v {
            let (next, up) = state.extend(x).unwrap();
            if up { grew += 1; }
            prop_assert!(next.contains(x).unwrap());
            state = next;
        }
        prop_assert_eq!(grew, exactlin::rank(&v).unwrap());
        prop_assert_eq!(state.to_basis(), exactlin::span_in(d, &v).unwrap());
    }

    #[test]
    fn membership_matches_rank((d, rows) in matrix(), probe in prop::collection::vec(-10i64..=10, 5)) {
        let v = vectors(&rows);
        let p = IntegerVector::from_i64s(&probe[..d]);
        let s = exactlin::span_in(d, &v).unwrap();
        let mut with = v.clone();
        with.push(p.clone());
        let inside = exactlin::rank(&with).unwrap() == exactlin::rank(&v).unwrap();
        prop_assert_eq!(s.contains(&p).unwrap(), inside);
    }
}
