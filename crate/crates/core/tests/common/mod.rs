// SPDX-License-Identifier: Apache-2.0

//! Brute-force oracles shared by the integration tests. They work on plain
//! integer rows and recompute every span from scratch.

#![allow(dead_code)]

use flagbound_core::arrangement::VectorSet;
use flagbound_core::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

pub fn rows(h: &VectorSet) -> Vec<Vec<i64>> {
    h.vectors().iter().map(|v| v.to_i64s().unwrap()).collect()
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// Rank by integer elimination with content removal after every step.
pub fn rank(vs: &[&[i64]]) -> usize {
    let mut m: Vec<Vec<i128>> = vs
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    let cols = m.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, p);
        for i in r + 1..m.len() {
            if m[i][c] != 0 {
                let (a, b) = (m[r][c], m[i][c]);
                let pivot = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot) {
                    *x = a * *x - b * y;
                }
                let g = m[i].iter().fold(0, |g, &x| gcd(g, x));
                if g > 1 {
                    m[i].iter_mut().for_each(|x| *x /= g);
                }
            }
        }
        r += 1;
    }
    r
}

/// Indices `j` with `v_j` in the span of the vectors at `idx`.
pub fn span_members(vs: &[Vec<i64>], idx: &[usize]) -> Vec<usize> {
    let base: Vec<&[i64]> = idx.iter().map(|&i| vs[i].as_slice()).collect();
    let r = rank(&base);
    (0..vs.len())
        .filter(|&j| {
            let mut with = base.clone();
            with.push(&vs[j]);
            rank(&with) == r
        })
        .collect()
}

/// Calls `visit` on every ordered tuple of `n` distinct, independent indices.
pub fn for_each_independent_tuple(vs: &[Vec<i64>], n: usize, mut visit: impl FnMut(&[usize])) {
    fn go(vs: &[Vec<i64>], n: usize, cur: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cur.len() == n {
            let r: Vec<&[i64]> = cur.iter().map(|&i| vs[i].as_slice()).collect();
            if rank(&r) == n {
                visit(cur);
            }
            return;
        }
        for i in 0..vs.len() {
            if !cur.contains(&i) {
                cur.push(i);
                go(vs, n, cur, visit);
                cur.pop();
            }
        }
    }
    go(vs, n, &mut Vec::new(), &mut visit);
}

/// `(q_n, ..., q_1)` and the members of the top span, from fresh spans.
pub fn flag_of(vs: &[Vec<i64>], w: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let n = w.len();
    let q = (1..=n)
        .rev()
        .map(|l| span_members(vs, &w[n - l..]).len())
        .collect();
    (q, span_members(vs, w))
}

/// The weighted flag sum, one tuple at a time.
pub fn theorem1_oracle(h: &VectorSet, p: &[BigRational]) -> BigRational {
    let vs = rows(h);
    let mut total = BigRational::zero();
    for_each_independent_tuple(&vs, h.tuple_len(), |w| {
        let (q, top) = flag_of(&vs, w);
        let prod: i64 = q.iter().map(|&x| x as i64).product();
        let mass: BigRational = top.iter().map(|&j| p[j].clone()).sum();
        total += (BigRational::one() - mass) / BigRational::from_integer(prod.into());
    });
    total
}

/// Tuples satisfying, under the order `perm` (`perm[k]` is the vector in
/// position `k`): the first vector lies outside the top span, and each
/// `w_{i_l}` comes first among the members of `span(w_{i_l}, ..., w_{i_n})`.
pub fn lambda_oracle(h: &VectorSet, perm: &[usize]) -> Vec<Vec<usize>> {
    let vs = rows(h);
    let pos = inverse(perm);
    let mut out = Vec::new();
    for_each_independent_tuple(&vs, h.tuple_len(), |w| {
        let outside = !span_members(&vs, w).contains(&perm[0]);
        let minimal = (0..w.len()).all(|l| {
            let m = span_members(&vs, &w[l..]);
            m.iter().min_by_key(|&&j| pos[j]) == Some(&w[l])
        });
        if outside && minimal {
            out.push(w.to_vec());
        }
    });
    out.sort();
    out
}

/// Same count with the position form of the first condition: no tuple entry
/// sits in the first position of the order.
pub fn lambda_oracle_positions(h: &VectorSet, perm: &[usize]) -> Vec<Vec<usize>> {
    let vs = rows(h);
    let pos = inverse(perm);
    let mut out = Vec::new();
    for_each_independent_tuple(&vs, h.tuple_len(), |w| {
        let late = w.iter().all(|&i| pos[i] >= 1);
        let minimal = (0..w.len()).all(|l| {
            let m = span_members(&vs, &w[l..]);
            m.iter().min_by_key(|&&j| pos[j]) == Some(&w[l])
        });
        if late && minimal {
            out.push(w.to_vec());
        }
    });
    out.sort();
    out
}

pub fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (k, &i) in perm.iter().enumerate() {
        inv[i] = k;
    }
    inv
}

/// `t` rationals in `[-2, 2]` with denominators up to 60, summing to one.
pub fn weights_in_box<R: Rng>(t: usize, rng: &mut R) -> Vec<BigRational> {
    let two = BigRational::from_integer(2.into());
    loop {
        let mut w: Vec<BigRational> = (0..t - 1)
            .map(|_| {
                let b: i64 = rng.random_range(1..=60);
                let a: i64 = rng.random_range(-2 * b..=2 * b);
                BigRational::new(a.into(), b.into())
            })
            .collect();
        let last = BigRational::one() - w.iter().sum::<BigRational>();
        if last <= two && last >= -two.clone() {
            w.push(last);
            return w;
        }
    }
}
