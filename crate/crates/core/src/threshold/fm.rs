// SPDX-License-Identifier: Apache-2.0

//! Fourier–Motzkin feasibility for small systems `a · x + c ≥ 0`.
//!
//! Coefficients are machine integers with overflow checks. Each inequality
//! is kept primitive; among inequalities with parallel `a` only the tightest
//! one survives.

use std::collections::HashMap;

use crate::error::{Error, Result};

/// `a · x + c ≥ 0`, stored as `[a_0, ..., a_{m-1}, c]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Inequality(pub Vec<i64>);

fn gcd(mut a: i64, mut b: i64) -> i64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.abs()
}

impl Inequality {
    fn vars(&self) -> &[i64] {
        &self.0[..self.0.len() - 1]
    }

    fn constant(&self) -> i64 {
        self.0[self.0.len() - 1]
    }

    fn make_primitive(&mut self) {
        let g = self.0.iter().fold(0, |g, &x| gcd(g, x));
        if g > 1 {
            self.0.iter_mut().for_each(|x| *x /= g);
        }
    }
}

enum Prune {
    /// `0 ≥ -c` with `c < 0`: the system is infeasible.
    Contradiction,
    Kept(Vec<Inequality>),
}

/// Drops trivially true rows and keeps the tightest row per direction.
fn prune(rows: Vec<Inequality>) -> Prune {
    // direction of `a` -> (index in `out`, content of `a`)
    let mut best: HashMap<Vec<i64>, (usize, i64)> = HashMap::new();
    let mut out: Vec<Inequality> = Vec::with_capacity(rows.len());
    for row in rows {
        let g = row.vars().iter().fold(0, |g, &x| gcd(g, x));
        if g == 0 {
            if row.constant() < 0 {
                return Prune::Contradiction;
            }
            continue;
        }
        let dir: Vec<i64> = row.vars().iter().map(|x| x / g).collect();
        match best.get(&dir) {
            None => {
                best.insert(dir, (out.len(), g));
                out.push(row);
            }
            Some(&(at, g_old)) => {
                // a' · x ≥ -c / g; the larger bound is tighter
                let new = -(row.constant() as i128) * g_old as i128;
                let old = -(out[at].constant() as i128) * g as i128;
                if new > old {
                    out[at] = row;
                    best.insert(dir, (at, g));
                }
            }
        }
    }
    Prune::Kept(out)
}

/// Whether some real `x` satisfies every row.
pub(crate) fn feasible(rows: Vec<Inequality>) -> Result<bool> {
    let Some(width) = rows.first().map(|r| r.0.len()) else {
        return Ok(true);
    };
    let mut rows = match prune(rows) {
        Prune::Contradiction => return Ok(false),
        Prune::Kept(r) => r,
    };
    let mut remaining: Vec<usize> = (0..width - 1).collect();
    while !remaining.is_empty() && !rows.is_empty() {
        // eliminate the variable producing the fewest new rows
        let (slot, var) = remaining
            .iter()
            .enumerate()
            .map(|(slot, &v)| {
                let pos = rows.iter().filter(|r| r.0[v] > 0).count();
                let neg = rows.iter().filter(|r| r.0[v] < 0).count();
                (pos * neg, pos + neg, slot, v)
            })
            .min_by_key(|&(prod, touched, _, _)| (prod, std::cmp::Reverse(touched)))
            .map(|(_, _, slot, v)| (slot, v))
            .expect("remaining is nonempty");
        remaining.swap_remove(slot);

        let (mut pos, mut neg, mut next) = (Vec::new(), Vec::new(), Vec::new());
        for r in rows {
            match r.0[var].signum() {
                1 => pos.push(r),
                -1 => neg.push(r),
                _ => next.push(r),
            }
        }
        for p in &pos {
            for q in &neg {
                let (lp, lq) = (-q.0[var], p.0[var]);
                let mut combo = Vec::with_capacity(width);
                for (x, y) in p.0.iter().zip(&q.0) {
                    let v = lp
                        .checked_mul(*x)
                        .zip(lq.checked_mul(*y))
                        .and_then(|(a, b)| a.checked_add(b))
                        .ok_or(Error::Overflow("Fourier–Motzkin combination"))?;
                    combo.push(v);
                }
                let mut ineq = Inequality(combo);
                ineq.make_primitive();
                next.push(ineq);
            }
        }
        rows = match prune(next) {
            Prune::Contradiction => return Ok(false),
            Prune::Kept(r) => r,
        };
    }
    // every surviving row has a = 0 and c ≥ 0
    Ok(true)
}
