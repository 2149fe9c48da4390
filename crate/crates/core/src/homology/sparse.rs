// SPDX-License-Identifier: Apache-2.0

//! Rank of a sparse matrix by row reduction on leading columns.

use super::field::Field;

/// A sparse row: `(column, value)` pairs, columns strictly increasing, no
/// stored zeros.
pub(crate) type Row<E> = Vec<(usize, E)>;

/// `a - factor * b`, both rows sorted.
fn axpy<F: Field>(field: &F, a: &Row<F::Elem>, factor: &F::Elem, b: &Row<F::Elem>) -> Row<F::Elem> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j >= b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i >= a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            out.push((b[j].0, field.neg(&field.mul(factor, &b[j].1))));
            j += 1;
        } else {
            let v = field.add(&a[i].1, &field.neg(&field.mul(factor, &b[j].1)));
            if !field.is_zero(&v) {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Rank over `field` of the matrix with the given rows and `cols` columns.
pub(crate) fn rank<F: Field>(field: &F, cols: usize, rows: Vec<Row<F::Elem>>) -> usize {
    // pivot rows are stored with leading coefficient 1
    let mut pivots: Vec<Option<Row<F::Elem>>> = vec![None; cols];
    let mut rank = 0;
    for mut row in rows {
        while let Some((lead, value)) = row.first().cloned() {
            match &pivots[lead] {
                Some(p) => row = axpy(field, &row, &value, p),
                None => {
                    let inv = field.inv(&value);
                    for entry in row.iter_mut() {
                        entry.1 = field.mul(&entry.1, &inv);
                    }
                    pivots[lead] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}
