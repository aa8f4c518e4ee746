//! Row-style Hermite normal form of integer lattices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;
use super::snf::bezout;

/// Reduced row Hermite form of the lattice spanned by the rows of `m`.
///
/// Zero rows are dropped, pivots are positive and strictly move right, and
/// entries above each pivot lie in `[0, pivot)`. The result is unique for
/// a given lattice.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let (rows, cols) = (m.rows(), m.cols());
    let mut h = m.clone();
    let mut pr = 0;
    for c in 0..cols {
        if pr == rows {
            break;
        }
        for i in pr + 1..rows {
            if h[(i, c)].is_zero() {
                continue;
            }
            let (a, b) = (h[(pr, c)].clone(), h[(i, c)].clone());
            if a.is_zero() {
                h.swap_rows(pr, i);
                continue;
            }
            let (g, x, y) = bezout(&a, &b);
            let (z, w) = (-(&b / &g), &a / &g);
            h.combine_rows(pr, i, &x, &y, &z, &w);
        }
        if h[(pr, c)].is_zero() {
            continue;
        }
        if h[(pr, c)].is_negative() {
            h.negate_row(pr);
        }
        let pivot = h[(pr, c)].clone();
        for k in 0..pr {
            let q = h[(k, c)].div_floor(&pivot);
            if !q.is_zero() {
                h.add_row_multiple(k, pr, &-q);
            }
        }
        pr += 1;
    }
    let kept: Vec<Vec<BigInt>> = (0..pr).map(|i| h.row(i).to_vec()).collect();
    IntMatrix::from_rows(kept, cols)
}

/// Reduces `v` against a Hermite basis; returns true iff it reduces to zero.
pub(crate) fn reduces_to_zero(hnf: &IntMatrix, v: &[BigInt]) -> bool {
    let mut v = v.to_vec();
    for i in 0..hnf.rows() {
        let row = hnf.row(i);
        let Some(pc) = row.iter().position(|x| !x.is_zero()) else {
            continue;
        };
        if v[..pc].iter().any(|x| !x.is_zero()) {
            return false;
        }
        let (q, r) = v[pc].div_rem(&row[pc]);
        if !r.is_zero() {
            return false;
        }
        if !q.is_zero() {
            for (vj, rj) in v.iter_mut().zip(row) {
                *vj -= &q * rj;
            }
        }
    }
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unimodular_change_has_same_form() {
        let a = IntMatrix::from_rows_i64(&[vec![1, 0], vec![0, 1]]);
        let b = IntMatrix::from_rows_i64(&[vec![1, 1], vec![0, 1]]);
        assert_eq!(hermite_normal_form(&a), hermite_normal_form(&b));
    }

    #[test]
    fn reduced_form_shape() {
        let m = IntMatrix::from_rows_i64(&[vec![2, 3, 5], vec![4, 1, 1], vec![6, 4, 6]]);
        let h = hermite_normal_form(&m);
        // third row is the sum of the first two
        assert_eq!(h.rows(), 2);
        assert_eq!(h, IntMatrix::from_rows_i64(&[vec![2, 3, 5], vec![0, 5, 9]]));
    }

    #[test]
    fn membership_by_reduction() {
        let h = hermite_normal_form(&IntMatrix::from_rows_i64(&[vec![2, 0], vec![0, 3]]));
        let v: Vec<BigInt> = [4, 3].iter().map(|&x| BigInt::from(x)).collect();
        assert!(reduces_to_zero(&h, &v));
        let w: Vec<BigInt> = [1, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert!(!reduces_to_zero(&h, &w));
    }
}
