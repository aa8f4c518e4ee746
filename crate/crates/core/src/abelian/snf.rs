//! Smith normal form with unimodular transforms.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::matrix::IntMatrix;

/// `u * m * v == d`, with `u` and `v` unimodular and `d` diagonal with a
/// non-negative divisibility chain on its diagonal.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Diagonal entries of `d` (length `min(rows, cols)`).
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal()
    }

    pub fn rank(&self) -> usize {
        self.d.diagonal().iter().filter(|x| !x.is_zero()).count()
    }

    /// Checks the defining properties against the input matrix, naming the first failure.
    pub fn check(&self, m: &IntMatrix) -> Result<(), &'static str> {
        if self.u.mul(m).mul(&self.v) != self.d {
            return Err("U*M*V != D");
        }
        if !self.d.is_diagonal() {
            return Err("D is not diagonal");
        }
        if !self.u.is_unimodular() || !self.v.is_unimodular() {
            return Err("transform is not unimodular");
        }
        let diag = self.d.diagonal();
        if diag.iter().any(|x| x.is_negative()) {
            return Err("negative invariant factor");
        }
        let chain = diag.windows(2).all(|w| if w[0].is_zero() { w[1].is_zero() } else { (&w[1] % &w[0]).is_zero() });
        if !chain {
            return Err("diagonal is not a divisibility chain");
        }
        Ok(())
    }
}

/// Bezout coefficients `(g, x, y)` with `x*a + y*b = g = gcd(a, b) >= 0`.
pub(crate) fn bezout(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let e = a.extended_gcd(b);
    if e.gcd.is_negative() {
        (-e.gcd, -e.x, -e.y)
    } else {
        (e.gcd, e.x, e.y)
    }
}

pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut d = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);

    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = smallest_nonzero(&d, t) else {
            break;
        };
        d.swap_rows(t, pi);
        u.swap_rows(t, pi);
        d.swap_cols(t, pj);
        v.swap_cols(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let (a, b) = (d[(t, t)].clone(), d[(i, t)].clone());
                if b.is_multiple_of(&a) {
                    let k = -(&b / &a);
                    d.add_row_multiple(i, t, &k);
                    u.add_row_multiple(i, t, &k);
                } else {
                    let (g, x, y) = bezout(&a, &b);
                    let (z, w) = (-(&b / &g), &a / &g);
                    d.combine_rows(t, i, &x, &y, &z, &w);
                    u.combine_rows(t, i, &x, &y, &z, &w);
                }
            }
            for j in t + 1..cols {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let (a, b) = (d[(t, t)].clone(), d[(t, j)].clone());
                if b.is_multiple_of(&a) {
                    let k = -(&b / &a);
                    d.add_col_multiple(j, t, &k);
                    v.add_col_multiple(j, t, &k);
                } else {
                    let (g, x, y) = bezout(&a, &b);
                    let (z, w) = (-(&b / &g), &a / &g);
                    d.combine_cols(t, j, &x, &y, &z, &w);
                    v.combine_cols(t, j, &x, &y, &z, &w);
                    // column t changed, rows below may be dirty again
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // pivot must divide the remaining block
            let pivot = d[(t, t)].clone();
            let offender = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !d[(i, j)].is_multiple_of(&pivot)));
            match offender {
                Some(i) => {
                    let one = BigInt::from(1);
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }

        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }

    SmithDecomposition { d, u, v }
}

fn smallest_nonzero(m: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..m.rows() {
        for j in t..m.cols() {
            let x = &m[(i, j)];
            if x.is_zero() {
                continue;
            }
            if best.is_none_or(|(bi, bj)| x.abs() < m[(bi, bj)].abs()) {
                best = Some((i, j));
            }
        }
    }
    best
}
