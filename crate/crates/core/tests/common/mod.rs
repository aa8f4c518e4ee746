//! Independent oracles shared by the integration suites. Each check returns
//! the list of violations it found so callers can either assert or count.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use k0cat::higher::{ot_angle, HigherParams, IndexTable, TiltingSet};
use k0cat::object::IndexVector;
use k0cat::polygon::{Diagonal, PolygonParams};

// ---- polygon: mesh coordinates of ZA_p

/// Vertex `(r, s)` of ZA_p, `r + 1 <= s <= r + p`, as a diagonal.
pub fn to_diagonal(pp: &PolygonParams, r: i64, s: i64) -> Option<Diagonal> {
    let (q, n) = (pp.q() as i64, pp.n() as i64);
    pp.diagonal((r * q).rem_euclid(n) as u32, (s * q + 1).rem_euclid(n) as u32).ok()
}

pub fn lifts(pp: &PolygonParams, d: Diagonal) -> Vec<(i64, i64)> {
    let (p, n) = (pp.p() as i64, pp.n() as i64);
    (0..n)
        .flat_map(|r| (r + 1..=r + p).map(move |s| (r, s)))
        .filter(|&(r, s)| to_diagonal(pp, r, s) == Some(d))
        .collect()
}

/// `Hom(b, a) != 0` iff `a` lifts into the hammock `H+` of some lift of `b`.
pub fn hom_by_coordinates(pp: &PolygonParams, b: Diagonal, a: Diagonal) -> bool {
    let p = pp.p() as i64;
    lifts(pp, b).into_iter().any(|(r, s)| (r..s).any(|i| (s..=r + p).any(|j| to_diagonal(pp, i, j) == Some(a))))
}

pub fn hom_violations(pp: &PolygonParams) -> Vec<String> {
    let all = pp.all_diagonals();
    let mut bad = Vec::new();
    for &b in &all {
        for &a in &all {
            let expected = hom_by_coordinates(pp, b, a);
            if pp.hom_nonzero(b, a) != expected || pp.hom_nonzero_into(b, a) != expected {
                bad.push(format!("{pp}: Hom({b}, {a})"));
            }
        }
    }
    bad
}

/// Crossing against `Ext^{1..q}` computed from coordinate hammocks.
pub fn crossing_violations(pp: &PolygonParams) -> Vec<String> {
    let all = pp.all_diagonals();
    let mut bad = Vec::new();
    for &a in &all {
        for &b in &all {
            let ext = (1..=pp.q() as i64).any(|i| hom_by_coordinates(pp, b, pp.suspend(a, i)));
            if pp.crossing(a, b) != ext || pp.crossing(a, b) != pp.crossing(b, a) || pp.crossing_via_ext(a, b) != ext {
                bad.push(format!("{pp}: crossing {a} {b}"));
            }
        }
    }
    bad
}

pub fn ext_shift_violations(pp: &PolygonParams) -> Vec<String> {
    let all = pp.all_diagonals();
    let mut bad = Vec::new();
    for &a in &all {
        for &b in all.iter().filter(|&&b| pp.crossing(a, b)) {
            let degrees: Vec<u32> =
                (0..pp.q()).filter(|&i| hom_by_coordinates(pp, b, pp.suspend(a, i as i64 + 1))).collect();
            if pp.ext_shift(a, b).ok().map(|l| vec![l]) != Some(degrees.clone()) {
                bad.push(format!("{pp}: ext shift of {a} {b}, degrees {degrees:?}"));
            }
        }
    }
    bad
}

/// Middle terms of the triangle over each crossing pair.
pub fn triangle_violations(pp: &PolygonParams) -> Vec<String> {
    let all = pp.all_diagonals();
    let mut bad = Vec::new();
    for &a in &all {
        for &b in all.iter().filter(|&&b| pp.crossing(a, b)) {
            let tri = match pp.triangle_over(a, b) {
                Ok(t) => t,
                Err(e) => {
                    bad.push(format!("{pp}: {a} {b}: {e}"));
                    continue;
                }
            };
            let l = tri.shift as i64;
            let left = pp.suspend(a, l);
            if tri.middle.iter().any(|(_, m)| m != 1) {
                bad.push(format!("{pp}: repeated summand over {a} {b}"));
            }
            for e in tri.middle.distinct() {
                if pp.crossing(*e, left) || pp.crossing(*e, b) {
                    bad.push(format!("{pp}: {e} crosses an end of {a} {b}"));
                }
                if !pp.crossing(*e, pp.suspend(a, l + 1)) || !pp.crossing(*e, pp.suspend(b, -1)) {
                    bad.push(format!("{pp}: {e} misses a shifted end of {a} {b}"));
                }
            }
            // with b0 < a0 < b1 < a1: {a0,b0} is allowable-or-edge iff {a1,b1} is
            let (b0, b1) = b.endpoints();
            let (a0, a1) = if b0 < a.lo() && a.lo() < b1 { (a.lo(), a.hi()) } else { (a.hi(), a.lo()) };
            let ok = |x: u32, y: u32| pp.is_edge(x, y) || pp.is_q_allowable(x, y);
            if ok(a0, b0) != ok(a1, b1) {
                bad.push(format!("{pp}: allowability of the sides of {a} {b}"));
            }
        }
    }
    bad
}

// ---- cyclic points

/// Interleaving checked on every cyclic rotation of the merged sequence.
pub fn intertwine_oracle(x: &[u32], y: &[u32]) -> bool {
    if x.iter().any(|a| y.contains(a)) {
        return false;
    }
    let mut all: Vec<(u32, bool)> = x.iter().map(|&a| (a, true)).chain(y.iter().map(|&b| (b, false))).collect();
    all.sort_unstable();
    let n = all.len();
    (0..n).all(|i| all[i].1 != all[(i + 1) % n].1)
}

pub fn intertwining_violations(h: &HigherParams) -> Vec<String> {
    let all = h.enumerate_indecs();
    let mut bad = Vec::new();
    for x in &all {
        for y in &all {
            let expected = intertwine_oracle(x.points(), y.points());
            if h.intertwines(x, y) != expected || h.intertwines(y, x) != expected {
                bad.push(format!("{h}: {x} {y}"));
            }
        }
    }
    bad
}

/// Every angle `X -> E -> s` with `X` in `T` must satisfy the additivity
/// the index is defined by, not only the angles used to compute it.
pub fn additivity_violations(t: &TiltingSet) -> Vec<String> {
    let h = t.params();
    let d = h.d() as usize;
    let mut table = IndexTable::new(t);
    let mut bad = Vec::new();
    for s in h.enumerate_indecs() {
        let is = match table.index(&s) {
            Ok(v) => v,
            Err(e) => {
                bad.push(format!("{h}: {s}: {e}"));
                continue;
            }
        };
        if t.contains(&s) {
            if is != IndexVector::basis(s.clone()) {
                bad.push(format!("{h}: index of summand {s} is {is}"));
            }
            continue;
        }
        for x in t.summands().filter(|x| h.intertwines(x, &s)) {
            let angle = ot_angle(&h, x, &s).expect("intertwining pair");
            let mut rhs = IndexVector::basis(x.clone()).scaled(if d.is_multiple_of(2) { 1 } else { -1 });
            for r in 1..=d {
                let er = table.index_of_object(angle.e_term(r)).expect("summands resolve");
                rhs.add_scaled(&er, if r % 2 == 1 { 1 } else { -1 });
            }
            if is != rhs {
                bad.push(format!("{h}: index of {s} via {x}"));
            }
        }
    }
    bad
}

// ---- abelian groups

/// Rank over the rationals by plain Gaussian elimination.
pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigRational>> =
        rows.iter().map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(rank, pivot);
        for i in 0..m.len() {
            if i != rank && !m[i][c].is_zero() {
                let f = &m[i][c] / &m[rank][c];
                let pivot_row = m[rank].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Inverse of a square rational matrix, `None` if singular.
pub fn inverse(rows: &[Vec<i64>]) -> Option<Vec<Vec<BigRational>>> {
    let n = rows.len();
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<BigRational> = r.iter().map(|&x| BigRational::from_integer(x.into())).collect();
            row.extend((0..n).map(|j| if i == j { BigRational::one() } else { BigRational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let pivot = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, pivot);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= &inv;
        }
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[c].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    *x -= &f * y;
                }
            }
        }
    }
    Some(m.into_iter().map(|r| r[n..].to_vec()).collect())
}

fn coordinates(v: &[BigInt], inv: &[Vec<BigRational>]) -> Vec<BigRational> {
    (0..v.len())
        .map(|j| {
            (0..v.len()).fold(BigRational::zero(), |acc, i| acc + BigRational::from_integer(v[i].clone()) * &inv[i][j])
        })
        .collect()
}

/// Reduces `v` into the fundamental parallelepiped of the row lattice.
fn reduce(v: &[BigInt], rows: &[Vec<i64>], inv: &[Vec<BigRational>]) -> Vec<BigInt> {
    let frac: Vec<BigRational> = coordinates(v, inv).iter().map(|c| c - c.floor()).collect();
    (0..v.len())
        .map(|j| {
            let x = (0..v.len())
                .fold(BigRational::zero(), |acc, i| acc + &frac[i] * BigRational::from_integer(rows[i][j].into()));
            assert!(x.is_integer());
            x.to_integer()
        })
        .collect()
}

/// Element-order histogram of `Z^n / rows` (square, full rank) by
/// breadth-first search over coset representatives.
pub fn coset_orders(rows: &[Vec<i64>]) -> BTreeMap<u64, usize> {
    let n = rows.len();
    let inv = inverse(rows).expect("full rank");
    let zero = vec![BigInt::zero(); n];
    let mut seen = BTreeSet::from([zero.clone()]);
    let mut queue = VecDeque::from([zero]);
    while let Some(v) = queue.pop_front() {
        for k in 0..n {
            let mut w = v.clone();
            w[k] += 1;
            let w = reduce(&w, rows, &inv);
            if seen.insert(w.clone()) {
                queue.push_back(w);
            }
        }
    }
    // the order of v is the lcm of the denominators of its lattice coordinates
    let mut hist = BTreeMap::new();
    for v in &seen {
        let order = coordinates(v, &inv).iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        *hist.entry(order.to_u64().unwrap()).or_insert(0) += 1;
    }
    hist
}

/// Element-order histogram of `sum Z/t_i`.
pub fn product_orders(torsion: &[BigInt]) -> BTreeMap<u64, usize> {
    let mods: Vec<u64> = torsion.iter().map(|t| t.to_u64().unwrap()).collect();
    let mut hist = BTreeMap::new();
    let total: u64 = mods.iter().product();
    for mut idx in 0..total {
        let mut order = 1u64;
        for &m in &mods {
            let x = idx % m;
            idx /= m;
            order = order.lcm(&(m / x.gcd(&m)));
        }
        *hist.entry(order).or_insert(0) += 1;
    }
    hist
}
