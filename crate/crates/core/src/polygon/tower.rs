//! Covers, Auslander-Reiten angles, index and the Grothendieck group.

use num_bigint::BigInt;

use crate::abelian::{quotient_invariants, GroupInvariants, GroupPresentation};
use crate::object::{FormalObject, IndexVector};

use super::{Angulation, Diagonal, PolygonError, PolygonParams};

/// Auslander-Reiten `(q+3)`-angle `M -> T_q -> ... -> T_0 -> M` in add `T`.
///
/// `middles[i]` is the source of the `i`-th cover in the tower, so
/// `middles[0]` maps to `M` and `middles[q]` is reached from `M`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArAngle {
    pub end: Diagonal,
    pub middles: Vec<FormalObject<Diagonal>>,
    /// Bottom row of the tower: `cones[0] = M`, `cones[k]` is the fiber of
    /// the `(k-1)`-th cover; the last entry is `M` again.
    pub cones: Vec<FormalObject<Diagonal>>,
}

/// Minimal right `T`-approximation of an indecomposable `x`.
///
/// Candidates are the `t` in `T` with `Hom(t, x) != 0`; `t` is dropped when
/// its map to `x` factors through another candidate.
pub fn t_cover(t: &Angulation, x: Diagonal) -> FormalObject<Diagonal> {
    let params = t.params();
    let candidates: Vec<Diagonal> = t.diagonals().filter(|&c| params.hom_nonzero(c, x)).collect();
    maximal_sources(&params, &candidates, x)
}

/// Minimal right almost split map into `m` inside add `T`.
pub fn sink_map(t: &Angulation, m: Diagonal) -> FormalObject<Diagonal> {
    let params = t.params();
    let candidates: Vec<Diagonal> = t.diagonals().filter(|&c| c != m && params.hom_nonzero(c, m)).collect();
    maximal_sources(&params, &candidates, m)
}

fn maximal_sources(params: &PolygonParams, candidates: &[Diagonal], x: Diagonal) -> FormalObject<Diagonal> {
    candidates
        .iter()
        .copied()
        .filter(|&c| !candidates.iter().any(|&other| other != c && params.composite_nonzero(c, other, x)))
        .collect()
}

/// Fiber `Y` of the map `cover -> x` in the triangle `Y -> cover -> x -> Σ Y`.
fn fiber(
    params: &PolygonParams,
    x: Diagonal,
    cover: &FormalObject<Diagonal>,
    step: usize,
) -> Result<FormalObject<Diagonal>, PolygonError> {
    let sources: Vec<Diagonal> = cover.iter().flat_map(|(d, m)| std::iter::repeat_n(*d, m)).collect();
    fiber_into(params, &sources, x).map_err(|e| match e {
        PolygonError::NonIndecomposableCone { .. } => {
            PolygonError::NonIndecomposableCone { object: x, cover: cover.to_string(), step }
        }
        e => e,
    })
}

fn unsupported(x: Diagonal, sources: &[Diagonal]) -> PolygonError {
    let cover: FormalObject<Diagonal> = sources.iter().copied().collect();
    PolygonError::NonIndecomposableCone { object: x, cover: cover.to_string(), step: 0 }
}

/// Fiber of a map `sources -> x` whose components are all nonzero.
///
/// Splits off the first source `t` and uses the octahedron for
/// `t -> t + R -> x`: the fiber is the fiber of `R -> x -> Σ fib(t -> x)`.
fn fiber_into(
    params: &PolygonParams,
    sources: &[Diagonal],
    x: Diagonal,
) -> Result<FormalObject<Diagonal>, PolygonError> {
    let Some((&t, rest)) = sources.split_first() else {
        return Ok(FormalObject::single(params.suspend(x, -1)));
    };
    let first = if t == x {
        FormalObject::zero()
    } else {
        let tri = params.triangle_over(params.suspend(x, -1), t)?;
        if tri.shift != 0 {
            return Err(PolygonError::Internal(format!("map {t} -> {x} does not sit in a degree-one triangle")));
        }
        tri.middle
    };
    if rest.is_empty() {
        return Ok(first);
    }
    let shifted: Vec<Diagonal> = first.iter().map(|(e, _)| params.suspend(*e, 1)).collect();
    match (rest, shifted.as_slice()) {
        (_, []) => Ok(rest.iter().copied().collect()),
        (_, [e]) => split_zero_sources(params, rest, x, *e),
        ([r], targets) => {
            let flags: Vec<(Diagonal, bool)> =
                targets.iter().map(|&e| (e, params.composite_nonzero(*r, x, e))).collect();
            fiber_from(params, *r, &flags)
        }
        _ => Err(unsupported(x, sources)),
    }
}

/// Fiber of `sources -> via -> target`: sources whose composite vanishes split off.
fn split_zero_sources(
    params: &PolygonParams,
    sources: &[Diagonal],
    via: Diagonal,
    target: Diagonal,
) -> Result<FormalObject<Diagonal>, PolygonError> {
    let (live, dead): (Vec<Diagonal>, Vec<Diagonal>) =
        sources.iter().partition(|&&r| params.composite_nonzero(r, via, target));
    let mut out = fiber_into(params, &live, target)?;
    out.extend(dead);
    Ok(out)
}

/// Fiber of a map `s -> sum of targets`, each flagged nonzero or zero.
fn fiber_from(
    params: &PolygonParams,
    s: Diagonal,
    targets: &[(Diagonal, bool)],
) -> Result<FormalObject<Diagonal>, PolygonError> {
    let mut out: FormalObject<Diagonal> =
        targets.iter().filter(|(_, live)| !live).map(|(e, _)| params.suspend(*e, -1)).collect();
    let live: Vec<Diagonal> = targets.iter().filter(|(_, live)| *live).map(|(e, _)| *e).collect();
    let part = match live.as_slice() {
        [] => FormalObject::single(s),
        [e] => fiber_into(params, &[s], *e)?,
        [e1, e2] => {
            let f1 = fiber_into(params, &[s], *e1)?;
            let sources: Vec<Diagonal> = f1.iter().flat_map(|(d, m)| std::iter::repeat_n(*d, m)).collect();
            if sources.is_empty() {
                FormalObject::single(params.suspend(*e2, -1))
            } else {
                split_zero_sources(params, &sources, s, *e2)?
            }
        }
        _ => return Err(unsupported(s, &live)),
    };
    out.extend_from(&part);
    Ok(out)
}

/// One tower step: cover every summand and take the fiber summand-wise.
fn cover_step(
    t: &Angulation,
    x: &FormalObject<Diagonal>,
    step: usize,
) -> Result<(FormalObject<Diagonal>, FormalObject<Diagonal>), PolygonError> {
    let params = t.params();
    let mut cover = FormalObject::zero();
    let mut next = FormalObject::zero();
    for (summand, mult) in x.iter() {
        let c = t_cover(t, *summand);
        let f = fiber(&params, *summand, &c, step)?;
        for _ in 0..mult {
            cover.extend_from(&c);
            next.extend_from(&f);
        }
    }
    Ok((cover, next))
}

/// Builds the Auslander-Reiten `(q+3)`-angle of `m` by iterated covers.
pub fn ar_angle(t: &Angulation, m: Diagonal) -> Result<ArAngle, PolygonError> {
    if !t.contains(&m) {
        return Err(PolygonError::NotInAngulation(m));
    }
    let params = t.params();
    let q = params.q() as usize;
    let sink = sink_map(t, m);
    let mut cones = vec![FormalObject::single(m)];
    let mut x = fiber(&params, m, &sink, 0)?;
    let mut middles = vec![sink];
    for step in 1..=q {
        cones.push(x.clone());
        let (cover, next) = cover_step(t, &x, step)?;
        middles.push(cover);
        x = next;
    }
    if x != FormalObject::single(m) {
        return Err(PolygonError::TowerMismatch { end: m, found: x.to_string() });
    }
    cones.push(x);
    Ok(ArAngle { end: m, middles, cones })
}

/// `index_T(x) = sum (-1)^i [U_i]` over the cover tower of `x` of length `q+1`.
pub fn index_polygon(t: &Angulation, x: Diagonal) -> Result<IndexVector<Diagonal>, PolygonError> {
    let q = t.params().q() as usize;
    let mut index = IndexVector::zero();
    let mut obj = FormalObject::single(x);
    for step in 0..q {
        let (cover, next) = cover_step(t, &obj, step)?;
        index.add_scaled(&cover.class(), sign(step));
        obj = next;
    }
    if let Some(stray) = obj.distinct().find(|d| !t.contains(d)) {
        return Err(PolygonError::TowerMismatch { end: x, found: format!("last term {obj} has {stray} outside T") });
    }
    index.add_scaled(&obj.class(), sign(q));
    Ok(index)
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Relation `-[M] + (-1)^{q+1} [M] + sum_i (-1)^i [T_i]` of one AR angle.
pub fn ar_relation(angle: &ArAngle, q: u32) -> IndexVector<Diagonal> {
    let mut rel = IndexVector::basis(angle.end).neg();
    rel.add_term(angle.end, sign(q as usize + 1));
    for (i, mid) in angle.middles.iter().enumerate() {
        rel.add_scaled(&mid.class(), sign(i));
    }
    rel
}

/// Presentation of `K_0` as a quotient of the split Grothendieck group of `T`.
pub fn k0_presentation(t: &Angulation) -> Result<GroupPresentation<Diagonal>, PolygonError> {
    let q = t.params().q();
    let mut pres = GroupPresentation::new(t.to_vec()).expect("angulation diagonals are distinct");
    for m in t.diagonals() {
        let rel = ar_relation(&ar_angle(t, m)?, q);
        pres.add_relation(rel.terms().map(|(d, c)| (*d, BigInt::from(c))))
            .expect("AR angle terms lie in the angulation");
    }
    Ok(pres)
}

pub fn k0_polygon(t: &Angulation) -> Result<GroupInvariants, PolygonError> {
    Ok(quotient_invariants(&k0_presentation(t)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polygon::fan_diagonals;

    #[test]
    fn cover_of_member_is_itself() {
        let pp = PolygonParams::new(3, 3).unwrap();
        let t = Angulation::fan(pp);
        for d in t.diagonals() {
            assert_eq!(t_cover(&t, d), FormalObject::single(d));
            assert_eq!(index_polygon(&t, d).unwrap(), IndexVector::basis(d));
        }
    }

    #[test]
    fn fan_covers_of_t0_shifts() {
        let pp = PolygonParams::new(3, 3).unwrap();
        let t = Angulation::fan(pp);
        let fan = fan_diagonals(&pp);
        let q = pp.q() as i64;
        for j in (-q + 2)..=-1 {
            assert!(t_cover(&t, pp.suspend(fan[0], j)).is_zero());
        }
        assert_eq!(t_cover(&t, pp.suspend(fan[0], -q + 1)), FormalObject::single(fan[1]));
        assert!(t_cover(&t, pp.suspend(fan[0], 1)).is_zero());
    }

    #[test]
    fn angle_of_t0() {
        let pp = PolygonParams::new(3, 3).unwrap();
        let t = Angulation::fan(pp);
        let fan = fan_diagonals(&pp);
        let angle = ar_angle(&t, fan[0]).unwrap();
        let expected =
            vec![FormalObject::zero(), FormalObject::zero(), FormalObject::single(fan[1]), FormalObject::zero()];
        assert_eq!(angle.middles, expected);
    }

    #[test]
    fn parity_small() {
        for (p, free) in [(2, 0), (3, 1), (4, 0), (5, 1)] {
            let pp = PolygonParams::new(p, 3).unwrap();
            let inv = k0_polygon(&Angulation::fan(pp)).unwrap();
            assert_eq!(inv, GroupInvariants::free(free), "p={p}");
        }
    }

    #[test]
    fn not_in_angulation() {
        let pp = PolygonParams::new(3, 3).unwrap();
        let t = Angulation::fan(pp);
        let outside = pp.diagonal(1, 5).unwrap();
        assert!(matches!(ar_angle(&t, outside), Err(PolygonError::NotInAngulation(_))));
    }
}
