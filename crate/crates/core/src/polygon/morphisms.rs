//! Morphisms, extensions and triangles between q-allowable diagonals.
//!
//! Hom spaces between indecomposables are zero or one-dimensional, so only
//! nonvanishing is modelled. Nonzero maps out of `b = {b0, b1}` reach exactly
//! the diagonals `{b0 + i q, b1 + j q}` inside the hammock, and a composite of
//! nonzero maps is nonzero exactly when the combined offsets stay inside the
//! hammock of the source.

use crate::object::FormalObject;

use super::{Diagonal, PolygonError, PolygonParams};

/// Hammock coordinates of a nonzero morphism `b -> a`.
///
/// `a = {b0 + i q, b1 + j q}` for the labelling `(b0, b1)` of the source.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HomOffsets {
    pub i: u32,
    pub j: u32,
    /// Endpoint of the target reached from `b0`.
    pub a0: u32,
    /// Endpoint of the target reached from `b1`.
    pub a1: u32,
}

/// The nonsplit triangle `Σ^l a -> e -> b -> Σ^{l+1} a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolygonTriangle {
    pub shift: u32,
    pub left: Diagonal,
    pub middle: FormalObject<Diagonal>,
    pub right: Diagonal,
}

impl PolygonParams {
    /// Hammock offsets of `b -> a` with the source labelled `(b0, b1)`.
    pub fn hom_offsets_labeled(&self, b0: u32, b1: u32, a: Diagonal) -> Option<HomOffsets> {
        let q = self.q();
        let reach0 = self.gap(b0, b1) - 2;
        let reach1 = self.gap(b1, b0) - 2;
        let (u, v) = a.endpoints();
        let mut found = None;
        for (a0, a1) in [(u, v), (v, u)] {
            let d0 = self.gap(b0, a0);
            let d1 = self.gap(b1, a1);
            if d0.is_multiple_of(q) && d0 <= reach0 && d1.is_multiple_of(q) && d1 <= reach1 {
                debug_assert!(found.is_none(), "two hammock positions for one target");
                found = Some(HomOffsets { i: d0 / q, j: d1 / q, a0, a1 });
            }
        }
        found
    }

    pub fn hom_offsets(&self, b: Diagonal, a: Diagonal) -> Option<HomOffsets> {
        self.hom_offsets_labeled(b.lo(), b.hi(), a)
    }

    /// `Hom(b, a) != 0`, read off the hammock spanned forward from `b`.
    pub fn hom_nonzero(&self, b: Diagonal, a: Diagonal) -> bool {
        self.hom_offsets(b, a).is_some()
    }

    /// `Hom(a, b) != 0`, read off the hammock spanned backward from `b`.
    ///
    /// Independent of [`hom_nonzero`](Self::hom_nonzero); the two must agree.
    pub fn hom_nonzero_into(&self, a: Diagonal, b: Diagonal) -> bool {
        let q = self.q();
        let (b0, b1) = b.endpoints();
        let reach0 = self.gap(b1, b0) - 2;
        let reach1 = self.gap(b0, b1) - 2;
        let (u, v) = a.endpoints();
        [(u, v), (v, u)].into_iter().any(|(a0, a1)| {
            let d0 = self.gap(a0, b0);
            let d1 = self.gap(a1, b1);
            d0.is_multiple_of(q) && d0 <= reach0 && d1.is_multiple_of(q) && d1 <= reach1
        })
    }

    /// Whether the composite of the nonzero maps `t -> mid -> x` is nonzero.
    /// False if either factor vanishes.
    pub fn composite_nonzero(&self, t: Diagonal, mid: Diagonal, x: Diagonal) -> bool {
        let Some(first) = self.hom_offsets(t, mid) else {
            return false;
        };
        let Some(second) = self.hom_offsets_labeled(first.a0, first.a1, x) else {
            return false;
        };
        let q = self.q();
        let (t0, t1) = t.endpoints();
        (first.i + second.i) * q <= self.gap(t0, t1) - 2 && (first.j + second.j) * q <= self.gap(t1, t0) - 2
    }

    /// Strict crossing of chords in the disk.
    pub fn crossing(&self, a: Diagonal, b: Diagonal) -> bool {
        let (lo, hi) = a.endpoints();
        if b.has_endpoint(lo) || b.has_endpoint(hi) {
            return false;
        }
        let inside = |x: u32| lo < x && x < hi;
        inside(b.lo()) != inside(b.hi())
    }

    /// Crossing decided homologically: `Ext^i(a, b) = Hom(a, Σ^i b) != 0` for some `1 <= i <= q`.
    pub fn crossing_via_ext(&self, a: Diagonal, b: Diagonal) -> bool {
        (1..=self.q() as i64).any(|i| self.hom_nonzero(a, self.suspend(b, i)))
    }

    /// Labels crossing diagonals as `b0 < a0 < b1 < a1` in cyclic order.
    fn crossing_labels(&self, a: Diagonal, b: Diagonal) -> Result<(u32, u32, u32, u32), PolygonError> {
        if !self.crossing(a, b) {
            return Err(PolygonError::NotCrossing { a, b });
        }
        let (b0, b1) = b.endpoints();
        let (a0, a1) = if b0 < a.lo() && a.lo() < b1 { (a.lo(), a.hi()) } else { (a.hi(), a.lo()) };
        Ok((b0, a0, b1, a1))
    }

    /// The unique `l` in `[0, q)` with `Hom(b, Σ^{l+1} a) != 0` for crossing `a, b`.
    ///
    /// Found as the unique shift `i` for which `{a0 - i, b0}` is allowable or
    /// an edge, with `a0 - i` kept strictly after `b0`.
    pub fn ext_shift(&self, a: Diagonal, b: Diagonal) -> Result<u32, PolygonError> {
        let (b0, a0, _, _) = self.crossing_labels(a, b)?;
        let room = self.gap(b0, a0);
        let hits: Vec<u32> = (0..self.q().min(room))
            .filter(|&i| {
                let x = self.shift(a0, -(i as i64));
                self.is_q_allowable(x, b0) || self.is_edge(x, b0)
            })
            .collect();
        match hits.as_slice() {
            [l] => Ok(*l),
            _ => Err(PolygonError::Internal(format!("ext shift of {a}, {b} not unique: {hits:?}"))),
        }
    }

    /// The nonsplit triangle `Σ^l a -> e1 + e2 -> b -> Σ^{l+1} a` for crossing
    /// `a, b`, with `e1 = {a0 - l, b0}`, `e2 = {b1, a1 - l}` and edges dropped.
    pub fn triangle_over(&self, a: Diagonal, b: Diagonal) -> Result<PolygonTriangle, PolygonError> {
        let (b0, a0, b1, a1) = self.crossing_labels(a, b)?;
        let l = self.ext_shift(a, b)?;
        let mut middle = FormalObject::zero();
        for (x, y) in [(self.shift(a0, -(l as i64)), b0), (b1, self.shift(a1, -(l as i64)))] {
            if self.is_edge(x, y) {
                continue;
            }
            if !self.is_q_allowable(x, y) {
                return Err(PolygonError::Internal(format!(
                    "middle term {{{x},{y}}} of triangle over {a}, {b} is neither an edge nor allowable"
                )));
            }
            middle.push(Diagonal::from_endpoints(x, y));
        }
        Ok(PolygonTriangle { shift: l, left: self.suspend(a, l as i64), middle, right: b })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> PolygonParams {
        PolygonParams::new(3, 3).unwrap()
    }

    fn d(pp: &PolygonParams, u: u32, v: u32) -> Diagonal {
        pp.diagonal(u, v).unwrap()
    }

    #[test]
    fn hom_examples() {
        let pp = setup();
        let b = d(&pp, 0, 4);
        assert!(pp.hom_nonzero(b, b));
        assert!(!pp.hom_nonzero(b, d(&pp, 1, 5)));
        // {0,4} sits on the boundary of the strip, its hammock is a single ray
        assert!(!pp.hom_nonzero(b, d(&pp, 3, 7)));
        let off = pp.hom_offsets(b, d(&pp, 0, 10)).unwrap();
        assert_eq!((off.i, off.j), (0, 2));
        let c = d(&pp, 13, 6);
        let off = pp.hom_offsets(c, d(&pp, 2, 9)).unwrap();
        assert_eq!((off.i, off.j, off.a0, off.a1), (1, 1, 9, 2));
    }

    #[test]
    fn crossing_examples() {
        let pp = setup();
        let a = d(&pp, 0, 4);
        assert!(!pp.crossing(a, a));
        assert!(pp.crossing(a, d(&pp, 2, 6)));
        assert!(!pp.crossing(a, d(&pp, 4, 8)));
        assert!(pp.crossing_via_ext(a, d(&pp, 2, 6)));
        assert!(!pp.crossing_via_ext(a, a));
    }

    #[test]
    fn ext_shift_examples() {
        let pp = setup();
        let (a, b) = (d(&pp, 2, 6), d(&pp, 0, 4));
        assert_eq!(pp.ext_shift(a, b).unwrap(), 1);
        assert!(pp.hom_nonzero(b, pp.suspend(a, 2)));
        assert_eq!(pp.ext_shift(d(&pp, 4, 11), d(&pp, 0, 7)).unwrap(), 0);
        assert!(matches!(pp.ext_shift(b, d(&pp, 4, 8)), Err(PolygonError::NotCrossing { .. })));
    }

    #[test]
    fn triangle_examples() {
        let pp = setup();
        let t = pp.triangle_over(d(&pp, 2, 6), d(&pp, 0, 4)).unwrap();
        assert_eq!(t.shift, 1);
        assert!(t.middle.is_zero());
        assert_eq!(pp.suspend(d(&pp, 2, 6), 2), d(&pp, 0, 4));

        let t = pp.triangle_over(d(&pp, 4, 11), d(&pp, 0, 7)).unwrap();
        assert_eq!(t.shift, 0);
        let expected: FormalObject<Diagonal> = [d(&pp, 0, 4), d(&pp, 7, 11)].into_iter().collect();
        assert_eq!(t.middle, expected);
    }

    #[test]
    fn identity_composites() {
        let pp = setup();
        let b = d(&pp, 0, 4);
        let x = d(&pp, 0, 10);
        assert!(pp.composite_nonzero(b, b, x));
        assert!(pp.composite_nonzero(b, x, x));
        assert!(pp.composite_nonzero(b, d(&pp, 0, 7), x));
        assert!(!pp.composite_nonzero(b, d(&pp, 1, 5), x));
    }
}
