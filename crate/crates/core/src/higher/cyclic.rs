use std::fmt;

use serde::{Deserialize, Serialize};

use super::HigherError;

/// Parameters of `O(A^d_p)`: a cycle of `Z = p + 2d + 1` points `1..=Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HigherParams {
    p: u32,
    d: u32,
}

impl HigherParams {
    pub fn new(p: u32, d: u32) -> Result<Self, HigherError> {
        if p < 1 {
            return Err(HigherError::InvalidParams(format!("p must be >= 1, got {p}")));
        }
        if d < 1 {
            return Err(HigherError::InvalidParams(format!("d must be >= 1, got {d}")));
        }
        let z = p as u64 + 2 * d as u64 + 1;
        if z > 64 {
            return Err(HigherError::InvalidParams(format!("cycle of {z} points is too large")));
        }
        Ok(HigherParams { p, d })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Number of points on the cycle.
    pub fn z(&self) -> u32 {
        self.p + 2 * self.d + 1
    }

    /// Cardinality of an Oppermann-Thomas cluster tilting set, `C(p+d-1, d)`.
    pub fn tilting_size(&self) -> usize {
        binomial(self.p + self.d - 1, self.d)
    }

    pub fn are_neighbours(&self, a: u32, b: u32) -> bool {
        let z = self.z();
        a != b && (a % z + 1 == b || b % z + 1 == a)
    }

    pub fn predecessor(&self, a: u32) -> u32 {
        if a == 1 {
            self.z()
        } else {
            a - 1
        }
    }

    /// Validates and sorts a point set.
    pub fn indec(&self, points: &[u32]) -> Result<HIndec, HigherError> {
        let bad = |reason: String| HigherError::InvalidIndec { points: points.to_vec(), reason };
        let mut pts = points.to_vec();
        pts.sort_unstable();
        pts.dedup();
        if pts.len() != points.len() {
            return Err(bad("repeated point".into()));
        }
        if pts.len() != self.d as usize + 1 {
            return Err(bad(format!("expected {} points", self.d + 1)));
        }
        if let Some(&x) = pts.iter().find(|&&x| x < 1 || x > self.z()) {
            return Err(bad(format!("point {x} outside 1..={}", self.z())));
        }
        if self.has_neighbours(&pts) {
            return Err(bad("contains neighbouring points".into()));
        }
        Ok(HIndec { points: pts, z: self.z() })
    }

    /// True if a sorted point set contains two cyclic neighbours.
    pub(crate) fn has_neighbours(&self, sorted: &[u32]) -> bool {
        sorted.windows(2).any(|w| w[0] + 1 == w[1])
            || (sorted.len() > 1 && self.are_neighbours(sorted[0], sorted[sorted.len() - 1]))
    }

    /// Builds an indecomposable from points known to be valid, or `None` if
    /// two of them are neighbours.
    pub(crate) fn mixed_set(&self, mut pts: Vec<u32>) -> Option<HIndec> {
        pts.sort_unstable();
        if self.has_neighbours(&pts) {
            None
        } else {
            Some(HIndec { points: pts, z: self.z() })
        }
    }

    /// All indecomposables in lexicographic order.
    pub fn enumerate_indecs(&self) -> Vec<HIndec> {
        let mut out = Vec::new();
        let mut chosen = Vec::new();
        self.extend(1, &mut chosen, &mut out);
        out
    }

    fn extend(&self, next: u32, chosen: &mut Vec<u32>, out: &mut Vec<HIndec>) {
        if chosen.len() == self.d as usize + 1 {
            if !self.are_neighbours(chosen[0], *chosen.last().unwrap()) {
                out.push(HIndec { points: chosen.clone(), z: self.z() });
            }
            return;
        }
        for x in next..=self.z() {
            chosen.push(x);
            self.extend(x + 2, chosen, out);
            chosen.pop();
        }
    }

    /// `Σ^d X`: every point replaced by its predecessor.
    pub fn sigma_d(&self, x: &HIndec) -> HIndec {
        let mut pts: Vec<u32> = x.points.iter().map(|&a| self.predecessor(a)).collect();
        pts.sort_unstable();
        HIndec { points: pts, z: self.z() }
    }

    /// `Σ^{-d} X`: every point replaced by its successor.
    pub fn sigma_d_inv(&self, x: &HIndec) -> HIndec {
        let z = self.z();
        let mut pts: Vec<u32> = x.points.iter().map(|&a| a % z + 1).collect();
        pts.sort_unstable();
        HIndec { points: pts, z }
    }

    /// Strict cyclic interleaving `x0 < y0 < x1 < ... < xd < yd < x0`.
    pub fn intertwines(&self, x: &HIndec, y: &HIndec) -> bool {
        let (mut i, mut j) = (0, 0);
        let (xs, ys) = (&x.points, &y.points);
        let mut labels = Vec::with_capacity(xs.len() + ys.len());
        while i < xs.len() || j < ys.len() {
            if j == ys.len() || (i < xs.len() && xs[i] < ys[j]) {
                labels.push((xs[i], false));
                i += 1;
            } else {
                labels.push((ys[j], true));
                j += 1;
            }
        }
        labels.windows(2).all(|w| w[0].0 != w[1].0 && w[0].1 != w[1].1)
    }
}

impl fmt::Display for HigherParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}, d={}, |Z|={}", self.p, self.d, self.z())
    }
}

pub(crate) fn binomial(n: u32, k: u32) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k) as usize;
    let n = n as usize;
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// An indecomposable of `O(A^d_p)`: sorted points with no cyclic neighbours.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HIndec {
    points: Vec<u32>,
    z: u32,
}

impl HIndec {
    pub fn points(&self) -> &[u32] {
        &self.points
    }

    pub fn contains(&self, a: u32) -> bool {
        self.points.binary_search(&a).is_ok()
    }
}

impl fmt::Display for HIndec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.z <= 9 { "" } else { "," };
        let parts: Vec<String> = self.points.iter().map(u32::to_string).collect();
        f.write_str(&parts.join(sep))
    }
}

impl fmt::Debug for HIndec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
