use std::fmt;

use serde::{Deserialize, Serialize};

use super::PolygonError;

/// Parameters of the q-cluster category of type `A_p`, modelled on an
/// `N`-gon with `N = (p + 1) q + 2` vertices labelled `0..N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolygonParams {
    p: u32,
    q: u32,
}

impl PolygonParams {
    pub fn new(p: u32, q: u32) -> Result<Self, PolygonError> {
        if p < 1 {
            return Err(PolygonError::InvalidParams(format!("p must be >= 1, got {p}")));
        }
        if q < 2 {
            return Err(PolygonError::InvalidParams(format!("q must be >= 2, got {q}")));
        }
        (p as u64 + 1)
            .checked_mul(q as u64)
            .and_then(|x| x.checked_add(2))
            .filter(|&n| n <= u32::MAX as u64 / 4)
            .ok_or_else(|| PolygonError::InvalidParams(format!("polygon too large for p={p}, q={q}")))?;
        Ok(PolygonParams { p, q })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// Vertex count `N`.
    pub fn n(&self) -> u32 {
        (self.p + 1) * self.q + 2
    }

    /// `v` moved by `k` steps anticlockwise (clockwise for negative `k`).
    pub fn shift(&self, v: u32, k: i64) -> u32 {
        let n = self.n() as i64;
        (v as i64 + k).rem_euclid(n) as u32
    }

    /// Anticlockwise step count from `u` to `v`.
    pub fn gap(&self, u: u32, v: u32) -> u32 {
        let n = self.n();
        (v + n - u % n) % n
    }

    pub fn is_edge(&self, u: u32, v: u32) -> bool {
        let g = self.gap(u, v);
        g == 1 || g + 1 == self.n()
    }

    /// True iff `{u, v}` is a q-allowable diagonal: non-adjacent, spanning
    /// `1 + k q` vertices for some `k >= 1`.
    pub fn is_q_allowable(&self, u: u32, v: u32) -> bool {
        let n = self.n();
        if u >= n || v >= n || u == v {
            return false;
        }
        let g = self.gap(u, v);
        g >= 2 && g <= n - 2 && g % self.q == 1
    }

    pub fn diagonal(&self, u: u32, v: u32) -> Result<Diagonal, PolygonError> {
        if self.is_q_allowable(u, v) {
            Ok(Diagonal::from_endpoints(u, v))
        } else {
            Err(PolygonError::NotAllowable { u, v })
        }
    }

    /// All q-allowable diagonals in canonical order.
    pub fn all_diagonals(&self) -> Vec<Diagonal> {
        let n = self.n();
        let mut out = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.is_q_allowable(u, v) {
                    out.push(Diagonal { lo: u, hi: v });
                }
            }
        }
        out
    }

    /// `Σ^k d`: both endpoints rotated by `-k`.
    pub fn suspend(&self, d: Diagonal, k: i64) -> Diagonal {
        Diagonal::from_endpoints(self.shift(d.lo, -k), self.shift(d.hi, -k))
    }
}

impl fmt::Display for PolygonParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={}, q={}, N={}", self.p, self.q, self.n())
    }
}

/// A diagonal `{lo, hi}` of the polygon, stored with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Diagonal {
    lo: u32,
    hi: u32,
}

impl Diagonal {
    pub(crate) fn from_endpoints(u: u32, v: u32) -> Self {
        debug_assert_ne!(u, v);
        Diagonal { lo: u.min(v), hi: u.max(v) }
    }

    pub fn lo(&self) -> u32 {
        self.lo
    }

    pub fn hi(&self) -> u32 {
        self.hi
    }

    pub fn endpoints(&self) -> (u32, u32) {
        (self.lo, self.hi)
    }

    pub fn has_endpoint(&self, v: u32) -> bool {
        self.lo == v || self.hi == v
    }
}

impl fmt::Display for Diagonal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}
