use std::fmt;

use crate::object::FormalObject;

use super::{HIndec, HigherError, HigherParams};

/// A `(d+2)`-angle `X -> E_d -> ... -> E_1 -> Y -> Σ^d X`.
#[derive(Clone, PartialEq, Eq)]
pub struct HAngle {
    pub x: HIndec,
    /// `e[r - 1]` is `E_r`.
    pub e: Vec<FormalObject<HIndec>>,
    pub y: HIndec,
}

impl HAngle {
    pub fn e_term(&self, r: usize) -> &FormalObject<HIndec> {
        &self.e[r - 1]
    }

    /// Terms `s_0 = Y, s_1 = E_1, ..., s_d = E_d, s_{d+1} = X`.
    pub fn terms(&self) -> Vec<FormalObject<HIndec>> {
        let mut out = vec![FormalObject::single(self.y.clone())];
        out.extend(self.e.iter().cloned());
        out.push(FormalObject::single(self.x.clone()));
        out
    }
}

impl fmt::Display for HAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.x)?;
        for e in self.e.iter().rev() {
            write!(f, " -> {e}")?;
        }
        write!(f, " -> {}", self.y)
    }
}

impl fmt::Debug for HAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The angle extending a nonzero element of `Ext^d(Y, X)`.
///
/// With `x_i` the points of `X` in increasing order and `y_i` the point of
/// `Y` following `x_i`, `E_r` is the sum over `r`-subsets `I` of
/// `{x_i : i in I} ∪ {y_j : j not in I}`, dropping sets with neighbours.
pub fn ot_angle(params: &HigherParams, x: &HIndec, y: &HIndec) -> Result<HAngle, HigherError> {
    if !params.intertwines(x, y) {
        return Err(HigherError::NotIntertwining { x: x.clone(), y: y.clone() });
    }
    let xs = x.points();
    let ys: Vec<u32> =
        xs.iter().map(|&a| y.points().iter().copied().find(|&b| b > a).unwrap_or(y.points()[0])).collect();
    let n = xs.len();
    let mut e = vec![FormalObject::zero(); n - 1];
    for mask in 1u64..(1u64 << n) - 1 {
        let r = mask.count_ones() as usize;
        let pts: Vec<u32> = (0..n).map(|i| if mask >> i & 1 == 1 { xs[i] } else { ys[i] }).collect();
        if let Some(s) = params.mixed_set(pts) {
            e[r - 1].push(s);
        }
    }
    Ok(HAngle { x: x.clone(), e, y: y.clone() })
}

/// The Auslander-Reiten angle ending in `m`, starting at `Σ^d m`.
pub fn ar_angle_higher(params: &HigherParams, m: &HIndec) -> HAngle {
    ot_angle(params, &params.sigma_d(m), m).expect("Σ^d M always intertwines M")
}
