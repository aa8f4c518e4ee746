//! Published values for the worked examples: the fan towers of `C_q(A_p)`
//! and the index and θ tables of `O(A^2_3)`.

use crate::higher::{HIndec, HigherError, HigherParams, TiltingSet};
use crate::object::{FormalObject, IndexVector};
use crate::polygon::{fan_diagonals, ArAngle, Diagonal, PolygonParams};

/// Linear combination of named indecomposables.
pub type Terms = &'static [(&'static str, i64)];

/// Index of each indecomposable of `O(A^2_3)` for the tilting set through 1.
pub const TABLE_INDEX: &[(&str, Terms)] = &[
    ("135", &[("135", 1)]),
    ("136", &[("136", 1)]),
    ("137", &[("137", 1)]),
    ("146", &[("146", 1)]),
    ("147", &[("147", 1)]),
    ("157", &[("157", 1)]),
    ("246", &[("146", 1), ("136", -1), ("135", 1)]),
    ("247", &[("147", 1), ("135", 1), ("137", -1)]),
    ("248", &[("135", 1)]),
    ("257", &[("157", 1), ("137", -1), ("136", 1)]),
    ("258", &[("136", 1)]),
    ("268", &[("137", 1)]),
    ("357", &[("157", 1), ("147", -1), ("146", 1)]),
    ("358", &[("146", 1)]),
    ("368", &[("147", 1)]),
    ("468", &[("157", 1)]),
];

/// Angles `s_3 -> s_2 -> s_1 -> s_0` with their θ-values.
pub const TABLE_ANGLES: &[([&str; 4], Terms)] = &[
    (["247", "257", "357", "135"], &[("136", 1), ("146", -1)]),
    (["257", "357", "135", "136"], &[("135", -1), ("137", 1), ("146", 1), ("147", -1)]),
    (["258", "358", "135", "137"], &[("135", -1), ("136", -1), ("137", 1), ("146", 1)]),
    (["258", "268", "468", "146"], &[("136", -1), ("137", 1), ("146", 1), ("157", -1)]),
    (["268", "468", "146", "147"], &[("137", -1), ("146", -1), ("147", 1), ("157", 1)]),
    (["268", "", "", "157"], &[("137", -1), ("157", 1)]),
];

/// θ at the simple modules, rows as printed (the rows for 136 and 137 coincide).
pub const TABLE_SIMPLES: &[(&str, Terms)] = &[
    ("135", &[("136", 1), ("146", -1)]),
    ("136", &[("135", -1), ("137", 1), ("146", 1), ("147", -1)]),
    ("137", &[("135", -1), ("137", 1), ("146", 1), ("147", -1)]),
    ("146", &[("135", 1), ("136", -1), ("147", 1), ("157", -1)]),
    ("147", &[("136", 1), ("137", -1), ("146", -1), ("157", 1)]),
    ("157", &[("146", 1), ("147", -1)]),
];

/// Classes identified in the quotient by the θ-relations.
pub const QUOTIENT_CLASSES: [[&str; 3]; 2] = [["136", "146", "147"], ["137", "135", "157"]];

pub fn a23() -> HigherParams {
    HigherParams::new(3, 2).expect("valid parameters")
}

/// The tilting set `135 + 136 + 137 + 146 + 147 + 157`.
pub fn a23_tilting() -> TiltingSet {
    TiltingSet::default_for(a23())
}

/// Parses a digit string such as `"246"` into an indecomposable of `O(A^2_3)`.
pub fn a23_indec(name: &str) -> Result<HIndec, HigherError> {
    let points: Vec<u32> = name.chars().filter_map(|c| c.to_digit(10)).collect();
    a23().indec(&points)
}

pub fn a23_vector(terms: &[(&str, i64)]) -> Result<IndexVector<HIndec>, HigherError> {
    terms.iter().map(|&(s, c)| Ok((a23_indec(s)?, c))).collect::<Result<Vec<_>, _>>().map(IndexVector::from_terms)
}

/// The Auslander-Reiten tower of `T_i` for the fan angulation as drawn in
/// the parity computation; `None` when `p < 2` or `i >= p`.
pub fn fan_tower(params: &PolygonParams, i: usize) -> Option<ArAngle> {
    let (p, q) = (params.p() as usize, params.q() as usize);
    if p < 2 || i >= p {
        return None;
    }
    let fan = fan_diagonals(params);
    let t = fan[i];
    let s = |d: Diagonal, k: i64| FormalObject::single(params.suspend(d, k));
    let mut middles = vec![FormalObject::zero(); q + 1];
    let mut cones = vec![FormalObject::single(t); q + 2];
    cones[1] = s(t, -1);
    cones[q] = s(t, 1);
    if i + 1 < p {
        middles[q - 1] = FormalObject::single(fan[i + 1]);
    }
    if i > 0 {
        middles[1] = FormalObject::single(fan[i - 1]);
    }
    for (k, cone) in cones.iter_mut().enumerate().take(q).skip(2) {
        *cone = if i == 0 {
            s(t, -(k as i64))
        } else if i + 1 == p {
            s(t, (q + 1 - k) as i64)
        } else {
            let (qi, ii) = (q as u32, i as u32);
            let a = params.diagonal((ii + 2) * qi - ii, (ii + 1) * qi - ii - 1).ok()?;
            s(a, (q - 1 - k) as i64)
        };
    }
    Some(ArAngle { end: t, middles, cones })
}
