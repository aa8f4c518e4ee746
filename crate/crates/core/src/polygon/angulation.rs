use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{Diagonal, PolygonError, PolygonParams};

/// A `(q+2)`-angulation: `p` pairwise non-crossing q-allowable diagonals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Angulation {
    params: PolygonParams,
    diagonals: BTreeSet<Diagonal>,
}

/// On-disk form: `{"p":int,"q":int,"diagonals":[[u,v],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AngulationFile {
    pub p: u32,
    pub q: u32,
    pub diagonals: Vec<[u32; 2]>,
}

impl Angulation {
    pub fn new(params: PolygonParams, diagonals: impl IntoIterator<Item = Diagonal>) -> Result<Self, PolygonError> {
        let mut set = BTreeSet::new();
        for d in diagonals {
            if !params.is_q_allowable(d.lo(), d.hi()) {
                return Err(PolygonError::NotAllowable { u: d.lo(), v: d.hi() });
            }
            if !set.insert(d) {
                return Err(PolygonError::InvalidAngulation(format!("diagonal {d} listed twice")));
            }
        }
        for a in &set {
            for b in &set {
                if a < b && params.crossing(*a, *b) {
                    return Err(PolygonError::InvalidAngulation(format!("{a} crosses {b}")));
                }
            }
        }
        if set.len() != params.p() as usize {
            return Err(PolygonError::InvalidAngulation(format!(
                "expected {} diagonals, found {}",
                params.p(),
                set.len()
            )));
        }
        Ok(Angulation { params, diagonals: set })
    }

    /// `T_0 = {0, q+1}` and `T_i = {N - i, (1 + i) q + 1 - i}` for `1 <= i < p`.
    pub fn fan(params: PolygonParams) -> Self {
        Self::new(params, fan_diagonals(&params)).expect("fan is always an angulation")
    }

    pub fn params(&self) -> PolygonParams {
        self.params
    }

    pub fn diagonals(&self) -> impl Iterator<Item = Diagonal> + '_ {
        self.diagonals.iter().copied()
    }

    pub fn to_vec(&self) -> Vec<Diagonal> {
        self.diagonals.iter().copied().collect()
    }

    pub fn contains(&self, d: &Diagonal) -> bool {
        self.diagonals.contains(d)
    }

    pub fn len(&self) -> usize {
        self.diagonals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.diagonals.is_empty()
    }

    pub fn from_file_data(data: &AngulationFile) -> Result<Self, PolygonError> {
        let params = PolygonParams::new(data.p, data.q)?;
        let diags = data.diagonals.iter().map(|&[u, v]| params.diagonal(u, v)).collect::<Result<Vec<_>, _>>()?;
        Self::new(params, diags)
    }

    pub fn to_file_data(&self) -> AngulationFile {
        AngulationFile {
            p: self.params.p(),
            q: self.params.q(),
            diagonals: self.diagonals.iter().map(|d| [d.lo(), d.hi()]).collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, PolygonError> {
        let data: AngulationFile = serde_json::from_str(s).map_err(|e| PolygonError::Io(e.to_string()))?;
        Self::from_file_data(&data)
    }

    pub fn load(path: &Path) -> Result<Self, PolygonError> {
        let text = std::fs::read_to_string(path).map_err(|e| PolygonError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// The fan diagonals in the order `T_0, ..., T_{p-1}`.
pub fn fan_diagonals(params: &PolygonParams) -> Vec<Diagonal> {
    let (p, q, n) = (params.p(), params.q(), params.n());
    let mut out = vec![Diagonal::from_endpoints(0, q + 1)];
    for i in 1..p {
        out.push(Diagonal::from_endpoints(n - i, (1 + i) * q + 1 - i));
    }
    out
}

/// Every angulation of the polygon, by backtracking over canonical order.
pub fn enumerate_angulations(params: PolygonParams) -> Vec<Angulation> {
    let all = params.all_diagonals();
    let mut out = Vec::new();
    let mut chosen: Vec<Diagonal> = Vec::new();
    extend(&params, &all, 0, &mut chosen, &mut out);
    out
}

fn extend(
    params: &PolygonParams,
    all: &[Diagonal],
    start: usize,
    chosen: &mut Vec<Diagonal>,
    out: &mut Vec<Angulation>,
) {
    if chosen.len() == params.p() as usize {
        out.push(Angulation { params: *params, diagonals: chosen.iter().copied().collect() });
        return;
    }
    for k in start..all.len() {
        let d = all[k];
        if chosen.iter().all(|c| !params.crossing(*c, d)) {
            chosen.push(d);
            extend(params, all, k + 1, chosen, out);
            chosen.pop();
        }
    }
}
