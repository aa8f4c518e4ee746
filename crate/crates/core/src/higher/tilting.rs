use std::collections::BTreeSet;
use std::path::Path;

use serde::{Deserialize, Serialize};

use super::{HIndec, HigherError, HigherParams};

/// An Oppermann-Thomas cluster tilting set: `C(p+d-1, d)` pairwise
/// non-intertwining indecomposables.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TiltingSet {
    params: HigherParams,
    summands: BTreeSet<HIndec>,
}

/// On-disk form: `{"p":int,"d":int,"summands":[[1,3,5],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TiltingFile {
    pub p: u32,
    pub d: u32,
    pub summands: Vec<Vec<u32>>,
}

pub fn is_ot_tilting<'a>(params: &HigherParams, set: impl IntoIterator<Item = &'a HIndec>) -> bool {
    let set: Vec<&HIndec> = set.into_iter().collect();
    let distinct: BTreeSet<&HIndec> = set.iter().copied().collect();
    distinct.len() == set.len()
        && set.len() == params.tilting_size()
        && set.iter().enumerate().all(|(i, a)| set[i + 1..].iter().all(|b| !params.intertwines(a, b)))
}

impl TiltingSet {
    pub fn new(params: HigherParams, summands: impl IntoIterator<Item = HIndec>) -> Result<Self, HigherError> {
        let list: Vec<HIndec> = summands.into_iter().collect();
        let set: BTreeSet<HIndec> = list.iter().cloned().collect();
        if set.len() != list.len() {
            return Err(HigherError::InvalidTilting("repeated summand".into()));
        }
        if set.len() != params.tilting_size() {
            return Err(HigherError::InvalidTilting(format!(
                "expected {} summands, found {}",
                params.tilting_size(),
                set.len()
            )));
        }
        for a in &set {
            for b in &set {
                if a < b && params.intertwines(a, b) {
                    return Err(HigherError::InvalidTilting(format!("{a} intertwines {b}")));
                }
            }
        }
        Ok(TiltingSet { params, summands: set })
    }

    /// The indecomposables containing the point 1.
    pub fn default_for(params: HigherParams) -> Self {
        let summands = params.enumerate_indecs().into_iter().filter(|x| x.contains(1));
        Self::new(params, summands).expect("sets through a common point never intertwine")
    }

    pub fn params(&self) -> HigherParams {
        self.params
    }

    pub fn summands(&self) -> impl Iterator<Item = &HIndec> {
        self.summands.iter()
    }

    pub fn to_vec(&self) -> Vec<HIndec> {
        self.summands.iter().cloned().collect()
    }

    pub fn contains(&self, x: &HIndec) -> bool {
        self.summands.contains(x)
    }

    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn from_file_data(data: &TiltingFile) -> Result<Self, HigherError> {
        let params = HigherParams::new(data.p, data.d)?;
        let summands = data.summands.iter().map(|s| params.indec(s)).collect::<Result<Vec<_>, _>>()?;
        Self::new(params, summands)
    }

    pub fn to_file_data(&self) -> TiltingFile {
        TiltingFile {
            p: self.params.p(),
            d: self.params.d(),
            summands: self.summands.iter().map(|s| s.points().to_vec()).collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, HigherError> {
        let data: TiltingFile = serde_json::from_str(s).map_err(|e| HigherError::Io(e.to_string()))?;
        Self::from_file_data(&data)
    }

    pub fn load(path: &Path) -> Result<Self, HigherError> {
        let text = std::fs::read_to_string(path).map_err(|e| HigherError::Io(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// Every tilting set, as cliques of the right size in the non-intertwining graph.
pub fn enumerate_tilting_sets(params: HigherParams) -> Vec<TiltingSet> {
    let all = params.enumerate_indecs();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow(&params, &all, 0, &mut chosen, &mut out);
    out
}

fn grow(params: &HigherParams, all: &[HIndec], start: usize, chosen: &mut Vec<usize>, out: &mut Vec<TiltingSet>) {
    let target = params.tilting_size();
    if chosen.len() == target {
        let summands = chosen.iter().map(|&i| all[i].clone()).collect();
        out.push(TiltingSet { params: *params, summands });
        return;
    }
    if all.len() - start < target - chosen.len() {
        return;
    }
    for k in start..all.len() {
        if chosen.iter().all(|&c| !params.intertwines(&all[c], &all[k])) {
            chosen.push(k);
            grow(params, all, k + 1, chosen, out);
            chosen.pop();
        }
    }
}
