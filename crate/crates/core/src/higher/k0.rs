//! Index, θ-relations and the two routes to the Grothendieck group.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;

use crate::abelian::{quotient_invariants, GroupInvariants, GroupPresentation};
use crate::object::{FormalObject, IndexVector};

use super::{ar_angle_higher, ot_angle, HAngle, HIndec, HigherError, HigherParams, TiltingSet};

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Index of `s` with respect to `T`.
///
/// For `s` outside `T`, pick `X` in `T` intertwining `s` and take the angle
/// `X -> E_d -> ... -> E_1 -> s -> Σ^d X`. Since `Hom(T, Σ^d X) = 0` the
/// index is additive along it:
/// `index(s) = sum_r (-1)^{r+1} index(E_r) + (-1)^d [X]`.
/// Only angles whose `E`-summands intertwine fewer summands of `T` than `s`
/// are used, and every such angle must give the same vector.
pub fn index_higher(t: &TiltingSet, s: &HIndec) -> Result<IndexVector<HIndec>, HigherError> {
    IndexTable::new(t).index(s)
}

/// Memoised indices with respect to one tilting set.
pub struct IndexTable<'a> {
    t: &'a TiltingSet,
    memo: BTreeMap<HIndec, IndexVector<HIndec>>,
}

impl<'a> IndexTable<'a> {
    pub fn new(t: &'a TiltingSet) -> Self {
        IndexTable { t, memo: BTreeMap::new() }
    }

    /// Number of summands of `T` intertwining `s`; zero exactly on `T`.
    fn depth(&self, s: &HIndec) -> usize {
        let params = self.t.params();
        self.t.summands().filter(|x| params.intertwines(x, s)).count()
    }

    pub fn index(&mut self, s: &HIndec) -> Result<IndexVector<HIndec>, HigherError> {
        if let Some(v) = self.memo.get(s) {
            return Ok(v.clone());
        }
        if self.t.contains(s) {
            return Ok(IndexVector::basis(s.clone()));
        }
        let params = self.t.params();
        let d = params.d() as usize;
        let depth = self.depth(s);
        let mut found: Option<(HIndec, IndexVector<HIndec>)> = None;
        let resolving: Vec<HIndec> = self.t.summands().filter(|x| params.intertwines(x, s)).cloned().collect();
        for x in resolving {
            let angle = ot_angle(&params, &x, s)?;
            if !angle.e.iter().all(|e| e.distinct().all(|m| self.depth(m) < depth)) {
                continue;
            }
            let mut index = IndexVector::zero();
            for r in 1..=d {
                index.add_scaled(&self.index_of_object(angle.e_term(r))?, sign(r + 1));
            }
            index.add_term(x.clone(), sign(d));
            match &found {
                None => found = Some((x, index)),
                Some((via, first)) if *first != index => {
                    return Err(HigherError::AmbiguousIndex {
                        object: s.clone(),
                        detail: format!("{first} via {via}, {index} via {x}"),
                    })
                }
                Some(_) => {}
            }
        }
        let (_, v) = found.ok_or_else(|| HigherError::NoResolution(s.clone()))?;
        self.memo.insert(s.clone(), v.clone());
        Ok(v)
    }

    pub fn index_of_object(&mut self, obj: &FormalObject<HIndec>) -> Result<IndexVector<HIndec>, HigherError> {
        let mut out = IndexVector::zero();
        for (s, mult) in obj.iter() {
            out.add_scaled(&self.index(s)?, mult as i64);
        }
        Ok(out)
    }

    /// `sum_i (-1)^i index(s_i)` over the terms of an angle.
    pub fn angle_theta(&mut self, angle: &HAngle) -> Result<IndexVector<HIndec>, HigherError> {
        let mut out = IndexVector::zero();
        for (i, term) in angle.terms().iter().enumerate() {
            out.add_scaled(&self.index_of_object(term)?, sign(i));
        }
        Ok(out)
    }
}

/// `sum_i (-1)^i index(s_i)` over the terms of an angle.
pub fn angle_theta(t: &TiltingSet, angle: &HAngle) -> Result<IndexVector<HIndec>, HigherError> {
    IndexTable::new(t).angle_theta(angle)
}

/// θ-values of the angles over all intertwining pairs.
///
/// Vectors are normalised so the leading coefficient is positive, then
/// deduplicated and sorted; zero vectors are dropped.
pub fn theta_relations(t: &TiltingSet) -> Result<Vec<IndexVector<HIndec>>, HigherError> {
    let params = t.params();
    let all = params.enumerate_indecs();
    let mut table = IndexTable::new(t);
    let mut out = BTreeSet::new();
    for x in &all {
        for y in all.iter().filter(|y| params.intertwines(x, y)) {
            let v = table.angle_theta(&ot_angle(&params, x, y)?)?;
            let lead = v.terms().next().map(|(_, c)| c);
            match lead {
                None => {}
                Some(c) if c < 0 => {
                    out.insert(v.neg());
                }
                Some(_) => {
                    out.insert(v);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// `K_0^sp(T)` modulo the θ-relations.
pub fn k0_higher_theta(t: &TiltingSet) -> Result<GroupInvariants, HigherError> {
    let mut pres = GroupPresentation::new(t.to_vec()).expect("tilting summands are distinct");
    for rel in theta_relations(t)? {
        pres.add_relation(rel.terms().map(|(s, c)| (s.clone(), BigInt::from(c)))).expect("indices lie in add T");
    }
    Ok(quotient_invariants(&pres))
}

/// `-[M] + (-1)^d [Σ^d M] + sum_r (-1)^{r-1} [E_r]` for the AR angle of `M`.
pub fn ar_relation_higher(params: &HigherParams, m: &HIndec) -> IndexVector<HIndec> {
    let angle = ar_angle_higher(params, m);
    let mut rel = IndexVector::basis(m.clone()).neg();
    rel.add_term(angle.x.clone(), sign(params.d() as usize));
    for (i, e) in angle.e.iter().enumerate() {
        rel.add_scaled(&e.class(), sign(i));
    }
    rel
}

/// `K_0^sp(O)` modulo the relations of all Auslander-Reiten angles.
pub fn k0_higher_ar(params: &HigherParams) -> GroupInvariants {
    let all = params.enumerate_indecs();
    let mut pres = GroupPresentation::new(all.clone()).expect("indecomposables are distinct");
    for m in &all {
        let rel = ar_relation_higher(params, m);
        pres.add_relation(rel.terms().map(|(s, c)| (s.clone(), BigInt::from(c))))
            .expect("AR terms are indecomposables");
    }
    quotient_invariants(&pres)
}
