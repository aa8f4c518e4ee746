use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::abelian::{smith_normal_form, subgroup_contains, subgroup_equal, GroupInvariants, IntMatrix, IntVector};
use crate::higher::{k0_higher_ar, k0_higher_theta, ot_angle, theta_relations, HIndec, IndexTable};
use crate::object::{FormalObject, IndexVector};
use crate::polygon::{ar_angle, fan_diagonals, k0_polygon, Angulation, PolygonParams};
use crate::reference::{
    a23, a23_indec, a23_tilting, a23_vector, fan_tower, QUOTIENT_CLASSES, TABLE_ANGLES, TABLE_INDEX, TABLE_SIMPLES,
};

/// Outcome of one reproduction check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check { name: name.into(), passed, detail: detail.into() }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{tag} {}: {}", self.name, self.detail)
    }
}

/// Every published check plus a seeded Smith normal form spot check.
pub fn verify_paper(seed: u64) -> Vec<Check> {
    let mut checks = Vec::new();
    index_checks(&mut checks);
    angle_checks(&mut checks);
    span_checks(&mut checks);
    parity_checks(&mut checks);
    tower_checks(&mut checks);
    checks.push(snf_check(seed, 100));
    checks
}

fn index_checks(out: &mut Vec<Check>) {
    let t = a23_tilting();
    let mut table = IndexTable::new(&t);
    for (name, row) in TABLE_INDEX {
        let check = match (a23_indec(name), a23_vector(row)) {
            (Ok(s), Ok(expected)) => match table.index(&s) {
                Ok(v) => Check::new(format!("index {name}"), v == expected, format!("{v}")),
                Err(e) => Check::new(format!("index {name}"), false, e.to_string()),
            },
            _ => Check::new(format!("index {name}"), false, "reference row does not parse"),
        };
        out.push(check);
    }
}

fn object_named(name: &str) -> Option<FormalObject<HIndec>> {
    if name.is_empty() {
        Some(FormalObject::zero())
    } else {
        a23_indec(name).ok().map(FormalObject::single)
    }
}

fn angle_checks(out: &mut Vec<Check>) {
    let params = a23();
    let t = a23_tilting();
    let mut table = IndexTable::new(&t);
    for (names, theta) in TABLE_ANGLES {
        let label = names.iter().map(|n| if n.is_empty() { "0" } else { n }).collect::<Vec<_>>().join(" -> ");
        let name = format!("angle {label}");
        let (Some(x), Some(e2), Some(e1), Some(y), Ok(expected)) = (
            a23_indec(names[0]).ok(),
            object_named(names[1]),
            object_named(names[2]),
            a23_indec(names[3]).ok(),
            a23_vector(theta),
        ) else {
            out.push(Check::new(name, false, "reference row does not parse"));
            continue;
        };
        let check = match ot_angle(&params, &x, &y) {
            Err(e) => Check::new(name, false, e.to_string()),
            Ok(angle) if angle.e != [e1, e2] => Check::new(name, false, format!("computed {angle}")),
            Ok(angle) => match table.angle_theta(&angle) {
                Ok(v) => Check::new(name, v == expected, format!("theta {v}")),
                Err(e) => Check::new(name, false, e.to_string()),
            },
        };
        out.push(check);
    }
}

fn dense(v: &IndexVector<HIndec>, basis: &[HIndec]) -> IntVector {
    v.to_int_vector(basis).expect("vector supported on the tilting set")
}

fn span_checks(out: &mut Vec<Check>) {
    let params = a23();
    let t = a23_tilting();
    let basis = t.to_vec();
    let rels: Vec<IntVector> = match theta_relations(&t) {
        Ok(r) => r.iter().map(|v| dense(v, &basis)).collect(),
        Err(e) => {
            out.push(Check::new("theta relations", false, e.to_string()));
            return;
        }
    };
    let simples: Vec<IntVector> =
        TABLE_SIMPLES.iter().map(|(_, row)| dense(&a23_vector(row).expect("reference parses"), &basis)).collect();
    for ((name, _), v) in TABLE_SIMPLES.iter().zip(&simples) {
        let inside = subgroup_contains(&rels, v).unwrap_or(false);
        out.push(Check::new(format!("theta(S_{name}) in span"), inside, v.to_string()));
    }
    let equal = subgroup_equal(&rels, &simples).unwrap_or(false);
    out.push(Check::new("theta span equals simples span", equal, format!("{} generators", rels.len())));

    let unit = |name: &str| dense(&IndexVector::basis(a23_indec(name).expect("reference parses")), &basis);
    for class in QUOTIENT_CLASSES {
        let same =
            class.windows(2).all(|w| subgroup_contains(&rels, &unit(w[0]).add(&unit(w[1]).neg())).unwrap_or(false));
        let detail = if same { "one common image" } else { "images differ" };
        out.push(Check::new(format!("quotient identifies {}", class.join("=")), same, detail));
    }
    let mut with_reps = rels.clone();
    with_reps.push(unit(QUOTIENT_CLASSES[0][0]));
    with_reps.push(unit(QUOTIENT_CLASSES[1][0]));
    let everything: Vec<IntVector> = basis.iter().map(|b| unit(&b.to_string())).collect();
    let generates = subgroup_equal(&with_reps, &everything).unwrap_or(false);
    match k0_higher_theta(&t) {
        Ok(g) => {
            let basis_ok = generates && g == GroupInvariants::free(2);
            out.push(Check::new("common images form a basis", basis_ok, format!("quotient {g}")));
            out.push(Check::new("K0 via theta", g == GroupInvariants::free(2), g.to_string()));
        }
        Err(e) => out.push(Check::new("K0 via theta", false, e.to_string())),
    }
    let ar = k0_higher_ar(&params);
    out.push(Check::new("K0 via AR angles", ar == GroupInvariants::free(2), ar.to_string()));
}

fn parity_checks(out: &mut Vec<Check>) {
    for q in [3, 5] {
        for p in 2..=6 {
            let name = format!("parity p={p} q={q}");
            let expected = GroupInvariants::free(p as usize % 2);
            let check = match PolygonParams::new(p, q).and_then(|pp| k0_polygon(&Angulation::fan(pp))) {
                Ok(g) => Check::new(name, g == expected, g.to_string()),
                Err(e) => Check::new(name, false, e.to_string()),
            };
            out.push(check);
        }
    }
}

fn tower_checks(out: &mut Vec<Check>) {
    let pp = PolygonParams::new(3, 3).expect("valid parameters");
    let t = Angulation::fan(pp);
    for (i, d) in fan_diagonals(&pp).into_iter().enumerate() {
        let name = format!("AR tower of T_{i} = {d}");
        let expected = fan_tower(&pp, i).expect("tower exists for p = 3");
        let check = match ar_angle(&t, d) {
            Ok(angle) => {
                let middles: Vec<String> = angle.middles.iter().map(|m| m.to_string()).collect();
                Check::new(name, angle == expected, format!("middles [{}]", middles.join(", ")))
            }
            Err(e) => Check::new(name, false, e.to_string()),
        };
        out.push(check);
    }
}

/// Smith normal form of `count` seeded random matrices up to 6x6 with entries in [-9, 9].
pub(crate) fn snf_check(seed: u64, count: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for k in 0..count {
        let (r, c) = (rng.gen_range(1..=6), rng.gen_range(1..=6));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let m = IntMatrix::from_rows_i64(&rows);
        if let Err(why) = smith_normal_form(&m).check(&m) {
            return Check::new("seeded Smith normal forms", false, format!("matrix {k}: {why}"));
        }
    }
    Check::new("seeded Smith normal forms", true, format!("{count} matrices"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_checks_pass() {
        let checks = verify_paper(7);
        let failed: Vec<String> = checks.iter().filter(|c| !c.passed).map(|c| c.to_string()).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert_eq!(checks.iter().filter(|c| c.name.starts_with("index ")).count(), 16);
    }
}
