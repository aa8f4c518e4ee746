//! Finitely generated abelian groups: presentations, Smith and Hermite
//! normal forms, quotient invariants and subgroup comparisons.

mod hnf;
mod matrix;
mod snf;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use hnf::hermite_normal_form;
pub use matrix::IntMatrix;
pub use snf::{smith_normal_form, SmithDecomposition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AbelianError {
    #[error("vector length {found} does not match ambient rank {expected}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("unknown generator {0}")]
    UnknownGenerator(String),
    #[error("duplicate generator {0}")]
    DuplicateGenerator(String),
}

/// A dense integer vector in a fixed ambient lattice `Z^n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntVector(Vec<BigInt>);

impl IntVector {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVector(entries)
    }

    pub fn zero(len: usize) -> Self {
        IntVector(vec![BigInt::zero(); len])
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVector(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn neg(&self) -> IntVector {
        IntVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &IntVector) -> IntVector {
        assert_eq!(self.len(), other.len());
        IntVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl fmt::Display for IntVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Generators plus sparse relation vectors; presents `Z^g / <relations>`.
#[derive(Clone, Debug)]
pub struct GroupPresentation<L> {
    generators: Vec<L>,
    positions: HashMap<L, usize>,
    relations: Vec<BTreeMap<usize, BigInt>>,
}

impl<L: Clone + Eq + Hash + fmt::Debug> GroupPresentation<L> {
    pub fn new(generators: Vec<L>) -> Result<Self, AbelianError> {
        let mut positions = HashMap::with_capacity(generators.len());
        for (i, g) in generators.iter().enumerate() {
            if positions.insert(g.clone(), i).is_some() {
                return Err(AbelianError::DuplicateGenerator(format!("{g:?}")));
            }
        }
        Ok(GroupPresentation { generators, positions, relations: Vec::new() })
    }

    pub fn generators(&self) -> &[L] {
        &self.generators
    }

    pub fn num_relations(&self) -> usize {
        self.relations.len()
    }

    pub fn position(&self, label: &L) -> Option<usize> {
        self.positions.get(label).copied()
    }

    /// Adds the relation `sum coef * [label]`. Zero relations are skipped.
    pub fn add_relation<I>(&mut self, terms: I) -> Result<(), AbelianError>
    where
        I: IntoIterator<Item = (L, BigInt)>,
    {
        let mut rel: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (label, coef) in terms {
            let i = self.position(&label).ok_or_else(|| AbelianError::UnknownGenerator(format!("{label:?}")))?;
            *rel.entry(i).or_default() += coef;
        }
        rel.retain(|_, c| !c.is_zero());
        if !rel.is_empty() {
            self.relations.push(rel);
        }
        Ok(())
    }

    pub fn add_relation_vector(&mut self, v: &IntVector) -> Result<(), AbelianError> {
        check_len(self.generators.len(), v)?;
        let rel: BTreeMap<usize, BigInt> =
            v.entries().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (i, c.clone())).collect();
        if !rel.is_empty() {
            self.relations.push(rel);
        }
        Ok(())
    }

    /// Relations as dense rows over the generator list.
    pub fn relation_matrix(&self) -> IntMatrix {
        let g = self.generators.len();
        let mut m = IntMatrix::zeros(self.relations.len(), g);
        for (r, rel) in self.relations.iter().enumerate() {
            for (&i, c) in rel {
                m[(r, i)] = c.clone();
            }
        }
        m
    }

    pub fn relation_vectors(&self) -> Vec<IntVector> {
        let m = self.relation_matrix();
        (0..m.rows()).map(|i| IntVector::new(m.row(i).to_vec())).collect()
    }
}

/// Canonical isomorphism type `Z^free_rank + sum Z/torsion[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupInvariants {
    pub free_rank: usize,
    #[serde(serialize_with = "ser_bigints", deserialize_with = "de_bigints")]
    pub torsion: Vec<BigInt>,
}

impl GroupInvariants {
    pub fn free(rank: usize) -> Self {
        GroupInvariants { free_rank: rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> BigInt {
        self.torsion.iter().fold(BigInt::one(), |acc, t| acc * t)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("invariants always serialize")
    }
}

impl fmt::Display for GroupInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

fn ser_bigints<S: Serializer>(v: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        let n = serde_json::Number::from_str(&x.to_string()).map_err(serde::ser::Error::custom)?;
        seq.serialize_element(&n)?;
    }
    seq.end()
}

fn de_bigints<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<BigInt>, D::Error> {
    let nums: Vec<serde_json::Number> = Vec::deserialize(d)?;
    nums.iter().map(|n| BigInt::from_str(&n.to_string()).map_err(serde::de::Error::custom)).collect()
}

/// Invariants of the group `Z^g / <rows of relations>` for `g` columns.
pub fn invariants_of_relations(relations: &IntMatrix) -> GroupInvariants {
    let g = relations.cols();
    let snf = smith_normal_form(relations);
    let diag = snf.invariant_factors();
    let rank = diag.iter().filter(|x| !x.is_zero()).count();
    let torsion = diag.into_iter().filter(|x| !x.is_zero() && !x.is_one()).collect();
    GroupInvariants { free_rank: g - rank, torsion }
}

pub fn quotient_invariants<L: Clone + Eq + Hash + fmt::Debug>(p: &GroupPresentation<L>) -> GroupInvariants {
    invariants_of_relations(&p.relation_matrix())
}

fn check_len(expected: usize, v: &IntVector) -> Result<(), AbelianError> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(AbelianError::LengthMismatch { expected, found: v.len() })
    }
}

fn common_len(a: &[IntVector], b: &[IntVector]) -> Result<Option<usize>, AbelianError> {
    let Some(n) = a.iter().chain(b).map(IntVector::len).next() else {
        return Ok(None);
    };
    for v in a.iter().chain(b) {
        check_len(n, v)?;
    }
    Ok(Some(n))
}

fn stack(gens: &[IntVector], cols: usize) -> IntMatrix {
    IntMatrix::from_rows(gens.iter().map(|g| g.entries().to_vec()).collect(), cols)
}

/// Hermite basis of the span of `gens` inside `Z^cols`.
pub fn span_basis(gens: &[IntVector], cols: usize) -> Result<IntMatrix, AbelianError> {
    for g in gens {
        check_len(cols, g)?;
    }
    Ok(hermite_normal_form(&stack(gens, cols)))
}

/// True iff `v` lies in the integer span of `gens`.
pub fn subgroup_contains(gens: &[IntVector], v: &IntVector) -> Result<bool, AbelianError> {
    for g in gens {
        check_len(v.len(), g)?;
    }
    let h = hermite_normal_form(&stack(gens, v.len()));
    Ok(hnf::reduces_to_zero(&h, v.entries()))
}

/// True iff the integer spans of `a` and `b` coincide.
pub fn subgroup_equal(a: &[IntVector], b: &[IntVector]) -> Result<bool, AbelianError> {
    let Some(n) = common_len(a, b)? else {
        return Ok(true);
    };
    Ok(hermite_normal_form(&stack(a, n)) == hermite_normal_form(&stack(b, n)))
}
