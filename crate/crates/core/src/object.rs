//! Formal direct sums of indecomposables and integer vectors over them.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use crate::abelian::IntVector;

/// A direct sum of indecomposables, kept as a multiset. Empty is the zero object.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FormalObject<T: Ord> {
    summands: BTreeMap<T, usize>,
}

impl<T: Ord> Default for FormalObject<T> {
    fn default() -> Self {
        FormalObject { summands: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> FormalObject<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(x: T) -> Self {
        let mut o = Self::zero();
        o.push(x);
        o
    }

    pub fn push(&mut self, x: T) {
        *self.summands.entry(x).or_insert(0) += 1;
    }

    pub fn extend_from(&mut self, other: &FormalObject<T>) {
        for (x, m) in &other.summands {
            *self.summands.entry(x.clone()).or_insert(0) += m;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Number of indecomposable summands counted with multiplicity.
    pub fn len(&self) -> usize {
        self.summands.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    pub fn multiplicity(&self, x: &T) -> usize {
        self.summands.get(x).copied().unwrap_or(0)
    }

    pub fn contains(&self, x: &T) -> bool {
        self.summands.contains_key(x)
    }

    /// Distinct summands in order.
    pub fn distinct(&self) -> impl Iterator<Item = &T> {
        self.summands.keys()
    }

    /// Summands with multiplicity.
    pub fn iter(&self) -> impl Iterator<Item = (&T, usize)> {
        self.summands.iter().map(|(x, &m)| (x, m))
    }

    /// The unique summand if the object is indecomposable.
    pub fn as_indecomposable(&self) -> Option<&T> {
        if self.len() == 1 {
            self.summands.keys().next()
        } else {
            None
        }
    }

    pub fn class(&self) -> IndexVector<T> {
        let mut v = IndexVector::zero();
        for (x, m) in self.iter() {
            v.add_term(x.clone(), m as i64);
        }
        v
    }
}

impl<T: Ord + Clone> FromIterator<T> for FormalObject<T> {
    fn from_iter<I: IntoIterator<Item = T>>(iter: I) -> Self {
        let mut o = Self::zero();
        o.extend(iter);
        o
    }
}

impl<T: Ord + Clone> Extend<T> for FormalObject<T> {
    fn extend<I: IntoIterator<Item = T>>(&mut self, iter: I) {
        for x in iter {
            self.push(x);
        }
    }
}

impl<T: Ord + fmt::Display> fmt::Display for FormalObject<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.summands.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (x, m) in &self.summands {
            for _ in 0..*m {
                if !first {
                    write!(f, " + ")?;
                }
                write!(f, "{x}")?;
                first = false;
            }
        }
        Ok(())
    }
}

impl<T: Ord + fmt::Display> fmt::Debug for FormalObject<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

/// A finitely supported integer combination of indecomposable classes.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexVector<T: Ord> {
    coefficients: BTreeMap<T, i64>,
}

impl<T: Ord> Default for IndexVector<T> {
    fn default() -> Self {
        IndexVector { coefficients: BTreeMap::new() }
    }
}

impl<T: Ord + Clone> IndexVector<T> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(x: T) -> Self {
        let mut v = Self::zero();
        v.add_term(x, 1);
        v
    }

    pub fn from_terms<I: IntoIterator<Item = (T, i64)>>(terms: I) -> Self {
        let mut v = Self::zero();
        for (x, c) in terms {
            v.add_term(x, c);
        }
        v
    }

    pub fn add_term(&mut self, x: T, c: i64) {
        if c == 0 {
            return;
        }
        match self.coefficients.entry(x) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let total = e.get().checked_add(c).expect("index coefficient overflow");
                if total == 0 {
                    e.remove();
                } else {
                    *e.get_mut() = total;
                }
            }
        }
    }

    /// `self += c * other`
    pub fn add_scaled(&mut self, other: &IndexVector<T>, c: i64) {
        for (x, &k) in &other.coefficients {
            self.add_term(x.clone(), k.checked_mul(c).expect("index coefficient overflow"));
        }
    }

    pub fn scaled(&self, c: i64) -> Self {
        let mut v = Self::zero();
        v.add_scaled(self, c);
        v
    }

    pub fn neg(&self) -> Self {
        self.scaled(-1)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient(&self, x: &T) -> i64 {
        self.coefficients.get(x).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&T, i64)> {
        self.coefficients.iter().map(|(x, &c)| (x, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &T> {
        self.coefficients.keys()
    }

    /// Dense vector over `basis`; `None` if the support leaves the basis.
    pub fn to_int_vector(&self, basis: &[T]) -> Option<IntVector> {
        let mut out = vec![BigInt::from(0); basis.len()];
        for (x, c) in &self.coefficients {
            let i = basis.iter().position(|b| b == x)?;
            out[i] = BigInt::from(*c);
        }
        Some(IntVector::new(out))
    }
}

impl<T: Ord + fmt::Display> fmt::Display for IndexVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coefficients.is_empty() {
            return write!(f, "0");
        }
        for (i, (x, &c)) in self.coefficients.iter().enumerate() {
            write_signed_term(f, i == 0, c, x)?;
        }
        Ok(())
    }
}

impl<T: Ord + fmt::Display> fmt::Debug for IndexVector<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{self}>")
    }
}

/// Writes `c*x` as `x`, `-x`, `+x`, `3x`, `-2x`, `+2x` depending on position.
pub(crate) fn write_signed_term<X: fmt::Display>(f: &mut impl fmt::Write, first: bool, c: i64, x: &X) -> fmt::Result {
    let sign = match (first, c < 0) {
        (true, false) => "",
        (_, true) => "-",
        (false, false) => "+",
    };
    let mag = c.unsigned_abs();
    if mag == 1 {
        write!(f, "{sign}{x}")
    } else {
        write!(f, "{sign}{mag}{x}")
    }
}
