use std::collections::BTreeMap;
use std::fmt;

use crate::{reference_x, BoxSet, FreeBox, RootDiagram, PETERSEN_EDGES};

/// Integer combination of diagrams. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StanleySum<D: Ord> {
    terms: BTreeMap<D, i64>,
}

impl<D: Ord + Clone> StanleySum<D> {
    pub fn zero() -> Self {
        StanleySum { terms: BTreeMap::new() }
    }

    pub fn single(d: D, c: i64) -> Self {
        let mut s = Self::zero();
        s.add_term(d, c);
        s
    }

    pub fn add_term(&mut self, d: D, c: i64) {
        let entry = self.terms.entry(d.clone()).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.terms.remove(&d);
        }
    }

    pub fn coeff(&self, d: &D) -> i64 {
        self.terms.get(d).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&D, i64)> {
        self.terms.iter().map(|(d, &c)| (d, c))
    }

    /// Σ c_D.
    pub fn total(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (d, c) in other.iter() {
            out.add_term(d.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> Self {
        let mut out = Self::zero();
        for (d, c) in self.iter() {
            out.add_term(d.clone(), c * k);
        }
        out
    }

    /// Push every diagram through `f`, merging collisions.
    pub fn map<E: Ord + Clone>(&self, f: impl Fn(&D) -> E) -> StanleySum<E> {
        let mut out = StanleySum::zero();
        for (d, c) in self.iter() {
            out.add_term(f(d), c);
        }
        out
    }
}

impl<D: Ord + Clone> FromIterator<(D, i64)> for StanleySum<D> {
    fn from_iter<T: IntoIterator<Item = (D, i64)>>(iter: T) -> Self {
        let mut s = Self::zero();
        for (d, c) in iter {
            s.add_term(d, c);
        }
        s
    }
}

impl<D: Ord + Clone + fmt::Display> fmt::Display for StanleySum<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        for (i, (d, c)) in self.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{c:+}[{d}]")?;
        }
        Ok(())
    }
}

/// `g⋆ = 7X − 2 Σ_b X^{b} + Σ_{a~b} X^{a,b}`: the 26-term rule for
/// `(21, 21; 321)`.
pub fn build_gstar() -> StanleySum<RootDiagram> {
    let x = reference_x();
    let mut s = StanleySum::single(x, 7);
    for b in FreeBox::ALL {
        s.add_term(x.flip(BoxSet::single(b)), -2);
    }
    for (a, b) in PETERSEN_EDGES {
        s.add_term(x.flip(BoxSet::single(a) | BoxSet::single(b)), 1);
    }
    s
}
