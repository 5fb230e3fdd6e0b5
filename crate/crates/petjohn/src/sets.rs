use std::cmp::Ordering;
use std::fmt;

use crate::PetJohnError;

/// A subset of `{0,..,5}` as a bit mask.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Subset(pub u8);

pub(crate) const FULL: u8 = 0b11_1111;

impl Subset {
    pub fn from_elems(elems: &[u8]) -> Self {
        Subset(elems.iter().fold(0, |m, &e| m | 1 << e))
    }

    /// Paper labels use `1..=6`; `6` becomes `0`.
    pub fn from_paper(digits: &str) -> Result<Self, PetJohnError> {
        let mut m = 0u8;
        for ch in digits.chars() {
            let d = ch.to_digit(10).ok_or_else(|| PetJohnError::Parse(digits.to_string()))?;
            if !(1..=6).contains(&d) {
                return Err(PetJohnError::Parse(digits.to_string()));
            }
            m |= 1 << (d % 6);
        }
        Ok(Subset(m))
    }

    /// Labels in `{0,..,5}` as written in the box-label table.
    pub fn parse(digits: &str) -> Result<Self, PetJohnError> {
        let mut m = 0u8;
        for ch in digits.chars() {
            match ch.to_digit(10) {
                Some(d) if d < 6 => m |= 1 << d,
                _ => return Err(PetJohnError::Parse(digits.to_string())),
            }
        }
        Ok(Subset(m))
    }

    pub fn elems(self) -> Vec<u8> {
        (0..6).filter(|&i| self.contains(i)).collect()
    }

    pub fn contains(self, e: u8) -> bool {
        self.0 >> e & 1 == 1
    }

    pub fn len(self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn complement(self) -> Self {
        Subset(!self.0 & FULL)
    }

    pub fn intersect(self, other: Subset) -> Self {
        Subset(self.0 & other.0)
    }

    pub fn union(self, other: Subset) -> Self {
        Subset(self.0 | other.0)
    }

    pub fn minus(self, other: Subset) -> Self {
        Subset(self.0 & !other.0)
    }

    pub fn is_disjoint(self, other: Subset) -> bool {
        self.0 & other.0 == 0
    }

    /// `k − |T ∩ U|` for two `k`-subsets.
    pub fn distance(self, other: Subset) -> u32 {
        self.len() - self.intersect(other).len()
    }

    /// All `k`-subsets of `{0,..,5}`, or of `{1,..,5}` when `skip_zero`,
    /// in lexicographic order.
    pub fn all(k: u32, skip_zero: bool) -> Vec<Subset> {
        let mut out: Vec<Subset> = (0..=FULL)
            .map(Subset)
            .filter(|s| s.len() == k && !(skip_zero && s.contains(0)))
            .collect();
        out.sort();
        out
    }

    /// Digits in the paper's `1..=6` convention.
    pub fn paper(self) -> String {
        let mut d: Vec<u8> = self.elems().into_iter().map(|e| if e == 0 { 6 } else { e }).collect();
        d.sort();
        d.into_iter().map(|e| char::from(b'0' + e)).collect()
    }
}

impl Ord for Subset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.elems().cmp(&other.elems())
    }
}

impl PartialOrd for Subset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in self.elems() {
            write!(f, "{e}")?;
        }
        Ok(())
    }
}
