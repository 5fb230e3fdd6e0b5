use std::fmt;
use std::str::FromStr;

use jacklr_exact::Rational;
use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    NotPartition(Vec<u32>),
    #[error("box not in diagram: ({row},{col})")]
    BoxNotInDiagram { row: usize, col: usize },
    #[error("cannot parse partition {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A box of a Young diagram, `(row, col)` from the top-left corner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub const fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn transpose(self) -> Self {
        Cell::new(self.col, self.row)
    }

    /// Componentwise minimum, the box `a ∨ b` at the corner of the hooks.
    pub fn meet(self, other: Cell) -> Self {
        Cell::new(self.row.min(other.row), self.col.min(other.col))
    }

    /// `col − row`.
    pub fn content(self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, PartitionError> {
        let ok = parts.iter().all(|&p| p > 0) && parts.windows(2).all(|w| w[0] >= w[1]);
        if !ok {
            return Err(PartitionError::NotPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// Panicking constructor for literals.
    pub fn of(parts: &[u32]) -> Self {
        Self::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, zero past the last row.
    pub fn row(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let first = self.row(0);
        let parts = (0..first)
            .map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32)
            .collect();
        Partition { parts }
    }

    pub fn has_box(&self, b: Cell) -> bool {
        (b.col as u32) < self.row(b.row)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> Vec<Cell> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (0..p as usize).map(move |j| Cell::new(i, j)))
            .collect()
    }

    /// Diagram containment `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Dominance `self ⊵ other` for partitions of equal weight.
    pub fn dominates(&self, other: &Partition) -> bool {
        let n = self.len().max(other.len());
        let (mut s, mut t) = (0u32, 0u32);
        for i in 0..n {
            s += self.row(i);
            t += other.row(i);
            if s < t {
                return false;
            }
        }
        true
    }

    pub fn with_box(&self, b: Cell) -> Option<Partition> {
        let mut parts = self.parts.clone();
        if b.row == parts.len() {
            parts.push(0);
        }
        if b.row > parts.len() || parts[b.row] as usize != b.col {
            return None;
        }
        parts[b.row] += 1;
        Partition::new(parts).ok()
    }

    pub fn without_box(&self, b: Cell) -> Option<Partition> {
        if !self.has_box(b) || self.row(b.row) as usize != b.col + 1 {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[b.row] -= 1;
        if parts[b.row] == 0 {
            parts.pop();
        }
        Partition::new(parts).ok()
    }

    pub fn addable_corners(&self) -> Vec<Cell> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.row(i) < self.row(i - 1))
            .map(|i| Cell::new(i, self.row(i) as usize))
            .collect()
    }

    pub fn removable_corners(&self) -> Vec<Cell> {
        (0..self.len())
            .filter(|&i| self.row(i) > self.row(i + 1))
            .map(|i| Cell::new(i, self.row(i) as usize - 1))
            .collect()
    }

    /// Multiplicities `m_i` of each part size `i ≥ 1`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `z_λ = ∏ i^{m_i} m_i!`, the centralizer order.
    pub fn z(&self) -> Rational {
        let mut z = BigInt::one();
        for (i, m) in self.multiplicities() {
            z *= num_traits::pow(BigInt::from(i), m as usize) * factorial(m);
        }
        Rational::from_integer(z)
    }
}

fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// `3,2,1`; the empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| x.trim().parse::<u32>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| PartitionError::Parse {
                text: s.to_string(),
                reason: e.to_string(),
            })?;
        Partition::new(parts).map_err(|e| PartitionError::Parse {
            text: s.to_string(),
            reason: e.to_string(),
        })
    }
}

/// All partitions of `n`, in reverse-lexicographic order: `(n)` first, `1^n` last.
pub fn enumerate_partitions(n: u32) -> Vec<Partition> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=max.min(n)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}
