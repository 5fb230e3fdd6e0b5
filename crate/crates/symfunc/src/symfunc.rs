use std::collections::BTreeMap;
use std::fmt;

use jacklr_exact::{int, MultiPoly, RatFunc};
use jacklr_partitions::Partition;

use crate::basis::monomial_product;
use crate::SymFunc as Sf;
use crate::SymError;

/// Homogeneous symmetric function of fixed degree, as coefficients on the
/// monomial basis `m_μ`.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc {
    degree: u32,
    coeffs: BTreeMap<Partition, RatFunc>,
}

impl SymFunc {
    pub fn zero(degree: u32) -> Self {
        SymFunc {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    /// The unit `m_∅` in degree 0.
    pub fn unit() -> Self {
        Self::monomial(Partition::empty())
    }

    pub fn monomial(mu: Partition) -> Self {
        let mut s = Self::zero(mu.weight());
        s.coeffs.insert(mu, RatFunc::one());
        s
    }

    pub fn from_terms(
        degree: u32,
        terms: impl IntoIterator<Item = (Partition, RatFunc)>,
    ) -> Result<Self, SymError> {
        let mut s = Self::zero(degree);
        for (mu, c) in terms {
            if mu.weight() != degree {
                return Err(SymError::MixedDegree(degree, mu.weight()));
            }
            s.add_term(mu, &c);
        }
        Ok(s)
    }

    fn add_term(&mut self, mu: Partition, c: &RatFunc) {
        if c.is_zero() {
            return;
        }
        let sum = match self.coeffs.get(&mu) {
            Some(old) => old.add(c),
            None => c.clone(),
        };
        if sum.is_zero() {
            self.coeffs.remove(&mu);
        } else {
            self.coeffs.insert(mu, sum);
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mu: &Partition) -> RatFunc {
        self.coeffs.get(mu).cloned().unwrap_or_else(RatFunc::zero)
    }

    /// Coefficient as a polynomial; panics if it is a proper fraction.
    pub fn coeff_poly(&self, mu: &Partition) -> MultiPoly {
        self.coeff(mu).to_poly().expect("polynomial coefficient")
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Self) -> Result<Self, SymError> {
        if self.degree != other.degree && !self.is_zero() && !other.is_zero() {
            return Err(SymError::MixedDegree(self.degree, other.degree));
        }
        let degree = if self.is_zero() { other.degree } else { self.degree };
        let mut out = self.clone();
        out.degree = degree;
        for (mu, c) in &other.coeffs {
            out.add_term(mu.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let mut out = Self::zero(self.degree);
        for (mu, a) in &self.coeffs {
            out.add_term(mu.clone(), &a.mul(c));
        }
        out
    }

    /// Product in the monomial basis, via the integer structure constants of
    /// `m_μ · m_ν`.
    pub fn multiply(&self, other: &Self) -> Self {
        let mut out = Sf::zero(self.degree + other.degree);
        for (mu, a) in &self.coeffs {
            for (nu, b) in &other.coeffs {
                let ab = a.mul(b);
                for (lam, k) in monomial_product(mu, nu).iter() {
                    out.add_term(lam.clone(), &ab.mul(&RatFunc::from_rational(int(*k as i64))));
                }
            }
        }
        out
    }
}

impl fmt::Display for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .rev()
            .map(|(mu, c)| format!("({})*m[{}]", c, mu))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
