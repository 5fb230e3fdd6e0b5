use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::uni;
use crate::{ExactError, MultiPoly, Rational};

/// Quotient of two polynomials.
///
/// When both parts live in at most one common variable the fraction is fully
/// reduced and the denominator is a primitive integer polynomial with positive
/// leading coefficient. Otherwise only the denominator scaling is normalized,
/// and equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    numer: MultiPoly,
    denom: MultiPoly,
}

impl RatFunc {
    pub fn new(numer: MultiPoly, denom: MultiPoly) -> Result<Self, ExactError> {
        if denom.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        Ok(Self::canonical(numer, denom))
    }

    fn canonical(numer: MultiPoly, denom: MultiPoly) -> Self {
        if numer.is_zero() {
            return Self::zero();
        }
        if let Some(c) = denom.as_constant() {
            let inv = Rational::one() / c;
            return RatFunc {
                numer: numer.scale(&inv),
                denom: MultiPoly::one(),
            };
        }
        let (mut numer, mut denom) = (numer, denom);
        if let Ok(g) = uni::gcd(&numer, &denom) {
            if !g.is_constant() {
                numer = uni::divrem(&numer, &g).expect("gcd divides").0;
                denom = uni::divrem(&denom, &g).expect("gcd divides").0;
            }
        }
        let k = uni::primitive_scale(&denom);
        RatFunc {
            numer: numer.scale(&k),
            denom: denom.scale(&k),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc {
            numer: p,
            denom: MultiPoly::one(),
        }
    }

    pub fn from_rational(r: Rational) -> Self {
        Self::from_poly(MultiPoly::constant(r))
    }

    pub fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    pub fn numer(&self) -> &MultiPoly {
        &self.numer
    }

    pub fn denom(&self) -> &MultiPoly {
        &self.denom
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.denom.is_constant()
    }

    /// The polynomial this fraction equals, if the denominator divides out.
    pub fn to_poly(&self) -> Result<MultiPoly, ExactError> {
        if let Some(c) = self.denom.as_constant() {
            return Ok(self.numer.scale(&(Rational::one() / c)));
        }
        if let Ok((q, r)) = uni::divrem(&self.numer, &self.denom) {
            if r.is_zero() {
                return Ok(q);
            }
        }
        Err(ExactError::NotPolynomial(self.denom.to_string()))
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.denom == other.denom {
            return Self::canonical(&self.numer + &other.numer, self.denom.clone());
        }
        Self::canonical(
            &(&self.numer * &other.denom) + &(&other.numer * &self.denom),
            &self.denom * &other.denom,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        RatFunc {
            numer: -&self.numer,
            denom: self.denom.clone(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::canonical(&self.numer * &other.numer, &self.denom * &other.denom)
    }

    pub fn mul_poly(&self, p: &MultiPoly) -> Self {
        Self::canonical(&self.numer * p, self.denom.clone())
    }

    pub fn inv(&self) -> Result<Self, ExactError> {
        Self::new(self.denom.clone(), self.numer.clone())
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn pow(&self, e: i32) -> Result<Self, ExactError> {
        let base = if e < 0 { self.inv()? } else { self.clone() };
        let k = e.unsigned_abs();
        Ok(Self::canonical(base.numer.pow(k), base.denom.pow(k)))
    }

    pub fn substitute(&self, bindings: &BTreeMap<String, MultiPoly>) -> Result<Self, ExactError> {
        Self::new(self.numer.substitute(bindings), self.denom.substitute(bindings))
    }

    pub fn eval(&self, values: &BTreeMap<String, Rational>) -> Result<Rational, ExactError> {
        let d = self.denom.eval(values)?;
        if d.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        Ok(self.numer.eval(values)? / d)
    }

    /// Evaluation of a fraction in at most one variable.
    pub fn eval_at(&self, value: &Rational) -> Result<Rational, ExactError> {
        let d = self.denom.eval_at(value)?;
        if d.is_zero() {
            return Err(ExactError::ZeroDivisor);
        }
        Ok(self.numer.eval_at(value)? / d)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.denom == other.denom {
            return self.numer == other.numer;
        }
        &self.numer * &other.denom == &other.numer * &self.denom
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denom == MultiPoly::one() {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "({})/({})", self.numer, self.denom)
        }
    }
}
