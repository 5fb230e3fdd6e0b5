use std::fmt::Debug;

use num_traits::{One, Zero};

use crate::{RatFunc, Rational};

/// The handful of field operations needed by the generic linear algebra and
/// Gram–Schmidt code. Implemented for exact rationals and rational functions.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Panics on zero; callers only divide by pivots they have checked.
    fn div(&self, other: &Self) -> Self;
    fn from_rational(r: &Rational) -> Self;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn div(&self, other: &Self) -> Self {
        assert!(!Zero::is_zero(other), "division by zero rational");
        self / other
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
}

impl Field for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        RatFunc::add(self, other)
    }
    fn sub(&self, other: &Self) -> Self {
        RatFunc::sub(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        RatFunc::mul(self, other)
    }
    fn neg(&self) -> Self {
        RatFunc::neg(self)
    }
    fn div(&self, other: &Self) -> Self {
        RatFunc::div(self, other).expect("division by zero rational function")
    }
    fn from_rational(r: &Rational) -> Self {
        RatFunc::from_poly(crate::MultiPoly::constant(r.clone()))
    }
}
