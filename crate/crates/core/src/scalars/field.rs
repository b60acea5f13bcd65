use std::fmt::Debug;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{ComplexRadical, RadicalReal};

/// The operations exact elimination needs from a coefficient field.
pub trait Field: Clone + PartialEq + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Panics on zero; callers pick nonzero pivots.
    fn recip(&self) -> Self;
    /// Smaller is preferred as a pivot.
    fn weight(&self) -> usize;
}

impl Field for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Self {
        num_rational::Ratio::recip(self)
    }
    fn weight(&self) -> usize {
        (self.numer().bits() + self.denom().bits()) as usize
    }
}

impl Field for RadicalReal {
    fn zero() -> Self {
        RadicalReal::zero()
    }
    fn one() -> Self {
        RadicalReal::one()
    }
    fn is_zero(&self) -> bool {
        RadicalReal::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Self {
        self.inverse().expect("nonzero pivot")
    }
    fn weight(&self) -> usize {
        RadicalReal::weight(self)
    }
}

impl Field for ComplexRadical {
    fn zero() -> Self {
        ComplexRadical::zero()
    }
    fn one() -> Self {
        ComplexRadical::one()
    }
    fn is_zero(&self) -> bool {
        ComplexRadical::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn recip(&self) -> Self {
        self.inverse().expect("nonzero pivot")
    }
    fn weight(&self) -> usize {
        ComplexRadical::weight(self)
    }
}
