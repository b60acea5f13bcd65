use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::radical::RadicalReal;
use crate::error::ScalarError;

/// `re + i im` with both parts in the radical field.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct ComplexRadical {
    pub re: RadicalReal,
    pub im: RadicalReal,
}

impl ComplexRadical {
    pub fn new(re: RadicalReal, im: RadicalReal) -> Self {
        Self { re, im }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::real(RadicalReal::one())
    }

    pub fn i() -> Self {
        Self::new(RadicalReal::zero(), RadicalReal::one())
    }

    pub fn real(re: RadicalReal) -> Self {
        Self::new(re, RadicalReal::zero())
    }

    pub fn from_rational(q: BigRational) -> Self {
        Self::real(RadicalReal::from_rational(q))
    }

    pub fn from_integer(n: i64) -> Self {
        Self::real(RadicalReal::from_integer(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::real(RadicalReal::from_ratio(n, d))
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// `|c|^2 = re^2 + im^2`.
    pub fn norm_sq(&self) -> RadicalReal {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn scale(&self, r: &RadicalReal) -> Self {
        Self::new(&self.re * r, &self.im * r)
    }

    pub fn mul_i(&self) -> Self {
        Self::new(-&self.im, self.re.clone())
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        if self.im.is_zero() {
            return Ok(Self::real(self.re.inverse()?));
        }
        let inv = self.norm_sq().inverse()?;
        Ok(self.conj().scale(&inv))
    }

    pub fn weight(&self) -> usize {
        self.re.weight() + self.im.weight()
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl From<RadicalReal> for ComplexRadical {
    fn from(r: RadicalReal) -> Self {
        Self::real(r)
    }
}

impl Neg for &ComplexRadical {
    type Output = ComplexRadical;
    fn neg(self) -> ComplexRadical {
        ComplexRadical::new(-&self.re, -&self.im)
    }
}

impl Neg for ComplexRadical {
    type Output = ComplexRadical;
    fn neg(self) -> ComplexRadical {
        ComplexRadical::new(-self.re, -self.im)
    }
}

fn mul(a: &ComplexRadical, b: &ComplexRadical) -> ComplexRadical {
    if a.im.is_zero() && b.im.is_zero() {
        return ComplexRadical::real(&a.re * &b.re);
    }
    if a.im.is_zero() {
        return b.scale(&a.re);
    }
    if b.im.is_zero() {
        return a.scale(&b.re);
    }
    ComplexRadical::new(&a.re * &b.re - &a.im * &b.im, &a.re * &b.im + &a.im * &b.re)
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&ComplexRadical> for &ComplexRadical {
            type Output = ComplexRadical;
            fn $m(self, rhs: &ComplexRadical) -> ComplexRadical {
                $body(self, rhs)
            }
        }
        impl $tr<ComplexRadical> for ComplexRadical {
            type Output = ComplexRadical;
            fn $m(self, rhs: ComplexRadical) -> ComplexRadical {
                $body(&self, &rhs)
            }
        }
        impl $tr<&ComplexRadical> for ComplexRadical {
            type Output = ComplexRadical;
            fn $m(self, rhs: &ComplexRadical) -> ComplexRadical {
                $body(&self, rhs)
            }
        }
        impl $tr<ComplexRadical> for &ComplexRadical {
            type Output = ComplexRadical;
            fn $m(self, rhs: ComplexRadical) -> ComplexRadical {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &ComplexRadical, b: &ComplexRadical| ComplexRadical::new(
    &a.re + &b.re,
    &a.im + &b.im
));
forward_binop!(Sub, sub, |a: &ComplexRadical, b: &ComplexRadical| ComplexRadical::new(
    &a.re - &b.re,
    &a.im - &b.im
));
forward_binop!(Mul, mul, mul);

impl AddAssign<&ComplexRadical> for ComplexRadical {
    fn add_assign(&mut self, rhs: &ComplexRadical) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl SubAssign<&ComplexRadical> for ComplexRadical {
    fn sub_assign(&mut self, rhs: &ComplexRadical) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl fmt::Display for ComplexRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.re.is_zero(), self.im.is_zero()) {
            (_, true) => write!(f, "{}", self.re),
            (true, false) if self.im.is_one() => write!(f, "i"),
            (true, false) if self.im.terms().len() == 1 => write!(f, "{}*i", self.im),
            (true, false) => write!(f, "({})*i", self.im),
            (false, false) => write!(f, "({}) + ({})*i", self.re, self.im),
        }
    }
}

impl fmt::Debug for ComplexRadical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: &str, im: &str) -> ComplexRadical {
        ComplexRadical::new(re.parse().unwrap(), im.parse().unwrap())
    }

    #[test]
    fn arithmetic() {
        let a = c("3/5", "4/5");
        assert!((&a * &a.conj()).is_one());
        assert_eq!(a.inverse().unwrap(), a.conj());
        let b = c("1", "sqrt(2)");
        assert!((&b * &b.inverse().unwrap()).is_one());
        assert_eq!(
            ComplexRadical::i() * ComplexRadical::i(),
            ComplexRadical::from_integer(-1)
        );
        assert!(ComplexRadical::zero().inverse().is_err());
    }

    #[test]
    fn display() {
        assert_eq!(c("1/2", "0").to_string(), "1/2");
        assert_eq!(c("0", "1").to_string(), "i");
        assert_eq!(c("0", "-sqrt(3)").to_string(), "-sqrt(3)*i");
        assert_eq!(c("1", "2").to_string(), "(1) + (2)*i");
    }
}
