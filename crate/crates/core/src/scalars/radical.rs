use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::factor::square_free_parts;
use crate::error::ScalarError;

/// Largest radicand a product may produce before it is treated as an overflow.
pub const RADICAND_CAP: u64 = 1 << 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

/// A finite sum `q_1 sqrt(r_1) + ... + q_k sqrt(r_k)` with distinct squarefree
/// radicands, sorted ascending, and nonzero rational coefficients.
///
/// Square roots of distinct squarefree naturals are linearly independent over
/// the rationals, so structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "RadicalRepr", into = "RadicalRepr")]
pub struct RadicalReal {
    terms: Vec<(u64, BigRational)>,
}

pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn radical_product(a: u64, b: u64) -> Result<(u64, u64), ScalarError> {
    let g = a.gcd(&b);
    let r = (a / g) as u128 * (b / g) as u128;
    if r > RADICAND_CAP as u128 {
        return Err(ScalarError::RadicandOverflow(r.to_string()));
    }
    Ok((g, r as u64))
}

impl RadicalReal {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_rational(BigRational::one())
    }

    pub fn from_rational(q: BigRational) -> Self {
        if q.is_zero() {
            Self::zero()
        } else {
            Self { terms: vec![(1, q)] }
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::from_rational(rat(n, d))
    }

    /// `q * sqrt(r)` for an arbitrary natural `r`; the square part is pulled out.
    pub fn term(q: BigRational, r: u64) -> Result<Self, ScalarError> {
        Ok(Self::sqrt_rational(&BigRational::from_integer(r.into()))? * Self::from_rational(q))
    }

    /// Square root of a natural number.
    pub fn sqrt_int(r: u64) -> Self {
        Self::sqrt_rational(&BigRational::from_integer(r.into())).expect("u64 radicand fits")
    }

    /// Square root of a nonnegative rational, `sqrt(n/d) = sqrt(n d) / d`.
    pub fn sqrt_rational(q: &BigRational) -> Result<Self, ScalarError> {
        if q.is_negative() {
            return Err(ScalarError::NegativeRadicand(q.to_string()));
        }
        if q.is_zero() {
            return Ok(Self::zero());
        }
        let prod = (q.numer() * q.denom()).to_biguint().expect("nonnegative");
        let (square, free) = square_free_parts(&prod)?;
        let coeff = BigRational::new(BigInt::from(square), q.denom().clone());
        Ok(Self {
            terms: vec![(free, coeff)],
        })
    }

    /// Square root of a value that is known to be a nonnegative rational.
    pub fn sqrt(&self) -> Result<Self, ScalarError> {
        match self.as_rational() {
            Some(q) => Self::sqrt_rational(&q),
            None => Err(ScalarError::Parse(format!("sqrt of non-rational {self}"))),
        }
    }

    fn from_map(map: BTreeMap<u64, BigRational>) -> Self {
        Self {
            terms: map.into_iter().filter(|(_, q)| !q.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(u64, BigRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 1 && self.terms[0].1.is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == 1)
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        match self.terms.as_slice() {
            [] => Some(BigRational::zero()),
            [(1, q)] => Some(q.clone()),
            _ => None,
        }
    }

    /// Rough size used to prefer simple pivots.
    pub fn weight(&self) -> usize {
        self.terms
            .iter()
            .map(|(r, q)| {
                64 + (64 - r.leading_zeros() as usize) + q.numer().bits() as usize + q.denom().bits() as usize
            })
            .sum()
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(r, c)| (*r, c * q)).collect(),
        }
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let take_left = j >= other.terms.len() || (i < self.terms.len() && self.terms[i].0 < other.terms[j].0);
            let take_right = i >= self.terms.len() || (j < other.terms.len() && other.terms[j].0 < self.terms[i].0);
            if take_left {
                out.push(self.terms[i].clone());
                i += 1;
            } else if take_right {
                let (r, q) = &other.terms[j];
                out.push((*r, if negate { -q } else { q.clone() }));
                j += 1;
            } else {
                let q = if negate {
                    &self.terms[i].1 - &other.terms[j].1
                } else {
                    &self.terms[i].1 + &other.terms[j].1
                };
                if !q.is_zero() {
                    out.push((self.terms[i].0, q));
                }
                i += 1;
                j += 1;
            }
        }
        Self { terms: out }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ScalarError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        if let Some(q) = other.as_rational() {
            return Ok(self.scale(&q));
        }
        if let Some(q) = self.as_rational() {
            return Ok(other.scale(&q));
        }
        let mut acc: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (ra, qa) in &self.terms {
            for (rb, qb) in &other.terms {
                let (g, r) = radical_product(*ra, *rb)?;
                let c = qa * qb * BigRational::from_integer(g.into());
                *acc.entry(r).or_insert_with(BigRational::zero) += c;
            }
        }
        Ok(Self::from_map(acc))
    }

    /// Multiplicative inverse, from the linear system `a x = 1` in the
    /// rational algebra spanned by the radicals that products of `a` reach.
    pub fn inverse(&self) -> Result<Self, ScalarError> {
        match self.terms.as_slice() {
            [] => Err(ScalarError::DivisionByZero),
            [(r, q)] => {
                let denom = q * BigRational::from_integer((*r).into());
                Ok(Self {
                    terms: vec![(*r, denom.recip())],
                })
            }
            _ => self.inverse_by_matrix(),
        }
    }

    fn inverse_by_matrix(&self) -> Result<Self, ScalarError> {
        let mut basis: BTreeSet<u64> = BTreeSet::from([1]);
        loop {
            let mut grown = basis.clone();
            for b in &basis {
                for (r, _) in &self.terms {
                    grown.insert(radical_product(*b, *r)?.1);
                }
            }
            if grown.len() == basis.len() {
                break;
            }
            basis = grown;
        }
        let basis: Vec<u64> = basis.into_iter().collect();
        let index: BTreeMap<u64, usize> = basis.iter().enumerate().map(|(i, r)| (*r, i)).collect();
        let k = basis.len();
        let mut m = vec![vec![BigRational::zero(); k + 1]; k];
        for (j, b) in basis.iter().enumerate() {
            for (r, q) in &self.terms {
                let (g, prod) = radical_product(*b, *r)?;
                m[index[&prod]][j] += q * BigRational::from_integer(g.into());
            }
        }
        m[index[&1]][k] = BigRational::one();
        let x = solve_square(m).ok_or(ScalarError::DivisionByZero)?;
        let mut acc = BTreeMap::new();
        for (i, v) in x.into_iter().enumerate() {
            acc.insert(basis[i], v);
        }
        Ok(Self::from_map(acc))
    }

    /// Rational bounds `(lo, hi)` on the value with each irrational root
    /// pinned to within `2^-bits`.
    fn enclose(&self, bits: u32) -> (BigRational, BigRational) {
        let mut lo = BigRational::zero();
        let mut hi = BigRational::zero();
        let scale = BigInt::one() << bits;
        for (r, q) in &self.terms {
            if *r == 1 {
                lo += q;
                hi += q;
                continue;
            }
            let s = (BigInt::from(*r) << (2 * bits)).sqrt();
            let l = BigRational::new(s.clone(), scale.clone());
            let u = BigRational::new(s + 1, scale.clone());
            if q.is_positive() {
                lo += q * l;
                hi += q * u;
            } else {
                lo += q * u;
                hi += q * l;
            }
        }
        (lo, hi)
    }

    pub fn sign(&self) -> Sign {
        if self.is_zero() {
            return Sign::Zero;
        }
        if self.terms.iter().all(|(_, q)| q.is_positive()) {
            return Sign::Positive;
        }
        if self.terms.iter().all(|(_, q)| q.is_negative()) {
            return Sign::Negative;
        }
        let mut bits = 32;
        loop {
            let (lo, hi) = self.enclose(bits);
            if lo.is_positive() {
                return Sign::Positive;
            }
            if hi.is_negative() {
                return Sign::Negative;
            }
            bits *= 2;
        }
    }

    pub fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self
        } else {
            self.clone()
        }
    }

    pub fn cmp_value(&self, other: &Self) -> std::cmp::Ordering {
        match (self - other).sign() {
            Sign::Negative => std::cmp::Ordering::Less,
            Sign::Zero => std::cmp::Ordering::Equal,
            Sign::Positive => std::cmp::Ordering::Greater,
        }
    }

    /// Rational interval of width at most `2^-bits` per radical term.
    pub fn bounds(&self, bits: u32) -> (BigRational, BigRational) {
        self.enclose(bits)
    }
}

/// Gaussian elimination on an augmented `k x (k+1)` system with a unique solution.
fn solve_square(mut m: Vec<Vec<BigRational>>) -> Option<Vec<BigRational>> {
    let k = m.len();
    for col in 0..k {
        let piv = (col..k).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for c in col..=k {
            m[col][c] = &m[col][c] * &inv;
        }
        for r in 0..k {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=k {
                    let t = &f * &m[col][c];
                    m[r][c] -= t;
                }
            }
        }
    }
    Some(m.into_iter().map(|row| row[k].clone()).collect())
}

impl From<BigRational> for RadicalReal {
    fn from(q: BigRational) -> Self {
        Self::from_rational(q)
    }
}

impl From<i64> for RadicalReal {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl Neg for &RadicalReal {
    type Output = RadicalReal;
    fn neg(self) -> RadicalReal {
        RadicalReal {
            terms: self.terms.iter().map(|(r, q)| (*r, -q)).collect(),
        }
    }
}

impl Neg for RadicalReal {
    type Output = RadicalReal;
    fn neg(mut self) -> RadicalReal {
        for (_, q) in self.terms.iter_mut() {
            *q = -q.clone();
        }
        self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&RadicalReal> for &RadicalReal {
            type Output = RadicalReal;
            fn $m(self, rhs: &RadicalReal) -> RadicalReal {
                $body(self, rhs)
            }
        }
        impl $tr<RadicalReal> for RadicalReal {
            type Output = RadicalReal;
            fn $m(self, rhs: RadicalReal) -> RadicalReal {
                $body(&self, &rhs)
            }
        }
        impl $tr<&RadicalReal> for RadicalReal {
            type Output = RadicalReal;
            fn $m(self, rhs: &RadicalReal) -> RadicalReal {
                $body(&self, rhs)
            }
        }
        impl $tr<RadicalReal> for &RadicalReal {
            type Output = RadicalReal;
            fn $m(self, rhs: RadicalReal) -> RadicalReal {
                $body(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &RadicalReal, b: &RadicalReal| a.merge(b, false));
forward_binop!(Sub, sub, |a: &RadicalReal, b: &RadicalReal| a.merge(b, true));
forward_binop!(Mul, mul, |a: &RadicalReal, b: &RadicalReal| a
    .checked_mul(b)
    .expect("radicand overflow in product"));

impl AddAssign<&RadicalReal> for RadicalReal {
    fn add_assign(&mut self, rhs: &RadicalReal) {
        *self = self.merge(rhs, false);
    }
}

impl SubAssign<&RadicalReal> for RadicalReal {
    fn sub_assign(&mut self, rhs: &RadicalReal) {
        *self = self.merge(rhs, true);
    }
}

impl MulAssign<&RadicalReal> for RadicalReal {
    fn mul_assign(&mut self, rhs: &RadicalReal) {
        *self = &*self * rhs;
    }
}

fn fmt_term(f: &mut fmt::Formatter<'_>, r: u64, q: &BigRational, first: bool) -> fmt::Result {
    let neg = q.is_negative();
    let mag = q.abs();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else {
        write!(f, "{}", if neg { " - " } else { " + " })?;
    }
    if r == 1 {
        write!(f, "{mag}")
    } else if mag.is_one() {
        write!(f, "sqrt({r})")
    } else {
        write!(f, "{mag}*sqrt({r})")
    }
}

impl fmt::Display for RadicalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (r, q)) in self.terms.iter().enumerate() {
            fmt_term(f, *r, q, i == 0)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RadicalReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(s: &str) -> Result<BigRational, ScalarError> {
    let s = s.trim();
    let bad = || ScalarError::Parse(s.to_string());
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn parse_term(t: &str) -> Result<RadicalReal, ScalarError> {
    let bad = || ScalarError::Parse(t.to_string());
    let Some(pos) = t.find("sqrt(") else {
        return Ok(RadicalReal::from_rational(parse_rational(t)?));
    };
    let close = t[pos..].find(')').ok_or_else(bad)? + pos;
    let radicand: u64 = t[pos + 5..close].trim().parse().map_err(|_| bad())?;
    let before = t[..pos].trim();
    let after = t[close + 1..].trim();
    let mut coeff = if before.is_empty() {
        BigRational::one()
    } else {
        parse_rational(before.strip_suffix('*').ok_or_else(bad)?)?
    };
    if !after.is_empty() {
        let d = parse_rational(after.strip_prefix('/').ok_or_else(bad)?)?;
        if d.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        coeff /= d;
    }
    RadicalReal::term(coeff, radicand)
}

impl FromStr for RadicalReal {
    type Err = ScalarError;

    /// Accepts sums such as `3/5`, `-sqrt(2)/2`, `1 + 2*sqrt(3) - 1/4*sqrt(6)`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ScalarError::Parse(s));
        }
        let mut acc = RadicalReal::zero();
        let mut start = 0;
        let bytes = s.as_bytes();
        let mut depth = 0;
        for i in 0..=bytes.len() {
            let at_split = i == bytes.len() || (depth == 0 && i > start && (bytes[i] == b'+' || bytes[i] == b'-'));
            if i < bytes.len() {
                match bytes[i] {
                    b'(' => depth += 1,
                    b')' => depth -= 1,
                    _ => {}
                }
            }
            if at_split {
                let piece = &s[start..i];
                let (neg, body) = match piece.as_bytes()[0] {
                    b'-' => (true, &piece[1..]),
                    b'+' => (false, &piece[1..]),
                    _ => (false, piece),
                };
                let v = parse_term(body)?;
                acc = if neg { acc - v } else { acc + v };
                start = i;
            }
        }
        Ok(acc)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum IntRepr {
    Small(i64),
    Big(String),
}

impl From<&BigInt> for IntRepr {
    fn from(n: &BigInt) -> Self {
        match n.to_i64() {
            Some(v) => IntRepr::Small(v),
            None => IntRepr::Big(n.to_string()),
        }
    }
}

impl TryFrom<IntRepr> for BigInt {
    type Error = ScalarError;
    fn try_from(v: IntRepr) -> Result<Self, ScalarError> {
        match v {
            IntRepr::Small(n) => Ok(n.into()),
            IntRepr::Big(s) => s.parse().map_err(|_| ScalarError::Parse(s)),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    sqrt: u64,
    num: IntRepr,
    den: IntRepr,
}

#[derive(Serialize, Deserialize)]
pub struct RadicalRepr {
    terms: Vec<TermRepr>,
}

impl From<RadicalReal> for RadicalRepr {
    fn from(v: RadicalReal) -> Self {
        RadicalRepr {
            terms: v
                .terms
                .iter()
                .map(|(r, q)| TermRepr {
                    sqrt: *r,
                    num: q.numer().into(),
                    den: q.denom().into(),
                })
                .collect(),
        }
    }
}

impl TryFrom<RadicalRepr> for RadicalReal {
    type Error = ScalarError;
    fn try_from(v: RadicalRepr) -> Result<Self, ScalarError> {
        let mut acc = RadicalReal::zero();
        for t in v.terms {
            let n: BigInt = t.num.try_into()?;
            let d: BigInt = t.den.try_into()?;
            if d.is_zero() {
                return Err(ScalarError::DivisionByZero);
            }
            if t.sqrt == 0 {
                continue;
            }
            acc += &RadicalReal::term(BigRational::new(n, d), t.sqrt)?;
        }
        Ok(acc)
    }
}
