use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::One;
use serde::{Deserialize, Serialize};

use super::monomial::{exponents_of_degree, Monomial, Var};
use crate::error::{Error, Result};
use crate::scalars::{ComplexRadical, RadicalReal};

/// Sparse polynomial in `z_1..z_n` and `zbar_1..zbar_n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly {
    n: usize,
    terms: BTreeMap<Monomial, ComplexRadical>,
}

/// `d! / (alpha_1! ... alpha_n!)`.
pub fn multinomial(alpha: &[u32]) -> BigUint {
    let mut acc = BigUint::one();
    let mut total = 0u32;
    for &a in alpha {
        for k in 1..=a {
            total += 1;
            acc = acc * BigUint::from(total) / BigUint::from(k);
        }
    }
    acc
}

/// `binom(n + d - 1, d)`, the number of degree-`d` monomials in `n` variables.
pub fn count_monomials(n: usize, d: u32) -> usize {
    let mut acc: u128 = 1;
    for k in 1..=d as u128 {
        acc = acc * (n as u128 - 1 + k) / k;
    }
    acc as usize
}

impl BiPoly {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: ComplexRadical) -> Self {
        Self::term(Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, ComplexRadical::one())
    }

    pub fn term(m: Monomial, c: ComplexRadical) -> Self {
        let n = m.n();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Self { n, terms }
    }

    pub fn var(n: usize, v: Var) -> Self {
        Self::term(Monomial::var(n, v), ComplexRadical::one())
    }

    /// `z_j`.
    pub fn z(n: usize, j: usize) -> Self {
        Self::var(n, Var::Z(j))
    }

    /// `zbar_j`.
    pub fn zbar(n: usize, j: usize) -> Self {
        Self::var(n, Var::ZBar(j))
    }

    /// The holomorphic monomial `c z^alpha`.
    pub fn holo_monomial(alpha: &[u32], c: ComplexRadical) -> Self {
        Self::term(Monomial::holomorphic(alpha), c)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, ComplexRadical)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            assert_eq!(m.n(), n, "monomial has the wrong variable count");
            p.add_term(m, &c);
        }
        p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, ComplexRadical> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> ComplexRadical {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    /// The value if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<ComplexRadical> {
        match self.terms.len() {
            0 => Some(ComplexRadical::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(Monomial::is_holomorphic)
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn holo_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::holo_degree).max().unwrap_or(0)
    }

    pub fn anti_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::anti_degree).max().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<(&Monomial, &ComplexRadical)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: &ComplexRadical) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let v = e.get() + c;
                if v.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::VariableMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.n);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &ComplexRadical) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn scale_real(&self, r: &RadicalReal) -> Self {
        self.scale(&ComplexRadical::real(r.clone()))
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        self.scale_real(&RadicalReal::from_rational(q.clone()))
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &ComplexRadical) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.n);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Swaps `z` and `zbar` and conjugates coefficients.
    pub fn conjugate(&self) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.conj(), c.conj())).collect(),
        }
    }

    /// `(p + conj(p)) / 2`, the real part as a function on `C^n`.
    pub fn real_part(&self) -> Self {
        (self + &self.conjugate()).scale(&ComplexRadical::from_ratio(1, 2))
    }

    pub fn differentiate(&self, v: Var) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let mut k = m.clone();
            match v {
                Var::Z(j) => k.holo[j] -= 1,
                Var::ZBar(j) => k.anti[j] -= 1,
            }
            out.add_term(k, &c.scale(&RadicalReal::from_integer(e as i64)));
        }
        out
    }

    /// Value at `p`, with `zbar_j` evaluated at the conjugate of `p_j`.
    pub fn evaluate(&self, p: &[ComplexRadical]) -> ComplexRadical {
        assert_eq!(p.len(), self.n, "point has the wrong dimension");
        let mut max_h = vec![0u32; self.n];
        let mut max_a = vec![0u32; self.n];
        for m in self.terms.keys() {
            for j in 0..self.n {
                max_h[j] = max_h[j].max(m.holo[j]);
                max_a[j] = max_a[j].max(m.anti[j]);
            }
        }
        let powers = |base: &ComplexRadical, top: u32| {
            let mut v = vec![ComplexRadical::one()];
            for k in 1..=top as usize {
                let next = &v[k - 1] * base;
                v.push(next);
            }
            v
        };
        let hp: Vec<_> = (0..self.n).map(|j| powers(&p[j], max_h[j])).collect();
        let ap: Vec<_> = (0..self.n).map(|j| powers(&p[j].conj(), max_a[j])).collect();
        let mut acc = ComplexRadical::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for j in 0..self.n {
                if m.holo[j] > 0 {
                    t = &t * &hp[j][m.holo[j] as usize];
                }
                if m.anti[j] > 0 {
                    t = &t * &ap[j][m.anti[j] as usize];
                }
            }
            acc += &t;
        }
        acc
    }

    /// Replaces the holomorphic variable `z_j` by the constant `value` and drops
    /// it from the ring. The polynomial must not involve `zbar_j`.
    pub fn substitute_holo(&self, j: usize, value: &ComplexRadical) -> Self {
        let mut out = Self::zero(self.n - 1);
        for (m, c) in &self.terms {
            assert_eq!(m.anti[j], 0, "substituted variable appears conjugated");
            let mut holo = m.holo.clone();
            let e = holo.remove(j);
            let mut anti = m.anti.clone();
            anti.remove(j);
            out.add_term(Monomial::new(holo, anti), &(c * &value.pow(e)));
        }
        out
    }

    /// Adds `extra` holomorphic variables at the end.
    pub fn extend_vars(&self, extra: usize) -> Self {
        let mut out = Self::zero(self.n + extra);
        for (m, c) in &self.terms {
            let mut holo = m.holo.clone();
            holo.extend(std::iter::repeat_n(0, extra));
            let mut anti = m.anti.clone();
            anti.extend(std::iter::repeat_n(0, extra));
            out.add_term(Monomial::new(holo, anti), c);
        }
        out
    }

    /// Terms grouped by Fourier degree `|alpha| - |beta|`.
    pub fn fourier_split(&self) -> BTreeMap<i64, BiPoly> {
        let mut parts: BTreeMap<i64, BiPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            parts
                .entry(m.fourier_degree())
                .or_insert_with(|| BiPoly::zero(self.n))
                .terms
                .insert(m.clone(), c.clone());
        }
        parts
    }

    /// Multiplies each bihomogeneous piece of bidegree `(a, a - s)` by
    /// `|z|^{2(A - a)}` where `A` is the top holomorphic degree present.
    pub fn homogenize_on_sphere(&self) -> Result<BiPoly> {
        let mut s: Option<i64> = None;
        for m in self.terms.keys() {
            let f = m.fourier_degree();
            match s {
                None => s = Some(f),
                Some(t) if t != f => return Err(Error::MixedFourierDegree(t, f)),
                _ => {}
            }
        }
        let top = self.holo_degree();
        Ok(self.homogenize_to(top))
    }

    /// Homogenizes a single-Fourier-degree polynomial to holomorphic degree
    /// `top`, which must bound every term.
    pub fn homogenize_to(&self, top: u32) -> BiPoly {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            let k = top - m.holo_degree();
            for (gamma, mult) in norm_power_terms(self.n, k) {
                let g = Monomial::new(gamma.clone(), gamma.clone());
                out.add_term(m.mul(&g), &c.scale(&mult));
            }
        }
        out
    }

    /// True iff the polynomial is identically zero on the unit sphere.
    pub fn vanishes_on_sphere(&self) -> bool {
        self.fourier_split()
            .values()
            .all(|part| part.homogenize_on_sphere().expect("single degree").is_zero())
    }

    /// The largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.n),
            Some(first) => it.fold(first.clone(), |acc, m| acc.gcd(m)),
        }
    }

    pub fn div_monomial(&self, m: &Monomial) -> Self {
        Self {
            n: self.n,
            terms: self.terms.iter().map(|(k, c)| (m.quotient_of(k), c.clone())).collect(),
        }
    }

    /// Exact quotient `self / g`, or `None` when `g` does not divide `self`.
    pub fn div_exact(&self, g: &BiPoly) -> Option<BiPoly> {
        let (lm, lc) = g.leading()?;
        let lm = lm.clone();
        let lc_inv = lc.inverse().ok()?;
        let mut r = self.clone();
        let mut q = Self::zero(self.n);
        while let Some((m, c)) = r.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = lm.quotient_of(m);
            let qc = c * &lc_inv;
            r = &r - &g.mul_monomial(&qm, &qc);
            q.add_term(qm, &qc);
        }
        Some(q)
    }

    pub fn map_coeffs(&self, f: impl Fn(&ComplexRadical) -> ComplexRadical) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), &f(c));
        }
        out
    }

    pub fn to_json_terms(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                holo: m.holo.clone(),
                anti: m.anti.clone(),
                coeff: c.clone(),
            })
            .collect()
    }

    pub fn from_json_terms(n: usize, terms: &[TermJson]) -> Result<Self> {
        let mut p = Self::zero(n);
        for t in terms {
            if t.holo.len() != n || t.anti.len() != n {
                return Err(Error::VariableMismatch(n, t.holo.len().max(t.anti.len())));
            }
            p.add_term(Monomial::new(t.holo.clone(), t.anti.clone()), &t.coeff);
        }
        Ok(p)
    }
}

/// One serialized term `{"holo":[..],"anti":[..],"coeff":{"re":..,"im":..}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermJson {
    pub holo: Vec<u32>,
    pub anti: Vec<u32>,
    pub coeff: ComplexRadical,
}

impl Serialize for BiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json_terms().serialize(s)
    }
}

/// Terms of `|z|^{2k}`: each `gamma` with `|gamma| = k` and its multinomial.
pub fn norm_power_terms(n: usize, k: u32) -> Vec<(Vec<u32>, RadicalReal)> {
    exponents_of_degree(n, k)
        .into_iter()
        .map(|g| {
            let c = multinomial(&g);
            (g, RadicalReal::from_rational(BigRational::from_integer(c.into())))
        })
        .collect()
}

/// `|z|^{2k}` as a polynomial.
pub fn norm_power(n: usize, k: u32) -> BiPoly {
    BiPoly::from_terms(
        n,
        norm_power_terms(n, k)
            .into_iter()
            .map(|(g, c)| (Monomial::new(g.clone(), g), ComplexRadical::real(c))),
    )
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            n: self.n,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl $tr<&BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly {
                self.$checked(rhs).expect("variable count mismatch")
            }
        }
        impl $tr<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                self.$checked(&rhs).expect("variable count mismatch")
            }
        }
        impl $tr<&BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: &BiPoly) -> BiPoly {
                self.$checked(rhs).expect("variable count mismatch")
            }
        }
        impl $tr<BiPoly> for &BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                self.$checked(&rhs).expect("variable count mismatch")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Highest monomials first reads naturally: z^3 + sqrt(3)*z^2*w + ...
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            let mono = m.to_string();
            if m.degree() == 0 {
                write!(f, "{c}")?;
            } else if c.is_one() {
                write!(f, "{mono}")?;
            } else if c.is_real() && c.re.terms().len() == 1 {
                write!(f, "{c}*{mono}")?;
            } else {
                write!(f, "({c})*{mono}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
