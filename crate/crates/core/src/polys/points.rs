//! Exact rational points on the unit sphere.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalars::{ComplexRadical, RadicalReal};

/// A point of `C^n` with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Point(pub Vec<ComplexRadical>);

impl Point {
    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[ComplexRadical] {
        &self.0
    }

    pub fn norm_sq(&self) -> RadicalReal {
        self.0.iter().fold(RadicalReal::zero(), |acc, c| acc + c.norm_sq())
    }

    pub fn on_sphere(&self) -> bool {
        self.norm_sq().is_one()
    }

    pub fn is_origin(&self) -> bool {
        self.0.iter().all(ComplexRadical::is_zero)
    }

    /// Builds a point from interleaved real and imaginary parts.
    pub fn from_parts(parts: &[BigRational]) -> Result<Self> {
        if parts.is_empty() || !parts.len().is_multiple_of(2) {
            return Err(Error::InvalidArgument(
                "a point needs an even, nonzero number of real parts".into(),
            ));
        }
        Ok(Point(
            parts
                .chunks(2)
                .map(|c| {
                    ComplexRadical::new(
                        RadicalReal::from_rational(c[0].clone()),
                        RadicalReal::from_rational(c[1].clone()),
                    )
                })
                .collect(),
        ))
    }

    /// Parses `x1,y1,x2,y2,...` with rational entries.
    pub fn parse(s: &str) -> Result<Self> {
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<RadicalReal>()
                    .ok()
                    .and_then(|r| r.as_rational())
                    .ok_or_else(|| Error::InvalidArgument(format!("bad coordinate {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_parts(&parts)
    }

    pub fn real(coords: &[(i64, i64)]) -> Self {
        Point(coords.iter().map(|&(a, b)| ComplexRadical::from_ratio(a, b)).collect())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Inverse stereographic projection `R^k -> S^k`, exact over the rationals.
pub fn stereographic(u: &[BigRational]) -> Vec<BigRational> {
    let norm: BigRational = u.iter().map(|x| x * x).sum();
    let denom = &norm + BigRational::one();
    let two = BigRational::from_integer(2.into());
    let mut out: Vec<BigRational> = u.iter().map(|x| &two * x / &denom).collect();
    out.push((norm - BigRational::one()) / denom);
    out
}

/// Deterministic stream of rational sphere points.
pub struct PointGenerator {
    rng: ChaCha8Rng,
}

impl PointGenerator {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    fn small_rational(&mut self) -> BigRational {
        let num: i64 = self.rng.gen_range(-5..=5);
        let den: i64 = self.rng.gen_range(1..=4);
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }

    /// A point of `S^{2n-1}` with every complex coordinate nonzero.
    pub fn generic(&mut self, n: usize) -> Point {
        loop {
            let u: Vec<BigRational> = (0..2 * n - 1).map(|_| self.small_rational()).collect();
            let p = Point::from_parts(&stereographic(&u)).expect("even length");
            if p.0.iter().all(|c| !c.is_zero()) {
                return p;
            }
        }
    }

    /// A point of the unit sphere of the coordinate subspace `support`.
    pub fn in_subspace(&mut self, n: usize, support: &[usize]) -> Point {
        let sub = self.generic(support.len());
        let mut coords = vec![ComplexRadical::zero(); n];
        for (k, &j) in support.iter().enumerate() {
            coords[j] = sub.0[k].clone();
        }
        Point(coords)
    }
}

/// `count` generic rational sphere points from a fixed seed.
pub fn rational_sphere_points(n: usize, count: usize, seed: u64) -> Vec<Point> {
    let mut g = PointGenerator::new(seed);
    (0..count).map(|_| g.generic(n)).collect()
}

/// Points on coordinate axes and coordinate subspaces, where rank drops of
/// reflection matrices tend to live.
pub fn special_points(n: usize, seed: u64) -> Vec<Point> {
    let units = [
        ComplexRadical::one(),
        -ComplexRadical::one(),
        ComplexRadical::i(),
        ComplexRadical::new(RadicalReal::from_ratio(3, 5), RadicalReal::from_ratio(4, 5)),
    ];
    let mut out = Vec::new();
    for j in 0..n {
        for u in &units {
            let mut coords = vec![ComplexRadical::zero(); n];
            coords[j] = u.clone();
            out.push(Point(coords));
        }
    }
    let mut g = PointGenerator::new(seed);
    for mask in 1u32..(1 << n) - 1 {
        let support: Vec<usize> = (0..n).filter(|j| mask & (1 << j) != 0).collect();
        if support.len() < 2 {
            continue;
        }
        for _ in 0..2 {
            out.push(g.in_subspace(n, &support));
        }
    }
    out
}
