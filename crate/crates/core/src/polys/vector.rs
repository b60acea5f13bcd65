use std::fmt;

use serde::Serialize;

use super::BiPoly;
use crate::scalars::ComplexRadical;

/// A column of polynomials, such as a map numerator or a deformation.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PolyVector {
    pub entries: Vec<BiPoly>,
}

impl PolyVector {
    pub fn new(entries: Vec<BiPoly>) -> Self {
        if let Some(first) = entries.first() {
            let n = first.n();
            assert!(entries.iter().all(|e| e.n() == n), "mixed variable counts");
        }
        Self { entries }
    }

    pub fn zeros(n: usize, len: usize) -> Self {
        Self::new(vec![BiPoly::zero(n); len])
    }

    /// `c e_j` with constant entry.
    pub fn unit(n: usize, len: usize, j: usize, c: ComplexRadical) -> Self {
        let mut v = Self::zeros(n, len);
        v.entries[j] = BiPoly::constant(n, c);
        v
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn n(&self) -> usize {
        self.entries.first().map(BiPoly::n).unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BiPoly::is_zero)
    }

    pub fn is_holomorphic(&self) -> bool {
        self.entries.iter().all(BiPoly::is_holomorphic)
    }

    pub fn degree(&self) -> u32 {
        self.entries.iter().map(BiPoly::degree).max().unwrap_or(0)
    }

    /// `sum_j a_j b_j`, with no conjugation.
    pub fn dot(&self, other: &PolyVector) -> BiPoly {
        assert_eq!(self.len(), other.len(), "length mismatch");
        let mut acc = BiPoly::zero(self.n().max(other.n()));
        for (a, b) in self.entries.iter().zip(&other.entries) {
            acc = &acc + &(a * b);
        }
        acc
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.entries.iter().map(BiPoly::conjugate).collect())
    }

    pub fn scale(&self, c: &ComplexRadical) -> Self {
        Self::new(self.entries.iter().map(|e| e.scale(c)).collect())
    }

    pub fn mul_poly(&self, p: &BiPoly) -> Self {
        Self::new(self.entries.iter().map(|e| e * p).collect())
    }

    pub fn add(&self, other: &PolyVector) -> Self {
        assert_eq!(self.len(), other.len(), "length mismatch");
        Self::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &PolyVector) -> Self {
        assert_eq!(self.len(), other.len(), "length mismatch");
        Self::new(self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect())
    }

    pub fn evaluate(&self, p: &[ComplexRadical]) -> Vec<ComplexRadical> {
        self.entries.iter().map(|e| e.evaluate(p)).collect()
    }

    pub fn concat(&self, other: &PolyVector) -> Self {
        let mut e = self.entries.clone();
        e.extend(other.entries.iter().cloned());
        Self::new(e)
    }
}

impl fmt::Display for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for PolyVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A dense matrix of polynomials.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PolyMatrix {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<BiPoly>>,
}

impl PolyMatrix {
    pub fn new(entries: Vec<Vec<BiPoly>>) -> Self {
        let rows = entries.len();
        let cols = entries.first().map(Vec::len).unwrap_or(0);
        assert!(entries.iter().all(|r| r.len() == cols), "ragged matrix");
        Self { rows, cols, entries }
    }

    pub fn zeros(n: usize, rows: usize, cols: usize) -> Self {
        Self::new(vec![vec![BiPoly::zero(n); cols]; rows])
    }

    pub fn identity(n: usize, size: usize) -> Self {
        let mut m = Self::zeros(n, size, size);
        for i in 0..size {
            m.entries[i][i] = BiPoly::one(n);
        }
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i][j]
    }

    pub fn column(&self, j: usize) -> PolyVector {
        PolyVector::new(self.entries.iter().map(|r| r[j].clone()).collect())
    }

    pub fn mul_vec(&self, v: &PolyVector) -> PolyVector {
        assert_eq!(self.cols, v.len(), "shape mismatch");
        PolyVector::new(
            self.entries
                .iter()
                .map(|row| PolyVector::new(row.clone()).dot(v))
                .collect(),
        )
    }

    pub fn transpose(&self) -> Self {
        Self::new((0..self.cols).map(|j| self.column(j).entries).collect())
    }

    pub fn conjugate(&self) -> Self {
        Self::new(
            self.entries
                .iter()
                .map(|r| r.iter().map(BiPoly::conjugate).collect())
                .collect(),
        )
    }

    pub fn mul_poly(&self, p: &BiPoly) -> Self {
        Self::new(self.entries.iter().map(|r| r.iter().map(|e| e * p).collect()).collect())
    }

    pub fn is_holomorphic(&self) -> bool {
        self.entries.iter().flatten().all(BiPoly::is_holomorphic)
    }

    pub fn evaluate(&self, p: &[ComplexRadical]) -> Vec<Vec<ComplexRadical>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|e| e.evaluate(p)).collect())
            .collect()
    }
}

impl fmt::Debug for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            writeln!(f, "{}", PolyVector::new(row.clone()))?;
        }
        Ok(())
    }
}
