//! Polynomial vector fields `sum a_j d/dz_j + b_j d/dzbar_j`.

use std::fmt;

use crate::polys::{BiPoly, PolyVector, Var};
use crate::scalars::ComplexRadical;

#[derive(Clone, PartialEq, Eq)]
pub struct VectorField {
    n: usize,
    /// `n` coefficients of `d/dz_j` followed by `n` of `d/dzbar_j`.
    coeffs: Vec<BiPoly>,
}

impl VectorField {
    pub fn new(holo: Vec<BiPoly>, anti: Vec<BiPoly>) -> Self {
        let n = holo.len();
        assert_eq!(anti.len(), n, "need n coefficients of each type");
        assert!(holo.iter().chain(&anti).all(|c| c.n() == n));
        let mut coeffs = holo;
        coeffs.extend(anti);
        Self { n, coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coeffs: vec![BiPoly::zero(n); 2 * n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn holo_coeff(&self, j: usize) -> &BiPoly {
        &self.coeffs[j]
    }

    pub fn anti_coeff(&self, j: usize) -> &BiPoly {
        &self.coeffs[self.n + j]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BiPoly::is_zero)
    }

    fn var(&self, k: usize) -> Var {
        if k < self.n {
            Var::Z(k)
        } else {
            Var::ZBar(k - self.n)
        }
    }

    /// `X(f)`.
    pub fn apply(&self, f: &BiPoly) -> BiPoly {
        assert_eq!(f.n(), self.n, "variable count mismatch");
        let mut out = BiPoly::zero(self.n);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let df = f.differentiate(self.var(k));
            if !df.is_zero() {
                out = &out + &(c * &df);
            }
        }
        out
    }

    pub fn apply_vec(&self, v: &PolyVector) -> PolyVector {
        PolyVector::new(v.entries.iter().map(|f| self.apply(f)).collect())
    }

    /// `[X, Y] = X(Y) - Y(X)`, coefficientwise.
    pub fn lie_bracket(&self, other: &VectorField) -> VectorField {
        assert_eq!(self.n, other.n, "variable count mismatch");
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(x, y)| &self.apply(y) - &other.apply(x))
            .collect();
        Self { n: self.n, coeffs }
    }

    /// The complex conjugate field: swaps the roles of `z` and `zbar`.
    pub fn conjugate(&self) -> VectorField {
        let conj: Vec<BiPoly> = self.coeffs.iter().map(BiPoly::conjugate).collect();
        let (holo, anti) = conj.split_at(self.n);
        Self::new(anti.to_vec(), holo.to_vec())
    }

    pub fn scale(&self, c: &ComplexRadical) -> VectorField {
        Self {
            n: self.n,
            coeffs: self.coeffs.iter().map(|p| p.scale(c)).collect(),
        }
    }

    /// `L_ij = zbar_i d/dz_j - zbar_j d/dz_i` (0-based indices).
    pub fn l(n: usize, i: usize, j: usize) -> Self {
        Self::lbar(n, i, j).conjugate()
    }

    /// `Lbar_ij = z_i d/dzbar_j - z_j d/dzbar_i`.
    pub fn lbar(n: usize, i: usize, j: usize) -> Self {
        assert!(i != j && i < n && j < n);
        let mut f = Self::zero(n);
        f.coeffs[n + j] = BiPoly::z(n, i);
        f.coeffs[n + i] = -BiPoly::z(n, j);
        f
    }

    /// `T_kj = z_j d/dz_k - zbar_k d/dzbar_j`. The formula also makes sense for `k = j`.
    pub fn t(n: usize, k: usize, j: usize) -> Self {
        assert!(k < n && j < n);
        let mut f = Self::zero(n);
        f.coeffs[k] = BiPoly::z(n, j);
        f.coeffs[n + j] = -BiPoly::zbar(n, k);
        f
    }

    /// `S_ij = -z_i d/dz_i - z_j d/dz_j + zbar_i d/dzbar_i + zbar_j d/dzbar_j`.
    pub fn s(n: usize, i: usize, j: usize) -> Self {
        assert!(i < n && j < n);
        let mut f = Self::zero(n);
        for k in [i, j] {
            f.coeffs[k] = &f.coeffs[k] - &BiPoly::z(n, k);
            f.coeffs[n + k] = &f.coeffs[n + k] + &BiPoly::zbar(n, k);
        }
        f
    }
}

impl std::ops::Add for &VectorField {
    type Output = VectorField;
    fn add(self, rhs: &VectorField) -> VectorField {
        VectorField {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl std::ops::Sub for &VectorField {
    type Output = VectorField;
    fn sub(self, rhs: &VectorField) -> VectorField {
        VectorField {
            n: self.n,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl std::ops::Neg for &VectorField {
    type Output = VectorField;
    fn neg(self) -> VectorField {
        self.scale(&-ComplexRadical::one())
    }
}

impl fmt::Display for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let v = match self.var(k) {
                Var::Z(j) => format!("d/d{}", BiPoly::z(self.n, j)),
                Var::ZBar(j) => format!("d/d{}", BiPoly::zbar(self.n, j)),
            };
            write!(f, "({c})*{v}")?;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for VectorField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
