//! Reflection matrices `V_H` and `V = Q V_H`.
//!
//! For each target component `j`, `W_j = sum_k conj(P_j^k) |z|^{2(d-k)}` is
//! bihomogeneous of antiholomorphic degree `d`; the holomorphic coefficient
//! of `zbar^alpha` divided by `a_alpha` is the entry in row `alpha`.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::maps::{homogeneous_coefficients, SphereMap};
use crate::polys::{norm_power, BiPoly, Monomial, PolyMatrix, PolyVector};
use crate::scalars::{ComplexRadical, RadicalReal};

#[derive(Debug, Clone)]
pub struct ReflectionMatrix {
    map: SphereMap,
    basis: Vec<(Vec<u32>, RadicalReal)>,
    vh: PolyMatrix,
    v: PolyMatrix,
}

/// Homogeneous parts `P^k` of a holomorphic polynomial, by degree.
fn homogeneous_parts(p: &BiPoly) -> BTreeMap<u32, BiPoly> {
    let mut parts: BTreeMap<u32, BiPoly> = BTreeMap::new();
    for (m, c) in p.terms() {
        parts
            .entry(m.holo_degree())
            .or_insert_with(|| BiPoly::zero(p.n()))
            .add_term(m.clone(), c);
    }
    parts
}

/// `W = sum_k conj(P^k) |z|^{2(d-k)}`.
fn reflected(p: &BiPoly, d: u32) -> BiPoly {
    let n = p.n();
    homogeneous_parts(p)
        .into_iter()
        .fold(BiPoly::zero(n), |acc, (k, part)| {
            &acc + &(&part.conjugate() * &norm_power(n, d - k))
        })
}

/// `sum_alpha a_alpha zbar^alpha y_alpha` for a column `y` indexed by the basis.
fn pair_with_conjugate_basis(basis: &[(Vec<u32>, RadicalReal)], y: &[BiPoly], n: usize) -> BiPoly {
    let mut acc = BiPoly::zero(n);
    for ((alpha, a), entry) in basis.iter().zip(y) {
        let zbar = Monomial::new(vec![0; n], alpha.clone());
        acc = &acc + &entry.mul_monomial(&zbar, &ComplexRadical::real(a.clone()));
    }
    acc
}

impl ReflectionMatrix {
    /// Builds `V_H` and `V`, then re-checks the defining identity exactly.
    pub fn build(h: &SphereMap) -> Result<Self> {
        let n = h.n();
        let d = h.degree();
        let basis = homogeneous_coefficients(n, d);
        let row_of: HashMap<&[u32], usize> = basis.iter().enumerate().map(|(i, (a, _))| (a.as_slice(), i)).collect();
        let inv: Vec<ComplexRadical> = basis
            .iter()
            .map(|(_, a)| ComplexRadical::real(a.inverse().expect("positive")))
            .collect();
        let m = h.m();
        let mut vh = PolyMatrix::zeros(n, basis.len(), m);
        for (j, p) in h.numerator().entries.iter().enumerate() {
            for (mono, c) in reflected(p, d).terms() {
                let row = *row_of
                    .get(mono.anti.as_slice())
                    .ok_or_else(|| Error::IdentityFailure("antiholomorphic degree is not d".into()))?;
                let holo = Monomial::holomorphic(&mono.holo);
                vh.entries[row][j].add_term(holo, &(c * &inv[row]));
            }
        }
        let v = vh.mul_poly(h.denominator());
        let r = Self {
            map: h.clone(),
            basis,
            vh,
            v,
        };
        if !r.defining_identity_holds() {
            return Err(Error::IdentityFailure("X . W != (V_H X) . conj(H_n^d)".into()));
        }
        Ok(r)
    }

    /// Assembles a matrix without any checks, e.g. to probe the verifiers.
    pub fn from_parts(map: SphereMap, vh: PolyMatrix) -> Self {
        let basis = homogeneous_coefficients(map.n(), map.degree());
        let v = vh.mul_poly(map.denominator());
        Self { map, basis, vh, v }
    }

    pub fn map(&self) -> &SphereMap {
        &self.map
    }

    /// Row labels `alpha` with the coefficients `a_alpha`.
    pub fn basis(&self) -> &[(Vec<u32>, RadicalReal)] {
        &self.basis
    }

    pub fn vh(&self) -> &PolyMatrix {
        &self.vh
    }

    pub fn v(&self) -> &PolyMatrix {
        &self.v
    }

    pub fn rows(&self) -> usize {
        self.vh.rows
    }

    pub fn cols(&self) -> usize {
        self.vh.cols
    }

    /// `e_j . W = (V_H e_j) . conj(H_n^d)` for every `j`, as polynomials.
    pub fn defining_identity_holds(&self) -> bool {
        let n = self.map.n();
        let d = self.map.degree();
        self.map.numerator().entries.iter().enumerate().all(|(j, p)| {
            let lhs = reflected(p, d);
            let rhs = pair_with_conjugate_basis(&self.basis, &self.vh.column(j).entries, n);
            lhs == rhs
        })
    }

    /// `Q conj(P_j) - (V e_j) . conj(H_n^d)` vanishes on the sphere for all `j`.
    pub fn verify_fundamental_identity(&self) -> bool {
        let n = self.map.n();
        let q = self.map.denominator();
        self.map.numerator().entries.iter().enumerate().all(|(j, p)| {
            let lhs = q * &p.conjugate();
            let rhs = pair_with_conjugate_basis(&self.basis, &self.v.column(j).entries, n);
            (&lhs - &rhs).vanishes_on_sphere()
        })
    }

    /// `(V_H P == H_n^d, conj(V_H)^t H_n^d - P vanishes on the sphere)`.
    pub fn map_identities(&self) -> Result<(bool, bool)> {
        if !self.map.is_polynomial() {
            return Err(Error::NotPolynomial);
        }
        let n = self.map.n();
        let hom = self.homogeneous_target();
        let first = self.vh.mul_vec(self.map.numerator()) == hom;
        let back = self.transpose_conjugate_apply(&hom);
        let second = back
            .entries
            .iter()
            .zip(&self.map.numerator().entries)
            .all(|(a, b)| (a - b).vanishes_on_sphere());
        debug_assert_eq!(hom.n(), n);
        Ok((first, second))
    }

    /// `H_n^d` as a column matching the row basis.
    pub fn homogeneous_target(&self) -> PolyVector {
        PolyVector::new(
            self.basis
                .iter()
                .map(|(a, c)| BiPoly::holo_monomial(a, c.clone().into()))
                .collect(),
        )
    }

    /// `conj(V_H)^t Y`, with mixed `z`, `zbar` entries.
    pub fn transpose_conjugate_apply(&self, y: &PolyVector) -> PolyVector {
        assert_eq!(y.len(), self.rows(), "Y must have one entry per row of V_H");
        self.vh.conjugate().transpose().mul_vec(y)
    }

    /// `V X'`.
    pub fn apply_v(&self, x: &PolyVector) -> PolyVector {
        self.v.mul_vec(x)
    }

    /// `V_H X'`.
    pub fn apply_vh(&self, x: &PolyVector) -> PolyVector {
        self.vh.mul_vec(x)
    }

    /// Row label such as `z^3*w` for display.
    pub fn row_label(&self, i: usize) -> String {
        Monomial::holomorphic(&self.basis[i].0).to_string()
    }
}

/// `build_reflection`.
pub fn build_reflection(h: &SphereMap) -> Result<ReflectionMatrix> {
    ReflectionMatrix::build(h)
}

/// A holomorphic polynomial vector `X` of degree at most `bound` with `v - X`
/// vanishing on the sphere in every component, if there is one.
///
/// Each Fourier piece `v_s` must agree on the sphere with the degree-`s` part
/// of `X`; after homogenizing to bidegree `(A, A - s)` this says that `v_s`
/// is `X_s |z|^{2(A-s)}`, which exact division decides.
pub fn holomorphic_extension_on_sphere(v: &PolyVector, bound: u32) -> Option<PolyVector> {
    let n = v.n();
    let mut out = Vec::with_capacity(v.len());
    for comp in &v.entries {
        let mut x = BiPoly::zero(n);
        for (s, part) in comp.fourier_split() {
            let a = part.holo_degree().max(s.max(0) as u32);
            let homog = part.homogenize_to(a);
            if homog.is_zero() {
                continue;
            }
            if s < 0 || s as u32 > bound {
                return None;
            }
            let q = homog.div_exact(&norm_power(n, a - s as u32))?;
            if !q.is_holomorphic() {
                return None;
            }
            x = &x + &q;
        }
        out.push(x);
    }
    Some(PolyVector::new(out))
}
