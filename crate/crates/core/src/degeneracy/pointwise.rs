//! Degeneracy at a single sphere point, by the reflection matrix and by jets.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{rank, SparseEliminator};
use crate::maps::SphereMap;
use crate::polys::{Point, PolyVector};
use crate::reflection::ReflectionMatrix;
use crate::scalars::ComplexRadical;

use super::VectorField;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Reflection,
    Jet,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DegeneracyReport {
    /// `None` for a generic report.
    pub point: Option<Point>,
    pub m: usize,
    pub kernel_dim: usize,
    pub rank: usize,
    pub finite_nondegenerate: bool,
    pub jet_order: Option<usize>,
    pub method: Method,
    /// Set when the jet computation hit `max_order` before it could decide.
    pub inconclusive: bool,
}

impl DegeneracyReport {
    fn new(point: Option<Point>, m: usize, rank: usize, method: Method) -> Self {
        Self {
            point,
            m,
            kernel_dim: m - rank,
            rank,
            finite_nondegenerate: rank == m,
            jet_order: None,
            method,
            inconclusive: false,
        }
    }

    /// `(k0, s)` when the jet order is known.
    pub fn label(&self) -> Option<(usize, usize)> {
        self.jet_order.map(|k| (k, self.kernel_dim))
    }
}

impl fmt::Display for DegeneracyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.point {
            Some(p) => write!(f, "at {p}: ")?,
            None => write!(f, "generic: ")?,
        }
        write!(f, "degeneracy {} (rank {} of {})", self.kernel_dim, self.rank, self.m)?;
        if let Some(k) = self.jet_order {
            write!(f, ", jet order {k}")?;
        }
        if self.inconclusive {
            write!(f, ", inconclusive")?;
        }
        Ok(())
    }
}

/// Rank of `V(p)` over the coefficient field.
pub fn rank_at(r: &ReflectionMatrix, p: &Point) -> usize {
    rank(&r.v().evaluate(p.coords()))
}

/// Kernel dimension of `V` at a point of the sphere.
pub fn kernel_at_point(r: &ReflectionMatrix, p: &Point) -> Result<DegeneracyReport> {
    if p.n() != r.map().n() {
        return Err(Error::VariableMismatch(p.n(), r.map().n()));
    }
    if !p.on_sphere() {
        return Err(Error::NotOnSphere);
    }
    Ok(DegeneracyReport::new(
        Some(p.clone()),
        r.cols(),
        rank_at(r, p),
        Method::Reflection,
    ))
}

/// The CR fields `Lbar_ij`, `i < j`; for `n = 2` this is `z d/dwbar - w d/dzbar`.
pub fn cr_fields(n: usize) -> Vec<VectorField> {
    let mut out = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            out.push(VectorField::lbar(n, i, j));
        }
    }
    out
}

/// Degeneracy from the spans `E'_k(p)` of `Lbar^alpha conj(H)` at `p`.
///
/// The fields `Lbar_ij` commute, so multi-indices suffice. Each one lowers
/// the antiholomorphic degree, so nothing new appears after order `deg P`.
/// For a rational map the spans for `conj(P)` and `conj(P / Q)` agree
/// order by order (Leibniz rule, `Q(p) != 0`), so the numerator is used.
pub fn jet_degeneracy(h: &SphereMap, p: &Point, max_order: usize) -> Result<DegeneracyReport> {
    if p.n() != h.n() {
        return Err(Error::VariableMismatch(p.n(), h.n()));
    }
    if !p.on_sphere() {
        return Err(Error::NotOnSphere);
    }
    let m = h.m();
    let fields = cr_fields(h.n());
    let mut span = SparseEliminator::<ComplexRadical>::new(m);
    let mut dims = Vec::new();
    // (index of the last field applied, jet)
    let mut level: Vec<(usize, PolyVector)> = vec![(0, h.numerator().conjugate())];
    let natural = h.numerator().degree() as usize;
    let mut k = 0;
    loop {
        for (_, v) in &level {
            let at_p = v.evaluate(p.coords());
            span.insert(at_p.into_iter().enumerate().filter(|(_, c)| !c.is_zero()));
        }
        dims.push(span.rank());
        if span.rank() == m || k == natural || k == max_order {
            break;
        }
        let mut next = Vec::new();
        for (last, v) in &level {
            for (idx, field) in fields.iter().enumerate().skip(*last) {
                let w = field.apply_vec(v);
                if !w.is_zero() && !next.iter().any(|(_, u)| u == &w) {
                    next.push((idx, w));
                }
            }
        }
        level = next;
        k += 1;
        if level.is_empty() {
            break;
        }
    }
    let dim = *dims.last().expect("at least order 0");
    let mut report = DegeneracyReport::new(Some(p.clone()), m, dim, Method::Jet);
    report.jet_order = dims.iter().position(|&d| d == dim);
    report.inconclusive = dim < m && k == max_order && k < natural && !level.is_empty();
    Ok(report)
}

/// Default jet cap `2(d + m)`.
pub fn default_max_order(h: &SphereMap) -> usize {
    2 * (h.degree() as usize + h.m())
}
