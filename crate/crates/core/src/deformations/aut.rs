//! Trivial deformations `aut(H)` and the infinitesimal stabilizer.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::maps::SphereMap;
use crate::polys::{BiPoly, PolyVector, Var};
use crate::scalars::ComplexRadical;

use super::coords::{real_rank, real_relations, RealSpan};
use super::hol::{in_hol, in_hol_scaled};

/// Generators of `aut(H)` stored as numerators `N` of `N / Q^2`.
#[derive(Debug, Clone, Serialize)]
pub struct AutBasis {
    pub generators: Vec<PolyVector>,
    pub labels: Vec<String>,
    /// `m(m+2) + n(n+2)`.
    pub raw_count: usize,
    pub real_dimension: usize,
    /// Real basis of the source fields `S` whose push-forward is a target field.
    pub stabilizer: Vec<PolyVector>,
}

impl AutBasis {
    /// Power of `Q` in the denominators of the generators.
    pub const Q_POWER: u32 = 2;
}

/// Real basis of `hol(S^{2n-1})`: `alpha - (conj(alpha) . z) z`, the
/// off-diagonal skew-Hermitian fields and `i s_j z_j`.
pub fn sphere_automorphisms(n: usize) -> Vec<(String, PolyVector)> {
    let z: Vec<BiPoly> = (0..n).map(|j| BiPoly::z(n, j)).collect();
    let i = ComplexRadical::i();
    let one = ComplexRadical::one();
    let mut out = Vec::new();
    for l in 0..n {
        for (tag, a) in [("", &one), ("i", &i)] {
            let comps = (0..n)
                .map(|j| {
                    let zz = (&z[j] * &z[l]).scale(&a.conj());
                    let c = if j == l {
                        BiPoly::constant(n, a.clone())
                    } else {
                        BiPoly::zero(n)
                    };
                    &c - &zz
                })
                .collect();
            out.push((format!("S1[{tag}e{}]", l + 1), PolyVector::new(comps)));
        }
    }
    for j in 0..n {
        for l in 0..j {
            for (tag, b) in [("", &one), ("i", &i)] {
                let mut comps = vec![BiPoly::zero(n); n];
                comps[j] = z[l].scale(b);
                comps[l] = -z[j].scale(&b.conj());
                out.push((format!("S2[{tag}{},{}]", j + 1, l + 1), PolyVector::new(comps)));
            }
        }
    }
    for j in 0..n {
        let mut comps = vec![BiPoly::zero(n); n];
        comps[j] = z[j].scale(&i);
        out.push((format!("S3[{}]", j + 1), PolyVector::new(comps)));
    }
    out
}

/// `Q^2 H_* S = sum_i S_i (Q d_i P - P d_i Q)`.
pub fn push_forward(h: &SphereMap, s: &PolyVector) -> PolyVector {
    let n = h.n();
    let q = h.denominator();
    let p = h.numerator();
    let mut acc = PolyVector::zeros(n, h.m());
    for (idx, si) in s.entries.iter().enumerate() {
        if si.is_zero() {
            continue;
        }
        let dq = q.differentiate(Var::Z(idx));
        let dp = PolyVector::new(p.entries.iter().map(|c| c.differentiate(Var::Z(idx))).collect());
        let term = dp.mul_poly(q).sub(&p.mul_poly(&dq)).mul_poly(si);
        acc = acc.add(&term);
    }
    acc
}

/// Target-side generators `Q^2 T_1` and `Q^2 T_2`.
fn target_generators(h: &SphereMap) -> Vec<(String, PolyVector)> {
    let n = h.n();
    let m = h.m();
    let p = h.numerator();
    let q = h.denominator();
    let q2 = q * q;
    let i = ComplexRadical::i();
    let one = ComplexRadical::one();
    let mut out = Vec::new();
    for j in 0..m {
        for (tag, a) in [("", &one), ("i", &i)] {
            let mut v = p.scale(&-a.conj()).mul_poly(&p.entries[j]);
            v.entries[j] = &v.entries[j] + &q2.scale(a);
            out.push((format!("T1[{tag}e{}]", j + 1), v));
        }
    }
    let qp = p.mul_poly(q);
    for j in 0..m {
        for k in j..m {
            let mut add = |tag: &str, cjk: ComplexRadical, ckj: ComplexRadical| {
                let mut v = PolyVector::zeros(n, m);
                v.entries[j] = &v.entries[j] + &qp.entries[k].scale(&cjk);
                if k != j {
                    v.entries[k] = &v.entries[k] + &qp.entries[j].scale(&ckj);
                }
                out.push((format!("T2[{tag}{},{}]", j + 1, k + 1), v));
            };
            if j == k {
                add("i", i.clone(), ComplexRadical::zero());
            } else {
                add("", one.clone(), -one.clone());
                add("i", i.clone(), i.clone());
            }
        }
    }
    out
}

pub fn aut_basis(h: &SphereMap) -> AutBasis {
    let n = h.n();
    let m = h.m();
    let target = target_generators(h);
    let sources = sphere_automorphisms(n);
    let pushed: Vec<(String, PolyVector)> = sources
        .iter()
        .map(|(l, s)| (format!("H_*{l}"), push_forward(h, s)))
        .collect();
    let t_count = target.len();
    let (labels, generators): (Vec<String>, Vec<PolyVector>) = target.into_iter().chain(pushed).unzip();
    let real_dimension = real_rank(&generators);

    // S is in the stabilizer iff H_*S lies in the span of the target generators.
    let relations = real_relations(&generators);
    let projected: Vec<PolyVector> = relations
        .iter()
        .map(|rel| {
            rel[t_count..]
                .iter()
                .zip(&sources)
                .filter(|(c, _)| !c.is_zero())
                .fold(PolyVector::zeros(n, n), |acc, (c, (_, s))| {
                    acc.add(&s.scale(&ComplexRadical::real(c.clone())))
                })
        })
        .collect();
    let stabilizer = real_basis(projected);
    AutBasis {
        generators,
        labels,
        raw_count: m * (m + 2) + n * (n + 2),
        real_dimension,
        stabilizer,
    }
}

/// Greedy real basis of a family, keeping the first independent members.
fn real_basis(vs: Vec<PolyVector>) -> Vec<PolyVector> {
    let mut kept: Vec<PolyVector> = Vec::new();
    for v in vs {
        if v.is_zero() {
            continue;
        }
        let mut trial = kept.clone();
        trial.push(v.clone());
        if real_rank(&trial) == trial.len() {
            kept.push(v);
        }
    }
    kept
}

/// Whether `X'/Q` is a trivial deformation. Rejects non-members.
pub fn is_trivial_deformation(h: &SphereMap, x: &PolyVector) -> Result<bool> {
    if !in_hol(h, x) {
        return Err(Error::NotMember);
    }
    Ok(is_trivial_with(h, &aut_basis(h), x))
}

pub fn is_trivial_with(h: &SphereMap, aut: &AutBasis, x: &PolyVector) -> bool {
    let mut span = RealSpan::new(&aut.generators);
    span.contains(&x.mul_poly(h.denominator()))
}

/// Every generator passes the membership test for `N / Q^2`.
pub fn generators_are_members(h: &SphereMap, aut: &AutBasis) -> bool {
    aut.generators.iter().all(|g| in_hol_scaled(h, g, AutBasis::Q_POWER))
}
