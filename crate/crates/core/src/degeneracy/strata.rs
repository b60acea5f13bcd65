//! Rank-drop loci of the reflection matrix and fibers of the X-variety.

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{determinant, kernel};
use crate::polys::{rational_sphere_points, special_points, BiPoly, Point};
use crate::reflection::ReflectionMatrix;
use crate::scalars::ComplexRadical;

use super::generic::{generic_rank_with_seed, WITNESS_SEED};
use super::pointwise::rank_at;

const WITNESSES_PER_STRATUM: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub degeneracy: usize,
    pub rank: usize,
    /// The nonzero `(rank + 1)`-minors of `V_H`, each scaled to leading coefficient one.
    pub minors: Vec<BiPoly>,
    pub witnesses: Vec<Point>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StratificationReport {
    pub map: String,
    pub m: usize,
    pub generic_rank: usize,
    pub generic_degeneracy: usize,
    pub generic_witness: Point,
    pub strata: Vec<Stratum>,
    /// False if some rank level could neither be excluded on the sphere nor
    /// exhibited at a witness point.
    pub certified: bool,
}

enum Level {
    /// Certainly no sphere point has rank this low.
    Empty,
    Minors(Vec<BiPoly>),
}

/// Minors of size `size`; stops early once they prove the rank cannot drop
/// below `size` anywhere on the sphere.
fn minors_of_size(vh: &[Vec<BiPoly>], n: usize, size: usize) -> Level {
    let rows = vh.len();
    let cols = vh.first().map(Vec::len).unwrap_or(0);
    let mut found: Vec<BiPoly> = Vec::new();
    let mut pure_power = vec![false; n];
    for rs in (0..rows).combinations(size) {
        for cs in (0..cols).combinations(size) {
            let sub: Vec<Vec<BiPoly>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| vh[i][j].clone()).collect())
                .collect();
            let det = determinant(&sub, n);
            let Some((mono, c)) = det.leading() else {
                continue;
            };
            if det.len() == 1 {
                let support: Vec<usize> = (0..n).filter(|&j| mono.holo[j] + mono.anti[j] > 0).collect();
                match support.as_slice() {
                    [] => return Level::Empty,
                    [j] if mono.is_holomorphic() => pure_power[*j] = true,
                    _ => {}
                }
                if pure_power.iter().all(|&b| b) {
                    return Level::Empty;
                }
            }
            let inv = c.inverse().expect("nonzero leading coefficient");
            let det = det.scale(&inv);
            if !found.contains(&det) {
                found.push(det);
            }
        }
    }
    Level::Minors(found)
}

/// Dense coefficients (constant first) with trailing zeros removed.
type Univariate = Vec<ComplexRadical>;

fn trim(mut p: Univariate) -> Univariate {
    while p.last().is_some_and(ComplexRadical::is_zero) {
        p.pop();
    }
    p
}

fn remainder(mut a: Univariate, b: &Univariate) -> Univariate {
    let lead = b.last().expect("nonzero divisor").inverse().expect("nonzero");
    while a.len() >= b.len() {
        let q = &a[a.len() - 1] * &lead;
        let shift = a.len() - b.len();
        for (i, c) in b.iter().enumerate() {
            a[shift + i] -= &(&q * c);
        }
        a = trim(a);
    }
    a
}

fn gcd(mut a: Univariate, mut b: Univariate) -> Univariate {
    while !b.is_empty() {
        let r = remainder(a, &b);
        a = b;
        b = r;
    }
    a
}

/// Proves that the holomorphic polynomials `minors` have no common zero on
/// the sphere. Variables with a pure-power minor vanish on the common zero
/// set; if at most one variable `t` is left, the restricted minors are
/// univariate and a common zero with `|t| = 1` needs a root of their gcd
/// other than `t = 0`.
fn empty_on_sphere(minors: &[BiPoly], n: usize) -> bool {
    let mut zero = vec![false; n];
    for p in minors {
        if let Some((m, _)) = p.leading() {
            let support: Vec<usize> = (0..n).filter(|&j| m.holo[j] > 0).collect();
            if p.len() == 1 && m.is_holomorphic() && support.len() == 1 {
                zero[support[0]] = true;
            }
        }
    }
    let free: Vec<usize> = (0..n).filter(|&j| !zero[j]).collect();
    let [t] = free.as_slice() else {
        // Every variable vanishes (only the origin) or too many are left.
        return free.is_empty();
    };
    let mut g: Univariate = Vec::new();
    for p in minors {
        let mut u: Univariate = Vec::new();
        for (m, c) in p.terms() {
            if !m.is_holomorphic() {
                return false;
            }
            if (0..n).any(|j| zero[j] && m.holo[j] > 0) {
                continue;
            }
            let e = m.holo[*t] as usize;
            if u.len() <= e {
                u.resize(e + 1, ComplexRadical::zero());
            }
            u[e] += c;
        }
        g = gcd(g, trim(u));
        if g.len() == 1 {
            return true;
        }
    }
    // Only t = 0 remains.
    !g.is_empty() && g.iter().take(g.len() - 1).all(ComplexRadical::is_zero)
}

/// Generic degeneracy and the strata where it jumps, with witness points.
pub fn stratify(r: &ReflectionMatrix) -> Result<StratificationReport> {
    stratify_with_seed(r, WITNESS_SEED)
}

pub fn stratify_with_seed(r: &ReflectionMatrix, seed: u64) -> Result<StratificationReport> {
    let n = r.map().n();
    let m = r.cols();
    let g = generic_rank_with_seed(r, seed)?;
    let mut candidates = special_points(n, seed);
    candidates.extend(rational_sphere_points(n, 16, seed + 1));
    let ranks: Vec<usize> = candidates.iter().map(|p| rank_at(r, p)).collect();
    let mut strata = Vec::new();
    let mut certified = true;
    for target in (0..g.rank).rev() {
        let minors = match minors_of_size(&r.vh().entries, n, target + 1) {
            Level::Empty => break,
            Level::Minors(ms) => ms,
        };
        let witnesses: Vec<Point> = candidates
            .iter()
            .zip(&ranks)
            .filter(|(_, &rk)| rk == target)
            .map(|(p, _)| p.clone())
            .take(WITNESSES_PER_STRATUM)
            .collect();
        if witnesses.is_empty() {
            if empty_on_sphere(&minors, n) {
                break;
            }
            certified = false;
            continue;
        }
        strata.push(Stratum {
            degeneracy: m - target,
            rank: target,
            minors,
            witnesses,
        });
    }
    Ok(StratificationReport {
        map: r.map().name().to_string(),
        m,
        generic_rank: g.rank,
        generic_degeneracy: g.degeneracy(),
        generic_witness: g.witness,
        strata,
        certified,
    })
}

/// The fiber `H(z) + ker V(z)` of the X-variety over `z`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XFiber {
    pub point: Point,
    pub base: Vec<ComplexRadical>,
    pub directions: Vec<Vec<ComplexRadical>>,
}

impl XFiber {
    pub fn dim(&self) -> usize {
        self.directions.len()
    }
}

pub fn x_fiber(r: &ReflectionMatrix, z: &Point) -> Result<XFiber> {
    if z.n() != r.map().n() {
        return Err(Error::VariableMismatch(z.n(), r.map().n()));
    }
    if z.is_origin() {
        return Err(Error::ZeroPoint);
    }
    let base = r.map().evaluate(z)?;
    let directions = kernel(&r.v().evaluate(z.coords()), r.cols());
    Ok(XFiber {
        point: z.clone(),
        base,
        directions,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum XClassification {
    /// `X_H` is the graph of `H`.
    Graph { certified: bool },
    /// All fibers over sphere points have dimension `s`.
    AffineBundle { s: usize, certified: bool },
    /// Fibers jump on the listed strata.
    ExceptionalFibers { generic: usize, strata: Vec<Stratum> },
}

pub fn x_classify(r: &ReflectionMatrix) -> Result<XClassification> {
    Ok(x_classify_from(&stratify(r)?))
}

pub fn x_classify_from(report: &StratificationReport) -> XClassification {
    if !report.strata.is_empty() {
        return XClassification::ExceptionalFibers {
            generic: report.generic_degeneracy,
            strata: report.strata.clone(),
        };
    }
    match report.generic_degeneracy {
        0 => XClassification::Graph {
            certified: report.certified,
        },
        s => XClassification::AffineBundle {
            s,
            certified: report.certified,
        },
    }
}
