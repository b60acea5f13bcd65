//! Generic rank of the reflection matrix and holomorphic degeneracy.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{bareiss, determinant};
use crate::maps::SphereMap;
use crate::polys::{count_monomials, rational_sphere_points, special_points, BiPoly, Monomial, Point, PolyVector};
use crate::reflection::{build_reflection, ReflectionMatrix};

use super::pointwise::rank_at;

/// Seed of the deterministic witness-point search.
pub const WITNESS_SEED: u64 = 17;
const GENERIC_CANDIDATES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GenericRank {
    pub rank: usize,
    pub m: usize,
    /// A sphere point where `V` attains the rank.
    pub witness: Point,
}

impl GenericRank {
    pub fn degeneracy(&self) -> usize {
        self.m - self.rank
    }
}

/// Candidate sphere points: generic ones first, then coordinate subspaces.
pub(crate) fn candidate_points(n: usize, seed: u64) -> Vec<Point> {
    let mut pts = rational_sphere_points(n, GENERIC_CANDIDATES, seed);
    pts.extend(special_points(n, seed));
    pts
}

/// Rank of `V` over the field of rational functions, certified at a sphere point.
pub fn generic_rank(r: &ReflectionMatrix) -> Result<GenericRank> {
    generic_rank_with_seed(r, WITNESS_SEED)
}

pub fn generic_rank_with_seed(r: &ReflectionMatrix, seed: u64) -> Result<GenericRank> {
    let n = r.map().n();
    // V = Q V_H and Q has no zeros on the sphere, so V_H has the same rank.
    let rank = bareiss(&r.vh().entries, n).rank;
    candidate_points(n, seed)
        .into_iter()
        .find(|p| rank_at(r, p) == rank)
        .map(|witness| GenericRank {
            rank,
            m: r.cols(),
            witness,
        })
        .ok_or_else(|| Error::Certification(format!("rank {rank} not attained at any candidate point")))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub map: String,
    pub n: usize,
    pub m: usize,
    pub degree: u32,
    /// `K(n, d)`, the number of rows of `V`.
    pub rows: usize,
    /// `K(n, d) < m`, which forces degeneracy without any elimination.
    pub shortcut: bool,
    pub holomorphically_nondegenerate: bool,
    /// Absent when the shortcut decided.
    pub generic_rank: Option<usize>,
    pub generic_degeneracy: Option<usize>,
    pub degeneracy_lower_bound: usize,
    pub witness_point: Option<Point>,
}

pub fn classify_map(h: &SphereMap) -> Result<Classification> {
    let rows = count_monomials(h.n(), h.degree());
    let m = h.m();
    let mut c = Classification {
        map: h.name().to_string(),
        n: h.n(),
        m,
        degree: h.degree(),
        rows,
        shortcut: rows < m,
        holomorphically_nondegenerate: false,
        generic_rank: None,
        generic_degeneracy: None,
        degeneracy_lower_bound: m.saturating_sub(rows),
        witness_point: None,
    };
    if c.shortcut {
        return Ok(c);
    }
    let g = generic_rank(&build_reflection(h)?)?;
    c.holomorphically_nondegenerate = g.rank == m;
    c.generic_degeneracy = Some(g.degeneracy());
    c.degeneracy_lower_bound = g.degeneracy();
    c.generic_rank = Some(g.rank);
    c.witness_point = Some(g.witness);
    Ok(c)
}

/// A nonzero holomorphic `Y` with `V Y = 0`, when `V` is generically rank deficient.
///
/// Cramer's rule on a nonsingular pivot minor of `V_H` gives the kernel vector
/// with one free coordinate, already cleared of denominators.
pub fn degeneracy_witness(r: &ReflectionMatrix) -> Result<Option<PolyVector>> {
    let n = r.map().n();
    let vh = &r.vh().entries;
    let br = bareiss(vh, n);
    let m = r.cols();
    if br.rank == m {
        return Ok(None);
    }
    let rows = &br.row_order[..br.rank];
    let cols = &br.col_order[..br.rank];
    let free = br.col_order[br.rank];
    let minor: Vec<Vec<BiPoly>> = rows
        .iter()
        .map(|&i| cols.iter().map(|&j| vh[i][j].clone()).collect())
        .collect();
    let mut y = vec![BiPoly::zero(n); m];
    y[free] = determinant(&minor, n);
    for (b, &c) in cols.iter().enumerate() {
        let mut replaced = minor.clone();
        for (a, &i) in rows.iter().enumerate() {
            replaced[a][b] = -vh[i][free].clone();
        }
        y[c] = determinant(&replaced, n);
    }
    let y = normalize(PolyVector::new(y));
    if !r.vh().mul_vec(&y).is_zero() {
        return Err(Error::IdentityFailure("witness is not in the kernel of V".into()));
    }
    if !y.dot(&r.map().numerator().conjugate()).vanishes_on_sphere() {
        return Err(Error::IdentityFailure("witness does not annihilate conj(H)".into()));
    }
    Ok(Some(y))
}

/// Strips the common monomial factor and makes the first nonzero entry's
/// leading coefficient one.
fn normalize(y: PolyVector) -> PolyVector {
    let n = y.n();
    let content = y
        .entries
        .iter()
        .filter(|e| !e.is_zero())
        .map(BiPoly::monomial_content)
        .reduce(|a, b| a.gcd(&b))
        .unwrap_or_else(|| Monomial::one(n));
    let y = PolyVector::new(y.entries.iter().map(|e| e.div_monomial(&content)).collect());
    let lead = y
        .entries
        .iter()
        .find_map(|e| e.leading().map(|(_, c)| c.clone()))
        .expect("nonzero witness");
    y.scale(&lead.inverse().expect("nonzero"))
}
