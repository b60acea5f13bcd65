//! Real coordinates of polynomial vectors, for exact real-linear algebra.

use std::collections::HashMap;

use crate::linalg::SparseEliminator;
use crate::polys::{Monomial, PolyVector};
use crate::scalars::RadicalReal;

/// Assigns two real columns (real and imaginary part) to every
/// `(component, monomial)` pair seen so far.
#[derive(Debug, Default)]
pub(crate) struct RealCoords {
    index: HashMap<(usize, Monomial), usize>,
}

impl RealCoords {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn coords(&mut self, v: &PolyVector) -> Vec<(usize, RadicalReal)> {
        let mut out = Vec::new();
        for (j, p) in v.entries.iter().enumerate() {
            for (m, c) in p.terms() {
                let next = self.index.len();
                let k = *self.index.entry((j, m.clone())).or_insert(next);
                if !c.re.is_zero() {
                    out.push((2 * k, c.re.clone()));
                }
                if !c.im.is_zero() {
                    out.push((2 * k + 1, c.im.clone()));
                }
            }
        }
        out
    }

    pub fn len(&self) -> usize {
        2 * self.index.len()
    }
}

/// Real dimension of the span of `vs`.
pub fn real_rank(vs: &[PolyVector]) -> usize {
    let mut rc = RealCoords::new();
    let rows: Vec<_> = vs.iter().map(|v| rc.coords(v)).collect();
    let mut e = SparseEliminator::new(rc.len());
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Real dependencies among `vs`: a basis of `{c in R^k : sum c_i v_i = 0}`.
pub(crate) fn real_relations(vs: &[PolyVector]) -> Vec<Vec<RadicalReal>> {
    let mut rc = RealCoords::new();
    let cols: Vec<_> = vs.iter().map(|v| rc.coords(v)).collect();
    let mut rows: Vec<Vec<(usize, RadicalReal)>> = vec![Vec::new(); rc.len()];
    for (g, col) in cols.into_iter().enumerate() {
        for (r, v) in col {
            rows[r].push((g, v));
        }
    }
    let mut e = SparseEliminator::new(vs.len());
    for r in rows {
        e.insert(r);
    }
    e.kernel()
}

/// Real span of a fixed family with a membership test.
pub(crate) struct RealSpan {
    coords: RealCoords,
    elim: SparseEliminator<RadicalReal>,
}

impl RealSpan {
    pub fn new(vs: &[PolyVector]) -> Self {
        let mut coords = RealCoords::new();
        let rows: Vec<_> = vs.iter().map(|v| coords.coords(v)).collect();
        let mut elim = SparseEliminator::new(coords.len());
        for r in rows {
            elim.insert(r);
        }
        Self { coords, elim }
    }

    pub fn contains(&mut self, v: &PolyVector) -> bool {
        let before = self.coords.len();
        let row = self.coords.coords(v);
        // A coordinate the span has never used must carry a zero coefficient.
        if row.iter().any(|(c, _)| *c >= before) {
            return false;
        }
        self.elim.contains(row)
    }
}
