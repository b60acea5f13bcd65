use std::collections::{BTreeMap, HashMap};

use crate::scalars::Field;

/// Incremental sparse Gaussian elimination.
///
/// Pivot rows are kept normalized (pivot entry one) and reduced against all
/// earlier pivots, so back substitution in reverse insertion order yields
/// kernel vectors.
#[derive(Debug, Clone)]
pub struct SparseEliminator<F: Field> {
    ncols: usize,
    rows: Vec<(usize, Vec<(usize, F)>)>,
    pivot_index: HashMap<usize, usize>,
}

impl<F: Field> SparseEliminator<F> {
    pub fn new(ncols: usize) -> Self {
        Self {
            ncols,
            rows: Vec::new(),
            pivot_index: HashMap::new(),
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows.iter().map(|(c, _)| *c).collect()
    }

    fn reduce(&self, mut row: BTreeMap<usize, F>) -> BTreeMap<usize, F> {
        loop {
            let next = row.keys().filter_map(|c| self.pivot_index.get(c).copied()).min();
            let Some(k) = next else {
                return row;
            };
            let (pc, prow) = &self.rows[k];
            let f = row.remove(pc).expect("pivot column present");
            for (c, v) in prow {
                if c == pc {
                    continue;
                }
                let t = f.times(v);
                match row.get_mut(c) {
                    Some(e) => {
                        let nv = e.minus(&t);
                        if nv.is_zero() {
                            row.remove(c);
                        } else {
                            *e = nv;
                        }
                    }
                    None => {
                        row.insert(*c, t.negated());
                    }
                }
            }
        }
    }

    fn to_map(row: impl IntoIterator<Item = (usize, F)>) -> BTreeMap<usize, F> {
        let mut map = BTreeMap::new();
        for (c, v) in row {
            if v.is_zero() {
                continue;
            }
            let nv = match map.remove(&c) {
                Some(old) => F::plus(&old, &v),
                None => v,
            };
            if !nv.is_zero() {
                map.insert(c, nv);
            }
        }
        map
    }

    /// Adds a row; returns true when it was independent of the previous ones.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, F)>) -> bool {
        let reduced = self.reduce(Self::to_map(row));
        let Some((&pc, _)) = reduced.iter().min_by_key(|(c, v)| (v.weight(), **c)) else {
            return false;
        };
        let inv = reduced[&pc].recip();
        let normalized: Vec<(usize, F)> = reduced
            .into_iter()
            .map(|(c, v)| (c, if c == pc { F::one() } else { v.times(&inv) }))
            .collect();
        self.pivot_index.insert(pc, self.rows.len());
        self.rows.push((pc, normalized));
        true
    }

    /// True iff the row lies in the span of the inserted rows.
    pub fn contains(&self, row: impl IntoIterator<Item = (usize, F)>) -> bool {
        self.reduce(Self::to_map(row)).is_empty()
    }

    /// A basis of the null space of the inserted rows, as dense vectors.
    pub fn kernel(&self) -> Vec<Vec<F>> {
        let free: Vec<usize> = (0..self.ncols).filter(|c| !self.pivot_index.contains_key(c)).collect();
        free.iter()
            .map(|&f| {
                let mut x = vec![F::zero(); self.ncols];
                x[f] = F::one();
                for (pc, prow) in self.rows.iter().rev() {
                    let mut acc = F::zero();
                    for (c, v) in prow {
                        if c != pc && !x[*c].is_zero() {
                            acc = acc.plus(&v.times(&x[*c]));
                        }
                    }
                    x[*pc] = acc.negated();
                }
                x
            })
            .collect()
    }
}

/// Rank of a family of sparse vectors.
pub fn sparse_rank<F: Field>(ncols: usize, vectors: &[Vec<(usize, F)>]) -> usize {
    let mut e = SparseEliminator::new(ncols);
    for v in vectors {
        e.insert(v.iter().cloned());
    }
    e.rank()
}
