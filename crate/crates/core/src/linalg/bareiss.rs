//! Fraction-free elimination over the polynomial ring.

use std::cmp::Reverse;

use crate::polys::{BiPoly, Monomial};

/// Outcome of Bareiss elimination with full pivoting.
#[derive(Debug, Clone)]
pub struct BareissResult {
    pub rank: usize,
    /// Original row indices in pivot order; the first `rank` span a nonsingular minor.
    pub row_order: Vec<usize>,
    /// Original column indices in pivot order.
    pub col_order: Vec<usize>,
    /// The last nonzero pivot, which equals the determinant of the pivot minor.
    pub last_pivot: BiPoly,
}

fn pivot_key(p: &BiPoly) -> (usize, u32, Reverse<Monomial>) {
    let lead = p.leading().map(|(m, _)| m.clone()).expect("nonzero");
    (p.len(), p.degree(), Reverse(lead))
}

/// Rank of a polynomial matrix over the fraction field of the ring. Every
/// division step is exact; a nonzero remainder would be a bug and panics.
pub fn bareiss(entries: &[Vec<BiPoly>], n: usize) -> BareissResult {
    let mut m: Vec<Vec<BiPoly>> = entries.to_vec();
    let rows = m.len();
    let cols = m.first().map(Vec::len).unwrap_or(0);
    let mut row_order: Vec<usize> = (0..rows).collect();
    let mut col_order: Vec<usize> = (0..cols).collect();
    let mut prev = BiPoly::one(n);
    let mut k = 0;
    while k < rows.min(cols) {
        let mut best: Option<(usize, usize)> = None;
        for i in k..rows {
            for j in k..cols {
                if m[i][j].is_zero() {
                    continue;
                }
                best = match best {
                    Some((bi, bj)) if pivot_key(&m[bi][bj]) <= pivot_key(&m[i][j]) => Some((bi, bj)),
                    _ => Some((i, j)),
                };
            }
        }
        let Some((pi, pj)) = best else {
            break;
        };
        m.swap(k, pi);
        row_order.swap(k, pi);
        for row in m.iter_mut() {
            row.swap(k, pj);
        }
        col_order.swap(k, pj);
        for i in k + 1..rows {
            for j in k + 1..cols {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("fraction-free step divides exactly");
            }
            m[i][k] = BiPoly::zero(n);
        }
        prev = m[k][k].clone();
        k += 1;
    }
    BareissResult {
        rank: k,
        row_order,
        col_order,
        last_pivot: prev,
    }
}

pub fn poly_rank(entries: &[Vec<BiPoly>], n: usize) -> usize {
    bareiss(entries, n).rank
}

/// Determinant of a square polynomial matrix.
pub fn determinant(entries: &[Vec<BiPoly>], n: usize) -> BiPoly {
    let size = entries.len();
    if size == 0 {
        return BiPoly::one(n);
    }
    if size == 1 {
        return entries[0][0].clone();
    }
    if size == 2 {
        return &(&entries[0][0] * &entries[1][1]) - &(&entries[0][1] * &entries[1][0]);
    }
    let r = bareiss(entries, n);
    if r.rank < size {
        return BiPoly::zero(n);
    }
    let sign = permutation_sign(&r.row_order) * permutation_sign(&r.col_order);
    if sign < 0 {
        -r.last_pivot
    } else {
        r.last_pivot
    }
}

fn permutation_sign(p: &[usize]) -> i32 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::ComplexRadical;

    fn z() -> BiPoly {
        BiPoly::z(2, 0)
    }
    fn w() -> BiPoly {
        BiPoly::z(2, 1)
    }
    fn k(v: i64) -> BiPoly {
        BiPoly::constant(2, ComplexRadical::from_integer(v))
    }

    #[test]
    fn ranks() {
        let m = vec![vec![z(), w()], vec![&z() * &z(), &z() * &w()]];
        assert_eq!(poly_rank(&m, 2), 1);
        let m = vec![vec![z(), w()], vec![w(), z()]];
        assert_eq!(poly_rank(&m, 2), 2);
    }

    #[test]
    fn determinants_agree_with_expansion() {
        let m = vec![
            vec![z(), k(1), w()],
            vec![k(2), w(), k(0)],
            vec![&z() * &w(), k(3), z()],
        ];
        let expected =
            &(&(&z() * &(&w() * &z())) - &(&k(1) * &(&k(2) * &z()))) + &(&w() * &(&k(6) - &(&w() * &(&z() * &w()))));
        assert_eq!(determinant(&m, 2), expected);
        let mut swapped = m.clone();
        swapped.swap(0, 1);
        assert_eq!(determinant(&swapped, 2), -expected);
    }
}
