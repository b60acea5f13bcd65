//! Closed forms for the homogeneous sphere maps.

use crate::maps::homogeneous_coefficients;
use crate::polys::{count_monomials, BiPoly, PolyVector};
use crate::scalars::ComplexRadical;

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `K^2 + 2 K binom(n + d - 1, n)` with `K = K(n, d)`; equals `(d+1)^3` for `n = 2`.
pub fn dim_formula(n: usize, d: u32) -> usize {
    let k = count_monomials(n, d);
    k * k + 2 * k * binomial((n as u64) + d as u64 - 1, n as u64) as usize
}

/// `(z^k w^{k-j})_j` in the order of `H^k_2`.
fn hat(k: u32) -> Vec<BiPoly> {
    (0..=k)
        .map(|j| BiPoly::holo_monomial(&[k - j, j], ComplexRadical::one()))
        .collect()
}

/// The generators `N^{m,k}_{d,r}` of `hol(H^d_2)` for every `0 <= r <= d`,
/// position `(m, k)` and entry `c in {1, i}`:
/// `D (C hat^{d-r} - sum_l binom(r, l) (0_l, z^{r-l} w^l conj(C)^t hat^d, 0_{r-l}))`.
pub fn hom_deformation_basis(d: u32) -> Vec<PolyVector> {
    let size = d as usize + 1;
    let inv: Vec<ComplexRadical> = homogeneous_coefficients(2, d)
        .into_iter()
        .map(|(_, a)| ComplexRadical::real(a.inverse().expect("positive")))
        .collect();
    let top = hat(d);
    let mut out = Vec::new();
    for r in 0..=d {
        let low = hat(d - r);
        for m in 0..size {
            for k in 0..low.len() {
                for c in [ComplexRadical::one(), ComplexRadical::i()] {
                    let mut v = vec![BiPoly::zero(2); size];
                    v[m] = low[k].scale(&c);
                    let tail = top[m].scale(&c.conj());
                    for l in 0..=r {
                        let factor = BiPoly::holo_monomial(
                            &[r - l, l],
                            ComplexRadical::from_integer(binomial(r as u64, l as u64) as i64),
                        );
                        let pos = l as usize + k;
                        v[pos] = &v[pos] - &(&factor * &tail);
                    }
                    let v = v.iter().zip(&inv).map(|(p, a)| p.scale(a)).collect();
                    out.push(PolyVector::new(v));
                }
            }
        }
    }
    out
}

/// `phi' o N o phi`: swap `z` and `w`, then reverse the components.
pub fn swap_symmetry(x: &PolyVector) -> PolyVector {
    let swapped: Vec<BiPoly> = x
        .entries
        .iter()
        .map(|p| {
            BiPoly::from_terms(
                2,
                p.terms().iter().map(|(mono, c)| {
                    let mut m = mono.clone();
                    m.holo.swap(0, 1);
                    m.anti.swap(0, 1);
                    (m, c.clone())
                }),
            )
        })
        .rev()
        .collect();
    PolyVector::new(swapped)
}
