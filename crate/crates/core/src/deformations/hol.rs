//! The space `hol(H)` of infinitesimal deformations.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use crate::degeneracy::classify_map;
use crate::error::Result;
use crate::linalg::SparseEliminator;
use crate::maps::SphereMap;
use crate::polys::{exponents_up_to, norm_power_terms, BiPoly, Monomial, PolyVector};
use crate::scalars::{ComplexRadical, RadicalReal};

use super::aut::{aut_basis, AutBasis};
use super::coords::real_rank;

/// `Re(X' . conj(P)) = 0` on the sphere, i.e. `X = X'/Q` lies in `hol(H)`.
pub fn in_hol(h: &SphereMap, x: &PolyVector) -> bool {
    in_hol_scaled(h, x, 1)
}

/// Membership of `X = N / Q^k`: `Re(N . conj(P) conj(Q)^(k-1))` vanishes on the sphere.
pub fn in_hol_scaled(h: &SphereMap, numerator: &PolyVector, k: u32) -> bool {
    if numerator.len() != h.m() || numerator.n() != h.n() {
        return false;
    }
    let mut f = numerator.dot(&h.numerator().conjugate());
    if k > 1 {
        f = &f * &h.denominator().conjugate().pow(k - 1);
    }
    (&f + &f.conjugate()).vanishes_on_sphere()
}

#[derive(Debug, Clone, Serialize)]
pub struct DeformationBasis {
    pub map: String,
    pub n: usize,
    pub m: usize,
    pub degree: u32,
    /// Numerators `X'` of degree at most `2d`; the deformations are `X'/Q`.
    pub basis: Vec<PolyVector>,
    pub real_dimension: usize,
    /// Dimension of the trivial deformations inside the solution space.
    pub aut_dimension: usize,
    /// Dimension of all trivial deformations. Exceeds `aut_dimension` for
    /// rational maps with trivial deformations `X` such that `Q X` is not a
    /// polynomial.
    pub aut_total_dimension: usize,
    pub nontrivial_dimension: usize,
    /// Set for holomorphically degenerate maps, whose `hol` is infinite
    /// dimensional; the basis then only covers degree at most `2d`.
    pub truncated: bool,
    pub stabilizer_dimension: usize,
}

impl DeformationBasis {
    /// `None` when the question does not apply (degenerate maps).
    pub fn rigid(&self) -> Option<bool> {
        (!self.truncated).then_some(self.nontrivial_dimension == 0)
    }

    pub fn dimension_label(&self) -> String {
        if self.truncated {
            format!(
                "truncated; infinite (degree <= {} part has dimension {})",
                2 * self.degree,
                self.real_dimension
            )
        } else {
            self.real_dimension.to_string()
        }
    }
}

/// Real basis of the numerators `X'` of degree at most `2d` with
/// `Re(X' . conj(P)) = 0` on the sphere.
///
/// For an unknown coefficient `u` of `z^beta` in component `j`, the
/// contribution `u z^beta conj(P_j) + conj(u) zbar^beta P_j` is split by
/// Fourier degree. Degrees `s < 0` mirror `s > 0` and are skipped; each
/// remaining piece is homogenized to the largest holomorphic degree `A_s`
/// that occurs, after which vanishing on the sphere means every coefficient
/// is zero. Real and imaginary parts of those coefficients form the rows.
pub fn hol_numerators(h: &SphereMap) -> Vec<PolyVector> {
    let n = h.n();
    let m = h.m();
    let bound = 2 * h.degree();
    let betas = exponents_up_to(n, bound);
    let nb = betas.len();

    // (column of the real part, beta, term of P_j)
    let i = ComplexRadical::i();
    let mut contributions: Vec<(usize, Monomial, ComplexRadical)> = Vec::new();
    for (j, p) in h.numerator().entries.iter().enumerate() {
        for (b, beta) in betas.iter().enumerate() {
            let col = 2 * (j * nb + b);
            let bdeg: u32 = beta.iter().sum();
            for (gm, c) in p.terms() {
                let gamma = &gm.holo;
                let gdeg = gm.holo_degree();
                // u z^beta conj(c) zbar^gamma
                if bdeg >= gdeg {
                    let mono = Monomial::new(beta.clone(), gamma.clone());
                    let w = c.conj();
                    contributions.push((col + 1, mono.clone(), &i * &w));
                    contributions.push((col, mono, w));
                }
                // conj(u) c z^gamma zbar^beta
                if gdeg >= bdeg {
                    let mono = Monomial::new(gamma.clone(), beta.clone());
                    contributions.push((col + 1, mono.clone(), -(&i * c)));
                    contributions.push((col, mono, c.clone()));
                }
            }
        }
    }
    let mut top: BTreeMap<i64, u32> = BTreeMap::new();
    for (_, mono, _) in &contributions {
        let e = top.entry(mono.fourier_degree()).or_insert(0);
        *e = (*e).max(mono.holo_degree());
    }
    let mut norm_cache: HashMap<u32, Vec<(Vec<u32>, RadicalReal)>> = HashMap::new();
    let mut row_ids: HashMap<Monomial, usize> = HashMap::new();
    let mut rows: Vec<BTreeMap<usize, ComplexRadical>> = Vec::new();
    for (col, mono, w) in contributions {
        let lift = top[&mono.fourier_degree()] - mono.holo_degree();
        let terms = norm_cache.entry(lift).or_insert_with(|| norm_power_terms(n, lift));
        for (delta, mult) in terms.iter() {
            let shift = Monomial::new(delta.clone(), delta.clone());
            let target = mono.mul(&shift);
            let next = rows.len();
            let r = *row_ids.entry(target).or_insert(next);
            if r == next {
                rows.push(BTreeMap::new());
            }
            let v = w.scale(mult);
            let slot = rows[r].entry(col).or_insert_with(ComplexRadical::zero);
            *slot = &*slot + &v;
        }
    }
    let ncols = 2 * m * nb;
    let mut elim = SparseEliminator::<RadicalReal>::new(ncols);
    for row in rows {
        let re: Vec<(usize, RadicalReal)> = row.iter().map(|(c, v)| (*c, v.re.clone())).collect();
        let im: Vec<(usize, RadicalReal)> = row.into_iter().map(|(c, v)| (c, v.im)).collect();
        elim.insert(re);
        elim.insert(im);
    }
    elim.kernel()
        .into_iter()
        .map(|x| {
            let entries = (0..m)
                .map(|j| {
                    BiPoly::from_terms(
                        n,
                        betas.iter().enumerate().filter_map(|(b, beta)| {
                            let col = 2 * (j * nb + b);
                            let c = ComplexRadical::new(x[col].clone(), x[col + 1].clone());
                            (!c.is_zero()).then(|| (Monomial::holomorphic(beta), c))
                        }),
                    )
                })
                .collect();
            PolyVector::new(entries)
        })
        .collect()
}

/// `hol(H)` with its trivial part.
pub fn solve_hol(h: &SphereMap) -> Result<DeformationBasis> {
    let class = classify_map(h)?;
    let basis = hol_numerators(h);
    let aut = aut_basis(h);
    Ok(assemble(h, basis, &aut, !class.holomorphically_nondegenerate))
}

fn assemble(h: &SphereMap, basis: Vec<PolyVector>, aut: &AutBasis, truncated: bool) -> DeformationBasis {
    let q = h.denominator();
    // Compare X'/Q with N/Q^2 through Q X' and N.
    let scaled: Vec<PolyVector> = basis.iter().map(|x| x.mul_poly(q)).collect();
    let both: Vec<PolyVector> = scaled.iter().chain(&aut.generators).cloned().collect();
    let real_dimension = basis.len();
    let aut_dimension = real_dimension + aut.real_dimension - real_rank(&both);
    DeformationBasis {
        map: h.name().to_string(),
        n: h.n(),
        m: h.m(),
        degree: h.degree(),
        basis,
        real_dimension,
        aut_dimension,
        aut_total_dimension: aut.real_dimension,
        nontrivial_dimension: real_dimension - aut_dimension,
        truncated,
        stabilizer_dimension: aut.stabilizer.len(),
    }
}
