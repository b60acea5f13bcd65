use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::SphereMap;
use crate::error::{Error, Result};
use crate::linalg;
use crate::polys::{exponents_of_degree, multinomial, BiPoly, PolyVector};
use crate::scalars::{ComplexRadical, RadicalReal};

/// Exponents `alpha` with `|alpha| = d` in descending lexicographic order and
/// the coefficients `sqrt(multinomial(d; alpha))` of the homogeneous map.
pub fn homogeneous_coefficients(n: usize, d: u32) -> Vec<(Vec<u32>, RadicalReal)> {
    exponents_of_degree(n, d)
        .into_iter()
        .map(|a| {
            let c = multinomial(&a);
            let q = BigRational::from_integer(c.into());
            (a, RadicalReal::sqrt_rational(&q).expect("positive"))
        })
        .collect()
}

/// The homogeneous sphere map of degree `d` in `n` variables.
pub fn homogeneous_map(n: usize, d: u32) -> Result<SphereMap> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let components = homogeneous_coefficients(n, d)
        .into_iter()
        .map(|(a, c)| BiPoly::holo_monomial(&a, c.into()))
        .collect();
    SphereMap::polynomial(format!("H({n},{d})"), components)
}

pub fn identity_map(n: usize) -> Result<SphereMap> {
    Ok(homogeneous_map(n, 1)?.with_name(format!("identity({n})")))
}

/// `X^a (1 - X)^b` as coefficients in powers of `X`.
fn expand(a: u32, b: u32, len: usize) -> Vec<BigRational> {
    let mut coeffs = vec![BigRational::zero(); len];
    let mut binom = BigRational::from_integer(1.into());
    for j in 0..=b {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        coeffs[(a + j) as usize] = &binom * BigRational::from_integer(sign.into());
        binom = binom * BigRational::from_integer((b - j).into()) / BigRational::from_integer((j + 1).into());
    }
    coeffs
}

/// Exponent pairs of the group invariant map: `z^{2(l-k)+3} w^{k-1}` for
/// `k = 1..=l+1`, then `w^{2l+1}`.
pub fn group_invariant_exponents(l: u32) -> Vec<(u32, u32)> {
    let mut e: Vec<(u32, u32)> = (1..=l + 1).map(|k| (2 * (l + 1 - k) + 1, k - 1)).collect();
    e.push((0, 2 * l + 1));
    e
}

/// The squared coefficients, from the identity `|G|^2 = 1` on `|z|^2 + |w|^2 = 1`
/// rewritten as a polynomial identity in `X = |z|^2`.
pub fn group_invariant_squares(l: u32) -> Result<Vec<BigRational>> {
    let exps = group_invariant_exponents(l);
    let len = (2 * l + 2) as usize;
    let cols: Vec<Vec<BigRational>> = exps.iter().map(|&(a, b)| expand(a, b, len)).collect();
    let rows: Vec<Vec<BigRational>> = (0..len).map(|j| cols.iter().map(|c| c[j].clone()).collect()).collect();
    let mut rhs = vec![BigRational::zero(); len];
    rhs[0] = BigRational::from_integer(1.into());
    if linalg::rank(&rows) != exps.len() {
        return Err(Error::Infeasible("coefficient system is not uniquely solvable".into()));
    }
    let x =
        linalg::solve(&rows, &rhs).ok_or_else(|| Error::Infeasible("no coefficients make G a sphere map".into()))?;
    if x.iter().any(|v| v.is_negative()) {
        return Err(Error::Infeasible("a squared coefficient is negative".into()));
    }
    Ok(x)
}

/// The group invariant map `G^l : S^3 -> S^{2l+3}`.
pub fn group_invariant_map(l: u32) -> Result<SphereMap> {
    let squares = group_invariant_squares(l)?;
    let components = group_invariant_exponents(l)
        .into_iter()
        .zip(&squares)
        .map(|((a, b), sq)| {
            let c = RadicalReal::sqrt_rational(sq).map_err(Error::from)?;
            Ok(BiPoly::holo_monomial(&[a, b], c.into()))
        })
        .collect::<Result<Vec<_>>>()?;
    SphereMap::new(format!("G({l})"), PolyVector::new(components), BiPoly::one(2))
}

/// Coefficient of `z^a w^b` in component `k` of `G^l`.
pub fn group_invariant_coefficients(l: u32) -> Result<Vec<RadicalReal>> {
    group_invariant_squares(l)?
        .iter()
        .map(|q| RadicalReal::sqrt_rational(q).map_err(Error::from))
        .collect()
}

/// Appends `k` zero components.
pub fn pad_map(h: &SphereMap, k: usize) -> Result<SphereMap> {
    let mut entries = h.numerator().entries.clone();
    entries.extend(std::iter::repeat_n(BiPoly::zero(h.n()), k));
    SphereMap::new(
        format!("pad({},{k})", h.name()),
        PolyVector::new(entries),
        h.denominator().clone(),
    )
}

/// Constant unit vector `c e_1` in `C^m`, seen as a degree-zero map.
pub fn constant_map(n: usize, value: Vec<ComplexRadical>) -> Result<SphereMap> {
    SphereMap::polynomial("constant", value.into_iter().map(|c| BiPoly::constant(n, c)).collect())
}
