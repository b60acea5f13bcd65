//! The one-parameter family `F^k_s` of rational maps through `H(2, 2k+1)`.

use num_rational::BigRational;
use num_traits::One;

use super::SphereMap;
use crate::error::{Error, Result};
use crate::polys::{BiPoly, PolyVector, Var};
use crate::scalars::{ComplexRadical, RadicalReal};

fn sqrt_binom(n: u32, k: u32) -> RadicalReal {
    let mut b = BigRational::one();
    for j in 0..k {
        b = b * BigRational::from_integer((n - j).into()) / BigRational::from_integer((j + 1).into());
    }
    RadicalReal::sqrt_rational(&b).expect("positive")
}

/// Numerator components and denominator of `F^k_s` as polynomials in
/// `(z, w, s)`, holomorphic in all three.
pub fn family_symbolic(k: u32) -> (PolyVector, BiPoly) {
    let n = 3;
    let p = |s: &str| BiPoly::parse(n, s).expect("well-formed");
    let q = p("2 + z3*(z3 - 2)*(z1 + 1)");
    let t1 = p("z1 - 1 + (1 - z3)^2*(z1 + 1)");
    let t2 = p("2*(1 - z3)*z2");
    let d = 2 * k + 1;
    let z = BiPoly::z(n, 0);
    let w = BiPoly::z(n, 1);
    let mut comps = Vec::new();
    for l in 0..=d {
        let c: ComplexRadical = sqrt_binom(d, l).into();
        let comp = if l == k {
            &(&z.pow(k) * &w.pow(k)) * &t1
        } else if l == k + 1 {
            &(&z.pow(k) * &w.pow(k)) * &t2
        } else {
            &(&z.pow(d - l) * &w.pow(l)) * &q
        };
        comps.push(comp.scale(&c));
    }
    (PolyVector::new(comps), q)
}

fn specialize(v: &BiPoly, s: &ComplexRadical) -> BiPoly {
    v.substitute_holo(2, s)
}

/// `F^k_s`. Rejects `s = 1`, where the underlying automorphism degenerates.
pub fn family_map(k: u32, s: &BigRational) -> Result<SphereMap> {
    if k == 0 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    if s.is_one() {
        return Err(Error::InvalidArgument("s = 1 is not admissible".into()));
    }
    let (num, q) = family_symbolic(k);
    let sv = ComplexRadical::from_rational(s.clone());
    let numerator = PolyVector::new(num.entries.iter().map(|p| specialize(p, &sv)).collect());
    SphereMap::new(format!("F({k}, s={s})"), numerator, specialize(&q, &sv))
}

/// `d/ds F^k_s` at `s = 0`, a polynomial vector in `(z, w)`.
pub fn family_derivative(k: u32) -> PolyVector {
    let (num, q) = family_symbolic(k);
    let zero = ComplexRadical::zero();
    let ds = Var::Z(2);
    let q0 = specialize(&q, &zero);
    let dq0 = specialize(&q.differentiate(ds), &zero);
    let q0c = q0.as_constant().expect("constant at s = 0");
    let inv = (&q0c * &q0c).inverse().expect("nonzero");
    PolyVector::new(
        num.entries
            .iter()
            .map(|p| {
                let p0 = specialize(p, &zero);
                let dp0 = specialize(&p.differentiate(ds), &zero);
                (&(&dp0 * &q0) - &(&p0 * &dq0)).scale(&inv)
            })
            .collect(),
    )
}

/// The automorphism `T_s` of the sphere as a map into `C^2`.
pub fn family_automorphism(s: &BigRational) -> Result<SphereMap> {
    let n = 3;
    let p = |t: &str| BiPoly::parse(n, t).expect("well-formed");
    let sv = ComplexRadical::from_rational(s.clone());
    let comps = [p("z1 - 1 + (1 - z3)^2*(z1 + 1)"), p("2*(1 - z3)*z2")]
        .iter()
        .map(|c| specialize(c, &sv))
        .collect();
    SphereMap::new(
        format!("T(s={s})"),
        PolyVector::new(comps),
        specialize(&p("2 + z3*(z3 - 2)*(z1 + 1)"), &sv),
    )
}
