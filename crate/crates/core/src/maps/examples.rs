//! Small named maps used throughout the tests and the catalog.

use crate::error::{Error, Result};
use crate::polys::{BiPoly, PolyVector};
use crate::scalars::{ComplexRadical, RadicalReal};

use super::SphereMap;

/// `(z, zw, w^2)`.
pub fn whitney_map() -> SphereMap {
    SphereMap::parse_polynomial("whitney", 2, "(z, z*w, w^2)").expect("valid literal")
}

/// `(z^4, z^3 w, sqrt(3) z w, w^3)`, degenerate exactly on `{w = 0}`.
pub fn quartic_map() -> SphereMap {
    SphereMap::parse_polynomial("quartic", 2, "(z^4, z^3*w, sqrt(3)*z*w, w^3)").expect("valid literal")
}

/// `((a z - b z w) z, (a z - b z w) w, conj(b) z + conj(a) z w, w^2)` for
/// `|a|^2 + |b|^2 = 1`.
pub fn isolated_point_map(a: &ComplexRadical, b: &ComplexRadical) -> Result<SphereMap> {
    if !(a.norm_sq() + b.norm_sq()).is_one() {
        return Err(Error::InvalidArgument("need |a|^2 + |b|^2 = 1".into()));
    }
    let z = BiPoly::z(2, 0);
    let w = BiPoly::z(2, 1);
    let zw = &z * &w;
    let f = &z.scale(a) - &zw.scale(b);
    let comps = vec![&f * &z, &f * &w, &z.scale(&b.conj()) + &zw.scale(&a.conj()), &w * &w];
    SphereMap::new(format!("isolated({a},{b})"), PolyVector::new(comps), BiPoly::one(2))
}

/// The default instance `a = b = 1/sqrt(2)`.
pub fn isolated_point_default() -> SphereMap {
    let a: ComplexRadical = RadicalReal::sqrt_rational(&crate::scalars::rat(1, 2))
        .expect("rational")
        .into();
    isolated_point_map(&a, &a).expect("unit").with_name("isolated")
}

/// `(z, c w, s z w, s w^2)` for `c^2 + s^2 = 1`.
pub fn pencil_map(c: &RadicalReal, s: &RadicalReal) -> Result<SphereMap> {
    if !(c * c + s * s).is_one() {
        return Err(Error::InvalidArgument("need cos^2 + sin^2 = 1".into()));
    }
    let (cc, sc): (ComplexRadical, ComplexRadical) = (c.clone().into(), s.clone().into());
    let z = BiPoly::z(2, 0);
    let w = BiPoly::z(2, 1);
    let comps = vec![z.clone(), w.scale(&cc), (&z * &w).scale(&sc), (&w * &w).scale(&sc)];
    SphereMap::new(format!("pencil({c},{s})"), PolyVector::new(comps), BiPoly::one(2))
}
