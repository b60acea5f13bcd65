//! Moving deformations between maps.

use crate::error::{Error, Result};
use crate::maps::{tensor_deformation_numerator, SphereMap, SubspaceSelector};
use crate::polys::PolyVector;
use crate::reflection::ReflectionMatrix;

use super::hol::in_hol;

/// The image `V X = V_H X'` of the deformation `X = X'/Q`, a polynomial
/// vector that lies in `hol(H_n^d)` exactly when `X` lies in `hol(H)`.
pub fn push_through_v(r: &ReflectionMatrix, x: &PolyVector) -> PolyVector {
    r.apply_vh(x)
}

/// `T_{(A,G)} X = (X_A (x) G) + X_{A-perp}` as a numerator over the
/// denominator of `E_{(A,G)} H`.
pub fn tensor_deformation(x: &PolyVector, h: &SphereMap, a: &SubspaceSelector, g: &SphereMap) -> Result<PolyVector> {
    if !in_hol(h, x) {
        return Err(Error::NotMember);
    }
    tensor_deformation_numerator(x, a, g)
}
