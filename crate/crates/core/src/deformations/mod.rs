//! Infinitesimal deformations of sphere maps.

mod aut;
mod coords;
mod hol;
mod homogeneous;
mod transport;

pub use aut::{
    aut_basis, generators_are_members, is_trivial_deformation, is_trivial_with, push_forward, sphere_automorphisms,
    AutBasis,
};
pub use coords::real_rank;
pub use hol::{hol_numerators, in_hol, in_hol_scaled, solve_hol, DeformationBasis};
pub use homogeneous::{dim_formula, hom_deformation_basis, swap_symmetry};
pub use transport::{push_through_v, tensor_deformation};

use crate::error::{Error, Result};
use crate::maps::SphereMap;

/// `hol(H) = aut(H)`. Degenerate maps are rejected: they are never rigid.
pub fn is_infinitesimally_rigid(h: &SphereMap) -> Result<bool> {
    let b = solve_hol(h)?;
    match b.rigid() {
        Some(r) => Ok(r),
        None => Err(Error::Degenerate),
    }
}
