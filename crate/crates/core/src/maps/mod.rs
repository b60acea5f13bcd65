//! Rational sphere maps and the constructions that produce them.

mod constructors;
mod examples;
mod family;
mod operations;
mod sphere_map;

pub use constructors::{
    constant_map, group_invariant_coefficients, group_invariant_exponents, group_invariant_map,
    group_invariant_squares, homogeneous_coefficients, homogeneous_map, identity_map, pad_map,
};
pub use examples::{isolated_point_default, isolated_point_map, pencil_map, quartic_map, whitney_map};
pub use family::{family_automorphism, family_derivative, family_map, family_symbolic};
pub use operations::{
    apply_unitary, is_unitary, juxtapose, juxtaposition_witness, rotation_block, tensor_deformation_numerator,
    tensor_map, SubspaceSelector,
};
pub use sphere_map::{MapJson, SphereMap, ValidationReport};
