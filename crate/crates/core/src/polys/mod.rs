//! Polynomials in `z` and `zbar`, and the predicates tied to the unit sphere.

mod bipoly;
mod monomial;
mod parse;
mod points;
mod vector;

pub use bipoly::{count_monomials, multinomial, norm_power, norm_power_terms, BiPoly, TermJson};
pub use monomial::{exponents_of_degree, exponents_up_to, Monomial, Var};
pub use parse::{parse_list, split_top_level};
pub use points::{rational_sphere_points, special_points, stereographic, Point, PointGenerator};
pub use vector::{PolyMatrix, PolyVector};
