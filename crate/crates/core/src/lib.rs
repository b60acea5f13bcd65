//! Exact computations with rational maps between spheres: reflection
//! matrices, degeneracy, X-variety fibers and infinitesimal deformations.

pub mod deformations;
pub mod degeneracy;
pub mod error;
pub mod linalg;
pub mod maps;
pub mod polys;
pub mod reflection;
pub mod scalars;

pub use error::{Error, Result};
