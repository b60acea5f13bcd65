//! Exact scalars: rationals, the real field generated by square roots of
//! naturals, and complex numbers over it.

mod complex;
mod factor;
mod field;
mod radical;

pub use complex::ComplexRadical;
pub use factor::{is_prime, square_free_parts};
pub use field::Field;
pub use num_rational::BigRational as Rational;
pub use radical::{rat, RadicalReal, Sign, RADICAND_CAP};
