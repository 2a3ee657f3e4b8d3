//! Polynomials, matrices and Laurent polynomials over exact scalars.

pub mod laurent;
pub mod matrix;
pub mod poly;

pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use poly::{
    charpoly_to_power_sums, companion_matrix, find_twist_scalars, find_twist_scalars_split,
    newton_to_charpoly, poly_mul, TwistScalars, UniPoly,
};
