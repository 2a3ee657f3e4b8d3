//! Exact computations on the dual side of `GSp_2n`: the Clifford algebra of the
//! split `(2n+1)`-dimensional quadratic space, `GSpin_{2n+1}` conjugacy through
//! torus charts, unramified Satake parameters, and weight predicates.
//!
//! Everything is generic over a [`Scalar`] field; [`Rational`] and
//! [`Quadratic`] are provided.

pub mod algebra;
pub mod clifford;
pub mod conjugacy;
pub mod error;
pub mod g2;
pub mod quadratic;
pub mod rootdata;
pub mod satake;
pub mod scalar;
pub mod weights;

pub use error::{Error, Result};
pub use quadratic::Quadratic;
pub use scalar::{Rational, Scalar};

pub type Multivector = clifford::Multivector<Rational>;
pub type QuadMultivector = clifford::Multivector<Quadratic>;
pub type TorusPoint = conjugacy::GSpinTorusPoint<Rational>;
pub type QuadTorusPoint = conjugacy::GSpinTorusPoint<Quadratic>;
pub type SatakeParam = satake::SatakeParam<Rational>;
pub type QuadSatakeParam = satake::SatakeParam<Quadratic>;
pub type Poly = algebra::UniPoly<Rational>;
pub type RationalMatrix = algebra::Matrix<Rational>;
pub type G2Point = g2::G2TorusPoint<Rational>;
