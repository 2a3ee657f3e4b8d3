//! The split Clifford algebra of rank `2n+1`, its spin module and GSpin.

mod context;
mod multivector;
mod spin;
mod torus;

pub use context::{CliffordContext, IntTerms, MAX_N};
pub use multivector::{parse_index_list, GoImage, Multivector, MultivectorJson};
pub use spin::{beta_form, beta_gram, spin_action, spin_matrix, SpinVector};
pub use torus::{
    hyperbolic_idempotent, sign_change_rep, torus_element, transposition_rep, weyl_representative,
};

/// `a * b`, failing when the contexts differ.
pub fn cliff_mul<S: crate::scalar::Scalar>(
    a: &Multivector<S>,
    b: &Multivector<S>,
) -> crate::error::Result<Multivector<S>> {
    a.mul(b)
}
