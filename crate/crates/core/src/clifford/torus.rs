//! Torus elements and Weyl-group representatives inside GSpin.

use std::sync::Arc;

use super::context::CliffordContext;
use super::multivector::Multivector;
use crate::error::{Error, Result};
use crate::rootdata::WeylElement;
use crate::scalar::{require_common_field, Scalar};

/// Hyperbolic idempotent `f_i = e_i e_{2n-i}`; it acts on `Λ•W` as the
/// projection onto wedges containing `e_i`.
pub fn hyperbolic_idempotent<S: Scalar>(ctx: &Arc<CliffordContext>, i: usize) -> Multivector<S> {
    assert!(i < ctx.n());
    Multivector::monomial(ctx, (1 << i) | (1 << ctx.partner(i)), S::one())
}

/// `c * prod_i (f_i' + a_i^{-1} f_i)` with `f_i' = 1 - f_i`.
///
/// The spin eigenvalue on `e_S` is `c * prod_{i in S} a_i^{-1}` and the
/// spinor norm is `c^2 / (a_1 ... a_n)`.
pub fn torus_element<S: Scalar>(
    ctx: &Arc<CliffordContext>,
    c: &S,
    a: &[S],
) -> Result<Multivector<S>> {
    if a.len() != ctx.n() {
        return Err(Error::Argument(format!(
            "expected {} torus coordinates, got {}",
            ctx.n(),
            a.len()
        )));
    }
    if c.is_zero() || a.iter().any(|x| x.is_zero()) {
        return Err(Error::Argument("torus coordinates must be nonzero".into()));
    }
    require_common_field(std::iter::once(c).chain(a))?;
    let one = Multivector::one(ctx);
    let mut x = Multivector::scalar(ctx, c.clone());
    for (i, ai) in a.iter().enumerate() {
        let f = hyperbolic_idempotent::<S>(ctx, i);
        let factor = one.add(&f.scale(&(ai.recip() - S::one())))?;
        x = x.mul(&factor)?;
    }
    Ok(x)
}

/// Lift of the sign change `a_i -> a_i^{-1}`: `(e_i + e_{2n-i}) e_n`.
pub fn sign_change_rep<S: Scalar>(ctx: &Arc<CliffordContext>, i: usize) -> Multivector<S> {
    let u = Multivector::generator(ctx, i)
        .add(&Multivector::generator(ctx, ctx.partner(i)))
        .unwrap();
    u.mul_same(&Multivector::generator(ctx, ctx.middle()))
}

/// Lift of the transposition of torus coordinates `i` and `j`: the product
/// of the reflections in `(e_i + e_i') - (e_j + e_j')` and
/// `(e_i - e_i') - (e_j - e_j')`.
pub fn transposition_rep<S: Scalar>(
    ctx: &Arc<CliffordContext>,
    i: usize,
    j: usize,
) -> Multivector<S> {
    let g = |k: usize| Multivector::<S>::generator(ctx, k);
    let (pi, pj) = (ctx.partner(i), ctx.partner(j));
    let r1 = g(i)
        .add(&g(pi))
        .unwrap()
        .sub(&g(j).add(&g(pj)).unwrap())
        .unwrap();
    let r2 = g(i)
        .sub(&g(pi))
        .unwrap()
        .sub(&g(j).sub(&g(pj)).unwrap())
        .unwrap();
    r2.mul_same(&r1)
}

/// An element of GSpin normalizing the torus and inducing `w` on the chart:
/// `x * torus_element(t) * x^{-1} = torus_element(w . t)`.
pub fn weyl_representative<S: Scalar>(
    ctx: &Arc<CliffordContext>,
    w: &WeylElement,
) -> Result<Multivector<S>> {
    if w.n() != ctx.n() {
        return Err(Error::ContextMismatch(format!(
            "Weyl element for n = {} in context n = {}",
            w.n(),
            ctx.n()
        )));
    }
    let mut eps = Multivector::one(ctx);
    for (i, &s) in w.signs().iter().enumerate() {
        if s < 0 {
            eps = eps.mul_same(&sign_change_rep(ctx, i));
        }
    }
    let mut sigma = Multivector::one(ctx);
    for (i, j) in w.transpositions() {
        sigma = transposition_rep(ctx, i, j).mul_same(&sigma);
    }
    Ok(sigma.mul_same(&eps))
}
