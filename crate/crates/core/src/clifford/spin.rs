//! The spin module `Λ•W`, `W = span(e_0, ..., e_{n-1})`, and its invariant form.

use std::collections::BTreeMap;

use super::multivector::{times_int, Multivector};
use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Vector in `Λ•W`, keyed by subsets of `0..n` as bitmasks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinVector<S> {
    n: usize,
    terms: BTreeMap<u32, S>,
}

impl<S: Scalar> SpinVector<S> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// `c * e_S`.
    pub fn basis(n: usize, s: u32, c: S) -> Self {
        assert!((s as usize) < (1 << n), "wedge basis index out of range");
        let mut out = Self::zero(n);
        if !c.is_zero() {
            out.terms.insert(s, c);
        }
        out
    }

    /// Coordinates in the order `S = 0, 1, ..., 2^n - 1`.
    pub fn from_dense(n: usize, coords: &[S]) -> Result<Self> {
        if coords.len() != 1 << n {
            return Err(Error::Argument(format!(
                "spin vectors for n = {n} have {} coordinates",
                1 << n
            )));
        }
        let terms = coords
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c.clone()))
            .collect();
        Ok(Self { n, terms })
    }

    pub fn to_dense(&self) -> Vec<S> {
        (0..1u32 << self.n).map(|s| self.coeff(s)).collect()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeff(&self, s: u32) -> S {
        self.terms.get(&s).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> &BTreeMap<u32, S> {
        &self.terms
    }
}

/// Action of a Clifford element on `Λ•W`.
pub fn spin_action<S: Scalar>(x: &Multivector<S>, s: &SpinVector<S>) -> Result<SpinVector<S>> {
    if x.n() != s.n {
        return Err(Error::ContextMismatch(format!(
            "multivector n = {} vs spin vector n = {}",
            x.n(),
            s.n
        )));
    }
    let ctx = x.context();
    let mut out: BTreeMap<u32, S> = BTreeMap::new();
    for (m, c) in x.terms() {
        for (v, a) in &s.terms {
            if let Some((w, sg)) = ctx.spin_monomial(*m, *v) {
                let term = times_int(&(c.clone() * a.clone()), sg as i64);
                let e = out.entry(w).or_insert_with(S::zero);
                *e = e.clone() + term;
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(SpinVector { n: s.n, terms: out })
}

/// `2^n x 2^n` matrix of the action, columns indexed by the source subset.
pub fn spin_matrix<S: Scalar>(x: &Multivector<S>) -> Matrix<S> {
    let n = x.n();
    let dim = 1usize << n;
    let ctx = x.context();
    let mut m: Matrix<S> = Matrix::zeros(dim, dim);
    for (mask, c) in x.terms() {
        for s in 0..dim as u32 {
            if let Some((w, sg)) = ctx.spin_monomial(*mask, s) {
                let v = m.get(w as usize, s as usize).clone() + times_int(c, sg as i64);
                m.set(w as usize, s as usize, v);
            }
        }
    }
    m
}

/// `(-1)^r (-1)^{r(r-1)/2}`: sign of the main involution on a degree-`r` wedge.
fn star_sign(r: u32) -> i64 {
    let rev = (r * r.saturating_sub(1) / 2) % 2;
    if (r + rev).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Sign reordering `e_S ∧ e_{S^c}` into increasing order.
fn shuffle_sign(s: u32, n: usize) -> i64 {
    let mut inversions = 0u32;
    for a in 0..n {
        if s >> a & 1 == 1 {
            // complement elements below a
            inversions += (0..a).filter(|&b| s >> b & 1 == 0).count() as u32;
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Top-degree component of `s^* ∧ t`.
pub fn beta_form<S: Scalar>(s: &SpinVector<S>, t: &SpinVector<S>) -> Result<S> {
    if s.n != t.n {
        return Err(Error::ContextMismatch(format!(
            "spin vectors over n = {} and n = {}",
            s.n, t.n
        )));
    }
    let n = s.n;
    let full = (1u32 << n) - 1;
    let mut acc = S::zero();
    for (a, x) in &s.terms {
        let comp = full ^ a;
        if let Some(y) = t.terms.get(&comp) {
            let sign = star_sign(a.count_ones()) * shuffle_sign(*a, n);
            acc = acc + times_int(&(x.clone() * y.clone()), sign);
        }
    }
    Ok(acc)
}

/// Gram matrix of [`beta_form`] on the wedge basis.
pub fn beta_gram<S: Scalar>(n: usize) -> Matrix<S> {
    let dim = 1usize << n;
    let mut m = Matrix::zeros(dim, dim);
    let full = (1u32 << n) - 1;
    for a in 0..dim as u32 {
        let sign = star_sign(a.count_ones()) * shuffle_sign(a, n);
        m.set(a as usize, (full ^ a) as usize, S::from_i64(sign));
    }
    m
}
