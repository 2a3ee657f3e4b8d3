//! Truncated partial L-values in extended-precision binary floating point.

use std::str::FromStr;

use dashu_float::round::mode::HalfEven;
use dashu_float::FBig;
use dashu_int::IBig;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use super::{euler_factor, Rep, SatakeParam};
use crate::error::{Error, Result};
use crate::scalar::{format_rational, rational_to_f64, Rational, Scalar};

type Float = FBig<HalfEven>;

/// Mantissa bits for every intermediate value.
pub const L_PRECISION_BITS: usize = 128;

/// One local factor of the product.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LTerm {
    pub q: u64,
    pub label: Option<String>,
    pub class: String,
    /// Exact Euler polynomial in `T`.
    pub poly: String,
    pub factored: String,
    /// `1 / poly(q^{-s})`.
    pub local_value: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LValue {
    pub rep: Rep,
    pub s: String,
    pub cutoff: u64,
    /// Amount added to every `log_q |λ|` by the `C`-normalization, if applied.
    pub shift: Option<String>,
    pub value: f64,
    /// The value to 30 significant decimal digits.
    pub decimal: String,
    /// Lower bound for `s` that the guard enforced.
    pub bound: f64,
    pub terms: Vec<LTerm>,
}

fn float_of_int(v: &num_bigint::BigInt) -> Float {
    let i = IBig::from_str(&v.to_string()).expect("decimal integer");
    Float::from(i).with_precision(L_PRECISION_BITS).value()
}

fn float_of_rational(r: &Rational) -> Float {
    float_of_int(r.numer()) / float_of_int(r.denom())
}

fn float_of_scalar<S: Scalar>(x: &S) -> Result<Float> {
    let (a, b, d) = x
        .real_surd_parts()
        .ok_or_else(|| Error::Domain(format!("coefficient {x} is not real")))?;
    let mut v = float_of_rational(&a);
    if !b.is_zero() {
        v += float_of_rational(&b) * float_of_rational(&Rational::from_integer(d.into())).sqrt();
    }
    Ok(v)
}

/// Largest `log_q |λ|` over the eigenvalues of `p`.
fn max_log_modulus<S: Scalar>(p: &SatakeParam<S>, rep: Rep) -> f64 {
    let m = p
        .eigenvalues(rep)
        .iter()
        .map(Scalar::modulus)
        .fold(0.0, f64::max);
    m.ln() / (p.q() as f64).ln()
}

fn local_value<S: Scalar>(p: &SatakeParam<S>, rep: Rep, s: &Float) -> Result<(LTerm, Float)> {
    let f = euler_factor(p, rep);
    let t = (-(s.clone()
        * Float::from(p.q())
            .with_precision(L_PRECISION_BITS)
            .value()
            .ln()))
    .exp();
    let mut acc = Float::ZERO.with_precision(L_PRECISION_BITS).value();
    for k in (0..=f.poly.degree().unwrap_or(0)).rev() {
        acc = acc * t.clone() + float_of_scalar(&f.poly.coeff(k))?;
    }
    if acc == Float::ZERO {
        return Err(Error::Domain(format!(
            "Euler factor at q = {} vanishes",
            p.q()
        )));
    }
    let inv = Float::ONE.with_precision(L_PRECISION_BITS).value() / acc;
    let term = LTerm {
        q: p.q(),
        label: p.label().map(str::to_owned),
        class: p.class().to_string(),
        poly: f.poly.display_in("T"),
        factored: f.factored(),
        local_value: inv.to_f64().value(),
    };
    Ok((term, inv))
}

/// `∏ 1 / det(1 - q^{-s} r(Frob))` over the parameters with `q <= cutoff`.
///
/// `c_shift = w` evaluates with every eigenvalue multiplied by `q^w`, i.e. at `s - w`.
pub fn partial_l_value<S: Scalar>(
    store: &[SatakeParam<S>],
    rep: Rep,
    s: &Rational,
    cutoff: u64,
    c_shift: Option<&Rational>,
) -> Result<LValue> {
    let mut params: Vec<&SatakeParam<S>> = store.iter().filter(|p| p.q() <= cutoff).collect();
    params.sort_by(|a, b| {
        a.q()
            .cmp(&b.q())
            .then_with(|| a.class().canonical_cmp(b.class()))
    });
    let s_eff = match c_shift {
        Some(w) => s - w,
        None => s.clone(),
    };
    let bound = 1.0
        + params
            .iter()
            .map(|p| max_log_modulus(p, rep))
            .fold(0.0, f64::max);
    if rational_to_f64(&s_eff) <= bound {
        return Err(Error::Domain(format!(
            "s = {} is outside the convergence region s > {bound}",
            format_rational(&s_eff)
        )));
    }
    let s_float = float_of_rational(&s_eff);
    let locals: Vec<(LTerm, Float)> = params
        .par_iter()
        .map(|p| local_value(p, rep, &s_float))
        .collect::<Result<_>>()?;
    let mut total = Float::ONE.with_precision(L_PRECISION_BITS).value();
    let mut terms = Vec::with_capacity(locals.len());
    for (term, v) in locals {
        total *= v;
        terms.push(term);
    }
    let decimal = total
        .clone()
        .with_base_and_precision::<10>(30)
        .value()
        .to_string();
    Ok(LValue {
        rep,
        s: format_rational(s),
        cutoff,
        shift: c_shift.map(format_rational),
        value: total.to_f64().value(),
        decimal,
        bound,
        terms,
    })
}
