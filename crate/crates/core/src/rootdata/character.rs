//! Weyl character formula by exact Laurent division.

use super::weyl::WeylElement;
use super::{is_dominant, root_system, two_rho, GroupTag, WeightKind, WeightVector};
use crate::algebra::LaurentPoly;
use crate::error::{Error, Result};
use crate::scalar::{int, Rational, Scalar};

fn check_highest_weight(w: &WeightVector) -> Result<()> {
    w.validate()?;
    if w.kind != WeightKind::Character {
        return Err(Error::Argument("highest weights are characters".into()));
    }
    if !matches!(
        w.tag,
        GroupTag::GSp | GroupTag::Sp | GroupTag::SO | GroupTag::GSpin
    ) {
        return Err(Error::UnsupportedGroup(format!("{:?}", w.tag)));
    }
    if !is_dominant(w)? {
        return Err(Error::Argument(format!("{:?} is not dominant", w.coords)));
    }
    Ok(())
}

/// Character of the irreducible representation with highest weight `w`, as a
/// Laurent polynomial in the weight coordinates.
pub fn weyl_character(w: &WeightVector) -> Result<LaurentPoly<Rational>> {
    check_highest_weight(w)?;
    let tr = two_rho(w.tag, w.n)?;
    let shifted: Vec<i64> = w.coords.iter().zip(&tr).map(|(l, r)| 2 * l + r).collect();
    let len = tr.len();
    let as_weight = |coords: Vec<i64>| WeightVector {
        tag: w.tag,
        n: w.n,
        kind: WeightKind::Character,
        coords,
    };
    // sum_w sgn(w) x^{w(λ+ρ) - ρ}, computed with doubled coordinates
    let mut num = LaurentPoly::zero(len);
    for g in WeylElement::all(w.n)? {
        let img = g.act_weight(&as_weight(shifted.clone()))?.coords;
        let exp: Vec<i64> = img
            .iter()
            .zip(&tr)
            .map(|(a, r)| {
                let d = a - r;
                debug_assert!(d % 2 == 0);
                d / 2
            })
            .collect();
        num.add_term(exp, int(g.sign()));
    }
    // divide by prod_{α > 0} (1 - x^{-α})
    let rs = root_system(w.tag, w.n)?;
    for r in &rs.roots {
        let neg: Vec<i64> = r.iter().map(|x| -x).collect();
        num = num.div_one_minus_monomial(&neg).ok_or_else(|| {
            Error::Argument("Weyl denominator does not divide the numerator".into())
        })?;
    }
    Ok(num)
}

/// Dimension of the representation: the character at the identity.
pub fn weyl_dim(w: &WeightVector) -> Result<Rational> {
    Ok(weyl_character(w)?.coefficient_sum())
}

/// `prod_{α > 0} <λ + ρ, α^∨> / <ρ, α^∨>`.
pub fn weyl_dim_formula(w: &WeightVector) -> Result<Rational> {
    check_highest_weight(w)?;
    let tr = two_rho(w.tag, w.n)?;
    let rs = root_system(w.tag, w.n)?;
    let mut num = int(1);
    let mut den = int(1);
    for c in &rs.coroots {
        let lr: i64 = w
            .coords
            .iter()
            .zip(&tr)
            .zip(c)
            .map(|((l, r), x)| (2 * l + r) * x)
            .sum();
        let r: i64 = tr.iter().zip(c).map(|(r, x)| r * x).sum();
        num *= int(lr);
        den *= int(r);
    }
    Ok(num / den)
}

/// Evaluates a rational-coefficient character at a torus point.
pub fn evaluate_character<S: Scalar>(chi: &LaurentPoly<Rational>, point: &[S]) -> S {
    chi.terms().iter().fold(S::zero(), |acc, (e, c)| {
        let m = e
            .iter()
            .zip(point)
            .fold(S::from_rational(c.clone()), |m, (&k, x)| {
                if k == 0 {
                    m
                } else {
                    m * x.powi(k)
                }
            });
        acc + m
    })
}
