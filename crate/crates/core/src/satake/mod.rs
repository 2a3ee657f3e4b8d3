//! Unramified local parameters, their Euler factors and trace values.

mod lvalue;
mod store;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use lvalue::{partial_l_value, LTerm, LValue, L_PRECISION_BITS};
pub use store::{parse_store, parse_store_line, StoreRecord};

use crate::algebra::{find_twist_scalars, find_twist_scalars_split, TwistScalars, UniPoly};
use crate::conjugacy::{canonical, spin_eigenvalues, std_eigenvalues, GSpinTorusPoint};
use crate::error::{Error, Result};
use crate::rootdata::{
    evaluate_character, flip, rho_pairing, weyl_character, GroupTag, WeightKind, WeightVector,
};
use crate::scalar::{rat, Rational, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Rep {
    Spin,
    Std,
}

impl fmt::Display for Rep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rep::Spin => "spin",
            Rep::Std => "std",
        })
    }
}

impl std::str::FromStr for Rep {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "spin" => Ok(Rep::Spin),
            "std" => Ok(Rep::Std),
            _ => Err(Error::Parse(format!(
                "unknown representation {s:?}; expected spin or std"
            ))),
        }
    }
}

pub fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut r = q;
            while r.is_multiple_of(p) {
                r /= p;
            }
            return r == 1;
        }
        p += 1;
    }
    true
}

/// Residue cardinality `q` and the canonical representative of a Weyl orbit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SatakeParam<S> {
    q: u64,
    class: GSpinTorusPoint<S>,
    label: Option<String>,
}

impl<S: Scalar> SatakeParam<S> {
    pub fn new(q: u64, point: &GSpinTorusPoint<S>, label: Option<String>) -> Result<Self> {
        if !is_prime_power(q) {
            return Err(Error::Argument(format!(
                "q = {q} is not a prime power >= 2"
            )));
        }
        Ok(Self {
            q,
            class: canonical(point)?,
            label,
        })
    }

    pub fn n(&self) -> usize {
        self.class.n()
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn class(&self) -> &GSpinTorusPoint<S> {
        &self.class
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn eigenvalues(&self, rep: Rep) -> Vec<S> {
        match rep {
            Rep::Spin => spin_eigenvalues(&self.class),
            Rep::Std => std_eigenvalues(&self.class),
        }
    }
}

/// `det(1 - T r(Frob))` for `T = q^{-s}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EulerFactor<S> {
    pub rep: Rep,
    pub poly: UniPoly<S>,
    pub q: u64,
    /// Inverse roots, in canonical order.
    pub inverse_roots: Vec<S>,
}

impl<S: Scalar> EulerFactor<S> {
    fn from_inverse_roots(rep: Rep, q: u64, roots: Vec<S>) -> Self {
        Self {
            rep,
            poly: UniPoly::from_inverse_roots(&roots),
            q,
            inverse_roots: roots,
        }
    }

    /// Product of `(1 - λT)` factors, equal factors collected as powers.
    pub fn factored(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.inverse_roots.len() {
            let lam = &self.inverse_roots[i];
            let mut k = 1;
            while i + k < self.inverse_roots.len() && self.inverse_roots[i + k] == *lam {
                k += 1;
            }
            out.push_str(&linear_factor(lam));
            if k > 1 {
                out.push_str(&format!("^{k}"));
            }
            i += k;
        }
        if out.is_empty() {
            out.push('1');
        }
        out
    }
}

fn linear_factor<S: Scalar>(lam: &S) -> String {
    if lam.is_one() {
        return "(1-T)".into();
    }
    if (-lam.clone()).is_one() {
        return "(1+T)".into();
    }
    let s = lam.to_string();
    let simple = !s[1..].contains(['+', '-', '/', '*']);
    match (s.strip_prefix('-'), simple) {
        (Some(m), true) => format!("(1+{m}T)"),
        (None, true) => format!("(1-{s}T)"),
        _ => format!("(1-({s})T)"),
    }
}

pub fn spin_euler_factor<S: Scalar>(p: &SatakeParam<S>) -> EulerFactor<S> {
    EulerFactor::from_inverse_roots(Rep::Spin, p.q, p.eigenvalues(Rep::Spin))
}

pub fn std_euler_factor<S: Scalar>(p: &SatakeParam<S>) -> EulerFactor<S> {
    EulerFactor::from_inverse_roots(Rep::Std, p.q, p.eigenvalues(Rep::Std))
}

pub fn euler_factor<S: Scalar>(p: &SatakeParam<S>, rep: Rep) -> EulerFactor<S> {
    match rep {
        Rep::Spin => spin_euler_factor(p),
        Rep::Std => std_euler_factor(p),
    }
}

/// `mantissa * q^{q_exponent}` with the power of `q` kept symbolic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPowerValue<S> {
    pub mantissa: S,
    pub q_exponent: Rational,
    pub q: u64,
}

impl<S: Scalar> fmt::Display for QPowerValue<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} * {}^({})", self.mantissa, self.q, self.q_exponent)
    }
}

/// `q^{j n(n+1)/4} Tr spin(Frob^j)`.
pub fn kottwitz_trace<S: Scalar>(p: &SatakeParam<S>, j: u32) -> Result<QPowerValue<S>> {
    if j == 0 {
        return Err(Error::Argument("j must be positive".into()));
    }
    let mantissa = p
        .eigenvalues(Rep::Spin)
        .iter()
        .fold(S::zero(), |acc, l| acc + l.powi(j as i64));
    let n = p.n() as i64;
    Ok(QPowerValue {
        mantissa,
        q_exponent: rat(j as i64 * n * (n + 1), 4),
        q: p.q,
    })
}

/// `q^{<rho, ς>} Tr η_ς(Frob)` for a dominant character `ς` of the `GSpin` torus;
/// `ρ` is the half-sum of positive roots of `GSp_2n`.
pub fn hecke_character_value<S: Scalar>(
    sigma: &WeightVector,
    p: &SatakeParam<S>,
) -> Result<QPowerValue<S>> {
    if sigma.tag != GroupTag::GSpin || sigma.kind != WeightKind::Character {
        return Err(Error::Argument(
            "expected a GSpin character as highest weight".into(),
        ));
    }
    if sigma.n != p.n() {
        return Err(Error::Argument(format!(
            "weight for n = {} vs parameter n = {}",
            sigma.n,
            p.n()
        )));
    }
    let chi = weyl_character(sigma)?;
    let mut point = vec![p.class.c().clone()];
    point.extend(p.class.a().iter().cloned());
    let mantissa = evaluate_character(&chi, &point);
    let q_exponent = rho_pairing(&flip(sigma)?)?;
    Ok(QPowerValue {
        mantissa,
        q_exponent,
        q: p.q,
    })
}

/// Multiplies `c` by `lambda`.
pub fn twist_param<S: Scalar>(p: &SatakeParam<S>, lambda: &S) -> Result<SatakeParam<S>> {
    if lambda.is_zero() {
        return Err(Error::Argument("twist scalar must be nonzero".into()));
    }
    SatakeParam::new(p.q, &p.class.twist(lambda)?, p.label.clone())
}

/// All `λ` with `spin(p1) = λ spin(p2)` as eigenvalue multisets.
pub fn find_twist<S: Scalar>(p1: &SatakeParam<S>, p2: &SatakeParam<S>) -> Result<Vec<S>> {
    if p1.n() != p2.n() {
        return Err(Error::Argument("parameters of different rank".into()));
    }
    Ok(find_twist_scalars_split(
        &p1.eigenvalues(Rep::Spin),
        &p2.eigenvalues(Rep::Spin),
    ))
}

/// [`find_twist`] through the characteristic polynomials alone, reporting
/// twists outside the rationals.
pub fn find_twist_poly(
    p1: &SatakeParam<Rational>,
    p2: &SatakeParam<Rational>,
) -> Result<TwistScalars> {
    let f1 = UniPoly::from_roots(&p1.eigenvalues(Rep::Spin));
    let f2 = UniPoly::from_roots(&p2.eigenvalues(Rep::Spin));
    find_twist_scalars(&f1, &f2, 1 << p1.n())
}

/// `claimed` equals the characteristic polynomial of `rep` at the class.
pub fn charpoly_check<S: Scalar>(
    p: &SatakeParam<S>,
    claimed: &UniPoly<S>,
    rep: Rep,
) -> Result<bool> {
    let roots = p.eigenvalues(rep);
    if claimed.degree() != Some(roots.len()) {
        return Err(Error::Argument(format!(
            "claimed polynomial has degree {:?}, expected {}",
            claimed.degree(),
            roots.len()
        )));
    }
    if !claimed.is_monic() {
        return Err(Error::Argument("claimed polynomial is not monic".into()));
    }
    Ok(*claimed == UniPoly::from_roots(&roots))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn param(q: u64, c: i64, a: &[i64]) -> SatakeParam<Rational> {
        let pt = GSpinTorusPoint::new(int(c), a.iter().map(|&x| int(x)).collect()).unwrap();
        SatakeParam::new(q, &pt, None).unwrap()
    }

    #[test]
    fn prime_powers() {
        assert!(is_prime_power(2) && is_prime_power(9) && is_prime_power(7) && is_prime_power(128));
        assert!(!is_prime_power(1) && !is_prime_power(6) && !is_prime_power(12));
    }

    #[test]
    fn euler_factor_examples() {
        let triv = param(2, 1, &[1, 1]);
        let f = spin_euler_factor(&triv);
        assert_eq!(f.factored(), "(1-T)^4");
        assert_eq!(f.poly, UniPoly::from_inverse_roots(&vec![int(1); 4]));
        let p = param(7, 6, &[2, 3]);
        assert_eq!(
            spin_euler_factor(&p).poly,
            UniPoly::from_inverse_roots(&[int(6), int(3), int(2), int(1)])
        );
        let s = std_euler_factor(&p);
        assert_eq!(s.poly.coeff(0), int(1));
        assert_eq!(s.poly.degree(), Some(5));
    }

    #[test]
    fn trace_examples() {
        let t = kottwitz_trace(&param(2, 1, &[1, 1]), 1).unwrap();
        assert_eq!((t.mantissa, t.q_exponent), (int(4), rat(3, 2)));
        let p = param(7, 6, &[2, 3]);
        assert_eq!(kottwitz_trace(&p, 1).unwrap().mantissa, int(12));
        let t2 = kottwitz_trace(&p, 2).unwrap();
        assert_eq!((t2.mantissa, t2.q_exponent), (int(50), int(3)));
    }

    #[test]
    fn hecke_examples() {
        let p = param(7, 6, &[2, 3]);
        let zero = WeightVector::character(GroupTag::GSpin, 2, vec![0, 0, 0]).unwrap();
        let v = hecke_character_value(&zero, &p).unwrap();
        assert_eq!((v.mantissa, v.q_exponent), (int(1), int(0)));
        let spin = WeightVector::character(GroupTag::GSpin, 2, vec![1, 0, 0]).unwrap();
        let v = hecke_character_value(&spin, &p).unwrap();
        assert_eq!((v.mantissa, v.q_exponent), (int(12), rat(3, 2)));
        assert_eq!(
            hecke_character_value(&spin, &param(7, 1, &[1, 1]))
                .unwrap()
                .mantissa,
            int(4)
        );
    }

    #[test]
    fn twists() {
        let p2 = param(7, 1, &[2, 3]);
        let p1 = param(7, 6, &[2, 3]);
        assert!(find_twist(&p1, &p2).unwrap().contains(&int(6)));
        assert_eq!(twist_param(&p2, &int(1)).unwrap(), p2);
        let tw = twist_param(&p2, &int(2)).unwrap();
        assert!(find_twist(&tw, &p2).unwrap().contains(&int(2)));
        assert!(find_twist_poly(&p1, &p2).unwrap().found.contains(&int(6)));
    }

    #[test]
    fn charpoly_checks() {
        let p = param(7, 6, &[2, 3]);
        let good = UniPoly::from_roots(&p.eigenvalues(Rep::Spin));
        assert!(charpoly_check(&p, &good, Rep::Spin).unwrap());
        let bad = good.clone() + UniPoly::one();
        assert!(!charpoly_check(&p, &bad, Rep::Spin).unwrap());
        let std = std_euler_factor(&p).poly.reversed();
        assert!(charpoly_check(&p, &std, Rep::Std).unwrap());
        assert!(charpoly_check(&p, &std, Rep::Spin).is_err());
    }

    #[test]
    fn factored_display() {
        let p = param(7, 6, &[2, 3]);
        assert_eq!(spin_euler_factor(&p).factored(), "(1-T)(1-2T)(1-3T)(1-6T)");
        assert_eq!(
            std_euler_factor(&param(7, 5, &[-1, 1])).factored(),
            "(1+T)^2(1-T)^3"
        );
    }
}
