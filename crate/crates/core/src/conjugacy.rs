//! Semisimple conjugacy classes of `GSpin_{2n+1}` through the torus chart.
//!
//! A point `(c; a_1, ..., a_n)` is the torus element of
//! [`torus_element`](crate::clifford::torus_element): spin eigenvalues
//! `c prod_{i in S} a_i^{-1}`, standard eigenvalues `a_i^{±1}, 1`, spinor norm
//! `c^2 / (a_1 ... a_n)`.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use crate::algebra::UniPoly;
use crate::clifford::{spin_matrix, torus_element, CliffordContext, Multivector};
use crate::error::{Error, Result};
use crate::quadratic::Quadratic;
use crate::rootdata::{weyl_orbit_chart, WeylElement};
use crate::scalar::{canonical_cmp_slice, require_common_field, sorted_multiset, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GSpinTorusPoint<S> {
    c: S,
    a: Vec<S>,
}

impl<S: Scalar> std::fmt::Display for GSpinTorusPoint<S> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let a: Vec<String> = self.a.iter().map(ToString::to_string).collect();
        write!(f, "({}; {})", self.c, a.join(", "))
    }
}

/// Serialized form `{"n":2,"c":"6","a":["2","3"]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorusPointJson {
    pub n: usize,
    pub c: String,
    pub a: Vec<String>,
}

impl<S: Scalar> GSpinTorusPoint<S> {
    pub fn new(c: S, a: Vec<S>) -> Result<Self> {
        if a.is_empty() {
            return Err(Error::Argument("torus points need n >= 1".into()));
        }
        if c.is_zero() || a.iter().any(|x| x.is_zero()) {
            return Err(Error::Argument("torus coordinates must be nonzero".into()));
        }
        require_common_field(std::iter::once(&c).chain(&a))?;
        Ok(Self { c, a })
    }

    /// `(1; 1, ..., 1)`.
    pub fn identity(n: usize) -> Self {
        Self {
            c: S::one(),
            a: vec![S::one(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn c(&self) -> &S {
        &self.c
    }

    pub fn a(&self) -> &[S] {
        &self.a
    }

    pub fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.n()
            .cmp(&other.n())
            .then_with(|| self.c.canonical_cmp(&other.c))
            .then_with(|| canonical_cmp_slice(&self.a, &other.a))
    }

    pub fn act(&self, w: &WeylElement) -> Result<Self> {
        let (c, a) = w.act_chart(&self.c, &self.a)?;
        Ok(Self { c, a })
    }

    /// Multiplies `c` by `lambda`; spin eigenvalues scale by `lambda`.
    pub fn twist(&self, lambda: &S) -> Result<Self> {
        Self::new(self.c.clone() * lambda.clone(), self.a.clone())
    }

    pub fn to_json(&self) -> TorusPointJson {
        TorusPointJson {
            n: self.n(),
            c: self.c.to_string(),
            a: self.a.iter().map(ToString::to_string).collect(),
        }
    }

    pub fn from_json(j: &TorusPointJson) -> Result<Self> {
        if j.a.len() != j.n {
            return Err(Error::Parse(format!(
                "n = {} but {} torus coordinates",
                j.n,
                j.a.len()
            )));
        }
        let c = S::parse_exact(&j.c)?;
        let a =
            j.a.iter()
                .map(|s| S::parse_exact(s))
                .collect::<Result<Vec<_>>>()?;
        Self::new(c, a)
    }

    pub fn to_multivector(&self) -> Result<Multivector<S>> {
        let ctx = CliffordContext::shared(self.n())?;
        torus_element(&ctx, &self.c, &self.a)
    }
}

/// `{c prod_{i in S} a_i^{-1}}` over all subsets, in canonical order.
pub fn spin_eigenvalues<S: Scalar>(t: &GSpinTorusPoint<S>) -> Vec<S> {
    let inv: Vec<S> = t.a.iter().map(Scalar::recip).collect();
    let mut vals = vec![t.c.clone()];
    for ai in inv {
        let scaled: Vec<S> = vals.iter().map(|v| v.clone() * ai.clone()).collect();
        vals.extend(scaled);
    }
    sorted_multiset(vals)
}

/// `{a_i, 1, a_i^{-1}}`, in canonical order.
pub fn std_eigenvalues<S: Scalar>(t: &GSpinTorusPoint<S>) -> Vec<S> {
    let mut vals = Vec::with_capacity(2 * t.n() + 1);
    vals.push(S::one());
    for ai in &t.a {
        vals.push(ai.clone());
        vals.push(ai.recip());
    }
    sorted_multiset(vals)
}

/// `c^2 / (a_1 ... a_n)`.
pub fn spinor_norm_chart<S: Scalar>(t: &GSpinTorusPoint<S>) -> S {
    let prod = t.a.iter().fold(S::one(), |p, x| p * x.clone());
    t.c.clone() * t.c.clone() / prod
}

/// Eigenvalues of the `GO_{2n+1}` image `v -> x v x^*`: the standard
/// eigenvalues scaled by the spinor norm.
pub fn go_eigenvalues<S: Scalar>(t: &GSpinTorusPoint<S>) -> Vec<S> {
    let nrm = spinor_norm_chart(t);
    sorted_multiset(
        std_eigenvalues(t)
            .into_iter()
            .map(|v| v * nrm.clone())
            .collect(),
    )
}

/// Change of chart to the `GO` torus `diag(A_1, ..., A_n, C, C^2/A_n, ..., C^2/A_1)`
/// containing the image of `t`: `C = N`, `A_i = N / a_i`.
pub fn go_chart<S: Scalar>(t: &GSpinTorusPoint<S>) -> (S, Vec<S>) {
    let nrm = spinor_norm_chart(t);
    let a = t.a.iter().map(|x| nrm.clone() / x.clone()).collect();
    (nrm, a)
}

pub fn spin_charpoly<S: Scalar>(t: &GSpinTorusPoint<S>) -> UniPoly<S> {
    UniPoly::from_roots(&spin_eigenvalues(t))
}

pub fn std_charpoly<S: Scalar>(t: &GSpinTorusPoint<S>) -> UniPoly<S> {
    UniPoly::from_roots(&std_eigenvalues(t))
}

/// The Weyl orbit, deduplicated and in canonical order.
pub fn weyl_orbit<S: Scalar>(t: &GSpinTorusPoint<S>) -> Result<Vec<GSpinTorusPoint<S>>> {
    Ok(weyl_orbit_chart(&t.c, &t.a)?
        .into_iter()
        .map(|(c, a)| GSpinTorusPoint { c, a })
        .collect())
}

/// Least element of the orbit under the canonical order.
pub fn canonical<S: Scalar>(t: &GSpinTorusPoint<S>) -> Result<GSpinTorusPoint<S>> {
    Ok(weyl_orbit(t)?.swap_remove(0))
}

fn same_n<S: Scalar>(t1: &GSpinTorusPoint<S>, t2: &GSpinTorusPoint<S>) -> Result<()> {
    if t1.n() != t2.n() {
        return Err(Error::Argument(format!(
            "points of rank {} and {}",
            t1.n(),
            t2.n()
        )));
    }
    Ok(())
}

/// `t2` lies in the Weyl orbit of `t1`.
pub fn gspin_conjugate<S: Scalar>(
    t1: &GSpinTorusPoint<S>,
    t2: &GSpinTorusPoint<S>,
) -> Result<bool> {
    same_n(t1, t2)?;
    Ok(weyl_orbit(t1)?.contains(t2))
}

/// Equal spin characteristic polynomials and equal spinor norms.
pub fn steinberg_conjugate<S: Scalar>(
    t1: &GSpinTorusPoint<S>,
    t2: &GSpinTorusPoint<S>,
) -> Result<bool> {
    same_n(t1, t2)?;
    Ok(spinor_norm_chart(t1) == spinor_norm_chart(t2) && spin_charpoly(t1) == spin_charpoly(t2))
}

/// Conjugacy of the `SO_{2n+1}` images: equal standard characteristic
/// polynomials (the similitude character of `SO` is trivial).
pub fn std_conjugate<S: Scalar>(t1: &GSpinTorusPoint<S>, t2: &GSpinTorusPoint<S>) -> Result<bool> {
    same_n(t1, t2)?;
    Ok(std_charpoly(t1) == std_charpoly(t2))
}

/// Conjugacy of the `GO_{2n+1}` images `v -> x v x^*`: equal characteristic
/// polynomials and equal similitude factors `N^2`.
pub fn go_conjugate<S: Scalar>(t1: &GSpinTorusPoint<S>, t2: &GSpinTorusPoint<S>) -> Result<bool> {
    same_n(t1, t2)?;
    let (n1, n2) = (spinor_norm_chart(t1), spinor_norm_chart(t2));
    Ok(n1.clone() * n1 == n2.clone() * n2 && go_eigenvalues(t1) == go_eigenvalues(t2))
}

/// `-1` is a standard eigenvalue.
pub fn in_bad_position<S: Scalar>(t: &GSpinTorusPoint<S>) -> bool {
    let m1 = -S::one();
    t.a.contains(&m1)
}

/// `(-c; a)` lies in the Weyl orbit of `(c; a)`.
pub fn sign_twist_conjugate<S: Scalar>(t: &GSpinTorusPoint<S>) -> Result<bool> {
    let neg = GSpinTorusPoint {
        c: -t.c.clone(),
        a: t.a.clone(),
    };
    gspin_conjugate(t, &neg)
}

/// A norm-one point over `Q(sqrt(d))` lifting the `SO_{2n+1}` torus point `a`:
/// `c^2 = a_1 ... a_n`.
pub fn norm_one_lift(a: &[Rational]) -> Result<GSpinTorusPoint<Quadratic>> {
    let prod = a.iter().fold(Rational::from_i64(1), |p, x| p * x);
    let c = Quadratic::sqrt_rational(&prod);
    GSpinTorusPoint::new(c, a.iter().cloned().map(Quadratic::rational).collect())
}

/// The spin image is diagonalizable over the field: the squarefree part of
/// its characteristic polynomial annihilates it.
pub fn is_semisimple<S: Scalar>(x: &Multivector<S>) -> bool {
    let m = spin_matrix(x);
    let r = m.charpoly().squarefree_part();
    r.eval_matrix(&m).is_zero()
}

/// Conjugacy of general semisimple GSpin elements by the spin characteristic
/// polynomial and the spinor norm.
pub fn multivector_conjugate<S: Scalar>(x1: &Multivector<S>, x2: &Multivector<S>) -> Result<bool> {
    if x1.n() != x2.n() {
        return Err(Error::ContextMismatch(format!(
            "n = {} vs n = {}",
            x1.n(),
            x2.n()
        )));
    }
    for x in [x1, x2] {
        if !x.is_gspin() {
            return Err(Error::NotInGSpin("conjugacy input is not in GSpin".into()));
        }
        if !is_semisimple(x) {
            return Err(Error::NotSemisimple);
        }
    }
    Ok(x1.spinor_norm()? == x2.spinor_norm()?
        && spin_matrix(x1).charpoly() == spin_matrix(x2).charpoly())
}
