//! Slope cones `C_M` and admissibility of affine cones.

use std::collections::BTreeSet;

use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootdata::{simple_coroots, simple_roots, GroupTag};
use crate::scalar::{format_rational, int, parse_rational, Rational};

/// `coeffs · x > bound` (strict) or `coeffs · x >= bound`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LinearIneq {
    pub coeffs: Vec<Rational>,
    pub bound: Rational,
    pub strict: bool,
}

impl LinearIneq {
    fn normalized(mut self) -> Self {
        if let Some(lead) = self.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) {
            for c in &mut self.coeffs {
                *c = &*c / &lead;
            }
            self.bound = &self.bound / &lead;
        }
        self
    }
}

/// Exact feasibility of a system of linear inequalities over the rationals,
/// by Fourier–Motzkin elimination.
pub fn linear_feasible(system: &[LinearIneq], dim: usize) -> bool {
    let mut cur: BTreeSet<LinearIneq> =
        system.iter().cloned().map(LinearIneq::normalized).collect();
    for j in (0..dim).rev() {
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), BTreeSet::new());
        for ineq in cur {
            let c = ineq.coeffs[j].clone();
            if c.is_zero() {
                rest.insert(ineq);
            } else if c.is_positive() {
                pos.push(ineq);
            } else {
                neg.push(ineq);
            }
        }
        for p in &pos {
            for q in &neg {
                let (a, b) = (p.coeffs[j].clone(), -q.coeffs[j].clone());
                let coeffs: Vec<Rational> = p
                    .coeffs
                    .iter()
                    .zip(&q.coeffs)
                    .map(|(x, y)| x / &a + y / &b)
                    .collect();
                let combined = LinearIneq {
                    coeffs,
                    bound: &p.bound / &a + &q.bound / &b,
                    strict: p.strict || q.strict,
                };
                rest.insert(combined.normalized());
            }
        }
        cur = rest;
    }
    cur.iter().all(|c| {
        if c.strict {
            c.bound.is_negative()
        } else {
            !c.bound.is_positive()
        }
    })
}

/// `{x : φ_i(x) > c_i}` in `GSp` character coordinates `(c; k_1, ..., k_n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineCone {
    pub functionals: Vec<Vec<i64>>,
    pub thresholds: Vec<Rational>,
}

/// `{"functionals":[[...]],"thresholds":["..."]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AffineConeJson {
    pub functionals: Vec<Vec<i64>>,
    pub thresholds: Vec<String>,
}

impl AffineCone {
    pub fn new(functionals: Vec<Vec<i64>>, thresholds: Vec<Rational>) -> Result<Self> {
        if functionals.is_empty() {
            return Err(Error::Argument(
                "a cone needs at least one functional".into(),
            ));
        }
        if functionals.len() != thresholds.len() {
            return Err(Error::Argument("one threshold per functional".into()));
        }
        let d = functionals[0].len();
        if d == 0 || functionals.iter().any(|f| f.len() != d) {
            return Err(Error::Argument(
                "functionals must share a positive dimension".into(),
            ));
        }
        Ok(Self {
            functionals,
            thresholds,
        })
    }

    pub fn dim(&self) -> usize {
        self.functionals[0].len()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.functionals
            .iter()
            .zip(&self.thresholds)
            .all(|(f, c)| dot(f, x) > *c)
    }

    pub fn to_json(&self) -> AffineConeJson {
        AffineConeJson {
            functionals: self.functionals.clone(),
            thresholds: self.thresholds.iter().map(format_rational).collect(),
        }
    }

    pub fn from_json(j: &AffineConeJson) -> Result<Self> {
        let t = j
            .thresholds
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(j.functionals.clone(), t)
    }

    fn system(&self) -> Vec<LinearIneq> {
        self.functionals
            .iter()
            .zip(&self.thresholds)
            .map(|(f, c)| LinearIneq {
                coeffs: f.iter().map(|&v| int(v)).collect(),
                bound: c.clone(),
                strict: true,
            })
            .collect()
    }
}

fn dot(f: &[i64], x: &[Rational]) -> Rational {
    f.iter()
        .zip(x)
        .fold(int(0), |acc, (&a, b)| acc + int(a) * b)
}

/// Exponents `(0; 1, ..., n)` of `diag(ϖ, ϖ^2, ..., ϖ^n, ϖ^{-n}, ..., ϖ^{-1})`.
pub fn default_eta(n: usize) -> Vec<i64> {
    (0..=n as i64).collect()
}

/// For each simple root `α`: `(v_α, α^∨)` with `v_α = <α, η>`.
fn slope_data(n: usize, eta: &[i64]) -> Result<Vec<(i64, Vec<i64>)>> {
    let len = GroupTag::GSp.weight_len(n);
    if eta.len() != len {
        return Err(Error::Argument(format!(
            "η for n = {n} needs {len} exponents, got {}",
            eta.len()
        )));
    }
    let roots = simple_roots(GroupTag::GSp, n)?;
    let coroots = simple_coroots(GroupTag::GSp, n)?;
    Ok(roots
        .iter()
        .zip(coroots)
        .map(|(a, c)| (a.coords.iter().zip(eta).map(|(x, y)| x * y).sum(), c.coords))
        .collect())
}

fn check_point(n: usize, x: &[Rational]) -> Result<()> {
    let len = GroupTag::GSp.weight_len(n);
    if x.len() != len {
        return Err(Error::Argument(format!(
            "weights for n = {n} need {len} coordinates, got {}",
            x.len()
        )));
    }
    Ok(())
}

/// `min_α -(1 + <w, α^∨>) <α, η>` over the simple roots of `GSp_2n`.
pub fn classicality_bound(w: &[Rational], eta: &[i64], n: usize) -> Result<Rational> {
    check_point(n, w)?;
    slope_data(n, eta)?
        .into_iter()
        .map(|(v, c)| -(int(1) + dot(&c, w)) * int(v))
        .min()
        .ok_or_else(|| Error::Argument("no simple roots".into()))
}

/// Every simple-root term of the classicality bound exceeds `m`.
pub fn in_cone_cm(x: &[Rational], m: &Rational, eta: &[i64], n: usize) -> Result<bool> {
    check_point(n, x)?;
    Ok(slope_data(n, eta)?
        .into_iter()
        .all(|(v, c)| -(int(1) + dot(&c, x)) * int(v) > *m))
}

/// `C ∩ C_M ≠ ∅` for all sufficiently large `M`: `C` is nonempty and some
/// recession direction `d` of `C` has `-<α, η><d, α^∨> > 0` for every simple `α`.
pub fn is_admissible(cone: &AffineCone, eta: &[i64], n: usize) -> Result<bool> {
    let dim = cone.dim();
    if dim != GroupTag::GSp.weight_len(n) {
        return Err(Error::Argument(format!(
            "cone of dimension {dim} for n = {n}"
        )));
    }
    if !linear_feasible(&cone.system(), dim) {
        return Ok(false);
    }
    let mut rec: Vec<LinearIneq> = cone
        .functionals
        .iter()
        .map(|f| LinearIneq {
            coeffs: f.iter().map(|&v| int(v)).collect(),
            bound: int(0),
            strict: false,
        })
        .collect();
    for (v, c) in slope_data(n, eta)? {
        rec.push(LinearIneq {
            coeffs: c.iter().map(|&x| int(-v * x)).collect(),
            bound: int(0),
            strict: true,
        });
    }
    Ok(linear_feasible(&rec, dim))
}
