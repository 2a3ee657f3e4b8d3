//! Sparse multivariate Laurent polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{arg, Result};
use crate::scalar::Scalar;

/// Monomials `x^e` with integer exponent vectors of a fixed length.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly<S> {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, S>,
}

impl<S: Scalar> LaurentPoly<S> {
    pub fn zero(nvars: usize) -> Self {
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::monomial(vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    pub fn monomial(exp: Vec<i64>, c: S) -> Self {
        let mut p = Self::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<i64>, S)>,
    ) -> Result<Self> {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return arg(format!(
                    "exponent of length {} in a {nvars}-variable polynomial",
                    e.len()
                ));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i64>, S> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: &[i64]) -> S {
        self.terms.get(exp).cloned().unwrap_or_else(S::zero)
    }

    /// Adds `c x^exp` in place. Panics on a length mismatch.
    pub fn add_term(&mut self, exp: Vec<i64>, c: S) {
        assert_eq!(exp.len(), self.nvars, "exponent length mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(v) => {
                let s = v.clone() + c;
                if s.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    /// Sum of coefficients, i.e. the value at `(1, ..., 1)`.
    pub fn coefficient_sum(&self) -> S {
        self.terms.values().cloned().fold(S::zero(), |a, b| a + b)
    }

    /// Value at a point with nonzero coordinates.
    pub fn eval(&self, point: &[S]) -> S {
        assert_eq!(point.len(), self.nvars);
        self.terms.iter().fold(S::zero(), |acc, (e, c)| {
            let m = e.iter().zip(point).fold(
                c.clone(),
                |m, (&k, x)| if k == 0 { m } else { m * x.powi(k) },
            );
            acc + m
        })
    }

    /// Applies an integer linear map to every exponent: `e -> f(e)`.
    pub fn map_exponents(&self, f: impl Fn(&[i64]) -> Vec<i64>) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(f(e), c.clone());
        }
        out
    }

    pub fn scale(&self, k: &S) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c.clone() * k.clone());
        }
        out
    }

    /// Exact quotient by `1 - x^beta` for `beta != 0`; `None` when it does not divide.
    pub fn div_one_minus_monomial(&self, beta: &[i64]) -> Option<Self> {
        assert_eq!(beta.len(), self.nvars);
        let piv = beta.iter().position(|&b| b != 0)?;
        let b = beta[piv];
        // Group exponents into lines e0 + t*beta; along each line divide the
        // one-variable polynomial by (1 - y).
        let mut lines: BTreeMap<Vec<i64>, BTreeMap<i64, S>> = BTreeMap::new();
        for (e, c) in &self.terms {
            let t = e[piv].div_euclid(b);
            let base: Vec<i64> = e.iter().zip(beta).map(|(x, y)| x - t * y).collect();
            lines.entry(base).or_default().insert(t, c.clone());
        }
        let mut out = Self::zero(self.nvars);
        for (base, line) in lines {
            // f(y) = (1 - y) g(y)  =>  g_t = sum_{s <= t} f_s
            let lo = *line.keys().next().unwrap();
            let hi = *line.keys().next_back().unwrap();
            let mut acc = S::zero();
            for t in lo..=hi {
                if let Some(c) = line.get(&t) {
                    acc = acc + c.clone();
                }
                if t == hi {
                    if !acc.is_zero() {
                        return None;
                    }
                    break;
                }
                let e: Vec<i64> = base.iter().zip(beta).map(|(x, y)| x + t * y).collect();
                out.add_term(e, acc.clone());
            }
        }
        Some(out)
    }
}

impl<S: Scalar> Add for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn add(self, rhs: &LaurentPoly<S>) -> LaurentPoly<S> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<S: Scalar> Sub for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn sub(self, rhs: &LaurentPoly<S>) -> LaurentPoly<S> {
        self + &(-rhs)
    }
}

impl<S: Scalar> Neg for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn neg(self) -> LaurentPoly<S> {
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }
}

impl<S: Scalar> Mul for &LaurentPoly<S> {
    type Output = LaurentPoly<S>;
    fn mul(self, rhs: &LaurentPoly<S>) -> LaurentPoly<S> {
        assert_eq!(self.nvars, rhs.nvars);
        let mut out = LaurentPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<i64> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Display for LaurentPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, c)| {
                let mono: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k != 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("x{i}")
                        } else {
                            format!("x{i}^{k}")
                        }
                    })
                    .collect();
                if mono.is_empty() {
                    c.to_string()
                } else {
                    format!("{c}*{}", mono.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}
