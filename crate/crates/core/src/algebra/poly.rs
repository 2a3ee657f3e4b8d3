//! Dense univariate polynomials, Newton identities and twist scalars.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::matrix::Matrix;
use crate::error::{arg, Result};
use crate::scalar::{rational_nth_root, Rational, Scalar};

/// Coefficients lowest degree first; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> UniPoly<S> {
    pub fn new(mut coeffs: Vec<S>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(S::one())
    }

    pub fn constant(c: S) -> Self {
        Self::new(vec![c])
    }

    /// The indeterminate `X` (or `T`).
    pub fn x() -> Self {
        Self::new(vec![S::zero(), S::one()])
    }

    /// `prod (X - r)`.
    pub fn from_roots(roots: &[S]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc * Self::new(vec![-r.clone(), S::one()])
        })
    }

    /// `prod (1 - r T)`.
    pub fn from_inverse_roots(roots: &[S]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            acc * Self::new(vec![S::one(), -r.clone()])
        })
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Coefficient of `X^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> S {
        self.coeffs.get(i).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&S> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn eval(&self, x: &S) -> S {
        self.coeffs
            .iter()
            .rev()
            .fold(S::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn scale(&self, k: &S) -> Self {
        Self::new(self.coeffs.iter().map(|c| c.clone() * k.clone()).collect())
    }

    /// `X^deg * p(1/X)`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    /// `p(k X)`.
    pub fn substitute_scaled(&self, k: &S) -> Self {
        let mut pow = S::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c.clone() * pow.clone());
            pow = pow * k.clone();
        }
        Self::new(out)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * S::from_i64(i as i64))
                .collect(),
        )
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => self.scale(&l.recip()),
        }
    }

    /// Euclidean division. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead_inv = divisor.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![S::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = rem[k + dd].clone() * lead_inv.clone();
            if c.is_zero() {
                continue;
            }
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - c.clone() * dc.clone();
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> Self {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    pub fn eval_matrix(&self, m: &Matrix<S>) -> Matrix<S> {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = &acc * m;
            acc = acc.add_identity_scaled(c);
        }
        acc
    }

    /// Human-readable form in the variable `var`, highest degree first.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, mag) = match s.strip_prefix('-') {
                Some(m) if !m.contains(['+', '-']) => (true, m.to_string()),
                _ => (false, s.clone()),
            };
            let needs_paren = mag.contains(['+', '-']);
            let mag = if needs_paren { format!("({mag})") } else { mag };
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = match i {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{i}"),
            };
            if i == 0 {
                out.push_str(&mag);
            } else if mag == "1" {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{mag}*{mono}"));
            }
        }
        out
    }
}

impl<S: Scalar> fmt::Display for UniPoly<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("X"))
    }
}

impl<S: Scalar> Add for UniPoly<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<S: Scalar> Sub for UniPoly<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<S: Scalar> Neg for UniPoly<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(self.coeffs.into_iter().map(|c| -c).collect())
    }
}

impl<S: Scalar> Mul for UniPoly<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        poly_mul(&self, &rhs)
    }
}

pub fn poly_mul<S: Scalar>(p: &UniPoly<S>, q: &UniPoly<S>) -> UniPoly<S> {
    if p.is_zero() || q.is_zero() {
        return UniPoly::zero();
    }
    let mut out = vec![S::zero(); p.coeffs.len() + q.coeffs.len() - 1];
    for (i, a) in p.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.coeffs.iter().enumerate() {
            out[i + j] = out[i + j].clone() + a.clone() * b.clone();
        }
    }
    UniPoly::new(out)
}

/// Monic degree-`m` polynomial whose roots have the given first `m` power sums.
pub fn newton_to_charpoly<S: Scalar>(power_sums: &[S], m: usize) -> Result<UniPoly<S>> {
    if power_sums.len() < m {
        return arg(format!("need {m} power sums, got {}", power_sums.len()));
    }
    // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
    let mut e = vec![S::one()];
    for k in 1..=m {
        let mut acc = S::zero();
        for i in 1..=k {
            let term = e[k - i].clone() * power_sums[i - 1].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        e.push(acc / S::from_i64(k as i64));
    }
    // p = sum_k (-1)^k e_k X^{m-k}
    let mut coeffs = vec![S::zero(); m + 1];
    for (k, ek) in e.into_iter().enumerate() {
        coeffs[m - k] = if k % 2 == 0 { ek } else { -ek };
    }
    Ok(UniPoly::new(coeffs))
}

/// First `k` power sums of the roots of a monic polynomial.
pub fn charpoly_to_power_sums<S: Scalar>(p: &UniPoly<S>, k: usize) -> Result<Vec<S>> {
    if !p.is_monic() {
        return arg("power sums need a monic polynomial");
    }
    let m = p.degree().unwrap();
    // e_i = (-1)^i * coeff(X^{m-i})
    let e: Vec<S> = (0..=m)
        .map(|i| {
            let c = p.coeff(m - i);
            if i % 2 == 0 {
                c
            } else {
                -c
            }
        })
        .collect();
    let mut sums: Vec<S> = Vec::with_capacity(k);
    for j in 1..=k {
        // p_j = sum_{i=1}^{j-1} (-1)^{i-1} e_i p_{j-i} + (-1)^{j-1} j e_j
        let mut acc = S::zero();
        for i in 1..j.min(m + 1) {
            let term = e[i].clone() * sums[j - i - 1].clone();
            acc = if i % 2 == 1 { acc + term } else { acc - term };
        }
        if j <= m {
            let term = e[j].clone() * S::from_i64(j as i64);
            acc = if j % 2 == 1 { acc + term } else { acc - term };
        }
        sums.push(acc);
    }
    Ok(sums)
}

/// Companion matrix: ones on the subdiagonal, last column `-s_0, ..., -s_{m-1}`.
pub fn companion_matrix<S: Scalar>(p: &UniPoly<S>) -> Result<Matrix<S>> {
    if !p.is_monic() {
        return arg("companion matrix needs a monic polynomial");
    }
    let m = p.degree().unwrap();
    if m == 0 {
        return arg("companion matrix needs degree at least 1");
    }
    let mut c = Matrix::zeros(m, m);
    for i in 1..m {
        c.set(i, i - 1, S::one());
    }
    for i in 0..m {
        c.set(i, m - 1, -p.coeff(i));
    }
    Ok(c)
}

/// Scalars `l` with `p(X) = l^m q(X/l)`, i.e. roots(p) = l * roots(q).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistScalars {
    /// All solutions in the rationals.
    pub found: Vec<Rational>,
    /// Solutions exist in an extension that the rationals do not contain.
    pub not_representable: bool,
}

pub fn find_twist_scalars(
    p: &UniPoly<Rational>,
    q: &UniPoly<Rational>,
    m: usize,
) -> Result<TwistScalars> {
    if p.degree() != Some(m) || q.degree() != Some(m) {
        return arg(format!(
            "degree mismatch: expected {m}, got {:?} and {:?}",
            p.degree(),
            q.degree()
        ));
    }
    if !p.is_monic() || !q.is_monic() {
        return arg("twist scalars need monic polynomials");
    }
    if p.coeff(0).is_zero() || q.coeff(0).is_zero() {
        return arg("twist scalars need nonzero constant terms");
    }
    let none = TwistScalars {
        found: vec![],
        not_representable: false,
    };
    // p_k = q_k l^{m-k}: collect the constraints l^{d} = r with d = m - k.
    let mut constraints: Vec<(u64, Rational)> = Vec::new();
    for k in 0..m {
        let (pk, qk) = (p.coeff(k), q.coeff(k));
        match (pk.is_zero(), qk.is_zero()) {
            (true, true) => continue,
            (false, true) | (true, false) => return Ok(none),
            (false, false) => constraints.push(((m - k) as u64, pk / qk)),
        }
    }
    // Bezout: l^g = prod r_k^{u_k} with g = gcd of the exponents.
    let mut g = 0u64;
    let mut target = Rational::one();
    for (d, r) in &constraints {
        if g == 0 {
            g = *d;
            target = r.clone();
            continue;
        }
        let (gg, u, v) = ext_gcd(g as i64, *d as i64);
        target = target.powi(u) * r.powi(v);
        g = gg as u64;
    }
    let consistent = constraints
        .iter()
        .all(|(d, r)| target.powi((*d / g) as i64) == *r);
    if !consistent {
        return Ok(none);
    }
    let mut found = Vec::new();
    if let Some(root) = rational_nth_root(&target, g as u32) {
        if g.is_multiple_of(2) && !root.is_zero() {
            found.push(-root.clone());
        }
        found.push(root);
    }
    found.sort();
    let not_representable = (found.len() as u64) < g;
    Ok(TwistScalars {
        found,
        not_representable,
    })
}

/// Candidate twists when both root multisets are known: every ratio
/// `roots_p[0] / r` for `r` a root of `q`, kept when it maps the multisets onto
/// each other.
pub fn find_twist_scalars_split<S: Scalar>(roots_p: &[S], roots_q: &[S]) -> Vec<S> {
    if roots_p.len() != roots_q.len() || roots_p.is_empty() {
        return Vec::new();
    }
    if roots_q.iter().any(|r| r.is_zero()) || roots_p.iter().any(|r| r.is_zero()) {
        return Vec::new();
    }
    let target = crate::scalar::sorted_multiset(roots_p.to_vec());
    let mut out: Vec<S> = Vec::new();
    for r in roots_q {
        let lambda = roots_p[0].clone() / r.clone();
        if out.contains(&lambda) {
            continue;
        }
        let scaled = crate::scalar::sorted_multiset(
            roots_q.iter().map(|x| x.clone() * lambda.clone()).collect(),
        );
        if scaled == target {
            out.push(lambda);
        }
    }
    out.sort_by(|a, b| a.canonical_cmp(b));
    out
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    if b == 0 {
        (a, 1, 0)
    } else {
        let (g, x, y) = ext_gcd(b, a % b);
        (g, y, x - (a / b) * y)
    }
}
