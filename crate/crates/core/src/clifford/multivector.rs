use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::context::CliffordContext;
use crate::algebra::Matrix;
use crate::error::{Error, Result};
use crate::scalar::{require_common_field, Scalar};

/// Element of the Clifford algebra, stored as a sparse map from basis masks.
#[derive(Clone)]
pub struct Multivector<S> {
    ctx: Arc<CliffordContext>,
    terms: BTreeMap<u32, S>,
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Multivector")
            .field("n", &self.ctx.n())
            .field("terms", &self.terms)
            .finish()
    }
}

impl<S: Scalar> PartialEq for Multivector<S> {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n() == other.ctx.n() && self.terms == other.terms
    }
}

impl<S: Scalar> Eq for Multivector<S> {}

pub(crate) fn times_int<S: Scalar>(c: &S, k: i64) -> S {
    match k {
        1 => c.clone(),
        -1 => -c.clone(),
        _ => c.clone() * S::from_i64(k),
    }
}

fn accumulate<S: Scalar>(map: &mut BTreeMap<u32, S>, key: u32, v: S) {
    if v.is_zero() {
        return;
    }
    match map.get_mut(&key) {
        Some(x) => {
            let s = x.clone() + v;
            if s.is_zero() {
                map.remove(&key);
            } else {
                *x = s;
            }
        }
        None => {
            map.insert(key, v);
        }
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn zero(ctx: &Arc<CliffordContext>) -> Self {
        Self {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(ctx: &Arc<CliffordContext>, s: S) -> Self {
        Self::monomial(ctx, 0, s)
    }

    pub fn one(ctx: &Arc<CliffordContext>) -> Self {
        Self::scalar(ctx, S::one())
    }

    /// `c * E_I`. Panics if the mask lies outside the index universe.
    pub fn monomial(ctx: &Arc<CliffordContext>, mask: u32, c: S) -> Self {
        assert!((mask as usize) < ctx.dim(), "basis mask out of range");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(mask, c);
        }
        Self {
            ctx: ctx.clone(),
            terms,
        }
    }

    /// Generator `e_j`, 0-based.
    pub fn generator(ctx: &Arc<CliffordContext>, j: usize) -> Self {
        Self::monomial(ctx, 1 << j, S::one())
    }

    /// `sum_j v_j e_j`.
    pub fn vector(ctx: &Arc<CliffordContext>, coords: &[S]) -> Result<Self> {
        if coords.len() != ctx.dim_v() {
            return Err(Error::Argument(format!(
                "expected {} coordinates, got {}",
                ctx.dim_v(),
                coords.len()
            )));
        }
        let mut out = Self::zero(ctx);
        for (j, c) in coords.iter().enumerate() {
            accumulate(&mut out.terms, 1 << j, c.clone());
        }
        Ok(out)
    }

    pub fn from_terms(
        ctx: &Arc<CliffordContext>,
        terms: impl IntoIterator<Item = (u32, S)>,
    ) -> Result<Self> {
        let mut out = Self::zero(ctx);
        for (m, c) in terms {
            if m as usize >= ctx.dim() {
                return Err(Error::Argument(format!(
                    "basis mask {m:#b} outside the index universe"
                )));
            }
            accumulate(&mut out.terms, m, c);
        }
        Ok(out)
    }

    pub fn context(&self) -> &Arc<CliffordContext> {
        &self.ctx
    }

    pub fn n(&self) -> usize {
        self.ctx.n()
    }

    pub fn terms(&self) -> &BTreeMap<u32, S> {
        &self.terms
    }

    pub fn coeff(&self, mask: u32) -> S {
        self.terms.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_even(&self) -> bool {
        self.terms.keys().all(|m| m.count_ones() % 2 == 0)
    }

    pub fn scalar_part(&self) -> S {
        self.coeff(0)
    }

    /// `Some(s)` when the element is the scalar `s`.
    pub fn as_scalar(&self) -> Option<S> {
        match self.terms.len() {
            0 => Some(S::zero()),
            1 if self.terms.contains_key(&0) => Some(self.coeff(0)),
            _ => None,
        }
    }

    /// Grade-one coefficients, or `None` if other grades occur.
    pub fn as_vector(&self) -> Option<Vec<S>> {
        if self.terms.keys().any(|m| m.count_ones() != 1) {
            return None;
        }
        Some((0..self.ctx.dim_v()).map(|j| self.coeff(1 << j)).collect())
    }

    pub fn grade_part(&self, r: u32) -> Self {
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.count_ones() == r)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    fn check_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx.n() != other.ctx.n() {
            return Err(Error::ContextMismatch(format!(
                "multivectors over n = {} and n = {}",
                self.ctx.n(),
                other.ctx.n()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            accumulate(&mut out.terms, *m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, k: &S) -> Self {
        if k.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (*m, c.clone() * k.clone()))
                .collect(),
        }
    }

    /// Clifford product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_ctx(other)?;
        Ok(self.mul_same(other))
    }

    pub(crate) fn mul_same(&self, other: &Self) -> Self {
        let mut acc: BTreeMap<u32, S> = BTreeMap::new();
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                let ab = a.clone() * b.clone();
                for &(k, s) in self.ctx.product(*i, *j).iter() {
                    accumulate(&mut acc, k, times_int(&ab, s));
                }
            }
        }
        Self {
            ctx: self.ctx.clone(),
            terms: acc,
        }
    }

    /// Main involution `(v_1 ... v_r)^* = (-1)^r v_r ... v_1`.
    pub fn main_involution(&self) -> Self {
        let mut acc = BTreeMap::new();
        for (m, c) in &self.terms {
            for &(k, s) in self.ctx.involution_of(*m) {
                accumulate(&mut acc, k, times_int(c, s));
            }
        }
        Self {
            ctx: self.ctx.clone(),
            terms: acc,
        }
    }

    /// Scalar part of `x^* x`, or an error when `x^* x` is not a scalar.
    pub fn spinor_norm(&self) -> Result<S> {
        if !self.is_even() {
            return Err(Error::NotInGSpin("odd element".into()));
        }
        self.main_involution()
            .mul_same(self)
            .as_scalar()
            .ok_or_else(|| Error::NotInGSpin("x^* x is not a scalar".into()))
    }

    /// Even, with `x^* x` a nonzero scalar, and `x V x^*` contained in `V`.
    pub fn is_gspin(&self) -> bool {
        match self.spinor_norm() {
            Ok(nrm) if !nrm.is_zero() => {}
            _ => return false,
        }
        let star = self.main_involution();
        (0..self.ctx.dim_v()).all(|j| {
            let e = Self::generator(&self.ctx, j);
            self.mul_same(&e).mul_same(&star).as_vector().is_some()
        })
    }

    /// Inverse of an element with scalar `x^* x`.
    pub fn gspin_inverse(&self) -> Result<Self> {
        let nrm = self.spinor_norm()?;
        if nrm.is_zero() {
            return Err(Error::NotInGSpin("spinor norm is zero".into()));
        }
        Ok(self.main_involution().scale(&nrm.recip()))
    }

    /// Matrix of `v -> x v x^*` on `V` in the basis `e_0..e_{2n}`.
    pub fn gspin_to_go(&self) -> Result<GoImage<S>> {
        if !self.is_gspin() {
            return Err(Error::NotInGSpin("element does not normalize V".into()));
        }
        let nrm = self.spinor_norm()?;
        let star = self.main_involution();
        let d = self.ctx.dim_v();
        let mut m = Matrix::zeros(d, d);
        for j in 0..d {
            let img = self
                .mul_same(&Self::generator(&self.ctx, j))
                .mul_same(&star);
            let col = img.as_vector().expect("checked by is_gspin");
            for (i, v) in col.into_iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(GoImage {
            matrix: m,
            spinor_norm: nrm,
        })
    }

    /// 1-based JSON form `{"n": n, "terms": {"1,3": "5/2"}}`.
    pub fn to_json(&self) -> MultivectorJson {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let idx: Vec<String> = (0..32)
                    .filter(|b| m >> b & 1 == 1)
                    .map(|b| (b + 1).to_string())
                    .collect();
                (idx.join(","), c.to_string())
            })
            .collect();
        MultivectorJson {
            n: self.ctx.n(),
            terms,
        }
    }

    pub fn from_json(j: &MultivectorJson) -> Result<Self> {
        let ctx = CliffordContext::shared(j.n)?;
        let parsed = j
            .terms
            .iter()
            .map(|(k, v)| Ok((parse_index_list(k, ctx.dim_v())?, S::parse_exact(v)?)))
            .collect::<Result<Vec<_>>>()?;
        require_common_field(parsed.iter().map(|(_, v)| v))?;
        let mut out = Self::zero(&ctx);
        for (mask, v) in parsed {
            accumulate(&mut out.terms, mask, v);
        }
        Ok(out)
    }
}

/// Parses `"1,3"` (1-based) into a basis mask; the empty string is the unit.
pub fn parse_index_list(s: &str, dim_v: usize) -> Result<u32> {
    let mut mask = 0u32;
    for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let i: usize = part
            .parse()
            .map_err(|_| Error::Parse(format!("bad basis index {part:?}")))?;
        if i == 0 || i > dim_v {
            return Err(Error::Parse(format!("basis index {i} outside 1..={dim_v}")));
        }
        if mask >> (i - 1) & 1 == 1 {
            return Err(Error::Parse(format!("repeated basis index {i}")));
        }
        mask |= 1 << (i - 1);
    }
    Ok(mask)
}

impl<S: Scalar> fmt::Display for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| {
                if *m == 0 {
                    return c.to_string();
                }
                let mono: Vec<String> = (0..32)
                    .filter(|b| m >> b & 1 == 1)
                    .map(|b| format!("e{}", b + 1))
                    .collect();
                format!("({c})*{}", mono.join("*"))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultivectorJson {
    pub n: usize,
    pub terms: BTreeMap<String, String>,
}

/// Image of a GSpin element in `GO_{2n+1}`: `matrix = N * g` with `g` in
/// `SO_{2n+1}` and `N` the spinor norm, so the similitude factor is `N^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoImage<S> {
    pub matrix: Matrix<S>,
    pub spinor_norm: S,
}

impl<S: Scalar> GoImage<S> {
    pub fn similitude(&self) -> S {
        self.spinor_norm.clone() * self.spinor_norm.clone()
    }

    /// `matrix / N`.
    pub fn so_matrix(&self) -> Matrix<S> {
        self.matrix.scale(&self.spinor_norm.recip())
    }
}
