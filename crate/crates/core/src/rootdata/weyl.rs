//! The Weyl group `S_n ⋉ {±1}^n` acting on torus charts and weights.

use std::collections::{BTreeSet, HashSet};

use serde::{Deserialize, Serialize};

use super::{GroupTag, WeightKind, WeightVector};
use crate::error::{Error, Result};
use crate::scalar::{canonical_cmp_slice, Scalar};

/// Largest `n` for which orbits are enumerated (`2^n n!` elements).
pub const MAX_ORBIT_N: usize = 6;

/// `w = σ ε`: first invert the coordinates where `ε_i = -1`, then move
/// coordinate `i` to position `σ(i)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeylElement {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl WeylElement {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::Argument(
                "permutation and sign vector lengths differ".into(),
            ));
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Argument(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Argument("signs must be +1 or -1".into()));
        }
        Ok(Self { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        Self {
            perm: (0..n).collect(),
            signs: vec![1; n],
        }
    }

    pub fn from_perm(perm: Vec<usize>) -> Result<Self> {
        let n = perm.len();
        Self::new(perm, vec![1; n])
    }

    pub fn from_signs(signs: Vec<i8>) -> Result<Self> {
        let n = signs.len();
        Self::new((0..n).collect(), signs)
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// All `2^n n!` elements in a fixed order.
    pub fn all(n: usize) -> Result<Vec<Self>> {
        if n > MAX_ORBIT_N {
            return Err(Error::Resource(format!(
                "Weyl group enumeration capped at n <= {MAX_ORBIT_N}"
            )));
        }
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut perms);
        perms.sort();
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for bits in 0..1u32 << n {
                let signs = (0..n)
                    .map(|i| if bits >> i & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(Self {
                    perm: p.clone(),
                    signs,
                });
            }
        }
        Ok(out)
    }

    /// `self ∘ other`, acting as `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n());
        let perm = other.perm.iter().map(|&j| self.perm[j]).collect();
        let signs = (0..self.n())
            .map(|j| self.signs[other.perm[j]] * other.signs[j])
            .collect();
        Self { perm, signs }
    }

    pub fn inverse(&self) -> Self {
        let n = self.n();
        let mut inv = vec![0; n];
        for (i, &p) in self.perm.iter().enumerate() {
            inv[p] = i;
        }
        let signs = (0..n).map(|j| self.signs[inv[j]]).collect();
        Self { perm: inv, signs }
    }

    /// Determinant on the (co)character lattice: `sgn(σ) (-1)^{#ε = -1}`.
    pub fn sign(&self) -> i64 {
        let mut visited = vec![false; self.n()];
        let mut parity = 0usize;
        for i in 0..self.n() {
            if visited[i] {
                continue;
            }
            let mut len = 0;
            let mut j = i;
            while !visited[j] {
                visited[j] = true;
                j = self.perm[j];
                len += 1;
            }
            parity += len - 1;
        }
        parity += self.signs.iter().filter(|&&s| s < 0).count();
        if parity.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Transpositions `t_1, ..., t_m` with `σ = t_m ∘ ... ∘ t_1`.
    pub fn transpositions(&self) -> Vec<(usize, usize)> {
        let mut rho = self.perm.clone();
        let mut out = Vec::new();
        for i in 0..rho.len() {
            if rho[i] != i {
                let j = rho.iter().position(|&x| x == i).unwrap();
                rho.swap(i, j);
                out.push((i, j));
            }
        }
        out
    }

    /// Action on the chart `(c; a)`.
    pub fn act_chart<S: Scalar>(&self, c: &S, a: &[S]) -> Result<(S, Vec<S>)> {
        if a.len() != self.n() {
            return Err(Error::Argument(format!(
                "chart of length {} for a rank-{} Weyl element",
                a.len(),
                self.n()
            )));
        }
        let mut c2 = c.clone();
        let mut out = vec![S::zero(); a.len()];
        for (i, ai) in a.iter().enumerate() {
            let v = if self.signs[i] < 0 {
                c2 = c2 / ai.clone();
                ai.recip()
            } else {
                ai.clone()
            };
            out[self.perm[i]] = v;
        }
        Ok((c2, out))
    }

    /// Signed permutation of a plain vector: `x'_{σ(i)} = ε_i x_i`.
    pub fn act_signed<T: Clone + std::ops::Neg<Output = T>>(&self, x: &[T]) -> Vec<T> {
        let mut out = x.to_vec();
        for (i, xi) in x.iter().enumerate() {
            out[self.perm[i]] = if self.signs[i] < 0 {
                -xi.clone()
            } else {
                xi.clone()
            };
        }
        out
    }

    /// Action on integer (co)characters; linear and compatible with the pairing.
    pub fn act_weight(&self, w: &WeightVector) -> Result<WeightVector> {
        w.validate()?;
        if w.n != self.n() {
            return Err(Error::Argument(format!(
                "weight for n = {} vs Weyl element n = {}",
                w.n,
                self.n()
            )));
        }
        let coords = match (w.tag, w.kind) {
            (GroupTag::Sp | GroupTag::SO, _) => self.act_signed(&w.coords),
            (GroupTag::GSpin, WeightKind::Cocharacter) => self.act_gspin_cochar(&w.coords),
            (GroupTag::GSpin, WeightKind::Character) => self.act_gspin_char(&w.coords),
            (GroupTag::GSp, WeightKind::Character) => {
                negate0(&self.act_gspin_cochar(&negate0(&w.coords)))
            }
            (GroupTag::GSp, WeightKind::Cocharacter) => {
                negate0(&self.act_gspin_char(&negate0(&w.coords)))
            }
            (t, _) => {
                return Err(Error::UnsupportedGroup(format!(
                    "no Weyl action on {t:?} weights"
                )))
            }
        };
        Ok(WeightVector {
            coords,
            ..w.clone()
        })
    }

    /// `(n_0; n) -> (n_0 - sum_{ε_i=-1} n_i; σ(ε n))`.
    fn act_gspin_cochar(&self, v: &[i64]) -> Vec<i64> {
        let mut n0 = v[0];
        for (i, &s) in self.signs.iter().enumerate() {
            if s < 0 {
                n0 -= v[i + 1];
            }
        }
        let mut out = vec![n0];
        out.extend(self.act_signed(&v[1..]));
        out
    }

    /// Contragredient of the cocharacter action: `m_i -> -m_0 - m_i` on sign changes.
    fn act_gspin_char(&self, v: &[i64]) -> Vec<i64> {
        let m0 = v[0];
        let mut tmp = v[1..].to_vec();
        for (i, &s) in self.signs.iter().enumerate() {
            if s < 0 {
                tmp[i] = -m0 - tmp[i];
            }
        }
        let mut out = vec![m0];
        out.extend(
            WeylElement {
                perm: self.perm.clone(),
                signs: vec![1; self.n()],
            }
            .act_signed(&tmp),
        );
        out
    }
}

fn negate0(v: &[i64]) -> Vec<i64> {
    let mut w = v.to_vec();
    w[0] = -w[0];
    w
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

/// Deduplicated orbit of a weight, sorted.
pub fn weyl_orbit_weight(w: &WeightVector) -> Result<BTreeSet<WeightVector>> {
    let mut out = BTreeSet::new();
    for g in WeylElement::all(w.n)? {
        out.insert(g.act_weight(w)?);
    }
    Ok(out)
}

/// Deduplicated orbit of a chart point, in canonical order.
pub fn weyl_orbit_chart<S: Scalar>(c: &S, a: &[S]) -> Result<Vec<(S, Vec<S>)>> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in WeylElement::all(a.len())? {
        let p = g.act_chart(c, a)?;
        if seen.insert(p.clone()) {
            out.push(p);
        }
    }
    out.sort_by(|x, y| {
        x.0.canonical_cmp(&y.0)
            .then_with(|| canonical_cmp_slice(&x.1, &y.1))
    });
    Ok(out)
}
