//! Hodge–Tate cocharacters and weight-side predicates.

mod cone;

use serde::{Deserialize, Serialize};

pub use cone::{
    classicality_bound, default_eta, in_cone_cm, is_admissible, linear_feasible, AffineCone,
    AffineConeJson, LinearIneq,
};

use crate::error::{Error, Result};
use crate::rootdata::{is_dominant, rho, GroupTag, WeightKind, WeightVector};
use crate::scalar::{format_rational, int, parse_rational, rat, sorted_multiset, Rational};

/// Rational cocharacter; for `GSpin` the coordinates are `(c0; k_1, ..., k_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HTCocharacter {
    pub tag: GroupTag,
    pub n: usize,
    pub coords: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HTCocharacterJson {
    pub tag: GroupTag,
    pub n: usize,
    pub coords: Vec<String>,
}

impl HTCocharacter {
    pub fn new(tag: GroupTag, n: usize, coords: Vec<Rational>) -> Result<Self> {
        if n == 0 {
            return Err(Error::Argument("rank n must be positive".into()));
        }
        let want = tag.weight_len(n);
        if coords.len() != want {
            return Err(Error::Argument(format!(
                "{tag:?} cocharacters for n = {n} need {want} coordinates, got {}",
                coords.len()
            )));
        }
        Ok(Self { tag, n, coords })
    }

    pub fn gspin(c0: Rational, k: Vec<Rational>) -> Result<Self> {
        let n = k.len();
        let mut coords = vec![c0];
        coords.extend(k);
        Self::new(GroupTag::GSpin, n, coords)
    }

    pub fn from_weight(w: &WeightVector) -> Result<Self> {
        if w.kind != WeightKind::Cocharacter {
            return Err(Error::Argument("expected a cocharacter".into()));
        }
        Self::new(w.tag, w.n, w.coords.iter().map(|&x| int(x)).collect())
    }

    pub fn is_integral(&self) -> bool {
        self.coords.iter().all(|x| x.is_integer())
    }

    pub fn to_json(&self) -> HTCocharacterJson {
        HTCocharacterJson {
            tag: self.tag,
            n: self.n,
            coords: self.coords.iter().map(format_rational).collect(),
        }
    }

    pub fn from_json(j: &HTCocharacterJson) -> Result<Self> {
        let coords = j
            .coords
            .iter()
            .map(|s| parse_rational(s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(j.tag, j.n, coords)
    }

    fn require_gspin(&self) -> Result<()> {
        if self.tag != GroupTag::GSpin {
            return Err(Error::UnsupportedGroup(format!(
                "expected a GSpin cocharacter, got {:?}",
                self.tag
            )));
        }
        Ok(())
    }

    /// Image in `SO_{2n+1}`: `(k_1, ..., k_n)`.
    fn so_part(&self) -> &[Rational] {
        &self.coords[1..]
    }
}

/// Restriction `z -> mu1(z) mu2(z̄)` of an archimedean parameter to `C^×`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArchParamRestriction {
    pub mu1: HTCocharacter,
    pub mu2: HTCocharacter,
}

impl ArchParamRestriction {
    pub fn new(mu1: HTCocharacter, mu2: HTCocharacter) -> Result<Self> {
        if mu1.tag != mu2.tag || mu1.n != mu2.n {
            return Err(Error::Argument(
                "mu1 and mu2 live on different groups".into(),
            ));
        }
        if mu1
            .coords
            .iter()
            .zip(&mu2.coords)
            .any(|(a, b)| !(a - b).is_integer())
        {
            return Err(Error::Argument("mu1 - mu2 must be integral".into()));
        }
        Ok(Self { mu1, mu2 })
    }
}

/// `c0 - sum_{i in S} k_i` over all subsets `S`, sorted.
pub fn spin_ht_numbers(mu: &HTCocharacter) -> Result<Vec<Rational>> {
    mu.require_gspin()?;
    let k = mu.so_part();
    let out = (0..1u32 << mu.n)
        .map(|s| {
            let sum: Rational = (0..mu.n)
                .filter(|i| s >> i & 1 == 1)
                .map(|i| k[i].clone())
                .sum();
            &mu.coords[0] - sum
        })
        .collect();
    Ok(sorted_multiset(out))
}

/// `k_i, -k_i` and `0`, sorted.
pub fn std_ht_numbers(mu: &HTCocharacter) -> Result<Vec<Rational>> {
    mu.require_gspin()?;
    let mut out = vec![int(0)];
    for k in mu.so_part() {
        out.push(k.clone());
        out.push(-k.clone());
    }
    Ok(sorted_multiset(out))
}

fn distinct(mut v: Vec<Rational>) -> bool {
    v.sort();
    v.windows(2).all(|w| w[0] != w[1])
}

pub fn is_spin_regular(mu: &HTCocharacter) -> Result<bool> {
    Ok(distinct(spin_ht_numbers(mu)?))
}

pub fn is_std_regular(mu: &HTCocharacter) -> Result<bool> {
    Ok(distinct(std_ht_numbers(mu)?))
}

/// Spin-regularity of `mu1`.
pub fn is_spin_regular_param(x: &ArchParamRestriction) -> Result<bool> {
    is_spin_regular(&x.mu1)
}

pub fn is_std_regular_param(x: &ArchParamRestriction) -> Result<bool> {
    is_std_regular(&x.mu1)
}

/// `(2n, 2n-2, ..., 2)`.
pub fn principal_sl2_cochar(n: usize) -> Vec<i64> {
    (1..=n as i64).rev().map(|i| 2 * i).collect()
}

/// Passes unless `mu` is a signed permutation of `x (2n, ..., 2)` for an integer `x`.
pub fn check_ht1(mu: &[i64]) -> bool {
    ht1_witness(mu).is_none()
}

/// The multiple `x >= 0` with `|mu|` sorted equal to `x (2n, ..., 2)`, if any.
pub fn ht1_witness(mu: &[i64]) -> Option<i64> {
    let n = mu.len();
    if n == 0 {
        return None;
    }
    let mut abs: Vec<i64> = mu.iter().map(|x| x.abs()).collect();
    abs.sort_unstable_by(|a, b| b.cmp(a));
    let step = 2 * n as i64;
    if abs[0] % step != 0 {
        return None;
    }
    let x = abs[0] / step;
    let principal: Vec<i64> = principal_sl2_cochar(n).iter().map(|p| p * x).collect();
    (abs == principal).then_some(x)
}

/// [`check_ht1`] without the signed permutations.
pub fn check_ht1_raw(mu: &[i64]) -> bool {
    let pattern = principal_sl2_cochar(mu.len());
    match (mu.first(), pattern.first()) {
        (Some(&m), Some(&p)) if m % p == 0 => {
            mu != pattern.iter().map(|v| v * (m / p)).collect::<Vec<_>>()
        }
        _ => true,
    }
}

/// Passes unless some signed permutation of `mu` has the form `(a, b, a + b)`.
pub fn check_ht2(mu: &[i64]) -> Result<bool> {
    Ok(ht2_witness(mu)?.is_none())
}

/// The first `(a, b)` with `(a, b, a + b)` a signed permutation of `mu`.
pub fn ht2_witness(mu: &[i64]) -> Result<Option<(i64, i64)>> {
    if mu.len() != 3 {
        return Err(Error::Argument(format!(
            "HT2 is a condition for n = 3, got n = {}",
            mu.len()
        )));
    }
    const PERMS: [[usize; 3]; 6] = [
        [0, 1, 2],
        [0, 2, 1],
        [1, 0, 2],
        [1, 2, 0],
        [2, 0, 1],
        [2, 1, 0],
    ];
    for p in PERMS {
        for signs in 0..8u32 {
            let s = |j: usize| {
                if signs >> j & 1 == 1 {
                    -mu[p[j]]
                } else {
                    mu[p[j]]
                }
            };
            if s(2) == s(0) + s(1) {
                return Ok(Some((s(0), s(1))));
            }
        }
    }
    Ok(None)
}

/// [`check_ht2`] on the raw coordinates only.
pub fn check_ht2_raw(mu: &[i64]) -> Result<bool> {
    if mu.len() != 3 {
        return Err(Error::Argument(format!(
            "HT2 is a condition for n = 3, got n = {}",
            mu.len()
        )));
    }
    Ok(mu[2] != mu[0] + mu[1])
}

/// `n(n+1)/4`.
pub fn c_shift_amount(n: usize) -> Rational {
    rat((n * (n + 1)) as i64, 4)
}

/// Adds `n(n+1)/4` along the central cocharacter (`inverse` subtracts it).
pub fn c_shift(mu: &HTCocharacter, inverse: bool) -> Result<HTCocharacter> {
    mu.require_gspin()?;
    let mut out = mu.clone();
    let w = c_shift_amount(mu.n);
    out.coords[0] = if inverse {
        &out.coords[0] - w
    } else {
        &out.coords[0] + w
    };
    Ok(out)
}

/// `λ + ρ` for a dominant `GSp` character, read as a `GSpin` cocharacter.
pub fn hodge_cocharacter(lambda: &WeightVector) -> Result<HTCocharacter> {
    if lambda.tag != GroupTag::GSp || lambda.kind != WeightKind::Character {
        return Err(Error::Argument("expected a GSp character".into()));
    }
    if !is_dominant(lambda)? {
        return Err(Error::Argument(format!(
            "{:?} is not dominant",
            lambda.coords
        )));
    }
    let r = rho(GroupTag::GSp, lambda.n)?;
    let mut coords: Vec<Rational> = lambda
        .coords
        .iter()
        .zip(r)
        .map(|(&l, r)| int(l) + r)
        .collect();
    coords[0] = -coords[0].clone();
    HTCocharacter::new(GroupTag::GSpin, lambda.n, coords)
}
