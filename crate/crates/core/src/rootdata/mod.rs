//! Root data of `GSp_2n`, `Sp_2n`, `SO_2n+1` and `GSpin_2n+1`.
//!
//! Coordinates: `GSp` uses `(e_0; e_1, ..., e_n)` with roots `e_i - e_j`,
//! `e_i + e_j - e_0`, `2 e_i - e_0`. `GSpin` uses the torus chart `(c; a)`:
//! the character `(m_0; m)` evaluates to `c^{m_0} prod a_i^{m_i}`, and the
//! cocharacter `(n_0; n)` is `z -> (z^{n_0}; z^{n_1}, ...)`. The duality
//! `X^*(T_GSp) = X_*(T_GSpin)` negates coordinate 0 (see [`flip`]).

mod adjoint;
mod character;
mod weyl;

use serde::{Deserialize, Serialize};

pub use adjoint::{adjoint_trace_explicit, adjoint_trace_so, is_odd};
pub use character::{evaluate_character, weyl_character, weyl_dim, weyl_dim_formula};
pub use weyl::{weyl_orbit_chart, weyl_orbit_weight, WeylElement, MAX_ORBIT_N};

use crate::error::{Error, Result};
use crate::scalar::{int, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GroupTag {
    GSp,
    Sp,
    SO,
    GSpin,
    GO,
    GL,
    G2Torus,
}

impl GroupTag {
    /// Coordinate count of weights for rank parameter `n`.
    pub fn weight_len(self, n: usize) -> usize {
        match self {
            GroupTag::GSp | GroupTag::GSpin | GroupTag::GO => n + 1,
            GroupTag::Sp | GroupTag::SO | GroupTag::GL => n,
            GroupTag::G2Torus => 2,
        }
    }

    fn has_root_system(self) -> bool {
        matches!(
            self,
            GroupTag::GSp | GroupTag::Sp | GroupTag::SO | GroupTag::GSpin
        )
    }
}

#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub enum WeightKind {
    #[default]
    Character,
    Cocharacter,
}

impl WeightKind {
    pub fn dual(self) -> Self {
        match self {
            WeightKind::Character => WeightKind::Cocharacter,
            WeightKind::Cocharacter => WeightKind::Character,
        }
    }
}

/// Integer (co)character, serialized as `{"tag":"GSp","n":2,"coords":[c,k1,k2]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeightVector {
    pub tag: GroupTag,
    pub n: usize,
    #[serde(default)]
    pub kind: WeightKind,
    pub coords: Vec<i64>,
}

impl WeightVector {
    pub fn new(tag: GroupTag, n: usize, kind: WeightKind, coords: Vec<i64>) -> Result<Self> {
        let w = Self {
            tag,
            n,
            kind,
            coords,
        };
        w.validate()?;
        Ok(w)
    }

    pub fn character(tag: GroupTag, n: usize, coords: Vec<i64>) -> Result<Self> {
        Self::new(tag, n, WeightKind::Character, coords)
    }

    pub fn cocharacter(tag: GroupTag, n: usize, coords: Vec<i64>) -> Result<Self> {
        Self::new(tag, n, WeightKind::Cocharacter, coords)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::Argument("rank n must be positive".into()));
        }
        let want = self.tag.weight_len(self.n);
        if self.coords.len() != want {
            return Err(Error::Argument(format!(
                "{:?} weights for n = {} need {want} coordinates, got {}",
                self.tag,
                self.n,
                self.coords.len()
            )));
        }
        Ok(())
    }

    pub fn zero(tag: GroupTag, n: usize, kind: WeightKind) -> Self {
        Self {
            tag,
            n,
            kind,
            coords: vec![0; tag.weight_len(n)],
        }
    }
}

/// Negates coordinate 0, moving between `GSp` and `GSpin` chart coordinates
/// (characters of one side are cocharacters of the other).
pub fn flip(w: &WeightVector) -> Result<WeightVector> {
    let tag = match w.tag {
        GroupTag::GSp => GroupTag::GSpin,
        GroupTag::GSpin => GroupTag::GSp,
        GroupTag::Sp => GroupTag::SO,
        GroupTag::SO => GroupTag::Sp,
        t => {
            return Err(Error::UnsupportedGroup(format!(
                "{t:?} has no dual identification here"
            )))
        }
    };
    let mut coords = w.coords.clone();
    if matches!(w.tag, GroupTag::GSp | GroupTag::GSpin) {
        coords[0] = -coords[0];
    }
    Ok(WeightVector {
        tag,
        n: w.n,
        kind: w.kind.dual(),
        coords,
    })
}

/// Positive roots with their coroots (same order) and the simple indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystem {
    pub roots: Vec<Vec<i64>>,
    pub coroots: Vec<Vec<i64>>,
    pub simple: Vec<usize>,
}

impl RootSystem {
    pub fn simple_roots(&self) -> Vec<Vec<i64>> {
        self.simple.iter().map(|&i| self.roots[i].clone()).collect()
    }

    pub fn simple_coroots(&self) -> Vec<Vec<i64>> {
        self.simple
            .iter()
            .map(|&i| self.coroots[i].clone())
            .collect()
    }
}

/// Positive roots (characters) and coroots (cocharacters) of `tag`.
pub fn root_system(tag: GroupTag, n: usize) -> Result<RootSystem> {
    if !tag.has_root_system() {
        return Err(Error::UnsupportedGroup(format!(
            "{tag:?} has no root datum in this library"
        )));
    }
    if n == 0 {
        return Err(Error::Argument("rank n must be positive".into()));
    }
    let off = usize::from(matches!(tag, GroupTag::GSp | GroupTag::GSpin));
    let len = n + off;
    let e = |i: usize| {
        let mut v = vec![0i64; len];
        v[i + off] = 1;
        v
    };
    let e0 = |k: i64| {
        let mut v = vec![0i64; len];
        if off == 1 {
            v[0] = k;
        }
        v
    };
    let lin = |parts: &[(i64, &Vec<i64>)]| {
        let mut v = vec![0i64; len];
        for (k, p) in parts {
            for (x, y) in v.iter_mut().zip(p.iter()) {
                *x += k * y;
            }
        }
        v
    };
    let mut roots = Vec::new();
    let mut coroots = Vec::new();
    let mut simple = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let (ei, ej) = (e(i), e(j));
            if j == i + 1 {
                simple.push(roots.len());
            }
            roots.push(lin(&[(1, &ei), (-1, &ej)]));
            coroots.push(lin(&[(1, &ei), (-1, &ej)]));
            let plus = lin(&[(1, &ei), (1, &ej)]);
            match tag {
                GroupTag::GSp => {
                    roots.push(lin(&[(1, &plus), (1, &e0(-1))]));
                    coroots.push(plus);
                }
                GroupTag::GSpin => {
                    roots.push(plus.clone());
                    coroots.push(lin(&[(1, &plus), (1, &e0(1))]));
                }
                _ => {
                    roots.push(plus.clone());
                    coroots.push(plus);
                }
            }
        }
    }
    for i in 0..n {
        let ei = e(i);
        if i == n - 1 {
            simple.push(roots.len());
        }
        let (r, c) = match tag {
            GroupTag::GSp => (lin(&[(2, &ei), (1, &e0(-1))]), ei),
            GroupTag::Sp => (lin(&[(2, &ei)]), ei),
            GroupTag::SO => (ei.clone(), lin(&[(2, &ei)])),
            GroupTag::GSpin => (ei.clone(), lin(&[(2, &ei), (1, &e0(1))])),
            _ => unreachable!(),
        };
        roots.push(r);
        coroots.push(c);
    }
    Ok(RootSystem {
        roots,
        coroots,
        simple,
    })
}

fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Perfect pairing between a character and a cocharacter of the same group.
pub fn pairing(chi: &WeightVector, mu: &WeightVector) -> Result<i64> {
    chi.validate()?;
    mu.validate()?;
    if chi.tag != mu.tag || chi.n != mu.n {
        return Err(Error::Argument(format!(
            "cannot pair {:?}(n={}) with {:?}(n={})",
            chi.tag, chi.n, mu.tag, mu.n
        )));
    }
    if chi.kind == mu.kind {
        return Err(Error::Argument(
            "pairing needs a character and a cocharacter".into(),
        ));
    }
    Ok(dot(&chi.coords, &mu.coords))
}

fn as_weights(tag: GroupTag, n: usize, kind: WeightKind, vs: Vec<Vec<i64>>) -> Vec<WeightVector> {
    vs.into_iter()
        .map(|coords| WeightVector {
            tag,
            n,
            kind,
            coords,
        })
        .collect()
}

pub fn simple_roots(tag: GroupTag, n: usize) -> Result<Vec<WeightVector>> {
    Ok(as_weights(
        tag,
        n,
        WeightKind::Character,
        root_system(tag, n)?.simple_roots(),
    ))
}

pub fn simple_coroots(tag: GroupTag, n: usize) -> Result<Vec<WeightVector>> {
    Ok(as_weights(
        tag,
        n,
        WeightKind::Cocharacter,
        root_system(tag, n)?.simple_coroots(),
    ))
}

/// Half the sum of the positive roots, a rational character.
pub fn rho(tag: GroupTag, n: usize) -> Result<Vec<Rational>> {
    Ok(two_rho(tag, n)?.into_iter().map(|x| rat(x, 2)).collect())
}

/// Sum of the positive roots.
pub fn two_rho(tag: GroupTag, n: usize) -> Result<Vec<i64>> {
    let rs = root_system(tag, n)?;
    let mut s = vec![0i64; tag.weight_len(n)];
    for r in &rs.roots {
        for (x, y) in s.iter_mut().zip(r) {
            *x += y;
        }
    }
    Ok(s)
}

/// `<rho, mu>` for a cocharacter `mu`.
pub fn rho_pairing(mu: &WeightVector) -> Result<Rational> {
    if mu.kind != WeightKind::Cocharacter {
        return Err(Error::Argument("rho pairs with cocharacters".into()));
    }
    mu.validate()?;
    let tr = two_rho(mu.tag, mu.n)?;
    Ok(rat(dot(&tr, &mu.coords), 2))
}

/// Pairings of `w` with the simple coroots (characters) or simple roots (cocharacters).
pub fn simple_pairings(w: &WeightVector) -> Result<Vec<i64>> {
    w.validate()?;
    let rs = root_system(w.tag, w.n)?;
    let dual = match w.kind {
        WeightKind::Character => rs.simple_coroots(),
        WeightKind::Cocharacter => rs.simple_roots(),
    };
    Ok(dual.iter().map(|d| dot(d, &w.coords)).collect())
}

fn all_pairings(w: &WeightVector) -> Result<Vec<i64>> {
    w.validate()?;
    let rs = root_system(w.tag, w.n)?;
    let dual = match w.kind {
        WeightKind::Character => rs.coroots,
        WeightKind::Cocharacter => rs.roots,
    };
    Ok(dual.iter().map(|d| dot(d, &w.coords)).collect())
}

pub fn is_dominant(w: &WeightVector) -> Result<bool> {
    Ok(simple_pairings(w)?.iter().all(|&p| p >= 0))
}

/// No (co)root pairing vanishes.
pub fn is_regular(w: &WeightVector) -> Result<bool> {
    Ok(all_pairings(w)?.iter().all(|&p| p != 0))
}

/// `<a, b>` for a rational character and an integer cocharacter.
pub fn dot_rational(a: &[Rational], b: &[i64]) -> Rational {
    a.iter()
        .zip(b)
        .fold(int(0), |acc, (x, &y)| acc + x * int(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_diagonal_is_two() {
        for tag in [GroupTag::GSp, GroupTag::Sp, GroupTag::SO, GroupTag::GSpin] {
            for n in 1..=4 {
                let rs = root_system(tag, n).unwrap();
                assert_eq!(rs.simple.len(), n);
                for (r, c) in rs.roots.iter().zip(&rs.coroots) {
                    assert_eq!(dot(r, c), 2, "{tag:?} n={n} {r:?} {c:?}");
                }
            }
        }
    }

    #[test]
    fn gsp4_simple_roots() {
        let s = root_system(GroupTag::GSp, 2).unwrap().simple_roots();
        assert_eq!(s, vec![vec![0, 1, -1], vec![-1, 0, 2]]);
    }

    #[test]
    fn rho_values() {
        assert_eq!(rho(GroupTag::Sp, 2).unwrap(), vec![int(2), int(1)]);
        assert_eq!(
            rho(GroupTag::GSp, 2).unwrap(),
            vec![rat(-3, 2), int(2), int(1)]
        );
        assert_eq!(
            rho(GroupTag::GSpin, 2).unwrap(),
            vec![int(0), rat(3, 2), rat(1, 2)]
        );
        for tag in [GroupTag::GSp, GroupTag::Sp, GroupTag::SO, GroupTag::GSpin] {
            let rs = root_system(tag, 3).unwrap();
            let tr = two_rho(tag, 3).unwrap();
            for c in rs.simple_coroots() {
                assert_eq!(dot(&tr, &c), 2);
            }
        }
    }

    #[test]
    fn duality_flip_matches_roots_and_coroots() {
        for n in 1..=4 {
            let gsp = root_system(GroupTag::GSp, n).unwrap();
            let gspin = root_system(GroupTag::GSpin, n).unwrap();
            let neg0 = |v: &Vec<i64>| {
                let mut w = v.clone();
                w[0] = -w[0];
                w
            };
            let mut a: Vec<_> = gsp.roots.iter().map(neg0).collect();
            let mut b = gspin.coroots.clone();
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn dominance_examples() {
        let w = |v: Vec<i64>| WeightVector::character(GroupTag::GSp, 2, v).unwrap();
        assert!(is_dominant(&w(vec![5, 3, 1])).unwrap() && is_regular(&w(vec![5, 3, 1])).unwrap());
        assert!(is_dominant(&w(vec![5, 2, 2])).unwrap() && !is_regular(&w(vec![5, 2, 2])).unwrap());
        assert!(!is_dominant(&w(vec![5, 1, 3])).unwrap());
        let a2 = WeightVector::character(GroupTag::GSp, 2, vec![-1, 0, 2]).unwrap();
        let c2 = WeightVector::cocharacter(GroupTag::GSp, 2, vec![0, 0, 1]).unwrap();
        assert_eq!(pairing(&a2, &c2).unwrap(), 2);
        assert!(pairing(&a2, &a2).is_err());
    }

    #[test]
    fn json_shape() {
        let w: WeightVector =
            serde_json::from_str(r#"{"tag":"GSp","n":2,"coords":[0,3,1]}"#).unwrap();
        assert_eq!(w.kind, WeightKind::Character);
        assert_eq!(w.coords, vec![0, 3, 1]);
    }
}
