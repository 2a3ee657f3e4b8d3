//! The `G_2` torus inside `Spin_7`.

use serde::Serialize;

use crate::conjugacy::{spin_eigenvalues, std_eigenvalues, GSpinTorusPoint};
use crate::error::{Error, Result};
use crate::scalar::{require_common_field, sorted_multiset, Scalar};
use crate::weights::check_ht2;

/// `(x, y)` on the `G_2` torus, whose cocharacters are `(a, b, a + b)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct G2TorusPoint<S> {
    x: S,
    y: S,
}

impl<S: Scalar> G2TorusPoint<S> {
    pub fn new(x: S, y: S) -> Result<Self> {
        if x.is_zero() || y.is_zero() {
            return Err(Error::Argument(
                "G2 torus coordinates must be nonzero".into(),
            ));
        }
        require_common_field([&x, &y])?;
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &S {
        &self.x
    }

    pub fn y(&self) -> &S {
        &self.y
    }
}

/// `(c; x, y, xy)` with `c = xy`, the lift of spinor norm 1.
pub fn embed_so7<S: Scalar>(g: &G2TorusPoint<S>) -> GSpinTorusPoint<S> {
    let xy = g.x.clone() * g.y.clone();
    GSpinTorusPoint::new(xy.clone(), vec![g.x.clone(), g.y.clone(), xy])
        .expect("nonzero coordinates")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpinRestriction<S> {
    pub trace_spin: S,
    pub trace_std: S,
    /// Spin eigenvalues are the standard ones together with `1`.
    pub multiset_ok: bool,
    pub ok: bool,
}

/// The spin representation restricts to `G_2` as `std ⊕ 1`.
pub fn spin_restriction_check<S: Scalar>(g: &G2TorusPoint<S>) -> SpinRestriction<S> {
    let t = embed_so7(g);
    let spin = spin_eigenvalues(&t);
    let mut std = std_eigenvalues(&t);
    let sum = |v: &[S]| v.iter().fold(S::zero(), |acc, x| acc + x.clone());
    let trace_spin = sum(&spin);
    let trace_std = sum(&std);
    std.push(S::one());
    let multiset_ok = sorted_multiset(spin) == sorted_multiset(std);
    let ok = trace_spin == S::one() + trace_std.clone();
    SpinRestriction {
        trace_spin,
        trace_std,
        multiset_ok,
        ok,
    }
}

/// Some signed permutation of `(a_1, a_2, a_3)` (signs acting as inversion)
/// satisfies `a_3 = a_1 a_2`.
pub fn is_g2_class<S: Scalar>(a: &[S]) -> Result<bool> {
    if a.len() != 3 {
        return Err(Error::Argument(format!(
            "G2 classes live in SO_7, got n = {}",
            a.len()
        )));
    }
    if a.iter().any(|v| v.is_zero()) {
        return Err(Error::Argument("torus coordinates must be nonzero".into()));
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
        for inv in 0..8u32 {
            let v = |j: usize| {
                if inv >> j & 1 == 1 {
                    a[p[j]].recip()
                } else {
                    a[p[j]].clone()
                }
            };
            if v(2) == v(0) * v(1) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

/// `a` is a signed permutation of `(s^n, s^{n-1}, ..., s)`: the image of the
/// principal `SL_2` cocharacter.
pub fn is_principal_type<S: Scalar>(a: &[S]) -> bool {
    let n = a.len();
    crate::rootdata::WeylElement::all(n).is_ok_and(|ws| {
        ws.iter().any(|w| {
            let v: Vec<S> = (0..n)
                .map(|j| {
                    if w.signs()[j] < 0 {
                        a[w.perm()[j]].recip()
                    } else {
                        a[w.perm()[j]].clone()
                    }
                })
                .collect();
            (0..n).all(|j| v[j] == v[n - 1].powi((n - j) as i64))
        })
    })
}

/// `μ` lies in the Weyl saturation of the `G_2` cocharacter lattice.
pub fn ht2_matches_g2(mu: &[i64]) -> Result<bool> {
    Ok(!check_ht2(mu)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat, Rational};

    fn g(x: i64, y: i64) -> G2TorusPoint<Rational> {
        G2TorusPoint::new(int(x), int(y)).unwrap()
    }

    #[test]
    fn embeddings() {
        assert_eq!(embed_so7(&g(1, 1)), GSpinTorusPoint::identity(3));
        let e = embed_so7(&g(4, 1));
        assert_eq!((e.c(), e.a()), (&int(4), &[int(4), int(1), int(4)][..]));
        let e = embed_so7(&g(9, 4));
        assert_eq!(e.a(), &[int(9), int(4), int(36)][..]);
        assert_eq!(e.c() * e.c(), int(9 * 4 * 36));
    }

    #[test]
    fn restriction() {
        let r = spin_restriction_check(&g(1, 1));
        assert_eq!(
            (r.trace_spin.clone(), r.trace_std.clone()),
            (int(8), int(7))
        );
        assert!(r.ok && r.multiset_ok);
        for (x, y) in [(4, 1), (9, 4), (-2, 3)] {
            let r = spin_restriction_check(&g(x, y));
            assert!(r.ok && r.multiset_ok, "({x},{y})");
        }
    }

    #[test]
    fn g2_classes() {
        assert!(is_g2_class(&[int(2), int(3), int(6)]).unwrap());
        assert!(!is_g2_class(&[int(2), int(3), int(5)]).unwrap());
        assert!(is_g2_class(&[int(2), int(3), rat(1, 6)]).unwrap());
        assert!(is_principal_type(&[int(8), int(4), int(2)]));
        assert!(is_principal_type(&[rat(1, 4), int(8), int(2)]));
        assert!(!is_principal_type(embed_so7(&g(2, 3)).a()));
        assert!(ht2_matches_g2(&[1, 2, 3]).unwrap());
        assert!(!ht2_matches_g2(&[1, 2, 4]).unwrap());
        assert!(ht2_matches_g2(&[0, 0, 0]).unwrap());
    }
}
