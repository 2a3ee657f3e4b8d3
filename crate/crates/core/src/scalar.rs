//! Exact scalar fields.
//!
//! Everything downstream is generic over [`Scalar`]: the rationals
//! ([`BigRational`]) and real or imaginary quadratic extensions
//! ([`Quadratic`](crate::quadratic::Quadratic)).

use std::cmp::Ordering;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// An exact field of characteristic zero.
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Eq
    + Hash
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn from_rational(r: BigRational) -> Self;

    /// Multiplicative inverse. Panics on zero.
    fn recip(&self) -> Self;

    /// A square root inside the same field, if one exists.
    fn sqrt(&self) -> Option<Self>;

    /// Fixed total order used for canonical representatives.
    fn canonical_cmp(&self, other: &Self) -> Ordering;

    /// Real value, when the element is real.
    fn approx_f64(&self) -> Option<f64>;

    /// Complex absolute value.
    fn modulus(&self) -> f64;

    /// `(a, b, d)` with `self = a + b sqrt(d)` and `d >= 0`, when real.
    fn real_surd_parts(&self) -> Option<(Rational, Rational, i64)>;

    fn parse_exact(s: &str) -> Result<Self>;

    /// The radicand `d` of the extension `Q(sqrt(d))` the element needs, if any.
    fn radicand(&self) -> Option<i64> {
        None
    }

    fn from_i64(v: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(v)))
    }

    fn powi(&self, e: i64) -> Self {
        let base = if e < 0 { self.recip() } else { self.clone() };
        let mut exp = e.unsigned_abs();
        let mut acc = Self::one();
        let mut sq = base;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * sq.clone();
            }
            exp >>= 1;
            if exp > 0 {
                sq = sq.clone() * sq;
            }
        }
        acc
    }
}

/// The rational field.
pub type Rational = BigRational;

/// `p/q` with `q` omitted when 1.
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    BigRational::from_str(t).map_err(|e| Error::Parse(format!("bad rational {t:?}: {e}")))
}

pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    BigRational::from_integer(BigInt::from(v))
}

/// Exact `k`-th root of a rational, choosing the positive root for even `k`.
pub fn rational_nth_root(r: &Rational, k: u32) -> Option<Rational> {
    assert!(k >= 1);
    if r.is_zero() {
        return Some(Rational::zero());
    }
    if r.is_negative() && k.is_multiple_of(2) {
        return None;
    }
    let root_int = |v: &BigInt| -> Option<BigInt> {
        let a = v.abs();
        let c = a.nth_root(k);
        if num_traits::pow(c.clone(), k as usize) == a {
            Some(if v.is_negative() { -c } else { c })
        } else {
            None
        }
    };
    let n = root_int(r.numer())?;
    let d = root_int(r.denom())?;
    Some(BigRational::new(n, d))
}

pub(crate) fn rational_canonical_cmp(a: &Rational, b: &Rational) -> Ordering {
    a.numer()
        .cmp(b.numer())
        .then_with(|| a.denom().cmp(b.denom()))
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // huge numerators/denominators: go through a scaled ratio
        let n = r.numer().bits() as i64;
        let d = r.denom().bits() as i64;
        let shift = (n - d).clamp(-1000, 1000);
        let scaled = if shift >= 0 {
            r / BigRational::from_integer(BigInt::one() << shift as usize)
        } else {
            r * BigRational::from_integer(BigInt::one() << (-shift) as usize)
        };
        scaled.to_f64().unwrap_or(f64::NAN) * 2f64.powi(shift as i32)
    })
}

impl Scalar for BigRational {
    fn from_rational(r: BigRational) -> Self {
        r
    }

    fn recip(&self) -> Self {
        num_rational::Ratio::recip(self)
    }

    fn sqrt(&self) -> Option<Self> {
        rational_nth_root(self, 2)
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        rational_canonical_cmp(self, other)
    }

    fn approx_f64(&self) -> Option<f64> {
        Some(rational_to_f64(self))
    }

    fn modulus(&self) -> f64 {
        rational_to_f64(self).abs()
    }

    fn real_surd_parts(&self) -> Option<(Rational, Rational, i64)> {
        Some((self.clone(), Rational::zero(), 0))
    }

    fn parse_exact(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

/// Lexicographic comparison of scalar slices under [`Scalar::canonical_cmp`].
/// Fails when the elements need two different quadratic extensions.
pub fn require_common_field<'a, S: Scalar>(xs: impl IntoIterator<Item = &'a S>) -> Result<()> {
    let mut seen: Option<i64> = None;
    for d in xs.into_iter().filter_map(Scalar::radicand) {
        match seen {
            Some(e) if e != d => {
                return Err(Error::Field(format!(
                    "inputs mix Q(sqrt({e})) and Q(sqrt({d})); use one radicand"
                )))
            }
            _ => seen = Some(d),
        }
    }
    Ok(())
}

pub fn canonical_cmp_slice<S: Scalar>(a: &[S], b: &[S]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match x.canonical_cmp(y) {
            Ordering::Equal => continue,
            o => return o,
        }
    }
    a.len().cmp(&b.len())
}

/// Sort a multiset into canonical order so two multisets compare with `==`.
pub fn sorted_multiset<S: Scalar>(mut v: Vec<S>) -> Vec<S> {
    v.sort_by(|a, b| a.canonical_cmp(b));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadratic::Quadratic;

    #[test]
    fn common_field_rejects_two_radicands() {
        let q = |s: &str| Quadratic::parse_exact(s).unwrap();
        let same = [q("sqrt(2)"), q("1/3"), q("1-sqrt(2)")];
        assert!(require_common_field(&same).is_ok());
        let mixed = [q("sqrt(2)"), q("2"), q("sqrt(3)")];
        assert!(matches!(require_common_field(&mixed), Err(Error::Field(_))));
        assert!(require_common_field(&[int(2), int(3)]).is_ok());
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(format_rational(&rat(6, 4)), "3/2");
        assert_eq!(format_rational(&int(-5)), "-5");
        assert_eq!(parse_rational("-1/2").unwrap(), rat(-1, 2));
        assert_eq!(parse_rational(" 7 ").unwrap(), int(7));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn nth_roots() {
        assert_eq!(rational_nth_root(&rat(4, 9), 2), Some(rat(2, 3)));
        assert_eq!(rational_nth_root(&int(-8), 3), Some(int(-2)));
        assert_eq!(rational_nth_root(&int(-4), 2), None);
        assert_eq!(rational_nth_root(&int(2), 2), None);
    }

    #[test]
    fn powi_negative() {
        assert_eq!(int(2).powi(-3), rat(1, 8));
        assert_eq!(rat(2, 3).powi(0), int(1));
    }
}
