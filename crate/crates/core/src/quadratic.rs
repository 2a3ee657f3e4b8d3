//! Quadratic extensions `Q(sqrt(d))`.
//!
//! An element `a + b*sqrt(d)` carries its own `d`. Elements with `b = 0` are
//! plain rationals and mix freely with any extension; mixing two different
//! nonzero `b` parts over different `d` is a logic error and panics.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::scalar::{
    parse_rational, rational_canonical_cmp, rational_nth_root, rational_to_f64, Rational, Scalar,
};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quadratic {
    a: Rational,
    b: Rational,
    /// 0 when `b == 0`.
    d: i64,
}

fn is_square_i64(d: i64) -> bool {
    if d < 0 {
        return false;
    }
    let r = (d as f64).sqrt() as i64;
    (r.saturating_sub(1)..=r + 1).any(|x| x >= 0 && x * x == d)
}

impl Quadratic {
    pub fn new(a: Rational, b: Rational, d: i64) -> Result<Self> {
        if b.is_zero() {
            return Ok(Self::rational(a));
        }
        if is_square_i64(d) {
            return Err(Error::Field(format!(
                "sqrt({d}) is rational; not a quadratic extension"
            )));
        }
        Ok(Self { a, b, d })
    }

    pub fn rational(a: Rational) -> Self {
        Self {
            a,
            b: Rational::zero(),
            d: 0,
        }
    }

    /// `sqrt(d)` itself.
    pub fn sqrt_of(d: i64) -> Result<Self> {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn real_part(&self) -> &Rational {
        &self.a
    }

    pub fn sqrt_coefficient(&self) -> &Rational {
        &self.b
    }

    /// The radicand, or `None` for a rational element.
    pub fn discriminant(&self) -> Option<i64> {
        (self.d != 0).then_some(self.d)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// `a^2 - d b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(self.d))
    }

    pub fn conjugate(&self) -> Self {
        Self {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d,
        }
    }

    fn merged_d(&self, other: &Self) -> i64 {
        match (self.d, other.d) {
            (0, d) | (d, 0) => d,
            (x, y) if x == y => x,
            (x, y) => panic!("mixing elements of Q(sqrt({x})) and Q(sqrt({y}))"),
        }
    }

    fn build(a: Rational, b: Rational, d: i64) -> Self {
        if b.is_zero() {
            Self::rational(a)
        } else {
            Self { a, b, d }
        }
    }

    /// `sqrt(r)` for a rational `r`, inside `Q` when possible and inside
    /// `Q(sqrt(r))` otherwise.
    pub fn sqrt_rational(r: &Rational) -> Self {
        if let Some(s) = rational_nth_root(r, 2) {
            return Self::rational(s);
        }
        // r = (n/m) = n*m / m^2, radicand n*m reduced by its square part
        let nm = r.numer() * r.denom();
        let (square, free) = split_square(&nm);
        let d: i64 = free.try_into().expect("radicand exceeds i64");
        let coeff = BigRational::new(square, r.denom().clone());
        Self {
            a: Rational::zero(),
            b: coeff,
            d,
        }
    }
}

/// `v = s^2 * f` with `f` squarefree (trial division; small inputs only).
fn split_square(v: &BigInt) -> (BigInt, BigInt) {
    let mut f = v.abs();
    let sign = if v.is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    let mut s = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= f {
        let pp = &p * &p;
        while (&f % &pp).is_zero() {
            f /= &pp;
            s *= &p;
        }
        p += 1;
    }
    (s, f * sign)
}

impl fmt::Display for Quadratic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let b_part = if self.b.is_one() {
            format!("sqrt({})", self.d)
        } else if self.b == -Rational::one() {
            format!("-sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", self.b, self.d)
        };
        if self.a.is_zero() {
            write!(f, "{b_part}")
        } else if b_part.starts_with('-') {
            write!(f, "{}{}", self.a, b_part)
        } else {
            write!(f, "{}+{}", self.a, b_part)
        }
    }
}

impl Zero for Quadratic {
    fn zero() -> Self {
        Self::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Quadratic {
    fn one() -> Self {
        Self::rational(Rational::one())
    }
}

impl Add for Quadratic {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.merged_d(&rhs);
        Self::build(self.a + rhs.a, self.b + rhs.b, d)
    }
}

impl Sub for Quadratic {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = self.merged_d(&rhs);
        Self::build(self.a - rhs.a, self.b - rhs.b, d)
    }
}

impl Neg for Quadratic {
    type Output = Self;
    fn neg(self) -> Self {
        Self::build(-self.a, -self.b, self.d)
    }
}

impl Mul for Quadratic {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = self.merged_d(&rhs);
        let dd = BigRational::from_integer(BigInt::from(d));
        let a = &self.a * &rhs.a + &self.b * &rhs.b * dd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a;
        Self::build(a, b, d)
    }
}

impl Div for Quadratic {
    type Output = Self;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Self) -> Self {
        self * rhs.recip()
    }
}

impl Scalar for Quadratic {
    fn from_rational(r: BigRational) -> Self {
        Self::rational(r)
    }

    fn recip(&self) -> Self {
        let n = self.norm();
        assert!(!n.is_zero(), "division by zero in quadratic field");
        Self::build(&self.a / &n, -&self.b / &n, self.d)
    }

    fn sqrt(&self) -> Option<Self> {
        if self.b.is_zero() {
            if let Some(r) = rational_nth_root(&self.a, 2) {
                return Some(Self::rational(r));
            }
            return None;
        }
        // (u + v sqrt d)^2 = a + b sqrt d  =>  u^2 + d v^2 = a, 2uv = b
        let root_norm = rational_nth_root(&self.norm(), 2)?;
        let two = BigRational::from_integer(BigInt::from(2));
        for cand in [(&self.a + &root_norm) / &two, (&self.a - &root_norm) / &two] {
            if let Some(u) = rational_nth_root(&cand, 2) {
                if u.is_zero() {
                    continue;
                }
                let v = &self.b / (&two * &u);
                let r = Self::build(u, v, self.d);
                if r.clone() * r.clone() == *self {
                    return Some(r);
                }
            }
        }
        None
    }

    fn radicand(&self) -> Option<i64> {
        self.discriminant()
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        rational_canonical_cmp(&self.a, &other.a)
            .then_with(|| rational_canonical_cmp(&self.b, &other.b))
            .then_with(|| self.d.cmp(&other.d))
    }

    fn approx_f64(&self) -> Option<f64> {
        if self.b.is_zero() {
            return Some(rational_to_f64(&self.a));
        }
        if self.d < 0 {
            return None;
        }
        Some(rational_to_f64(&self.a) + rational_to_f64(&self.b) * (self.d as f64).sqrt())
    }

    fn modulus(&self) -> f64 {
        match self.approx_f64() {
            Some(v) => v.abs(),
            None => {
                let re = rational_to_f64(&self.a);
                let im = rational_to_f64(&self.b) * (-(self.d as f64)).sqrt();
                re.hypot(im)
            }
        }
    }

    fn real_surd_parts(&self) -> Option<(Rational, Rational, i64)> {
        (self.d >= 0).then(|| (self.a.clone(), self.b.clone(), self.d))
    }

    /// Accepts `a`, `b*sqrt(d)`, `a+b*sqrt(d)`, `a-sqrt(d)` and similar.
    fn parse_exact(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(pos) = t.find("sqrt(") else {
            return Ok(Self::rational(parse_rational(&t)?));
        };
        let rest = &t[pos + 5..];
        let inner = rest
            .strip_suffix(')')
            .ok_or_else(|| Error::Parse(format!("unterminated sqrt in {s:?}")))?;
        let d: i64 = inner
            .parse()
            .map_err(|_| Error::Parse(format!("bad radicand in {s:?}")))?;
        let head = t[..pos].strip_suffix('*').unwrap_or(&t[..pos]);
        let split = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .next_back();
        let (a_str, b_str) = match split {
            Some(i) => (&head[..i], &head[i..]),
            None => ("0", head),
        };
        let a = parse_rational(a_str)?;
        let b = match b_str {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            other => parse_rational(other.strip_prefix('+').unwrap_or(other))?,
        };
        Self::new(a, b, d)
    }
}
