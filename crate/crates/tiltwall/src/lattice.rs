//! Exact arithmetic on the numerical Chern-character lattice of a polarized
//! threefold.
//!
//! Classes are stored as coordinates `(r, c, l, p)` in the basis `(1, H, L, P)`
//! where `H` is the polarization, `H² = d·L`, `H·L = P`, `∫ P = 1`, and `d` is
//! the degree `H³`. All arithmetic is exact; there are no floats anywhere in
//! this crate's computational paths.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Exact rational number in canonical reduced form (positive denominator).
///
/// Thin wrapper around an arbitrary-precision rational; overflow is
/// impossible and every comparison is exact.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Rational(BigRational);

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RationalParseError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part {0:?} in rational literal")]
    BadInteger(String),
    #[error("zero denominator in rational literal")]
    ZeroDenominator,
    #[error("malformed rational literal {0:?}; expected \"p\" or \"p/q\"")]
    Malformed(String),
}

impl Rational {
    /// `p/q` in lowest terms. Panics if `q == 0`.
    pub fn new(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Rational(BigRational::new(BigInt::from(p), BigInt::from(q)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rational(BigRational::from_integer(n))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    /// Sign as -1, 0, or +1.
    pub fn signum(&self) -> i32 {
        match self.0.cmp(&BigRational::zero()) {
            Ordering::Less => -1,
            Ordering::Equal => 0,
            Ordering::Greater => 1,
        }
    }

    /// Largest integer `≤ self`.
    pub fn floor(&self) -> BigInt {
        self.0.floor().to_integer()
    }

    /// Smallest integer `≥ self`.
    pub fn ceil(&self) -> BigInt {
        self.0.ceil().to_integer()
    }

    /// Exact integer value, if the rational is an integer that fits in `i64`.
    pub fn to_i64(&self) -> Option<i64> {
        if self.0.is_integer() {
            self.0.numer().to_i64()
        } else {
            None
        }
    }

    /// Lossy conversion for presentation (plots) only; never used in
    /// computations.
    pub fn to_f64_lossy(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    pub fn square(&self) -> Rational {
        Rational(&self.0 * &self.0)
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<BigInt> for Rational {
    fn from(n: BigInt) -> Self {
        Rational::from_bigint(n)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rational {
    type Err = RationalParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(RationalParseError::Empty);
        }
        let mut parts = s.splitn(2, '/');
        let num_part = parts.next().unwrap_or_default().trim();
        let num: BigInt = num_part
            .parse()
            .map_err(|_| RationalParseError::BadInteger(num_part.to_string()))?;
        match parts.next() {
            None => Ok(Rational(BigRational::from_integer(num))),
            Some(den_part) => {
                let den_part = den_part.trim();
                if den_part.contains('/') {
                    return Err(RationalParseError::Malformed(s.to_string()));
                }
                let den: BigInt = den_part
                    .parse()
                    .map_err(|_| RationalParseError::BadInteger(den_part.to_string()))?;
                if den.is_zero() {
                    return Err(RationalParseError::ZeroDenominator);
                }
                Ok(Rational(BigRational::new(num, den)))
            }
        }
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

macro_rules! rational_binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(self.0 $op rhs.0)
            }
        }
        impl<'a> $trait<&'a Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &'a Rational) -> Rational {
                Rational(self.0 $op &rhs.0)
            }
        }
        impl<'a> $trait<Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational(&self.0 $op rhs.0)
            }
        }
        impl<'a, 'b> $trait<&'b Rational> for &'a Rational {
            type Output = Rational;
            fn $method(self, rhs: &'b Rational) -> Rational {
                Rational(&self.0 $op &rhs.0)
            }
        }
    };
}

rational_binop!(Add, add, +);
rational_binop!(Sub, sub, -);
rational_binop!(Mul, mul, *);
rational_binop!(Div, div, /);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Chern character `r + c·H + l·L + p·P`, truncated at degree three.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ChernCharacter {
    pub r: Rational,
    pub c: Rational,
    pub l: Rational,
    pub p: Rational,
}

impl ChernCharacter {
    pub fn new(r: Rational, c: Rational, l: Rational, p: Rational) -> Self {
        ChernCharacter { r, c, l, p }
    }

    pub fn from_integers(r: i64, c: i64, l: i64, p: i64) -> Self {
        ChernCharacter {
            r: r.into(),
            c: c.into(),
            l: l.into(),
            p: p.into(),
        }
    }

    pub fn zero() -> Self {
        ChernCharacter::from_integers(0, 0, 0, 0)
    }

    /// Product in the truncated graded ring with `H² = d·L`, `H·L = P`.
    ///
    /// Degree by degree (writing `x = (r₁,c₁,l₁,p₁)`, `y = (r₂,c₂,l₂,p₂)`):
    /// `r = r₁r₂`, `c = r₁c₂ + r₂c₁`, `l = r₁l₂ + r₂l₁ + d·c₁c₂`,
    /// `p = r₁p₂ + r₂p₁ + c₁l₂ + c₂l₁`.
    pub fn mul(&self, rhs: &ChernCharacter, degree: i64) -> ChernCharacter {
        let d = Rational::from(degree);
        ChernCharacter {
            r: &self.r * &rhs.r,
            c: &self.r * &rhs.c + &rhs.r * &self.c,
            l: &self.r * &rhs.l + &rhs.r * &self.l + &d * &self.c * &rhs.c,
            p: &self.r * &rhs.p + &rhs.r * &self.p + &self.c * &rhs.l + &rhs.c * &self.l,
        }
    }

    /// `ch(O(tH)) = exp(tH) = (1, t, d·t²/2, d·t³/6)`.
    pub fn exp_line(t: &Rational, degree: i64) -> ChernCharacter {
        let d = Rational::from(degree);
        let t2 = t.square();
        let t3 = &t2 * t;
        ChernCharacter {
            r: Rational::one(),
            c: t.clone(),
            l: &d * &t2 / Rational::from(2),
            p: &d * &t3 / Rational::from(6),
        }
    }

    /// Formal twist `ch(X ⊗ O(−βH)) = ch(X)·exp(−βH)`, defined for any
    /// rational `β`.
    pub fn twist(&self, beta: &Rational, degree: i64) -> ChernCharacter {
        self.mul(&ChernCharacter::exp_line(&(-beta), degree), degree)
    }

    /// Derived dual: `(r, −c, l, −p)`.
    pub fn dual(&self) -> ChernCharacter {
        ChernCharacter {
            r: self.r.clone(),
            c: -&self.c,
            l: self.l.clone(),
            p: -&self.p,
        }
    }

    /// `ch(X[k]) = (−1)^k · ch(X)`.
    pub fn shift(&self, k: i64) -> ChernCharacter {
        if k.rem_euclid(2) == 0 {
            self.clone()
        } else {
            -self
        }
    }

    pub fn scale(&self, s: &Rational) -> ChernCharacter {
        ChernCharacter {
            r: s * &self.r,
            c: s * &self.c,
            l: s * &self.l,
            p: s * &self.p,
        }
    }
}

impl Add for &ChernCharacter {
    type Output = ChernCharacter;
    fn add(self, rhs: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            r: &self.r + &rhs.r,
            c: &self.c + &rhs.c,
            l: &self.l + &rhs.l,
            p: &self.p + &rhs.p,
        }
    }
}

impl Sub for &ChernCharacter {
    type Output = ChernCharacter;
    fn sub(self, rhs: &ChernCharacter) -> ChernCharacter {
        ChernCharacter {
            r: &self.r - &rhs.r,
            c: &self.c - &rhs.c,
            l: &self.l - &rhs.l,
            p: &self.p - &rhs.p,
        }
    }
}

impl Neg for &ChernCharacter {
    type Output = ChernCharacter;
    fn neg(self) -> ChernCharacter {
        ChernCharacter {
            r: -&self.r,
            c: -&self.c,
            l: -&self.l,
            p: -&self.p,
        }
    }
}

impl fmt::Display for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.r, self.c, self.l, self.p)
    }
}

impl fmt::Debug for ChernCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for ChernCharacter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [
            self.r.to_string(),
            self.c.to_string(),
            self.l.to_string(),
            self.p.to_string(),
        ]
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ChernCharacter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let parts = <[String; 4]>::deserialize(deserializer)?;
        let parse = |s: &String| s.parse::<Rational>().map_err(D::Error::custom);
        Ok(ChernCharacter {
            r: parse(&parts[0])?,
            c: parse(&parts[1])?,
            l: parse(&parts[2])?,
            p: parse(&parts[3])?,
        })
    }
}

/// Todd class `1 + t₁·H + t₂·L + t₃·P` of the threefold.
///
/// `t₁ = 1/2` (half the anticanonical class in `H`-units for index one) and
/// `t₃ = 1` (`χ(O) = 1`); `t₂` depends on the threefold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToddClass {
    pub t0: Rational,
    pub t1: Rational,
    pub t2: Rational,
    pub t3: Rational,
}

impl ToddClass {
    pub fn with_t2(t2: Rational) -> Self {
        ToddClass {
            t0: Rational::one(),
            t1: Rational::new(1, 2),
            t2,
            t3: Rational::one(),
        }
    }

    pub fn as_chern(&self) -> ChernCharacter {
        ChernCharacter {
            r: self.t0.clone(),
            c: self.t1.clone(),
            l: self.t2.clone(),
            p: self.t3.clone(),
        }
    }
}

/// Euler pairing `χ(x, y) = ∫ ch(x)^∨ · ch(y) · td`, i.e. the `P`-coefficient
/// of the truncated triple product.
pub fn euler_pairing(
    x: &ChernCharacter,
    y: &ChernCharacter,
    todd: &ToddClass,
    degree: i64,
) -> Rational {
    x.dual().mul(y, degree).mul(&todd.as_chern(), degree).p
}
