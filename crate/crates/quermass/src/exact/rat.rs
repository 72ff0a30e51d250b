//! Exact rational scalar built on arbitrary-precision integers.
//!
//! Every quantity in this crate (coordinates, volumes, quermassintegrals,
//! inequality slacks) is a [`Rat`]. There is no floating-point fallback;
//! the only place floats appear is the Monte Carlo oracle's *estimates*.

use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Exact rational number, always normalized: positive denominator,
/// gcd(|numerator|, denominator) = 1.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `numer/denom`. Panics if `denom` is zero.
    pub fn new(numer: BigInt, denom: BigInt) -> Self {
        Rat(BigRational::new(numer, denom))
    }

    pub fn from_int<T: Into<BigInt>>(n: T) -> Self {
        Rat(BigRational::from_integer(n.into()))
    }

    /// `numer/denom` from machine integers. Panics if `denom` is zero.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        Rat::new(BigInt::from(numer), BigInt::from(denom))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
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

    /// Sign as -1, 0, or 1.
    pub fn signum(&self) -> i32 {
        if self.0.is_zero() {
            0
        } else if self.0.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rat(BigRational::new_raw(
            self.0.numer().pow(exp),
            self.0.denom().pow(exp),
        ))
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "division by zero rational");
        Rat(self.0.recip())
    }

    /// Nearest-representable float; approximate by nature, used only for
    /// reporting and the Monte Carlo side of cross-checks.
    pub fn to_f64(&self) -> f64 {
        self.0
            .to_f64()
            .unwrap_or_else(|| self.numer().to_f64().unwrap() / self.denom().to_f64().unwrap())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub(crate) fn into_inner(self) -> BigRational {
        self.0
    }
}

impl Default for Rat {
    fn default() -> Self {
        Rat::zero()
    }
}

impl From<BigInt> for Rat {
    fn from(n: BigInt) -> Self {
        Rat::from_int(n)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<i32> for Rat {
    fn from(n: i32) -> Self {
        Rat::from_int(n)
    }
}

impl From<usize> for Rat {
    fn from(n: usize) -> Self {
        Rat::from_int(BigInt::from(n))
    }
}

macro_rules! impl_binop {
    ($trait:ident, $fn:ident, $assign_trait:ident, $assign_fn:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $fn(self, rhs: Rat) -> Rat {
                Rat((self.0).$fn(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $fn(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$fn(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $fn(self, rhs: Rat) -> Rat {
                Rat((&self.0).$fn(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $fn(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$fn(&rhs.0))
            }
        }
        impl $assign_trait for Rat {
            fn $assign_fn(&mut self, rhs: Rat) {
                (self.0).$assign_fn(rhs.0);
            }
        }
        impl<'a> $assign_trait<&'a Rat> for Rat {
            fn $assign_fn(&mut self, rhs: &'a Rat) {
                (self.0).$assign_fn(&rhs.0);
            }
        }
    };
}

impl_binop!(Add, add, AddAssign, add_assign);
impl_binop!(Sub, sub, SubAssign, sub_assign);
impl_binop!(Mul, mul, MulAssign, mul_assign);
impl_binop!(Div, div, DivAssign, div_assign);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl Sum for Rat {
    fn sum<I: Iterator<Item = Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rat> for Rat {
    fn sum<I: Iterator<Item = &'a Rat>>(iter: I) -> Rat {
        iter.fold(Rat::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.denom().is_one() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Literal format: "p" or "p/q" with optional leading minus; q > 0.
impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("invalid rational literal {s:?}"));
        let t = s.trim();
        if t.is_empty() {
            return Err(bad());
        }
        let (num_str, den_str) = match t.split_once('/') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None => (t, None),
        };
        let numer: BigInt = num_str.parse().map_err(|_| bad())?;
        let denom: BigInt = match den_str {
            Some(d) => {
                let d: BigInt = d.parse().map_err(|_| bad())?;
                if !d.is_positive() {
                    return Err(bad());
                }
                d
            }
            None => BigInt::one(),
        };
        Ok(Rat::new(numer, denom))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Str(String),
        }
        match Repr::deserialize(deserializer)? {
            Repr::Int(n) => Ok(Rat::from_int(n)),
            Repr::Str(s) => s.parse().map_err(de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn literal_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7", "100000000000000000001/3"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn literal_normalizes() {
        assert_eq!("4/6".parse::<Rat>().unwrap(), Rat::ratio(2, 3));
        assert_eq!("-4/2".parse::<Rat>().unwrap(), Rat::from_int(-2));
        assert_eq!(" 3 / 4 ".parse::<Rat>().unwrap(), Rat::ratio(3, 4));
    }

    #[test]
    fn bad_literals_rejected() {
        for s in ["", "/", "1/0", "1/-2", "a", "1.5", "1/2/3"] {
            assert!(s.parse::<Rat>().is_err(), "accepted {s:?}");
        }
    }

    #[test]
    fn serde_accepts_ints_and_strings() {
        let v: Vec<Rat> = serde_json::from_str(r#"[3, "1/2", "-7"]"#).unwrap();
        assert_eq!(v, vec![Rat::from_int(3), Rat::ratio(1, 2), Rat::from_int(-7)]);
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["3","1/2","-7"]"#);
    }

    fn arb_rat() -> impl Strategy<Value = Rat> {
        (-1000i64..1000, 1i64..60).prop_map(|(p, q)| Rat::ratio(p, q))
    }

    proptest! {
        #[test]
        fn field_axioms(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
            prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
            prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
            prop_assert_eq!(&a - &a, Rat::zero());
            if !b.is_zero() {
                prop_assert_eq!(&a / &b * &b, a.clone());
            }
        }

        #[test]
        fn normalized_after_ops(a in arb_rat(), b in arb_rat()) {
            use num_integer::Integer;
            for r in [&a + &b, &a - &b, &a * &b] {
                prop_assert!(r.denom().is_positive());
                prop_assert!(r.numer().gcd(r.denom()).is_one() || r.numer().is_zero());
            }
        }
    }
}
