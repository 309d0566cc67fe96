//! Exact rational scalar used throughout the exact path.
//!
//! `Rat` wraps an arbitrary-precision `BigRational` kept in canonical form
//! (reduced, positive denominator). Equality and ordering are exact; there is
//! no floating point anywhere behind this type.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::Error;

/// Exact rational number in canonical form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `n / d`. Panics if `d == 0`.
    pub fn new(n: i64, d: i64) -> Self {
        assert!(d != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn abs(&self) -> Rat {
        Rat(self.0.abs())
    }

    pub fn square(&self) -> Rat {
        Rat(&self.0 * &self.0)
    }

    /// Exact halving; used for semiperimeters and midpoints.
    pub fn half(&self) -> Rat {
        Rat(&self.0 / BigRational::from_integer(BigInt::from(2)))
    }

    /// Exact rational square root.
    ///
    /// Returns `Err(NotASquare)` when the canonical numerator or denominator
    /// is not a perfect square, and `Err(NegativeSqrt)` for negative input.
    pub fn sqrt_exact(&self) -> Result<Rat, Error> {
        if self.0.is_negative() {
            return Err(Error::NegativeSqrt);
        }
        let n = self.0.numer();
        let d = self.0.denom();
        let rn = n.sqrt();
        let rd = d.sqrt();
        if &(&rn * &rn) == n && &(&rd * &rd) == d {
            Ok(Rat(BigRational::new(rn, rd)))
        } else {
            Err(Error::NotASquare)
        }
    }

    pub fn to_f64(&self) -> f64 {
        // Falls back on numer/denom division for magnitudes outside f64 range.
        self.0
            .to_f64()
            .unwrap_or_else(|| self.0.numer().to_f64().unwrap_or(f64::NAN) / self.0.denom().to_f64().unwrap_or(f64::NAN))
    }
}

impl fmt::Display for Rat {
    /// Canonical `p/q` form, `p` when the denominator is 1.
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

impl FromStr for Rat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::BadRational(s.to_string());
        let (n, d) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let n: BigInt = n.parse().map_err(|_| bad())?;
        let d: BigInt = d.parse().map_err(|_| bad())?;
        if d.is_zero() || d.is_negative() {
            return Err(bad());
        }
        Ok(Rat(BigRational::new(n, d)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((self.0).$method(&rhs.0))
            }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((&self.0).$method(rhs.0))
            }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

/// Shorthand for rational literals: `rat!(3)` or `rat!(3, 4)`.
#[macro_export]
macro_rules! rat {
    ($n:expr) => {
        $crate::Rat::from_int($n)
    };
    ($n:expr, $d:expr) => {
        $crate::Rat::new($n, $d)
    };
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_display() {
        assert_eq!(rat!(2, 4), rat!(1, 2));
        assert_eq!(rat!(3, -6), rat!(-1, 2));
        assert_eq!(rat!(-1, 2).to_string(), "-1/2");
        assert_eq!(rat!(7).to_string(), "7");
        assert_eq!(rat!(0, 5).to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["3/5", "-3/5", "7", "0", "22/7"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
        assert!("1/0".parse::<Rat>().is_err());
        assert!("1/-2".parse::<Rat>().is_err());
        assert!("x".parse::<Rat>().is_err());
        // non-canonical input is accepted and reduced
        assert_eq!("4/8".parse::<Rat>().unwrap(), rat!(1, 2));
    }

    #[test]
    fn sqrt_exact_examples() {
        assert_eq!(rat!(25, 9).sqrt_exact().unwrap(), rat!(5, 3));
        assert_eq!(rat!(169, 25).sqrt_exact().unwrap(), rat!(13, 5));
        assert!(matches!(rat!(2).sqrt_exact(), Err(Error::NotASquare)));
        assert!(matches!(rat!(-1).sqrt_exact(), Err(Error::NegativeSqrt)));
        assert_eq!(rat!(0).sqrt_exact().unwrap(), rat!(0));
    }

    #[test]
    fn arithmetic_is_exact() {
        let x = rat!(1, 3) + rat!(1, 6);
        assert_eq!(x, rat!(1, 2));
        assert_eq!(rat!(5, 6).half(), rat!(5, 12));
        assert_eq!(rat!(-3, 4).abs(), rat!(3, 4));
        assert_eq!(rat!(2, 3).square(), rat!(4, 9));
    }
}
