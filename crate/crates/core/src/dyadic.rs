//! Exact arithmetic on dyadic rationals, the value domain of short numbers.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// An exact dyadic rational `numer / 2^exp` with unbounded integer numerator.
///
/// The representation is kept normalized: `exp == 0` or `numer` is odd, so
/// two `Dyadic`s are equal as values exactly when they are equal as structs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Dyadic {
    numer: BigInt,
    exp: u32,
}

impl Dyadic {
    /// Builds `numer / 2^exp`, normalizing to lowest terms.
    pub fn new(numer: impl Into<BigInt>, exp: u32) -> Self {
        let mut d = Dyadic {
            numer: numer.into(),
            exp,
        };
        d.normalize();
        d
    }

    pub fn integer(n: impl Into<BigInt>) -> Self {
        Dyadic {
            numer: n.into(),
            exp: 0,
        }
    }

    pub fn zero() -> Self {
        Dyadic::integer(0)
    }

    pub fn one() -> Self {
        Dyadic::integer(1)
    }

    fn normalize(&mut self) {
        if self.numer.is_zero() {
            self.exp = 0;
            return;
        }
        let tz = self.numer.trailing_zeros().unwrap_or(0) as u32;
        let shift = tz.min(self.exp);
        if shift > 0 {
            self.numer >>= shift;
            self.exp -= shift;
        }
    }

    pub fn numer(&self) -> &BigInt {
        &self.numer
    }

    /// Exponent of the denominator; 0 for integers.
    pub fn exp(&self) -> u32 {
        self.exp
    }

    pub fn denom(&self) -> BigInt {
        BigInt::one() << self.exp
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    pub fn is_zero(&self) -> bool {
        self.numer.is_zero()
    }

    pub fn is_positive(&self) -> bool {
        self.numer.is_positive()
    }

    pub fn is_negative(&self) -> bool {
        self.numer.is_negative()
    }

    pub fn abs(&self) -> Dyadic {
        Dyadic {
            numer: self.numer.abs(),
            exp: self.exp,
        }
    }

    pub fn floor(&self) -> BigInt {
        self.numer.div_floor(&self.denom())
    }

    pub fn ceil(&self) -> BigInt {
        self.numer.div_ceil(&self.denom())
    }

    /// Exact conversion to a general rational.
    pub fn to_ratio(&self) -> BigRational {
        BigRational::new(self.numer.clone(), self.denom())
    }

    /// Back-conversion; `None` when the reduced denominator is not a power
    /// of two.
    pub fn from_ratio(r: &BigRational) -> Option<Dyadic> {
        let denom = r.denom();
        let tz = denom.trailing_zeros().unwrap_or(0);
        if !(denom >> tz).is_one() {
            return None;
        }
        Some(Dyadic::new(r.numer().clone(), tz as u32))
    }
}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let e = self.exp.max(other.exp);
        let a = &self.numer << (e - self.exp);
        let b = &other.numer << (e - other.exp);
        a.cmp(&b)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: &Dyadic) -> Dyadic {
        let e = self.exp.max(rhs.exp);
        let numer = (&self.numer << (e - self.exp)) + (&rhs.numer << (e - rhs.exp));
        Dyadic::new(numer, e)
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: &Dyadic) -> Dyadic {
        let e = self.exp.max(rhs.exp);
        let numer = (&self.numer << (e - self.exp)) - (&rhs.numer << (e - rhs.exp));
        Dyadic::new(numer, e)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic::new(&self.numer * &rhs.numer, self.exp + rhs.exp)
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        Dyadic {
            numer: -&self.numer,
            exp: self.exp,
        }
    }
}

impl Add for Dyadic {
    type Output = Dyadic;

    fn add(self, rhs: Dyadic) -> Dyadic {
        &self + &rhs
    }
}

impl Sub for Dyadic {
    type Output = Dyadic;

    fn sub(self, rhs: Dyadic) -> Dyadic {
        &self - &rhs
    }
}

impl Mul for Dyadic {
    type Output = Dyadic;

    fn mul(self, rhs: Dyadic) -> Dyadic {
        &self * &rhs
    }
}

impl Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Dyadic {
        -&self
    }
}

impl From<i64> for Dyadic {
    fn from(n: i64) -> Dyadic {
        Dyadic::integer(n)
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.numer)
        } else {
            write!(f, "{}/{}", self.numer, self.denom())
        }
    }
}

impl fmt::Debug for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The unique dyadic of minimal birthday strictly between `lo` and `hi`
/// (either bound may be absent): the integer of minimal absolute value if
/// one fits, otherwise the fraction with the smallest power-of-two
/// denominator.
pub fn simplest_dyadic_between(lo: Option<&Dyadic>, hi: Option<&Dyadic>) -> Result<Dyadic, Error> {
    if let (Some(lo), Some(hi)) = (lo, hi) {
        if lo >= hi {
            return Err(Error::EmptyInterval {
                lo: lo.clone(),
                hi: hi.clone(),
            });
        }
    }
    let zero = Dyadic::zero();
    match (lo, hi) {
        (None, None) => Ok(zero),
        (Some(lo), None) => {
            if *lo < zero {
                Ok(zero)
            } else {
                Ok(Dyadic::integer(lo.floor() + 1))
            }
        }
        (None, Some(hi)) => {
            if *hi > zero {
                Ok(zero)
            } else {
                Ok(Dyadic::integer(hi.ceil() - 1))
            }
        }
        (Some(lo), Some(hi)) => {
            if *lo < zero && zero < *hi {
                return Ok(zero);
            }
            if *lo >= zero {
                let k = Dyadic::integer(lo.floor() + 1);
                if k < *hi {
                    return Ok(k);
                }
            } else {
                let k = Dyadic::integer(hi.ceil() - 1);
                if k > *lo {
                    return Ok(k);
                }
            }
            // No integer fits: search denominators 2, 4, ... for the first
            // one with a multiple strictly inside; at that point there is
            // exactly one.
            for n in 1.. {
                let m = lo.shift_up(n).floor() + 1;
                let candidate = Dyadic::new(m, n);
                if candidate < *hi {
                    return Ok(candidate);
                }
            }
            unreachable!("open interval of positive width contains a dyadic")
        }
    }
}

impl Dyadic {
    /// Multiplies by `2^n` (used by the simplicity search).
    fn shift_up(&self, n: u32) -> Dyadic {
        if self.exp >= n {
            Dyadic {
                numer: self.numer.clone(),
                exp: self.exp - n,
            }
        } else {
            Dyadic {
                numer: &self.numer << (n - self.exp),
                exp: 0,
            }
        }
    }
}
