//! Exact coefficient fields.
//!
//! Everything in this crate is generic over [`Field`]. Two families are
//! provided: the rationals ([`Rational`], arbitrary precision) and prime
//! fields [`Fp<P>`] with the modulus fixed at compile time.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Num, One, Zero};
use rand::Rng;

/// An exact field usable as the coefficient ring of `k[S]`.
pub trait Field:
    Num + Neg<Output = Self> + Clone + Eq + Debug + Display + Send + Sync + 'static
{
    /// Short label used in reports, e.g. `"Q"` or `"F32003"`.
    fn label() -> String;

    fn from_i64(v: i64) -> Self;

    /// Multiplicative inverse; `None` for zero.
    fn inverse(&self) -> Option<Self>;

    /// Draw a nonzero coefficient for randomized genericity trials.
    ///
    /// Over the rationals this is uniform on `{-10..=10} \ {0}`; over a
    /// prime field it is uniform on the nonzero residues.
    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self;

    fn from_ratio(num: i64, den: i64) -> Option<Self> {
        Self::from_i64(den)
            .inverse()
            .map(|d| Self::from_i64(num) * d)
    }
}

/// Arbitrary-precision rationals.
pub type Rational = BigRational;

impl Field for BigRational {
    fn label() -> String {
        "Q".to_string()
    }

    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        let mut v = rng.gen_range(-10i64..=9);
        if v >= 0 {
            v += 1;
        }
        Self::from_i64(v)
    }
}

/// The prime field `Z/PZ`. `P` must be prime; this is checked by
/// [`Fp::is_valid_modulus`] and asserted in debug builds on inversion.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fp<const P: u32>(u32);

/// The default prime field for fast randomized trials.
pub type Fp32003 = Fp<32003>;

impl<const P: u32> Fp<P> {
    pub const MODULUS: u32 = P;

    pub fn new(v: i64) -> Self {
        Fp(v.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    pub fn is_valid_modulus() -> bool {
        is_prime(P as u64)
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u64;
        let mut acc = 1u64;
        let p = P as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        Fp(acc as u32)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl<const P: u32> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Print the symmetric representative so small negatives read naturally.
        if self.0 > P / 2 {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp(((self.0 as u64 * rhs.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inverse().expect("division by zero in prime field")
    }
}

impl<const P: u32> Rem for Fp<P> {
    type Output = Self;
    // In a field every nonzero element divides exactly.
    fn rem(self, rhs: Self) -> Self {
        assert!(!rhs.is_zero(), "remainder by zero in prime field");
        Fp(0)
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Num for Fp<P> {
    type FromStrRadixErr = std::num::ParseIntError;
    fn from_str_radix(s: &str, radix: u32) -> Result<Self, Self::FromStrRadixErr> {
        i64::from_str_radix(s, radix).map(Fp::new)
    }
}

impl<const P: u32> FromStr for Fp<P> {
    type Err = std::num::ParseIntError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim().parse::<i64>().map(Fp::new)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn label() -> String {
        format!("F{P}")
    }

    fn from_i64(v: i64) -> Self {
        Fp::new(v)
    }

    fn inverse(&self) -> Option<Self> {
        debug_assert!(Self::is_valid_modulus(), "Fp modulus {P} is not prime");
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P as u64 - 2))
        }
    }

    fn sample_nonzero<R: Rng + ?Sized>(rng: &mut R) -> Self {
        Fp(rng.gen_range(1..P))
    }
}
