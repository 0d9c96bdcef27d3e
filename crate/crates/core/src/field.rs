//! Exact scalar fields: ℚ with arbitrary-precision integers, or 𝔽_p.
//!
//! Scalars are stored as [`BigRational`] in both cases. Over 𝔽_p every
//! stored value is an integer in `0..p`, so equality of canonical values is
//! equality in the field.

use std::fmt;

use num::bigint::BigInt;
use num::{BigRational, Integer, One, Signed, Zero};

use crate::error::{Result, WcpError};

pub type Scalar = BigRational;

/// The integer `n` as a scalar (not reduced into any field).
pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "Fp {p}"),
        }
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// The prime field 𝔽_p; fails unless `p` is prime.
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(WcpError::NotPrime(p))
        }
    }

    pub fn zero(&self) -> Scalar {
        Scalar::zero()
    }

    pub fn one(&self) -> Scalar {
        Scalar::one()
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.norm(Scalar::from_integer(BigInt::from(n)))
    }

    /// Canonical representative of a value that is already integral over 𝔽_p.
    pub fn norm(&self, x: Scalar) -> Scalar {
        match self {
            Field::Rationals => x,
            Field::Prime(p) => {
                debug_assert!(x.is_integer(), "non-integral value in a prime field");
                let p = BigInt::from(*p);
                Scalar::from_integer(x.numer().mod_floor(&p))
            }
        }
    }

    /// Maps an arbitrary rational into the field (`a/b ↦ a·b⁻¹ mod p`).
    pub fn embed(&self, x: &Scalar) -> Result<Scalar> {
        match self {
            Field::Rationals => Ok(x.clone()),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let den = x.denom().mod_floor(&pb);
                if den.is_zero() {
                    return Err(WcpError::InvalidScalar {
                        text: x.to_string(),
                        reason: format!("denominator is not invertible mod {p}"),
                    });
                }
                let inv = den.modpow(&(&pb - 2u32), &pb);
                Ok(Scalar::from_integer((x.numer() * inv).mod_floor(&pb)))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a + b)
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a - b)
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.norm(a * b)
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        self.norm(-a)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Scalar) -> Option<Scalar> {
        if a.is_zero() {
            return None;
        }
        match self {
            Field::Rationals => Some(a.recip()),
            Field::Prime(p) => {
                let pb = BigInt::from(*p);
                let inv = a.numer().modpow(&(&pb - 2u32), &pb);
                Some(Scalar::from_integer(inv))
            }
        }
    }

    /// Parses `n`, `-n` or `p/q`. Decimal and floating-point notation is rejected.
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar> {
        let bad = |reason: &str| WcpError::InvalidScalar {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let int = |s: &str| -> Result<BigInt> {
            let digits = s.strip_prefix('-').unwrap_or(s);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad("expected an integer or a fraction p/q"));
            }
            s.parse::<BigInt>()
                .map_err(|_| bad("expected an integer or a fraction p/q"))
        };
        let value = match text.split_once('/') {
            Some((n, d)) => {
                let n = int(n)?;
                let d = int(d)?;
                if d.is_zero() {
                    return Err(bad("zero denominator"));
                }
                Scalar::new(n, d)
            }
            None => Scalar::from_integer(int(text)?),
        };
        self.embed(&value)
    }

    /// Canonical text form accepted by [`Field::parse_scalar`].
    pub fn format_scalar(x: &Scalar) -> String {
        if x.is_integer() {
            x.numer().to_string()
        } else {
            format!("{}/{}", x.numer(), x.denom())
        }
    }

    pub fn is_negative(x: &Scalar) -> bool {
        x.is_negative()
    }
}
