// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field for homology ranks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Coefficients {
    /// `GF(p)`.
    Prime(u64),
    Rationals,
}

impl Coefficients {
    pub fn validate(self) -> Result<Self> {
        if let Coefficients::Prime(p) = self {
            if !is_prime(p) || p >= 1 << 62 {
                return Err(Error::NotPrime(p));
            }
        }
        Ok(self)
    }
}

impl fmt::Display for Coefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Coefficients::Prime(p) => write!(f, "GF({p})"),
            Coefficients::Rationals => write!(f, "Q"),
        }
    }
}

impl FromStr for Coefficients {
    type Err = Error;

    /// `Q` (or `0`) for the rationals, otherwise a prime.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") || s == "0" {
            return Ok(Coefficients::Rationals);
        }
        let p: u64 = s.parse().map_err(|_| Error::Parse {
            line: 0,
            message: format!("field must be a prime or `Q`, got `{s}`"),
        })?;
        Coefficients::Prime(p).validate()
    }
}

pub(crate) fn is_prime(p: u64) -> bool {
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

/// Field arithmetic with a runtime context (the modulus for `GF(p)`).
pub(crate) trait Field {
    type Elem: Clone;

    fn zero(&self) -> Self::Elem;
    fn embed(&self, x: i64) -> Self::Elem;
    fn is_zero(&self, x: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
}

pub(crate) struct PrimeField(pub u64);

impl Field for PrimeField {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }

    fn embed(&self, x: i64) -> u64 {
        x.rem_euclid(self.0 as i64) as u64
    }

    fn is_zero(&self, x: &u64) -> bool {
        *x == 0
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.0 as u128) as u64
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.0 as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.0 - a
        }
    }

    fn inv(&self, a: &u64) -> u64 {
        // Fermat: a^(p-2)
        let (mut base, mut exp, mut acc) = (*a, self.0 - 2, 1u64);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            exp >>= 1;
        }
        acc
    }
}

pub(crate) struct RationalField;

impl Field for RationalField {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn embed(&self, x: i64) -> BigRational {
        BigRational::from_integer(x.into())
    }

    fn is_zero(&self, x: &BigRational) -> bool {
        x.is_zero()
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn inv(&self, a: &BigRational) -> BigRational {
        BigRational::one() / a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_fields() {
        assert_eq!("2".parse::<Coefficients>().unwrap(), Coefficients::Prime(2));
        assert_eq!(
            "Q".parse::<Coefficients>().unwrap(),
            Coefficients::Rationals
        );
        assert!(matches!(
            "4".parse::<Coefficients>(),
            Err(Error::NotPrime(4))
        ));
        assert!("1".parse::<Coefficients>().is_err());
        assert!("x".parse::<Coefficients>().is_err());
    }

    #[test]
    fn prime_field_inverse() {
        let f = PrimeField(7);
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a)), 1);
        }
        assert_eq!(f.embed(-1), 6);
        assert_eq!(f.neg(&3), 4);
    }
}
