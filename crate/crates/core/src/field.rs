//! Exact coefficient fields.
//!
//! A [`Field`] is a value that carries whatever context its elements need
//! (the modulus for a prime field), so arithmetic goes through `&self`.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::AlgebraError;

pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Eq + Hash + Send + Sync;

    /// 0 for the rationals, `p` for the prime field of order `p`.
    fn characteristic(&self) -> u64;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, v: i64) -> Self::Elem;
    /// Parses an unsigned decimal integer literal into the field.
    fn from_decimal(&self, digits: &str) -> Option<Self::Elem>;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, AlgebraError>;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, AlgebraError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// Integer representative used when writing polynomials as text.
    /// Prime-field elements print as the symmetric residue in `(-p/2, p/2]`.
    /// Returns `None` for non-integral values.
    fn to_integer_string(&self, a: &Self::Elem) -> Option<String>;

    /// Smallest scalar that makes every value in `values` integral
    /// (always one over a prime field).
    fn clearing_scalar(&self, values: &[Self::Elem]) -> Self::Elem {
        let _ = values;
        self.one()
    }

    /// Deterministic element from 64 random bits.
    fn from_random_bits(&self, bits: u64) -> Self::Elem;
}

/// The prime field `F_p` for an odd prime `2 < p < 2^31`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self, AlgebraError> {
        if p <= 2 || p >= (1 << 31) || !is_prime(p) {
            return Err(AlgebraError::InvalidCharacteristic(p));
        }
        Ok(PrimeField { p: p as u32 })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let p = self.p as u64;
        let mut acc = 1u64;
        let mut b = base as u64 % p;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * b % p;
            }
            b = b * b % p;
            exp >>= 1;
        }
        base = acc as u32;
        base
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl Field for PrimeField {
    type Elem = u32;

    fn characteristic(&self) -> u64 {
        self.p as u64
    }
    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1
    }
    fn from_i64(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }
    fn from_decimal(&self, digits: &str) -> Option<u32> {
        if digits.is_empty() {
            return None;
        }
        let p = self.p as u64;
        let mut acc = 0u64;
        for ch in digits.chars() {
            let d = ch.to_digit(10)? as u64;
            acc = (acc * 10 + d) % p;
        }
        Some(acc as u32)
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        let p = self.p as u64;
        (if s >= p { s - p } else { s }) as u32
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            self.p - (b - a)
        }
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn inv(&self, a: &u32) -> Result<u32, AlgebraError> {
        if *a == 0 {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(self.pow(*a, self.p as u64 - 2))
    }
    fn to_integer_string(&self, a: &u32) -> Option<String> {
        let half = self.p / 2;
        Some(if *a > half {
            format!("-{}", self.p - a)
        } else {
            a.to_string()
        })
    }
    fn from_random_bits(&self, bits: u64) -> u32 {
        (bits % self.p as u64) as u32
    }
}

/// The field of rational numbers with arbitrary-precision entries.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn characteristic(&self) -> u64 {
        0
    }
    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, v: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(v))
    }
    fn from_decimal(&self, digits: &str) -> Option<BigRational> {
        if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
            return None;
        }
        let n: BigInt = digits.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> Result<BigRational, AlgebraError> {
        if a.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(a.recip())
    }
    fn to_integer_string(&self, a: &BigRational) -> Option<String> {
        if a.is_integer() {
            Some(a.to_integer().to_string())
        } else {
            None
        }
    }
    fn clearing_scalar(&self, values: &[BigRational]) -> BigRational {
        let mut l = BigInt::one();
        for v in values {
            l = num_integer::Integer::lcm(&l, v.denom());
        }
        BigRational::from_integer(l)
    }
    fn from_random_bits(&self, bits: u64) -> BigRational {
        // Small integers keep rational computations tractable.
        self.from_i64((bits % 201) as i64 - 100)
    }
}

/// Exact conversion of a rational to `i64` when it is a small integer.
pub fn rational_to_i64(a: &BigRational) -> Option<i64> {
    if a.is_integer() {
        a.to_integer().to_i64()
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_moduli() {
        assert!(PrimeField::new(2).is_err());
        assert!(PrimeField::new(9).is_err());
        assert!(PrimeField::new(1 << 31).is_err());
        assert!(PrimeField::new(32003).is_ok());
    }

    #[test]
    fn addition_wraps_exactly() {
        let f = PrimeField::new(5).unwrap();
        assert_eq!(f.add(&3, &4), 2);
        assert_eq!(f.sub(&1, &3), 3);
        assert_eq!(f.from_i64(-7), 3);
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let f = PrimeField::new(32003).unwrap();
        for a in [1u32, 2, 17, 32002] {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.inv(&0), Err(AlgebraError::DivisionByZero));
        assert_eq!(Rationals.inv(&Rationals.zero()), Err(AlgebraError::DivisionByZero));
    }

    #[test]
    fn symmetric_output() {
        let f = PrimeField::new(7).unwrap();
        assert_eq!(f.to_integer_string(&6).unwrap(), "-1");
        assert_eq!(f.to_integer_string(&3).unwrap(), "3");
        assert_eq!(f.from_decimal("100").unwrap(), 2);
    }
}
