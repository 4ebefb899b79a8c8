//! Coefficient fields: the rationals and prime fields `F_p` with odd `p < 2^31`.
//!
//! Every linear-algebra routine in the crate is generic over [`Field`] so the
//! same resolution code runs over `Q` (exact, slower) and over `F_p`
//! (fast, still exact as field arithmetic). Characteristic 2 is rejected:
//! graded commutativity no longer forces odd squares to vanish there, and the
//! classification this crate implements assumes it does.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Errors arising when validating a field description.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum FieldError {
    /// The classification theory needs 2 to be invertible.
    #[error("characteristic 2 is not supported")]
    CharacteristicTwo,
    /// Prime fields must have prime order.
    #[error("{0} is not prime")]
    NotPrime(u64),
    /// Moduli must fit comfortably in 64-bit arithmetic.
    #[error("modulus {0} exceeds 2^31")]
    TooLarge(u64),
}

/// A serializable description of a coefficient field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FieldSpec {
    /// The field of rational numbers.
    Rational,
    /// The prime field with `p` elements, `p` an odd prime below `2^31`.
    Prime(u64),
}

impl FieldSpec {
    /// Validates the description: primality, oddness, and the size bound.
    pub fn validate(&self) -> Result<(), FieldError> {
        match *self {
            FieldSpec::Rational => Ok(()),
            FieldSpec::Prime(p) => {
                if p >= 1 << 31 {
                    return Err(FieldError::TooLarge(p));
                }
                if !is_prime_u64(p) {
                    return Err(FieldError::NotPrime(p));
                }
                if p == 2 {
                    return Err(FieldError::CharacteristicTwo);
                }
                Ok(())
            }
        }
    }

    /// The characteristic: 0 for the rationals, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match *self {
            FieldSpec::Rational => 0,
            FieldSpec::Prime(p) => p,
        }
    }
}

/// Deterministic Miller-Rabin, valid for every `n < 2^64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // This base set is known to be exact for all 64-bit integers.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// A field together with its element representation.
///
/// Elements do not know their field (an `F_p` element is a bare `u64`), so
/// all operations go through the field value itself.
pub trait Field: Clone + std::fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + std::fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse; `None` exactly on zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn from_bigint(&self, n: &BigInt) -> Self::Elem;
    fn characteristic(&self) -> u64;

    /// In-place fused `a += c * b`, the inner loop of elimination.
    fn add_mul_assign(&self, a: &mut Self::Elem, c: &Self::Elem, b: &Self::Elem) {
        *a = self.add(a, &self.mul(c, b));
    }

    /// Canonical text form of an element (reports, structure-constant dumps).
    fn elem_str(&self, a: &Self::Elem) -> String {
        format!("{a:?}")
    }

    /// `num/den` as a field element; `None` when `den` maps to zero.
    fn from_ratio(&self, num: &BigInt, den: &BigInt) -> Option<Self::Elem> {
        let d = self.inv(&self.from_bigint(den))?;
        Some(self.mul(&self.from_bigint(num), &d))
    }
}

/// The prime field `F_p`; elements are canonical representatives in `0..p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    /// Builds the field, validating `p` through [`FieldSpec`].
    pub fn new(p: u64) -> Result<Self, FieldError> {
        FieldSpec::Prime(p).validate()?;
        Ok(Fp { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }
}

impl Field for Fp {
    type Elem = u64;

    fn zero(&self) -> u64 {
        0
    }
    fn one(&self) -> u64 {
        1
    }
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.p)
    }
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(pow_mod(*a, self.p - 2, self.p))
        }
    }
    fn from_i64(&self, n: i64) -> u64 {
        let r = n.rem_euclid(self.p as i64);
        r as u64
    }
    fn from_bigint(&self, n: &BigInt) -> u64 {
        let m = n % BigInt::from(self.p);
        let m = if m.is_negative() { m + BigInt::from(self.p) } else { m };
        let digits = m.to_u64_digits().1;
        if digits.is_empty() {
            0
        } else {
            digits[0]
        }
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

/// The rational numbers with `BigRational` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rat;

impl Field for Rat {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
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
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }
    fn from_bigint(&self, n: &BigInt) -> BigRational {
        BigRational::from_integer(n.clone())
    }
    fn characteristic(&self) -> u64 {
        0
    }
    fn elem_str(&self, a: &BigRational) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality_basics() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(10007));
        assert!(!is_prime_u64(10003)); // 7 * 1429
        assert!(!is_prime_u64(1));
        assert!(is_prime_u64((1 << 31) - 1));
    }

    #[test]
    fn field_spec_validation() {
        assert!(FieldSpec::Rational.validate().is_ok());
        assert!(FieldSpec::Prime(10007).validate().is_ok());
        assert_eq!(FieldSpec::Prime(2).validate(), Err(FieldError::CharacteristicTwo));
        assert_eq!(FieldSpec::Prime(10003).validate(), Err(FieldError::NotPrime(10003)));
        assert!(matches!(FieldSpec::Prime(1 << 31).validate(), Err(FieldError::TooLarge(_))));
    }

    #[test]
    fn fp_arithmetic() {
        let f = Fp::new(10007).unwrap();
        let a = f.from_i64(-1);
        assert_eq!(a, 10006);
        let inv3 = f.inv(&3).unwrap();
        assert_eq!(f.mul(&3, &inv3), 1);
        assert_eq!(f.inv(&0), None);
        assert_eq!(f.sub(&2, &5), 10004);
    }

    #[test]
    fn rat_arithmetic() {
        let f = Rat;
        let half = f.inv(&f.from_i64(2)).unwrap();
        assert_eq!(f.add(&half, &half), f.one());
    }
}
