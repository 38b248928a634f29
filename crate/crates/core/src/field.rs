//! Exact scalar arithmetic over the two coefficient fields the toolkit
//! supports: the rationals and prime fields GF(p).
//!
//! A [`Scalar`] never travels without a [`FieldSpec`] nearby; all arithmetic
//! goes through the field so that GF(p) values stay reduced and mixed-field
//! operations are caught instead of silently producing nonsense.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Coefficient field tag: `Rationals` or `PrimeField(p)` with `p` prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("scalar does not belong to field {0}")]
    FieldMismatch(FieldSpec),
}

fn is_prime(n: u64) -> bool {
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

impl FieldSpec {
    /// Constructs `PrimeField(p)`, rejecting composite moduli.
    pub fn prime_field(p: u64) -> Result<Self, FieldError> {
        if is_prime(p) {
            Ok(FieldSpec::PrimeField(p))
        } else {
            Err(FieldError::NotPrime(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Mod(1),
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(BigInt::from(n))),
            FieldSpec::PrimeField(p) => {
                let p = *p as i128;
                Scalar::Mod(((n as i128).rem_euclid(p)) as u64)
            }
        }
    }

    /// Image of an arbitrary-precision integer in the field.
    pub fn from_bigint(&self, n: &BigInt) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from(n.clone())),
            FieldSpec::PrimeField(p) => {
                let m = n.mod_floor_u64(*p);
                Scalar::Mod(m)
            }
        }
    }

    fn check<'a>(&self, s: &'a Scalar) -> &'a Scalar {
        debug_assert!(
            matches!(
                (self, s),
                (FieldSpec::Rationals, Scalar::Rat(_)) | (FieldSpec::PrimeField(_), Scalar::Mod(_))
            ),
            "scalar/field mismatch: {s:?} in {self:?}"
        );
        s
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.check(a), self.check(b)) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                let p = self.characteristic();
                Scalar::Mod(((*x as u128 + *y as u128) % p as u128) as u64)
            }
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match self.check(a) {
            Scalar::Rat(x) => Scalar::Rat(-x),
            Scalar::Mod(x) => {
                let p = self.characteristic();
                Scalar::Mod(if *x == 0 { 0 } else { p - x })
            }
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self.check(a), self.check(b)) {
            (Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (Scalar::Mod(x), Scalar::Mod(y)) => {
                let p = self.characteristic();
                Scalar::Mod(((*x as u128 * *y as u128) % p as u128) as u64)
            }
            _ => unreachable!(),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        match self.check(a) {
            Scalar::Rat(x) => Ok(Scalar::Rat(x.recip())),
            Scalar::Mod(x) => {
                let p = self.characteristic();
                // extended Euclid on (x, p)
                let (mut r0, mut r1) = (*x as i128, p as i128);
                let (mut s0, mut s1) = (1i128, 0i128);
                while r1 != 0 {
                    let q = r0 / r1;
                    (r0, r1) = (r1, r0 - q * r1);
                    (s0, s1) = (s1, s0 - q * s1);
                }
                debug_assert_eq!(r0, 1, "modulus must be prime");
                Ok(Scalar::Mod(s0.rem_euclid(p as i128) as u64))
            }
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match self.check(a) {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match self.check(a) {
            Scalar::Rat(x) => x.is_one(),
            Scalar::Mod(x) => *x == 1,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "GF({p})"),
        }
    }
}

/// A field element. `Rat` belongs to `FieldSpec::Rationals`, `Mod` to
/// `FieldSpec::PrimeField(p)` with the value kept in `0..p`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl Scalar {
    /// The rational value as an integer, if it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self {
            Scalar::Rat(x) if x.is_integer() => Some(x.to_integer()),
            _ => None,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(x) => write!(f, "{x}"),
            Scalar::Mod(x) => write!(f, "{x}"),
        }
    }
}

trait ModFloorU64 {
    fn mod_floor_u64(&self, p: u64) -> u64;
}

impl ModFloorU64 for BigInt {
    fn mod_floor_u64(&self, p: u64) -> u64 {
        use num_integer::Integer;
        let m = self.mod_floor(&BigInt::from(p));
        // mod_floor of a BigInt by a positive modulus is non-negative
        let digits = m.to_u64_digits().1;
        *digits.first().unwrap_or(&0)
    }
}

/// Sign-normalized primitive form of a rational row: returns the row scaled so
/// all entries are coprime integers and the first nonzero entry is positive.
/// Used to keep intermediate entries small during echelon forms over Q.
pub fn primitivize_rational_row(row: &mut [Scalar]) {
    use num_integer::Integer;
    let mut denom_lcm = BigInt::one();
    let mut numer_gcd = BigInt::zero();
    for s in row.iter() {
        if let Scalar::Rat(x) = s {
            if !x.is_zero() {
                denom_lcm = denom_lcm.lcm(x.denom());
                numer_gcd = numer_gcd.gcd(x.numer());
            }
        }
    }
    if numer_gcd.is_zero() {
        return;
    }
    let mut factor = BigRational::new(denom_lcm, numer_gcd);
    // make the first nonzero entry positive
    for s in row.iter() {
        if let Scalar::Rat(x) = s {
            if !x.is_zero() {
                if (x * &factor).is_negative() {
                    factor = -factor;
                }
                break;
            }
        }
    }
    for s in row.iter_mut() {
        if let Scalar::Rat(x) = s {
            if !x.is_zero() {
                *s = Scalar::Rat(&*x * &factor);
            }
        }
    }
}
