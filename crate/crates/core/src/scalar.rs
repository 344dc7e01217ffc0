//! Exact field elements: arbitrary-precision rationals and prime fields.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// The field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    /// The rational numbers.
    Rationals,
    /// The prime field with `p` elements.
    Prime(u64),
}

impl Field {
    /// Checks that a prime-field modulus is actually usable.
    pub fn validate(&self) -> Result<(), FieldError> {
        match *self {
            Field::Rationals => Ok(()),
            Field::Prime(p) => {
                if is_prime(p) {
                    Ok(())
                } else {
                    Err(FieldError::NotPrime(p))
                }
            }
        }
    }

    pub fn zero(&self) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod { p, r: 0 },
        }
    }

    pub fn one(&self) -> Scalar {
        match *self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(p) => Scalar::Mod { p, r: 1 % p },
        }
    }

    /// Builds `num/den` in this field. Over a prime field the fraction is
    /// reduced mod `p`; a denominator divisible by `p` is an error.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<Scalar, FieldError> {
        if den == 0 {
            return Err(FieldError::ZeroDenominator);
        }
        match *self {
            Field::Rationals => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(num),
                BigInt::from(den),
            ))),
            Field::Prime(p) => {
                let n = modular(num, p);
                let d = modular(den, p);
                if d == 0 {
                    return Err(FieldError::DenominatorDivisibleByP(den, p));
                }
                let inv = mod_inverse(d, p).ok_or(FieldError::DenominatorDivisibleByP(den, p))?;
                Ok(Scalar::Mod {
                    p,
                    r: mulmod(n, inv, p),
                })
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        self.from_ratio(n, 1).expect("unit denominator")
    }

    /// The characteristic: 0 for the rationals, `p` otherwise.
    pub fn characteristic(&self) -> u64 {
        match *self {
            Field::Rationals => 0,
            Field::Prime(p) => p,
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Field::Rationals => write!(f, "rationals"),
            Field::Prime(p) => write!(f, "prime {p}"),
        }
    }
}

/// Errors from scalar construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldError {
    NotPrime(u64),
    ZeroDenominator,
    DenominatorDivisibleByP(i64, u64),
    Mismatch(String, String),
    DivisionByZero,
}

impl fmt::Display for FieldError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldError::NotPrime(p) => write!(f, "{p} is not prime"),
            FieldError::ZeroDenominator => write!(f, "zero denominator"),
            FieldError::DenominatorDivisibleByP(d, p) => {
                write!(f, "denominator {d} is divisible by {p}")
            }
            FieldError::Mismatch(a, b) => write!(f, "field mismatch: {a} vs {b}"),
            FieldError::DivisionByZero => write!(f, "division by zero"),
        }
    }
}

/// One exact field element.
///
/// All scalars taking part in a computation must belong to the same field;
/// the arithmetic operators panic on a mismatch, so public entry points
/// validate fields up front and return [`FieldError::Mismatch`] instead.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { p: u64, r: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Mod { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_zero(),
            Scalar::Mod { r, .. } => *r == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_one(),
            Scalar::Mod { p, r } => *r == 1 % *p,
        }
    }

    pub fn inv(&self) -> Result<Scalar, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match self {
            Scalar::Rat(q) => Scalar::Rat(q.recip()),
            Scalar::Mod { p, r } => Scalar::Mod {
                p: *p,
                r: mod_inverse(*r, *p).expect("nonzero residue"),
            },
        })
    }

    fn check_same(&self, other: &Scalar) {
        debug_assert_eq!(
            self.field(),
            other.field(),
            "scalar arithmetic across fields"
        );
        if self.field() != other.field() {
            panic!("scalar arithmetic across fields");
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{q}"),
            Scalar::Mod { r, .. } => write!(f, "{r}"),
        }
    }
}

impl Scalar {
    /// Numerator/denominator form as strings, used by the file serializer.
    pub fn to_ratio_strings(&self) -> (String, String) {
        match self {
            Scalar::Rat(q) => (q.numer().to_string(), q.denom().to_string()),
            Scalar::Mod { r, .. } => (r.to_string(), "1".to_string()),
        }
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Mod { p, r: a }, Scalar::Mod { r: b, .. }) => Scalar::Mod {
                p: *p,
                r: addmod(*a, *b, *p),
            },
            _ => unreachable!(),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, other: &Scalar) -> Scalar {
        self + &(-other)
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, other: &Scalar) -> Scalar {
        self.check_same(other);
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Mod { p, r: a }, Scalar::Mod { r: b, .. }) => Scalar::Mod {
                p: *p,
                r: mulmod(*a, *b, *p),
            },
            _ => unreachable!(),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { p, r } => Scalar::Mod {
                p: *p,
                r: if *r == 0 { 0 } else { p - r },
            },
        }
    }
}

impl Scalar {
    /// Sign-aware magnitude ordering key for pretty-printing only.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Rat(q) => q.is_negative(),
            Scalar::Mod { .. } => false,
        }
    }
}

fn modular(n: i64, p: u64) -> u64 {
    let p_i = p as i128;
    let r = (n as i128).rem_euclid(p_i);
    r as u64
}

fn addmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn mod_inverse(a: u64, p: u64) -> Option<u64> {
    if a % p == 0 {
        return None;
    }
    // extended Euclid
    let (mut t, mut new_t): (i128, i128) = (0, 1);
    let (mut r, mut new_r): (i128, i128) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(p as i128) as u64)
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}
