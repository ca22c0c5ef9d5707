//! Exact coefficient arithmetic: arbitrary-precision rationals or a prime
//! field GF(p) with p odd.
//!
//! Every value carries its field so that mixed-field arithmetic is caught
//! immediately. Rationals are kept in canonical reduced form with positive
//! denominator (enforced by `num_rational::Ratio`); residues are kept in
//! `0..p`. The odd-prime requirement makes 2 invertible, which the wedge
//! normalization relies on.

use alloc::string::ToString;
use core::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Coefficient field descriptor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Field {
    /// Arbitrary-precision rationals.
    Rational,
    /// Integers modulo an odd prime.
    GfP(u64),
}

impl Field {
    /// Prime field constructor; rejects even or composite moduli.
    pub fn gf(p: u64) -> Result<Field> {
        if p < 3 || p % 2 == 0 || !is_prime(p) {
            return Err(Error::BadModulus(p));
        }
        Ok(Field::GfP(p))
    }

    pub fn zero(&self) -> K {
        match self {
            Field::Rational => K::Rat(BigRational::zero()),
            Field::GfP(p) => K::Gf { val: 0, p: *p },
        }
    }

    pub fn one(&self) -> K {
        match self {
            Field::Rational => K::Rat(BigRational::one()),
            Field::GfP(p) => K::Gf { val: 1, p: *p },
        }
    }

    pub fn from_i64(&self, n: i64) -> K {
        match self {
            Field::Rational => K::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::GfP(p) => K::Gf {
                val: n.rem_euclid(*p as i64) as u64,
                p: *p,
            },
        }
    }

    /// Parses a literal `"num"` or `"num/den"`. In GF(p) the value is
    /// `num * den^{-1} mod p`; a denominator divisible by p is rejected.
    pub fn parse(&self, s: &str) -> Result<K> {
        let s = s.trim();
        let (num_s, den_s) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num_s
            .parse()
            .map_err(|_| Error::Scalar(s.to_string()))?;
        let den: BigInt = match den_s {
            Some(d) => d.parse().map_err(|_| Error::Scalar(s.to_string()))?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(Error::Scalar(s.to_string()));
        }
        match self {
            Field::Rational => Ok(K::Rat(BigRational::new(num, den))),
            Field::GfP(p) => {
                let pv = BigInt::from(*p);
                let n = ((num % &pv) + &pv) % &pv;
                let d = ((den % &pv) + &pv) % &pv;
                let n: u64 = n.try_into().expect("reduced residue fits u64");
                let d: u64 = d.try_into().expect("reduced residue fits u64");
                if d == 0 {
                    return Err(Error::Scalar(s.to_string()));
                }
                Ok(K::Gf {
                    val: mulmod(n, inv_mod(d, *p), *p),
                    p: *p,
                })
            }
        }
    }
}

/// A scalar of the chosen field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum K {
    Rat(BigRational),
    Gf { val: u64, p: u64 },
}

impl K {
    pub fn field(&self) -> Field {
        match self {
            K::Rat(_) => Field::Rational,
            K::Gf { p, .. } => Field::GfP(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            K::Rat(r) => r.is_zero(),
            K::Gf { val, .. } => *val == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            K::Rat(r) => r.is_one(),
            K::Gf { val, .. } => *val == 1,
        }
    }

    pub fn add(&self, other: &K) -> K {
        match (self, other) {
            (K::Rat(a), K::Rat(b)) => K::Rat(a + b),
            (K::Gf { val: a, p }, K::Gf { val: b, p: q }) => {
                assert_eq!(p, q, "mixed moduli");
                K::Gf {
                    val: (a + b) % p,
                    p: *p,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn sub(&self, other: &K) -> K {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &K) -> K {
        match (self, other) {
            (K::Rat(a), K::Rat(b)) => K::Rat(a * b),
            (K::Gf { val: a, p }, K::Gf { val: b, p: q }) => {
                assert_eq!(p, q, "mixed moduli");
                K::Gf {
                    val: mulmod(*a, *b, *p),
                    p: *p,
                }
            }
            _ => panic!("mixed-field arithmetic"),
        }
    }

    pub fn neg(&self) -> K {
        match self {
            K::Rat(a) => K::Rat(-a),
            K::Gf { val, p } => K::Gf {
                val: if *val == 0 { 0 } else { p - val },
                p: *p,
            },
        }
    }

    /// Multiplicative inverse; panics on zero (callers check first).
    pub fn inv(&self) -> K {
        match self {
            K::Rat(a) => {
                assert!(!a.is_zero(), "inverse of zero");
                K::Rat(a.recip())
            }
            K::Gf { val, p } => {
                assert!(*val != 0, "inverse of zero");
                K::Gf {
                    val: inv_mod(*val, *p),
                    p: *p,
                }
            }
        }
    }

    pub fn div(&self, other: &K) -> K {
        self.mul(&other.inv())
    }

    /// Flips the sign when `sign` is negative.
    pub fn with_sign(&self, sign: i32) -> K {
        if sign < 0 {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for K {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            K::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            K::Gf { val, .. } => write!(f, "{val}"),
        }
    }
}

fn mulmod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn powmod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mulmod(acc, base, p);
        }
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    powmod(a, p - 2, p)
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}
