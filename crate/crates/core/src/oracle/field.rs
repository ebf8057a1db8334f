//! Arithmetic in the prime field `F_p`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_PRIME: u32 = 32003;

/// Moduli below this are accepted with a warning.
pub const SMALL_PRIME: u32 = 1000;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Validates a modulus. Returns a warning for small primes.
pub fn check_modulus(p: u64) -> Result<Option<String>> {
    if p == 2 || !is_prime(p) || p > u32::MAX as u64 {
        return Err(Error::NotPrime(p));
    }
    Ok((p < SMALL_PRIME as u64)
        .then(|| format!("warning: modulus {p} is small; draws are likely to be non-generic")))
}

/// An element of `F_p`, carrying its modulus.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Fp {
    value: u32,
    p: u32,
}

impl Fp {
    pub fn new(value: u64, p: u32) -> Self {
        Fp {
            value: (value % p as u64) as u32,
            p,
        }
    }

    pub fn from_i64(value: i64, p: u32) -> Self {
        Fp {
            value: value.rem_euclid(p as i64) as u32,
            p,
        }
    }

    pub fn zero(p: u32) -> Self {
        Fp { value: 0, p }
    }

    pub fn one(p: u32) -> Self {
        Fp { value: 1, p }
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// `None` for zero.
    pub fn inv(self) -> Option<Self> {
        (!self.is_zero()).then(|| self.pow(self.p as u64 - 2))
    }
}

impl Add for Fp {
    type Output = Fp;
    fn add(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp::new(self.value as u64 + rhs.value as u64, self.p)
    }
}

impl Sub for Fp {
    type Output = Fp;
    fn sub(self, rhs: Fp) -> Fp {
        self + (-rhs)
    }
}

impl Neg for Fp {
    type Output = Fp;
    fn neg(self) -> Fp {
        Fp::new((self.p - self.value) as u64, self.p)
    }
}

impl Mul for Fp {
    type Output = Fp;
    fn mul(self, rhs: Fp) -> Fp {
        debug_assert_eq!(self.p, rhs.p);
        Fp::new(self.value as u64 * rhs.value as u64, self.p)
    }
}

impl fmt::Debug for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.p)
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        assert!(is_prime(32003));
        assert!(!is_prime(32001));
        assert!(check_modulus(32003).unwrap().is_none());
        assert!(check_modulus(5).unwrap().is_some());
        assert!(check_modulus(9).is_err());
        assert!(check_modulus(2).is_err());
    }

    #[test]
    fn inverse() {
        let p = 32003;
        for v in 1..200 {
            let a = Fp::new(v, p);
            assert_eq!(a * a.inv().unwrap(), Fp::one(p));
        }
        assert!(Fp::zero(p).inv().is_none());
        assert_eq!(Fp::from_i64(-1, 7).value(), 6);
    }
}
