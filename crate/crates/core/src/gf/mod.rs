//! Exact linear algebra over prime fields GF(p).
//!
//! Matrices over GF(2) are stored as packed 64-bit words and eliminated with
//! word-level XOR; every other prime uses one byte per residue. Pivoting is
//! always "first nonzero entry in column order", so every derived basis is
//! reproducible across runs.

mod matrix;
mod poly;
mod subspace;

pub use matrix::{FpMatrix, Rref};
pub use poly::Poly;
pub use subspace::FpSubspace;

use crate::error::{Error, Result};

/// Largest prime accepted as a field characteristic. Residues are held in a
/// byte, and products are formed in `u32`.
pub const MAX_CHARACTERISTIC: u32 = 251;

pub fn is_prime(n: u32) -> bool {
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

pub(crate) fn check_prime(p: u32) -> Result<()> {
    if !is_prime(p) || p > MAX_CHARACTERISTIC {
        return Err(Error::InvalidPrime(p));
    }
    Ok(())
}

/// Multiplicative inverse of a nonzero residue.
pub fn inv_mod(a: u32, p: u32) -> u32 {
    let a = a % p;
    assert!(a != 0, "zero has no inverse mod {p}");
    // Fermat: a^(p-2)
    pow_mod(a, p - 2, p)
}

pub fn pow_mod(base: u32, mut exp: u32, p: u32) -> u32 {
    let m = p as u64;
    let mut acc = 1 % m;
    let mut b = base as u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

/// An element of the prime field GF(p).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FpScalar {
    value: u32,
    p: u32,
}

impl FpScalar {
    pub fn new(value: i64, p: u32) -> Result<Self> {
        check_prime(p)?;
        Ok(Self {
            value: value.rem_euclid(p as i64) as u32,
            p,
        })
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn modulus(self) -> u32 {
        self.p
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn inverse(self) -> Option<Self> {
        (self.value != 0).then(|| Self {
            value: inv_mod(self.value, self.p),
            p: self.p,
        })
    }
}

impl std::ops::Add for FpScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Self {
            value: (self.value + rhs.value) % self.p,
            p: self.p,
        }
    }
}

impl std::ops::Sub for FpScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Self {
            value: (self.value + self.p - rhs.value) % self.p,
            p: self.p,
        }
    }
}

impl std::ops::Mul for FpScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        debug_assert_eq!(self.p, rhs.p);
        Self {
            value: self.value * rhs.value % self.p,
            p: self.p,
        }
    }
}

impl std::ops::Neg for FpScalar {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            value: (self.p - self.value) % self.p,
            p: self.p,
        }
    }
}

impl std::fmt::Display for FpScalar {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes() {
        let ps: Vec<u32> = (0..30).filter(|&n| is_prime(n)).collect();
        assert_eq!(ps, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
        assert!(check_prime(4).is_err());
        assert!(check_prime(257).is_err());
    }

    #[test]
    fn scalar_arithmetic() {
        let a = FpScalar::new(-1, 5).unwrap();
        assert_eq!(a.value(), 4);
        let b = FpScalar::new(3, 5).unwrap();
        assert_eq!((a + b).value(), 2);
        assert_eq!((a * b).value(), 2);
        assert_eq!((b - a).value(), 4);
        assert_eq!((-b).value(), 2);
        assert_eq!(b.inverse().unwrap().value(), 2);
        assert!(FpScalar::new(0, 7).unwrap().inverse().is_none());
        for p in [2u32, 3, 5, 7, 11] {
            for x in 1..p {
                assert_eq!(x * inv_mod(x, p) % p, 1);
            }
        }
    }
}
