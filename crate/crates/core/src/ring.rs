//! Coefficient rings for truncated power series.
//!
//! Two rings are provided: the exact integers (arbitrary precision) and the
//! integers modulo a fixed `m >= 2`. Series code is generic over
//! [`CoefficientRing`], so congruence checks can run directly in a small
//! residue ring instead of reducing exact values after the fact.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::{Error, Result};

/// A commutative ring with identity, presented as an explicit carrier value
/// so that residue rings of different moduli are distinct rings at runtime.
///
/// Elements are plain values; all arithmetic goes through the ring, which
/// keeps residue-ring elements in canonical reduced form `0..m`.
pub trait CoefficientRing: Clone + Eq + std::fmt::Debug {
    type Elem: Clone + Eq + std::fmt::Debug;

    /// Human-readable ring description, used in mismatch errors.
    fn name(&self) -> String;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn embed_i64(&self, value: i64) -> Self::Elem;
    fn embed_bigint(&self, value: &BigInt) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// `acc += a * b`. The inner loop of series multiplication.
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem);

    /// Multiplicative inverse, or `None` when `a` is not a unit.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool;
}

/// The ring of arbitrary-precision integers.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct ExactIntegers;

impl CoefficientRing for ExactIntegers {
    type Elem = BigInt;

    fn name(&self) -> String {
        "exact integers".to_string()
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn embed_i64(&self, value: i64) -> BigInt {
        BigInt::from(value)
    }

    fn embed_bigint(&self, value: &BigInt) -> BigInt {
        value.clone()
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn mul_add_assign(&self, acc: &mut BigInt, a: &BigInt, b: &BigInt) {
        *acc += a * b;
    }

    fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        // The only integer units are +1 and -1, each its own inverse.
        if a.is_one() || (-a).is_one() {
            Some(a.clone())
        } else {
            None
        }
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        Zero::is_zero(a)
    }
}

/// The ring of integers modulo `m` for a fixed `m >= 2`.
///
/// The modulus need not be prime; inverses are computed by the extended
/// Euclidean algorithm and exist exactly for elements coprime to `m`.
/// Elements are canonical residues in `0..m`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ResidueRing {
    modulus: u64,
}

impl ResidueRing {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::InvalidModulus { modulus });
        }
        Ok(ResidueRing { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }
}

impl CoefficientRing for ResidueRing {
    type Elem = u64;

    fn name(&self) -> String {
        format!("integers mod {}", self.modulus)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        // modulus >= 2, so 1 is already reduced
        1
    }

    fn embed_i64(&self, value: i64) -> u64 {
        (value as i128).rem_euclid(self.modulus as i128) as u64
    }

    fn embed_bigint(&self, value: &BigInt) -> u64 {
        let m = BigInt::from(self.modulus);
        value
            .mod_floor(&m)
            .to_u64()
            .expect("mod_floor result fits in u64 for u64 modulus")
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus - a
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 * *b as u128) % self.modulus as u128) as u64
    }

    fn mul_add_assign(&self, acc: &mut u64, a: &u64, b: &u64) {
        *acc = ((*acc as u128 + *a as u128 * *b as u128) % self.modulus as u128) as u64;
    }

    fn inverse(&self, a: &u64) -> Option<u64> {
        mod_inverse(*a, self.modulus)
    }

    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
}

/// Extended Euclid. Returns the inverse of `a` mod `m` when gcd(a, m) = 1.
fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 == 1 {
        Some(t0.rem_euclid(m as i128) as u64)
    } else {
        None
    }
}

/// Natural logarithm of `|x|`, or `None` when `x = 0`.
///
/// For values wider than 64 bits the result is assembled as
/// `ln(top 64 bits) + (bit_length - 64) * ln 2`, which keeps at least 12
/// significant digits for any magnitude.
pub fn log_abs_bigint(x: &BigInt) -> Option<f64> {
    if Zero::is_zero(x) {
        return None;
    }
    let mag = x.abs();
    let bits = mag.bits();
    if bits <= 64 {
        let v = mag.to_u64().expect("fits in u64 by bit length");
        Some((v as f64).ln())
    } else {
        let top = (&mag >> (bits - 64))
            .to_u64()
            .expect("top 64 bits fit in u64");
        Some((top as f64).ln() + (bits - 64) as f64 * std::f64::consts::LN_2)
    }
}
