use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::check_modulus;
use crate::error::{Error, Result};

/// An integer class modulo `n`, stored as its representative in `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Residue {
    value: BigInt,
    modulus: BigInt,
}

impl Residue {
    /// Reduces `value` into `[0, modulus)`. Fails if `modulus < 1`.
    pub fn new(value: impl Into<BigInt>, modulus: impl Into<BigInt>) -> Result<Self> {
        let modulus = modulus.into();
        check_modulus(&modulus)?;
        let value = value.into().mod_floor(&modulus);
        Ok(Self { value, modulus })
    }

    pub(crate) fn new_unchecked(value: BigInt, modulus: &BigInt) -> Self {
        debug_assert!(*modulus >= BigInt::one());
        Self {
            value: value.mod_floor(modulus),
            modulus: modulus.clone(),
        }
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// True iff `gcd(value, modulus) = 1`. Every class mod 1 is a unit.
    pub fn is_unit(&self) -> bool {
        self.value.gcd(&self.modulus).is_one()
    }

    pub fn inverse(&self) -> Option<Self> {
        mod_inverse(&self.value, &self.modulus).map(|v| Self::new_unchecked(v, &self.modulus))
    }

    pub fn neg(&self) -> Self {
        Self::new_unchecked(-&self.value, &self.modulus)
    }

    /// Product of two residues with the same modulus.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch(
                self.modulus.clone(),
                other.modulus.clone(),
            ));
        }
        Ok(Self::new_unchecked(&self.value * &other.value, &self.modulus))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::new_unchecked(&self.value * k, &self.modulus)
    }

    pub fn square(&self) -> Self {
        Self::new_unchecked(&self.value * &self.value, &self.modulus)
    }

    pub(crate) fn require_unit(&self) -> Result<()> {
        if self.is_unit() {
            Ok(())
        } else {
            Err(Error::NonUnit {
                value: self.value.clone(),
                modulus: self.modulus.clone(),
            })
        }
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

/// Inverse of `a` modulo `m` in `[0, m)`, if `gcd(a, m) = 1`.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    if *m < BigInt::one() {
        return None;
    }
    let a = a.mod_floor(m);
    let ext = a.extended_gcd(m);
    if !ext.gcd.is_one() {
        return None;
    }
    Some(ext.x.mod_floor(m))
}

/// The residues coprime to `n`, ascending. For `n = 1` this is `{0}`.
pub fn unit_group(n: &BigInt) -> Result<Vec<Residue>> {
    check_modulus(n)?;
    if n.is_one() {
        return Ok(vec![Residue::new_unchecked(BigInt::zero(), n)]);
    }
    let mut out = Vec::new();
    let mut r = BigInt::one();
    while r < *n {
        if r.gcd(n).is_one() {
            out.push(Residue::new_unchecked(r.clone(), n));
        }
        r += 1;
    }
    Ok(out)
}
