//! Exact integer and modular arithmetic on arbitrary-precision integers.
//!
//! Everything here is a pure function of its inputs. Moduli are `BigInt`s
//! bounded only by memory, although factorization is trial division and so
//! is only practical for moduli up to roughly 10^12.

mod crt;
mod factor;
mod jacobi;
mod residue;
mod sqrt;

pub use crt::crt;
pub use factor::{factor, is_prime, Factorization};
pub use jacobi::jacobi;
pub use residue::{mod_inverse, unit_group, Residue};
pub use sqrt::{sqrt_mod, sqrt_mod_all};

pub(crate) use sqrt::{is_unit_square_with, unit_roots_with};

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

pub(crate) fn check_modulus(n: &BigInt) -> Result<()> {
    if *n < BigInt::one() {
        return Err(Error::InvalidModulus(n.clone()));
    }
    Ok(())
}

/// Euler's totient from a factorization.
pub fn euler_phi(f: &Factorization) -> BigInt {
    f.factors()
        .iter()
        .map(|(p, k)| num_traits::pow(p.clone(), (*k - 1) as usize) * (p - 1))
        .product()
}
