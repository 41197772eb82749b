use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{mod_inverse, Residue};
use crate::error::{Error, Result};

/// Combines residues with pairwise coprime moduli into the unique residue
/// modulo their product. An empty list yields `0 mod 1`.
pub fn crt(pairs: &[Residue]) -> Result<Residue> {
    let mut acc = Residue::new_unchecked(BigInt::from(0), &BigInt::one());
    for r in pairs {
        let (m1, m2) = (acc.modulus(), r.modulus());
        if !m1.gcd(m2).is_one() {
            return Err(Error::NonCoprimeModuli(m1.clone(), m2.clone()));
        }
        // x = a1 + m1 * ((a2 - a1) * m1^-1 mod m2)
        let inv = mod_inverse(m1, m2).expect("coprime moduli");
        let t = ((r.value() - acc.value()) * inv).mod_floor(m2);
        let modulus = m1 * m2;
        acc = Residue::new_unchecked(acc.value() + m1 * t, &modulus);
    }
    Ok(acc)
}
