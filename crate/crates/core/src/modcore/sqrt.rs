//! Square roots of units modulo composite `n`.
//!
//! Each odd prime power is handled by Tonelli-Shanks followed by Newton
//! (Hensel) lifting; the 2-part by the classical mod 2 / 4 / 8 case split and
//! bitwise lifting. Local roots are glued with a precomputed CRT basis so that
//! every global root can be listed and the smallest one picked.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::{factor, jacobi, mod_inverse, Factorization, Residue};
use crate::error::Result;

/// Smallest `r` in `[0, n)` with `r^2 = a (mod n)`, or `None` if `a` is not
/// a square of a unit. The input must be a unit.
pub fn sqrt_mod(a: &Residue) -> Result<Option<Residue>> {
    Ok(sqrt_mod_all(a)?.into_iter().next())
}

/// Every unit square root of `a`, ascending. Empty if `a` is a non-square.
pub fn sqrt_mod_all(a: &Residue) -> Result<Vec<Residue>> {
    a.require_unit()?;
    let f = factor(a.modulus())?;
    Ok(unit_roots_with(a, &f))
}

/// Whether the unit `a` is a square, decided by residue symbols alone: a
/// Legendre symbol per odd prime and a congruence mod 4 or 8 for the 2-part.
pub(crate) fn is_unit_square_with(a: &Residue, f: &Factorization) -> bool {
    f.prime_powers().all(|(p, k, _)| {
        if *p == BigInt::from(2) {
            match k {
                1 => true,
                2 => a.value().mod_floor(&BigInt::from(4)).is_one(),
                _ => a.value().mod_floor(&BigInt::from(8)).is_one(),
            }
        } else {
            jacobi(a.value(), p).expect("odd prime") == 1
        }
    })
}

/// Unit square roots of the unit `a` with the factorization of its modulus
/// already known.
pub(crate) fn unit_roots_with(a: &Residue, f: &Factorization) -> Vec<Residue> {
    if !is_unit_square_with(a, f) {
        return Vec::new();
    }
    let n = a.modulus();
    let mut local: Vec<(BigInt, Vec<BigInt>)> = Vec::with_capacity(f.factors().len());
    for (p, k, pk) in f.prime_powers() {
        let target = a.value().mod_floor(&pk);
        let roots = if *p == BigInt::from(2) {
            roots_mod_two_power(&target, k)
        } else {
            roots_mod_odd_prime_power(&target, p, k, &pk)
        };
        match roots {
            Some(r) => local.push((pk, r)),
            None => return Vec::new(),
        }
    }

    // e_i = 1 mod m_i, 0 mod m_j for j != i
    let basis: Vec<BigInt> = local
        .iter()
        .map(|(m, _)| {
            let cofactor = n / m;
            let inv = mod_inverse(&cofactor, m).expect("prime powers are coprime");
            cofactor * inv
        })
        .collect();

    let mut out: Vec<BigInt> = vec![BigInt::zero()];
    for ((_, roots), e) in local.iter().zip(&basis) {
        out = out
            .iter()
            .flat_map(|acc| roots.iter().map(move |r| acc + r * e))
            .collect();
    }
    let mut out: Vec<Residue> = out
        .into_iter()
        .map(|v| Residue::new_unchecked(v, n))
        .collect();
    out.sort();
    out.dedup();
    out
}

/// Both roots of the unit `a` modulo `p^k`, odd `p`.
fn roots_mod_odd_prime_power(a: &BigInt, p: &BigInt, k: u32, pk: &BigInt) -> Option<Vec<BigInt>> {
    let mut r = tonelli_shanks(&a.mod_floor(p), p)?;
    let mut m = p.clone();
    while m < *pk {
        m = (&m * &m).min(pk.clone());
        let inv = mod_inverse(&(&r * 2), &m).expect("2r is a unit for odd p");
        r = (&r - (&r * &r - a) * inv).mod_floor(&m);
    }
    debug_assert!(k >= 1);
    let neg = (pk - &r).mod_floor(pk);
    Some(vec![r, neg])
}

/// Unit roots of the odd `a` modulo `2^k`.
fn roots_mod_two_power(a: &BigInt, k: u32) -> Option<Vec<BigInt>> {
    let a8 = (a % 8u32).to_u8().expect("reduced");
    match k {
        1 => Some(vec![BigInt::one()]),
        2 if a8 % 4 == 1 => Some(vec![BigInt::one(), BigInt::from(3)]),
        2 => None,
        _ if a8 != 1 => None,
        _ => {
            // r^2 = a mod 2^j  =>  r or r + 2^(j-1) is a root mod 2^(j+1), j >= 3
            let mut r = BigInt::one();
            for j in 3..k {
                let next = BigInt::one() << (j + 1);
                if !(&r * &r - a).mod_floor(&next).is_zero() {
                    r += BigInt::one() << (j - 1);
                }
            }
            let m = BigInt::one() << k;
            let half = BigInt::one() << (k - 1);
            let mut v = vec![
                r.mod_floor(&m),
                (-&r).mod_floor(&m),
                (&r + &half).mod_floor(&m),
                (&half - &r).mod_floor(&m),
            ];
            v.sort();
            v.dedup();
            Some(v)
        }
    }
}

/// Some root of the unit `a` modulo the odd prime `p`.
fn tonelli_shanks(a: &BigInt, p: &BigInt) -> Option<BigInt> {
    if jacobi(a, p).ok()? != 1 {
        return None;
    }
    let p1: BigInt = p - 1;
    let s = p1.trailing_zeros().expect("p > 2");
    let q = &p1 >> s;
    if s == 1 {
        return Some(a.modpow(&((p + 1) >> 2), p));
    }
    let mut z = BigInt::from(2);
    while jacobi(&z, p).ok()? != -1 {
        z += 1;
    }
    let mut m = s;
    let mut c = z.modpow(&q, p);
    let mut t = a.modpow(&q, p);
    let mut r = a.modpow(&((&q + 1) >> 1), p);
    while !t.is_one() {
        let mut i = 0;
        let mut t2 = t.clone();
        while !t2.is_one() {
            t2 = (&t2 * &t2) % p;
            i += 1;
        }
        let b = c.modpow(&(BigInt::one() << (m - i - 1)), p);
        m = i;
        c = (&b * &b) % p;
        t = (&t * &c) % p;
        r = (&r * &b) % p;
    }
    Some(r)
}
