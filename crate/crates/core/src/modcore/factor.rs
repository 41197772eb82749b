use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::check_modulus;
use crate::error::Result;

/// Prime factorization `n = p1^e1 * ... * pr^er` with strictly increasing primes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    factors: Vec<(BigInt, u32)>,
}

impl Factorization {
    pub fn factors(&self) -> &[(BigInt, u32)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    /// Reconstructs `n`.
    pub fn product(&self) -> BigInt {
        self.factors
            .iter()
            .map(|(p, e)| num_traits::pow(p.clone(), *e as usize))
            .product()
    }

    /// `Some((p, k))` when `n = p^k` with `k >= 1`.
    pub fn as_prime_power(&self) -> Option<(&BigInt, u32)> {
        match self.factors.as_slice() {
            [(p, k)] => Some((p, *k)),
            _ => None,
        }
    }

    /// The prime-power components `(p, k, p^k)`.
    pub fn prime_powers(&self) -> impl Iterator<Item = (&BigInt, u32, BigInt)> + '_ {
        self.factors
            .iter()
            .map(|(p, k)| (p, *k, num_traits::pow(p.clone(), *k as usize)))
    }

    fn push(&mut self, p: BigInt) {
        match self.factors.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => self.factors.push((p, 1)),
        }
    }
}

/// Complete factorization of `n >= 1` by trial division.
///
/// Values that fit in a `u64` take a machine-word path whose cofactors are
/// certified by deterministic Miller-Rabin; larger values are trial-divided
/// with big integers up to the square root of the remaining cofactor.
pub fn factor(n: &BigInt) -> Result<Factorization> {
    check_modulus(n)?;
    let mut out = Factorization { factors: Vec::new() };
    match n.to_u64() {
        Some(small) => factor_u64(small, &mut out),
        None => factor_big(n.clone(), &mut out),
    }
    Ok(out)
}

pub fn is_prime(n: &BigInt) -> bool {
    if *n < BigInt::from(2) {
        return false;
    }
    match n.to_u64() {
        Some(small) => is_prime_u64(small),
        None => factor_big_is_prime(n),
    }
}

fn factor_u64(mut n: u64, out: &mut Factorization) {
    for p in [2u64, 3] {
        while n % p == 0 {
            out.push(BigInt::from(p));
            n /= p;
        }
    }
    let mut d = 5u64;
    let mut step = 2u64;
    let mut fresh = true;
    while n > 1 {
        if (fresh && is_prime_u64(n)) || d.saturating_mul(d) > n {
            out.push(BigInt::from(n));
            return;
        }
        fresh = false;
        while n % d == 0 {
            out.push(BigInt::from(d));
            n /= d;
            fresh = true;
        }
        d += step;
        step = 6 - step;
    }
}

fn factor_big(mut n: BigInt, out: &mut Factorization) {
    let two = BigInt::from(2);
    while n.is_even() {
        out.push(two.clone());
        n >>= 1;
    }
    let mut d = BigInt::from(3);
    while !n.is_one() {
        if let Some(small) = n.to_u64() {
            // Remaining cofactor has no prime factor below d.
            let mut rest = Factorization { factors: Vec::new() };
            factor_u64(small, &mut rest);
            out.factors.extend(rest.factors);
            return;
        }
        if &d * &d > n {
            out.push(n);
            return;
        }
        while (&n % &d).is_zero() {
            out.push(d.clone());
            n /= &d;
        }
        d += 2;
    }
}

fn factor_big_is_prime(n: &BigInt) -> bool {
    let mut f = Factorization { factors: Vec::new() };
    factor_big(n.clone(), &mut f);
    matches!(f.factors.as_slice(), [(_, 1)])
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Miller-Rabin with the first twelve prime bases, exact for all `u64`.
fn is_prime_u64(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}
