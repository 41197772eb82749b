//! Brute-force oracles. Deliberately naive: enumerate residues and never
//! call into the square-root, CRT or class-count machinery under test.

#![allow(dead_code)]

use std::collections::BTreeSet;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Units mod n as plain integers; `{0}` for n = 1.
pub fn units(n: u64) -> Vec<u64> {
    if n == 1 {
        return vec![0];
    }
    (1..n).filter(|r| gcd(*r, n) == 1).collect()
}

/// Squares of units mod n.
pub fn unit_squares(n: u64) -> BTreeSet<u64> {
    units(n).into_iter().map(|u| u * u % n).collect()
}

/// `{±u^2}` mod n.
pub fn signed_unit_squares(n: u64) -> BTreeSet<u64> {
    let mut s = unit_squares(n);
    let neg: Vec<u64> = s.iter().map(|v| (n - v) % n).collect();
    s.extend(neg);
    s
}

/// Legendre symbol by listing the squares mod p.
pub fn legendre_brute(a: i64, p: u64) -> i8 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    if (1..p).any(|x| x * x % p == a) {
        1
    } else {
        -1
    }
}

/// Trial-division factorization on machine words.
pub fn factor_naive(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Smallest unit tau with `tau^2 = sign * lambda`, sign = +1 tried first.
pub fn standard_brute(n: u64, lambda: u64) -> Option<(u64, i8)> {
    for (sign, target) in [(1i8, lambda % n), (-1, (n - lambda % n) % n)] {
        if let Some(t) = units(n).into_iter().find(|u| u * u % n == target) {
            return Some((t, sign));
        }
    }
    None
}

/// Prime powers `p^k <= limit` with `p = 3 mod 4`.
pub fn prime_powers_3_mod_4(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for p in (3..=limit).filter(|p| p % 4 == 3 && factor_naive(*p).len() == 1 && factor_naive(*p)[0].1 == 1) {
        let mut q = p;
        while q <= limit {
            out.push(q);
            q *= p;
        }
    }
    out.sort();
    out
}

/// `standard_brute` for every unit at once: one pass squaring all units,
/// keeping the first (smallest) root of each square.
pub fn standard_table(n: u64) -> std::collections::HashMap<u64, (u64, i8)> {
    let mut roots = std::collections::HashMap::new();
    for u in units(n) {
        roots.entry(u * u % n).or_insert(u);
    }
    units(n)
        .into_iter()
        .filter_map(|l| {
            let hit = roots
                .get(&(l % n))
                .map(|t| (*t, 1))
                .or_else(|| roots.get(&((n - l % n) % n)).map(|t| (*t, -1)));
            hit.map(|w| (l, w))
        })
        .collect()
}
