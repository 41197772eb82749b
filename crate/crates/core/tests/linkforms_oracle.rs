mod common;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use s3bundle::linkforms::{equivalent, is_standard, square_class_count, LinkingForm};

use common::*;

fn form(n: u64, l: u64) -> LinkingForm {
    LinkingForm::new(n, l).unwrap()
}

#[test]
fn is_standard_agrees_with_exhaustive_search() {
    for n in 1..=2000u64 {
        let table = standard_table(n);
        for l in units(n) {
            let got = is_standard(&form(n, l))
                .unwrap()
                .map(|w| (w.tau.value().to_u64().unwrap(), w.sign.as_i8()));
            assert_eq!(got, table.get(&l).copied(), "n={n} lambda={l}");
        }
    }
}

#[test]
fn standard_table_agrees_with_direct_search() {
    for n in 1..=150u64 {
        let table = standard_table(n);
        for l in units(n) {
            assert_eq!(table.get(&l).copied(), standard_brute(n, l), "n={n} lambda={l}");
        }
    }
}

/// Reflexive, symmetric and transitive: with the first two in hand,
/// transitivity is equivalent to related elements having identical rows.
fn assert_equivalence_relation(n: u64, flip: bool) {
    let us = units(n);
    let rel: Vec<Vec<bool>> = us
        .iter()
        .map(|a| {
            us.iter()
                .map(|b| equivalent(&form(n, *a), &form(n, *b), flip).unwrap())
                .collect()
        })
        .collect();
    for i in 0..us.len() {
        assert!(rel[i][i], "n={n}: not reflexive at {}", us[i]);
        for j in 0..us.len() {
            assert_eq!(rel[i][j], rel[j][i], "n={n}: not symmetric");
            if rel[i][j] {
                assert_eq!(rel[i], rel[j], "n={n}: not transitive via {} ~ {}", us[i], us[j]);
            }
        }
    }
}

#[test]
fn equivalence_is_an_equivalence_relation() {
    for n in 1..=200u64 {
        assert_equivalence_relation(n, false);
        assert_equivalence_relation(n, true);
    }
}

#[test]
fn equivalent_matches_brute_definition() {
    for n in 1..=120u64 {
        let us = units(n);
        for &a in &us {
            for &b in &us {
                let plain = us.iter().any(|u| u * u % n * a % n == b % n);
                let flipped = plain || us.iter().any(|u| (u * u % n * a + b) % n == 0);
                assert_eq!(equivalent(&form(n, a), &form(n, b), false).unwrap(), plain);
                assert_eq!(equivalent(&form(n, a), &form(n, b), true).unwrap(), flipped);
            }
        }
    }
}

#[test]
fn every_form_is_standard_for_prime_powers_3_mod_4() {
    for q in prime_powers_3_mod_4(5000) {
        for l in units(q) {
            assert!(is_standard(&form(q, l)).unwrap().is_some(), "q={q} lambda={l}");
        }
    }
}

#[test]
fn some_form_is_not_standard_for_primes_1_mod_4() {
    for p in (5..=1000u64).filter(|p| p % 4 == 1 && factor_naive(*p) == vec![(*p, 1)]) {
        let pm = signed_unit_squares(p);
        let witness = units(p).into_iter().find(|l| !pm.contains(l));
        let l = witness.expect("±squares form an index-2 subgroup");
        assert!(is_standard(&form(p, l)).unwrap().is_none(), "p={p}");
    }
}

#[test]
fn standard_iff_equivalent_to_identity_with_flip() {
    for n in 1..=300u64 {
        let one = LinkingForm::standard(n).unwrap();
        for l in units(n) {
            let f = form(n, l);
            assert_eq!(
                is_standard(&f).unwrap().is_some(),
                equivalent(&f, &one, true).unwrap(),
                "n={n} lambda={l}"
            );
        }
    }
}

#[test]
fn class_count_matches_orbit_enumeration() {
    for n in 1..=1000u64 {
        let pm = signed_unit_squares(n);
        let expected = units(n).len() / pm.len();
        assert_eq!(
            square_class_count(&BigInt::from(n)).unwrap(),
            BigInt::from(expected),
            "n={n}"
        );
    }
}
