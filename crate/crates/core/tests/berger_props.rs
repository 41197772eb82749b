use num_bigint::BigInt;
use proptest::prelude::*;
use s3bundle::berger::{berger_report, pullback, quotient_cohomology, WeightEmbedding, EXTRA_DEGREE_LIMIT};
use s3bundle::bundles::Group;
use s3bundle::decide::Status;

fn w(a: i64, b: i64) -> WeightEmbedding {
    WeightEmbedding::new(a, b).unwrap()
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a.abs() } else { gcd(b, a % b) }
}

#[test]
fn zero_weights_are_rejected() {
    assert!(WeightEmbedding::new(0, 0).is_err());
}

#[test]
fn torsion_is_sum_of_squares() {
    for a in -20i64..=20 {
        for b in -20i64..=20 {
            if (a, b) == (0, 0) {
                continue;
            }
            let q = quotient_cohomology(&w(a, b));
            let c1 = a * a + b * b;
            assert_eq!(q.torsion_order, BigInt::from(c1));
            assert_eq!(q.profile.get(4), Group::cyclic(c1));
            assert_eq!(q.profile.get(0), Group::Integers);
            assert_eq!(q.profile.get(7), Group::Integers);
            let g = gcd(c1, a * a * b * b);
            assert_eq!(q.d8_defect, BigInt::from(g));
            // gcd(a^2 + b^2, a^2 b^2) > 1 exactly when gcd(a, b) > 1
            assert_eq!(q.is_sphere_bundle_like(), gcd(a, b) == 1, "a={a} b={b}");
            for (d, grp) in &q.extra {
                assert!(*d >= 8 && *d <= EXTRA_DEGREE_LIMIT);
                assert_eq!(*grp, Group::cyclic(g));
            }
        }
    }
}

#[test]
fn pullback_symmetry_and_sign_invariance() {
    for a in -50i64..=50 {
        for b in -50i64..=50 {
            if (a, b) == (0, 0) {
                continue;
            }
            let p = pullback(&w(a, b));
            assert_eq!(p, pullback(&w(b, a)));
            assert_eq!(p, pullback(&w(-a, b)));
            assert_eq!(p, pullback(&w(a, -b)));
            assert_eq!(p.p1_coeff, BigInt::from(a * a + b * b));
            assert_eq!(p.p2_coeff, BigInt::from(a * a * b * b));
        }
    }
}

#[test]
fn berger_golden_values() {
    let r = berger_report();
    assert_eq!(r.weights, WeightEmbedding::berger());
    assert_eq!(r.n, BigInt::from(10));
    assert_eq!(r.cohomology.pullback.p1_coeff, BigInt::from(10));
    assert_eq!(r.cohomology.pullback.p2_coeff, BigInt::from(9));
    assert!(r.cohomology.is_sphere_bundle_like());
    for d in [1, 2, 3, 5, 6] {
        assert_eq!(r.cohomology.profile.get(d), Group::Trivial);
    }
    assert_eq!(r.cohomology.profile.get(4), Group::cyclic(10));
    assert!(r.linking_standard);
    assert_eq!(r.orientations.len(), 2);
    let lambdas: Vec<BigInt> = r.orientations.iter().map(|o| o.form.lambda().value().clone()).collect();
    assert_eq!(lambdas, vec![BigInt::from(1), BigInt::from(9)]);
    assert!(r.orientations.iter().all(|o| o.witness.is_some()));
    assert_eq!(r.homotopy.status, Status::Yes);
    assert_eq!(r.homotopy_types.len(), 2);
    assert_eq!(r.beta_candidates.len(), 5);
    assert!(r.beta_candidates.iter().all(|c| c.pl.status == Status::Yes));
    assert_eq!(r.pl_bundle, Status::Yes);
}

proptest! {
    #[test]
    fn large_weights_stay_exact(a in any::<i64>(), b in any::<i64>()) {
        prop_assume!((a, b) != (0, 0));
        let (ab, bb) = (BigInt::from(a), BigInt::from(b));
        let q = quotient_cohomology(&w(a, b));
        prop_assert_eq!(q.torsion_order, &ab * &ab + &bb * &bb);
    }
}
