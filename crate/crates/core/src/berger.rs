//! Cohomology and linking data for `Sp(2) / psi(Sp(1))` where `psi`
//! restricts on maximal tori to `z -> (z^a, z^b)`. The Berger space is the
//! maximal embedding, weights `(1, 3)`.
//!
//! The Serre spectral sequence of `Sp(2) -> M -> BSp(1)` has
//! `E_2 = Z[p_1] (x) E(y_3, y_7)` with `d_4(y_3) = (a^2 + b^2) p_1` and
//! `d_8(y_7) = a^2 b^2 p_1^2`. The coefficients are the elementary symmetric
//! functions of the squared weights.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::bundles::{enumerate_homotopy_types, BundleSpec, CohomologyProfile, Group, WilkensData};
use crate::decide::{theorem1_decide, theorem3_decide, ComplexData, Status, Verdict};
use crate::error::{Error, Result};
use crate::linkforms::{is_standard, LinkingForm, StandardWitness};

/// Torus weights `(a, b)` of `S^1 -> T^2 < Sp(2)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightEmbedding {
    a: BigInt,
    b: BigInt,
}

impl WeightEmbedding {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Result<Self> {
        let (a, b) = (a.into(), b.into());
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroWeights);
        }
        Ok(Self { a, b })
    }

    /// The maximal embedding `(1, 3)`.
    pub fn berger() -> Self {
        Self {
            a: BigInt::one(),
            b: BigInt::from(3),
        }
    }

    pub fn weights(&self) -> (&BigInt, &BigInt) {
        (&self.a, &self.b)
    }
}

/// `Bpsi^*(p_1) = p1_coeff p_1`, `Bpsi^*(p_2) = p2_coeff p_1^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PullbackData {
    pub p1_coeff: BigInt,
    pub p2_coeff: BigInt,
}

pub fn pullback(w: &WeightEmbedding) -> PullbackData {
    let a2 = &w.a * &w.a;
    let b2 = &w.b * &w.b;
    PullbackData {
        p1_coeff: &a2 + &b2,
        p2_coeff: a2 * b2,
    }
}

/// Result of running both differentials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientCohomology {
    pub pullback: PullbackData,
    /// `|H^4| = a^2 + b^2`, the cokernel of `d_4`.
    pub torsion_order: BigInt,
    /// Degrees `0..=7`.
    pub profile: CohomologyProfile,
    /// `gcd(p1_coeff, p2_coeff)`; `d_8` is onto the torsion iff this is 1.
    pub d8_defect: BigInt,
    /// Nonzero `E_inf` groups above degree 7, up to [`EXTRA_DEGREE_LIMIT`].
    pub extra: Vec<(u32, Group)>,
}

impl QuotientCohomology {
    /// True when the profile is `H^0 = H^7 = Z`, `H^4 = Z_{a^2+b^2}` and
    /// nothing above degree 7 survives.
    pub fn is_sphere_bundle_like(&self) -> bool {
        self.extra.is_empty()
    }
}

pub const EXTRA_DEGREE_LIMIT: u32 = 31;

/// `H^*(Sp(2)/psi(Sp(1)))` from the two differentials.
///
/// After `d_4` the `E_5` page has row 0 equal to `Z` in degree 0 and
/// `Z_c1` in degrees `4j`, `j >= 1`, and row 7 the same pattern shifted by 7.
/// `d_8` multiplies row 7 into row 0 by `c2`; its kernel and cokernel on
/// `Z_c1` are both `Z_g`, `g = gcd(c1, c2)`, and on the `Z` in degree 7 the
/// kernel is again `Z`. With `g = 1` everything above degree 7 dies.
pub fn quotient_cohomology(w: &WeightEmbedding) -> QuotientCohomology {
    let pb = pullback(w);
    let c1 = pb.p1_coeff.clone();
    let g = c1.gcd(&pb.p2_coeff);
    let profile = CohomologyProfile::sphere_bundle_like(&c1);
    let mut extra = Vec::new();
    if !g.is_one() {
        for d in 8..=EXTRA_DEGREE_LIMIT {
            // cokernels in degrees 4j (j >= 2), kernels in degrees 7 + 4j (j >= 1)
            if d % 4 == 0 || d % 4 == 3 {
                extra.push((d, Group::cyclic(g.clone())));
            }
        }
    }
    QuotientCohomology {
        pullback: pb,
        torsion_order: c1,
        profile,
        d8_defect: g,
        extra,
    }
}

/// A linking form read in one orientation, with its standardness witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedForm {
    pub form: LinkingForm,
    pub witness: Option<StandardWitness>,
}

/// Bundle candidates for one admissible value of `beta`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BetaCandidate {
    pub beta_coeff: BigInt,
    pub bundles: Vec<BundleSpec>,
    pub pl: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BergerReport {
    pub weights: WeightEmbedding,
    pub cohomology: QuotientCohomology,
    pub n: BigInt,
    /// `lambda = +1` and `lambda = -1`; the sign depends on the orientation.
    pub orientations: Vec<OrientedForm>,
    pub linking_standard: bool,
    /// Homotopy equivalence to a bundle (a smooth manifold, so `Theta = 0`).
    pub homotopy: Verdict,
    /// Oriented homotopy types of bundles with the same Euler number; all
    /// are compatible with the known invariants.
    pub homotopy_types: Vec<BundleSpec>,
    /// The spin class `beta` of the Berger space is not known here, so PL
    /// matching runs over every admissible (even, when `n` is even) value.
    pub beta_candidates: Vec<BetaCandidate>,
    /// `Yes` when the PL verdict is `Yes` for every admissible `beta`.
    pub pl_bundle: Status,
}

/// The `(1, 3)` pipeline end to end.
pub fn berger_report() -> BergerReport {
    report_for(WeightEmbedding::berger()).expect("Berger weights are admissible")
}

fn report_for(weights: WeightEmbedding) -> Result<BergerReport> {
    let cohomology = quotient_cohomology(&weights);
    let n = cohomology
        .profile
        .admissible_order()
        .filter(|_| cohomology.is_sphere_bundle_like())
        .ok_or_else(|| Error::InvalidModulus(cohomology.torsion_order.clone()))?;

    // <y_4 (x) y_3, [M]> = ±1 mod n; no finer sign information is available.
    let plus = LinkingForm::new(n.clone(), 1)?;
    let orientations = [plus.clone(), plus.reversed()]
        .into_iter()
        .map(|form| {
            let witness = is_standard(&form)?;
            Ok(OrientedForm { form, witness })
        })
        .collect::<Result<Vec<_>>>()?;
    let linking_standard = orientations.iter().all(|o| o.witness.is_some());

    let homotopy = theorem1_decide(&ComplexData::new(plus.clone(), None, true)?)?;
    let homotopy_types = enumerate_homotopy_types(&n)?;

    let mut beta_candidates = Vec::new();
    let mut c = BigInt::zero();
    while c < n {
        if n.is_odd() || c.is_even() {
            let data = WilkensData::new(plus.clone(), c.clone())?;
            let pl = theorem3_decide(&data)?;
            beta_candidates.push(BetaCandidate {
                beta_coeff: c.clone(),
                bundles: pl.witnesses.bundles.clone(),
                pl,
            });
        }
        c += 1;
    }
    let pl_bundle = if beta_candidates.iter().all(|b| b.pl.status == Status::Yes) {
        Status::Yes
    } else if beta_candidates.iter().any(|b| b.pl.status == Status::No) {
        Status::No
    } else {
        Status::Indeterminate
    };

    Ok(BergerReport {
        weights,
        cohomology,
        n,
        orientations,
        linking_standard,
        homotopy,
        homotopy_types,
        beta_candidates,
        pl_bundle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: i64, b: i64) -> WeightEmbedding {
        WeightEmbedding::new(a, b).unwrap()
    }

    #[test]
    fn pullback_examples() {
        let p = pullback(&w(1, 3));
        assert_eq!((p.p1_coeff, p.p2_coeff), (BigInt::from(10), BigInt::from(9)));
        let p = pullback(&w(1, 1));
        assert_eq!((p.p1_coeff, p.p2_coeff), (BigInt::from(2), BigInt::from(1)));
        let p = pullback(&w(1, 2));
        assert_eq!((p.p1_coeff, p.p2_coeff), (BigInt::from(5), BigInt::from(4)));
    }

    #[test]
    fn zero_weights_rejected() {
        assert_eq!(WeightEmbedding::new(0, 0), Err(Error::ZeroWeights));
        assert!(WeightEmbedding::new(1, 0).is_ok());
    }

    #[test]
    fn quotient_examples() {
        for (a, b, n) in [(1, 3, 10), (1, 1, 2), (1, 2, 5)] {
            let q = quotient_cohomology(&w(a, b));
            assert_eq!(q.profile.get(4), Group::Cyclic(BigInt::from(n)));
            assert_eq!(q.profile.get(0), Group::Integers);
            assert_eq!(q.profile.get(7), Group::Integers);
            assert!(q.is_sphere_bundle_like());
        }
        // (1, 0): the round S^7
        let q = quotient_cohomology(&w(1, 0));
        assert_eq!(q.profile.get(4), Group::Trivial);
        assert!(q.is_sphere_bundle_like());
    }

    #[test]
    fn non_coprime_weights_are_reported() {
        let q = quotient_cohomology(&w(2, 2));
        assert_eq!(q.torsion_order, BigInt::from(8));
        assert_eq!(q.d8_defect, BigInt::from(8));
        assert!(!q.is_sphere_bundle_like());
        assert_eq!(q.extra[0], (8, Group::Cyclic(BigInt::from(8))));
        assert_eq!(q.extra[1], (11, Group::Cyclic(BigInt::from(8))));
        assert!(report_for(w(2, 2)).is_err());
    }

    #[test]
    fn report_shape() {
        let r = berger_report();
        assert_eq!(r.n, BigInt::from(10));
        assert!(r.linking_standard);
        assert_eq!(r.homotopy.status, Status::Yes);
        assert_eq!(r.pl_bundle, Status::Yes);
        assert_eq!(r.homotopy_types.len(), 2);
        assert_eq!(r.beta_candidates.len(), 5);
    }

    #[test]
    fn other_weights_run_through_pipeline() {
        let r = report_for(w(1, 2)).unwrap();
        assert_eq!(r.n, BigInt::from(5));
        // 5 = 1 mod 4: lambda = ±1 is still standard
        assert!(r.linking_standard);
        assert_eq!(r.pl_bundle, Status::Yes);
    }
}
