//! Decision procedures: when is a complex or manifold with the cohomology of
//! an S^3-bundle over S^4 homotopy equivalent, or PL-homeomorphic, to one?
//!
//! Every affirmative verdict carries witnesses that can be checked
//! independently: a [`StandardWitness`] for the linking form, a
//! [`HopfWitness`] for the fibration construction, and candidate bundles.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::bundles::{enumerate_homotopy_types, BundleSpec, WilkensData};
use crate::error::{Error, Result};
use crate::linkforms::{self, is_nondegenerate, LinkingForm, Sign, StandardWitness};
use crate::modcore::{self, mod_inverse, Factorization, Residue};

/// Invariants of a simply connected complex `X` with `H^4(X) = Z_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplexData {
    form: LinkingForm,
    theta_trivial: Option<bool>,
    is_manifold: bool,
}

impl ComplexData {
    /// `theta_trivial` is the status of the secondary operation `Theta`
    /// (`None` when unknown). Smooth manifolds have trivial `Theta`.
    ///
    /// For odd `n` the domain `H^4(X; F_2)` of `Theta` is zero, so declaring
    /// it nontrivial is rejected.
    pub fn new(form: LinkingForm, theta_trivial: Option<bool>, is_manifold: bool) -> Result<Self> {
        if !is_nondegenerate(&form) {
            return Err(Error::DegenerateForm {
                n: form.n().clone(),
                lambda: form.lambda().value().clone(),
            });
        }
        if theta_trivial == Some(false) && form.n().is_odd() && !is_manifold {
            return Err(Error::InconsistentTheta(form.n().clone()));
        }
        Ok(Self {
            form,
            theta_trivial,
            is_manifold,
        })
    }

    pub fn n(&self) -> &BigInt {
        self.form.n()
    }

    pub fn form(&self) -> &LinkingForm {
        &self.form
    }

    pub fn theta_trivial(&self) -> Option<bool> {
        self.theta_trivial
    }

    pub fn is_manifold(&self) -> bool {
        self.is_manifold
    }

    /// `Some(true)` for manifolds regardless of the declared value.
    pub fn effective_theta(&self) -> Option<bool> {
        if self.is_manifold {
            Some(true)
        } else {
            self.theta_trivial
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Yes,
    No,
    Indeterminate,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Yes => "yes",
            Status::No => "no",
            Status::Indeterminate => "indeterminate",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Reason {
    /// Theta trivial and the linking form standard.
    StandardForm,
    FormNotStandard,
    ThetaNontrivial,
    ThetaUnknown,
    /// `n = p^k`, `p = 3 mod 4`: every form is standard up to sign.
    PrimePowerThreeModFour,
    /// PL classification by Wilkens data, `n` odd.
    OddOrder,
    /// PL classification, `n = 2 * odd`: both PL types are bundles.
    TwiceOddOrder,
    /// `4 | n`: the PL question is left open.
    OrderDivisibleByFour,
}

impl Reason {
    pub fn code(self) -> &'static str {
        match self {
            Reason::StandardForm => "standard-form",
            Reason::FormNotStandard => "linking form not standard",
            Reason::ThetaNontrivial => "theta-nontrivial",
            Reason::ThetaUnknown => "theta-unknown",
            Reason::PrimePowerThreeModFour => "prime-power-3-mod-4",
            Reason::OddOrder => "n-odd",
            Reason::TwiceOddOrder => "n-twice-odd",
            Reason::OrderDivisibleByFour => "n-divisible-by-4",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// `m^2 lambda n + k n^2 = sign n`: composing the extension with a degree `m`
/// self-map and adding `k` multiples of `n^2` brings the Hopf invariant to
/// `±n`, so the homotopy fiber is a homology 3-sphere.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HopfWitness {
    pub m: BigInt,
    pub k: BigInt,
    pub sign: Sign,
}

impl HopfWitness {
    /// `m^2 lambda n + k n^2`, exactly.
    pub fn hopf_invariant(&self, n: &BigInt, lambda: &BigInt) -> BigInt {
        &self.m * &self.m * lambda * n + &self.k * n * n
    }

    /// Checks the identity over the integers for the lift `lambda`.
    pub fn holds(&self, n: &BigInt, lambda: &BigInt) -> bool {
        self.hopf_invariant(n, lambda) == self.sign.as_bigint() * n
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Witnesses {
    pub standard: Option<StandardWitness>,
    pub bundles: Vec<BundleSpec>,
    pub hopf: Option<HopfWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub status: Status,
    pub reason: Reason,
    pub witnesses: Witnesses,
    pub notes: Vec<String>,
}

impl Verdict {
    fn new(status: Status, reason: Reason) -> Self {
        Self {
            status,
            reason,
            witnesses: Witnesses::default(),
            notes: Vec::new(),
        }
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        self.notes.push(s.into());
        self
    }
}

/// Homotopy equivalence to an S^3-bundle over S^4: yes iff `Theta` is
/// trivial and the linking form is standard for some orientation.
pub fn theorem1_decide(x: &ComplexData) -> Result<Verdict> {
    let f = modcore::factor(x.n())?;
    Ok(decide_with(x, x.effective_theta(), &f))
}

fn decide_with(x: &ComplexData, theta: Option<bool>, f: &Factorization) -> Verdict {
    if theta == Some(false) {
        return Verdict::new(Status::No, Reason::ThetaNontrivial);
    }
    let Some(witness) = linkforms::standard_witness_with(x.form(), f) else {
        return Verdict::new(Status::No, Reason::FormNotStandard);
    };
    if theta.is_none() {
        return Verdict::new(Status::Indeterminate, Reason::ThetaUnknown)
            .note("linking form is standard; Theta status must be supplied");
    }
    let mut v = Verdict::new(Status::Yes, Reason::StandardForm);
    v.witnesses.hopf = Some(hopf_from_standard(x.form(), &witness));
    v.witnesses.standard = Some(witness);
    v.witnesses.bundles = enumerate_homotopy_types(x.n()).expect("n >= 1");
    v
}

/// Prime-power shortcut: for `n = p^k` with `p = 3 mod 4`, `-1` is not a
/// square, so `±(squares)` is all of `U(n)` and every form is standard. `n`
/// is odd, so `Theta` vanishes on `H^4(X; F_2) = 0`. Other `n` fall back to
/// [`theorem1_decide`].
pub fn theorem4_decide(x: &ComplexData) -> Result<Verdict> {
    let f = modcore::factor(x.n())?;
    match f.as_prime_power() {
        Some((p, _)) if (p % 4u32) == BigInt::from(3) => {
            let mut v = decide_with(x, Some(true), &f);
            debug_assert_eq!(v.status, Status::Yes);
            v.reason = Reason::PrimePowerThreeModFour;
            Ok(v)
        }
        Some((p, _)) => Ok(decide_with(x, x.effective_theta(), &f)
            .note(format!("prime {p} is not 3 mod 4; general criterion applied"))),
        None => Ok(decide_with(x, x.effective_theta(), &f)
            .note(format!("n = {} is not a prime power; general criterion applied", x.n()))),
    }
}

/// Every `m` in `[0, n)` whose bundle `M_{m,n}` has Wilkens data equivalent
/// to `d`: some unit `u` and signs give `u^2 lambda = ±1` and
/// `u c = ±2m (mod n)`. Both signs are tried because neither the orientation
/// nor the sign of `beta` is fixed.
pub fn wilkens_match(d: &WilkensData) -> Result<Vec<BundleSpec>> {
    let n = d.n();
    let f = modcore::factor(n)?;
    let lambda = d.form().lambda();
    let c = d.beta_coeff().value();

    let mut ms = BTreeSet::new();
    for sign in [Sign::Plus, Sign::Minus] {
        // u^2 lambda = sign  <=>  (u^-1)^2 = sign * lambda
        for root in modcore::unit_roots_with(&sign.apply(lambda), &f) {
            let u = root.inverse().expect("unit root");
            let t = u.scale(c);
            for target in [t.clone(), t.neg()] {
                ms.extend(halves(target.value(), n));
            }
        }
    }
    ms.into_iter().map(|m| BundleSpec::new(m, n.clone())).collect()
}

/// Solutions `m` in `[0, n)` of `2m = t (mod n)`.
fn halves(t: &BigInt, n: &BigInt) -> Vec<BigInt> {
    if n.is_odd() {
        let inv2 = mod_inverse(&BigInt::from(2), n).expect("n odd");
        vec![(t * inv2).mod_floor(n)]
    } else if t.is_even() {
        let h: BigInt = t / 2;
        let half_n: BigInt = n / 2;
        vec![h.clone(), (h + half_n).mod_floor(n)]
    } else {
        Vec::new()
    }
}

/// PL-homeomorphism to an S^3-bundle from Wilkens data. Decided for `n` odd
/// and `n = 2 * odd`; indeterminate when `4 | n`.
pub fn theorem3_decide(d: &WilkensData) -> Result<Verdict> {
    let bundles = wilkens_match(d)?;
    if bundles.is_empty() {
        return Ok(Verdict::new(Status::No, Reason::FormNotStandard));
    }
    let n = d.n();
    let mut v = if n.is_odd() {
        Verdict::new(Status::Yes, Reason::OddOrder)
            .note("Wilkens data determines the oriented PL type")
    } else if (n % 4u32) == BigInt::from(2) {
        Verdict::new(Status::Yes, Reason::TwiceOddOrder).note(
            "two PL types share this data; M_{m,n} and M_{m+n/2,n} realize both",
        )
    } else {
        let mut v = Verdict::new(Status::Indeterminate, Reason::OrderDivisibleByFour)
            .note("PL classification for n = 0 mod 4 is not decided here");
        v.witnesses.bundles = bundles;
        return Ok(v);
    };
    v.witnesses.standard = linkforms::is_standard(d.form())?;
    v.witnesses.bundles = bundles;
    Ok(v)
}

/// The fibration data for a standard form: `m = tau^-1` (in `[1, n]`), and
/// `k` forced by `m^2 lambda n + k n^2 = sign n` with `lambda` lifted to
/// `[0, n)`.
pub fn hopf_witness(form: &LinkingForm) -> Result<Option<HopfWitness>> {
    if !is_nondegenerate(form) {
        return Err(Error::NonUnit {
            value: form.lambda().value().clone(),
            modulus: form.n().clone(),
        });
    }
    Ok(linkforms::is_standard(form)?.map(|w| hopf_from_standard(form, &w)))
}

fn hopf_from_standard(form: &LinkingForm, w: &StandardWitness) -> HopfWitness {
    let n = form.n();
    let lambda = form.lambda().value();
    let mut m = w
        .tau
        .inverse()
        .map(|r: Residue| r.value().clone())
        .expect("tau is a unit");
    if m.is_zero() {
        m = n.clone();
    }
    let residual = w.sign.as_bigint() * n - &m * &m * lambda * n;
    let n2 = n * n;
    let (k, rem) = residual.div_rem(&n2);
    debug_assert!(rem.is_zero(), "m^2 lambda = sign mod n");
    HopfWitness {
        m,
        k,
        sign: w.sign,
    }
}
