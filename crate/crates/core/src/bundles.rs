//! The bundles `xi_{m,n} = m rho + n sigma` over `S^4` and their total
//! spaces `M_{m,n}`.
//!
//! `rho(u) v = u v u^-1` and `sigma(u) v = u v` generate `pi_3(SO(4))`; the
//! Euler number `n` is the order of `H^4(M_{m,n}) = Z_n x_4`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linkforms::{is_nondegenerate, LinkingForm};
use crate::modcore::Residue;

/// `(m, n)`: the bundle `m rho + n sigma`. `m` is kept both as given and
/// reduced mod `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BundleSpec {
    m: BigInt,
    m_original: BigInt,
    n: BigInt,
    orientation_reversed: bool,
}

impl BundleSpec {
    /// `n = 0` is rejected. A negative `n` is replaced by `|n|` and the value
    /// records that the orientation was reversed.
    pub fn new(m: impl Into<BigInt>, n: impl Into<BigInt>) -> Result<Self> {
        let m_original = m.into();
        let n = n.into();
        if n.is_zero() {
            return Err(Error::ZeroEulerNumber);
        }
        let orientation_reversed = n.is_negative();
        let n = n.abs();
        Ok(Self {
            m: m_original.mod_floor(&n),
            m_original,
            n,
            orientation_reversed,
        })
    }

    /// `m` reduced into `[0, n)`.
    pub fn m(&self) -> &BigInt {
        &self.m
    }

    pub fn m_original(&self) -> &BigInt {
        &self.m_original
    }

    pub fn n(&self) -> &BigInt {
        &self.n
    }

    /// Set when the input Euler number was negative.
    pub fn orientation_reversed(&self) -> bool {
        self.orientation_reversed
    }
}

impl fmt::Display for BundleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M_{{{},{}}}", self.m, self.n)
    }
}

/// A finitely generated abelian group that can appear in the profiles here.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Group {
    Trivial,
    Integers,
    /// `Z_k` with `k >= 2`.
    Cyclic(BigInt),
}

impl Group {
    /// `Z_k`, collapsing `k = 1` to the trivial group. `k = 0` gives `Z`.
    pub fn cyclic(k: impl Into<BigInt>) -> Self {
        let k = k.into().abs();
        if k.is_zero() {
            Group::Integers
        } else if k.is_one() {
            Group::Trivial
        } else {
            Group::Cyclic(k)
        }
    }

    /// Order of a finite group; `None` for `Z`.
    pub fn order(&self) -> Option<BigInt> {
        match self {
            Group::Trivial => Some(BigInt::one()),
            Group::Integers => None,
            Group::Cyclic(k) => Some(k.clone()),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Trivial => f.write_str("0"),
            Group::Integers => f.write_str("Z"),
            Group::Cyclic(k) => write!(f, "Z_{k}"),
        }
    }
}

/// Integral cohomology in degrees `0..=7`; unlisted degrees are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohomologyProfile {
    groups: BTreeMap<u32, Group>,
}

impl CohomologyProfile {
    pub const TOP_DEGREE: u32 = 7;

    /// `H^0 = H^7 = Z`, `H^4 = Z_n`, everything else zero.
    pub fn sphere_bundle_like(n: &BigInt) -> Self {
        let mut groups = BTreeMap::new();
        groups.insert(0, Group::Integers);
        groups.insert(4, Group::cyclic(n.clone()));
        groups.insert(7, Group::Integers);
        Self::from_groups(groups)
    }

    pub fn from_groups(groups: BTreeMap<u32, Group>) -> Self {
        let groups = groups
            .into_iter()
            .filter(|(_, g)| *g != Group::Trivial)
            .collect();
        Self { groups }
    }

    pub fn get(&self, degree: u32) -> Group {
        self.groups.get(&degree).cloned().unwrap_or(Group::Trivial)
    }

    /// `(degree, group)` for every degree in `0..=7`.
    pub fn degrees(&self) -> impl Iterator<Item = (u32, Group)> + '_ {
        (0..=Self::TOP_DEGREE).map(|d| (d, self.get(d)))
    }

    /// The order `n` of `H^4` when the profile has the shape
    /// `H^0 = H^7 = Z`, `H^4` finite, everything else zero.
    pub fn admissible_order(&self) -> Option<BigInt> {
        let shape_ok = self.degrees().all(|(d, g)| match d {
            0 | 7 => g == Group::Integers,
            4 => g != Group::Integers,
            _ => g == Group::Trivial,
        });
        if shape_ok && self.groups.keys().all(|d| *d <= Self::TOP_DEGREE) {
            self.get(4).order()
        } else {
            None
        }
    }
}

impl fmt::Display for CohomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .degrees()
            .map(|(d, g)| format!("H^{d} = {g}"))
            .collect();
        f.write_str(&parts.join(", "))
    }
}

/// Spin class data `(H^4, b, beta)` with `beta = c x` for a generator `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WilkensData {
    form: LinkingForm,
    beta_coeff: Residue,
}

impl WilkensData {
    /// The form must be nondegenerate, and for even `n` the class `beta`
    /// must be even since `beta mod 2 = w_4 = 0`.
    pub fn new(form: LinkingForm, beta_coeff: impl Into<BigInt>) -> Result<Self> {
        if !is_nondegenerate(&form) {
            return Err(Error::DegenerateForm {
                n: form.n().clone(),
                lambda: form.lambda().value().clone(),
            });
        }
        let beta_coeff = Residue::new(beta_coeff, form.n().clone())?;
        if form.n().is_even() && beta_coeff.value().is_odd() {
            return Err(Error::InvalidManifoldData {
                n: form.n().clone(),
                beta: beta_coeff.value().clone(),
            });
        }
        Ok(Self { form, beta_coeff })
    }

    pub fn n(&self) -> &BigInt {
        self.form.n()
    }

    pub fn form(&self) -> &LinkingForm {
        &self.form
    }

    pub fn beta_coeff(&self) -> &Residue {
        &self.beta_coeff
    }
}

pub fn cohomology(b: &BundleSpec) -> CohomologyProfile {
    CohomologyProfile::sphere_bundle_like(b.n())
}

/// Always the standard form: in the generator `x_4` and the orientation with
/// `<y_4 y_3, [M]> = 1` the pairing is `1 mod n`, independent of `m`.
pub fn linking_form(b: &BundleSpec) -> LinkingForm {
    LinkingForm::standard(b.n().clone()).expect("n >= 1")
}

/// `beta = 2m x_4`. The class is only determined up to sign; callers that
/// match on it must also try `-2m`.
pub fn beta(b: &BundleSpec) -> Residue {
    Residue::new(b.m() * 2, b.n().clone()).expect("n >= 1")
}

pub fn wilkens_data(b: &BundleSpec) -> WilkensData {
    WilkensData::new(linking_form(b), beta(b).value().clone()).expect("2m is even")
}

/// `gcd(n, 12)`, the generator of the ideal `(n, 12)`.
pub fn homotopy_modulus(n: &BigInt) -> BigInt {
    n.gcd(&BigInt::from(12))
}

/// Oriented homotopy equivalence: `m = ±m' mod gcd(n, 12)` for equal `n`.
/// Bundles with different `n` are never reported equivalent.
pub fn homotopy_equivalent(a: &BundleSpec, b: &BundleSpec) -> bool {
    if a.n() != b.n() {
        return false;
    }
    let g = homotopy_modulus(a.n());
    let diff = (a.m() - b.m()).mod_floor(&g);
    let sum = (a.m() + b.m()).mod_floor(&g);
    diff.is_zero() || sum.is_zero()
}

/// One bundle per oriented homotopy type with Euler number `n`: `m` runs over
/// `0..=g/2`, `g = gcd(n, 12)`, giving `floor(g/2) + 1` types.
pub fn enumerate_homotopy_types(n: &BigInt) -> Result<Vec<BundleSpec>> {
    if *n < BigInt::one() {
        return Err(Error::InvalidModulus(n.clone()));
    }
    let g = homotopy_modulus(n);
    let half: BigInt = &g / 2;
    let mut out = Vec::new();
    let mut m = BigInt::zero();
    while m <= half {
        out.push(BundleSpec::new(m.clone(), n.clone())?);
        m += 1;
    }
    Ok(out)
}
