//! Nondegenerate symmetric bilinear forms on a cyclic group `Z_n`.
//!
//! On a cyclic group a form is pinned down by its value `lambda = b(g, g)` on
//! a generator `g`: `b(r g, s g) = r s lambda`. Changing the generator to
//! `u g` multiplies `lambda` by `u^2`, reversing the orientation negates it.
//! A form is *standard* when some choice of both brings it to `lambda = 1`,
//! i.e. when `lambda = ±tau^2` for a unit `tau`.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::error::{Error, Result};
use crate::modcore::{self, check_modulus, Factorization, Residue};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn as_bigint(self) -> BigInt {
        BigInt::from(self.as_i8())
    }

    pub fn flip(self) -> Self {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn apply(self, r: &Residue) -> Residue {
        match self {
            Sign::Plus => r.clone(),
            Sign::Minus => r.neg(),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+1",
            Sign::Minus => "-1",
        })
    }
}

/// The form `b(r g, s g) = r s lambda` on `Z_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinkingForm {
    lambda: Residue,
}

impl LinkingForm {
    /// `lambda` is reduced mod `n`. Degenerate forms are representable; the
    /// operations that need nondegeneracy reject them.
    pub fn new(n: impl Into<BigInt>, lambda: impl Into<BigInt>) -> Result<Self> {
        Ok(Self {
            lambda: Residue::new(lambda, n)?,
        })
    }

    /// `b(x, y) = x y`, i.e. `lambda = 1` (`0` on the trivial group).
    pub fn standard(n: impl Into<BigInt>) -> Result<Self> {
        Self::new(n, 1)
    }

    pub fn from_residue(lambda: Residue) -> Self {
        Self { lambda }
    }

    pub fn n(&self) -> &BigInt {
        self.lambda.modulus()
    }

    pub fn lambda(&self) -> &Residue {
        &self.lambda
    }

    /// `b(r g, s g)`.
    pub fn pair(&self, r: &BigInt, s: &BigInt) -> Residue {
        self.lambda.scale(&(r * s))
    }

    /// The same form read with the opposite orientation.
    pub fn reversed(&self) -> Self {
        Self {
            lambda: self.lambda.neg(),
        }
    }

    /// The form in the generator `u g`: `lambda -> u^2 lambda`.
    pub fn rebased(&self, u: &BigInt) -> Self {
        Self {
            lambda: self.lambda.scale(&(u * u)),
        }
    }

    fn require_nondegenerate(&self) -> Result<()> {
        if is_nondegenerate(self) {
            Ok(())
        } else {
            Err(Error::DegenerateForm {
                n: self.n().clone(),
                lambda: self.lambda.value().clone(),
            })
        }
    }
}

impl fmt::Display for LinkingForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "b(x,y) = {} xy on Z_{}", self.lambda.value(), self.n())
    }
}

/// Evidence that a form is standard: `tau^2 = sign * lambda (mod n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StandardWitness {
    pub tau: Residue,
    pub sign: Sign,
}

impl StandardWitness {
    pub fn certifies(&self, form: &LinkingForm) -> bool {
        self.tau.modulus() == form.n()
            && self.tau.is_unit()
            && self.tau.square() == self.sign.apply(form.lambda())
    }
}

pub fn is_nondegenerate(form: &LinkingForm) -> bool {
    form.lambda.is_unit()
}

/// Finds `(tau, sign)` with `tau^2 = sign * lambda`, preferring `sign = +1`
/// and then the smallest `tau`.
pub fn is_standard(form: &LinkingForm) -> Result<Option<StandardWitness>> {
    form.require_nondegenerate()?;
    let f = modcore::factor(form.n())?;
    Ok(standard_witness_with(form, &f))
}

pub(crate) fn standard_witness_with(
    form: &LinkingForm,
    f: &Factorization,
) -> Option<StandardWitness> {
    [Sign::Plus, Sign::Minus].into_iter().find_map(|sign| {
        let target = sign.apply(form.lambda());
        modcore::unit_roots_with(&target, f)
            .into_iter()
            .next()
            .map(|tau| StandardWitness { tau, sign })
    })
}

/// Whether some unit `u` has `u^2 a.lambda = b.lambda`, or, with
/// `allow_orientation_flip`, `u^2 a.lambda = -b.lambda`.
pub fn equivalent(a: &LinkingForm, b: &LinkingForm, allow_orientation_flip: bool) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::ModulusMismatch(a.n().clone(), b.n().clone()));
    }
    a.require_nondegenerate()?;
    b.require_nondegenerate()?;
    let f = modcore::factor(a.n())?;
    let ratio = b
        .lambda
        .mul(&a.lambda.inverse().expect("nondegenerate"))?;
    let signs: &[Sign] = if allow_orientation_flip {
        &[Sign::Plus, Sign::Minus]
    } else {
        &[Sign::Plus]
    };
    Ok(signs
        .iter()
        .any(|s| modcore::is_unit_square_with(&s.apply(&ratio), &f)))
}

/// Number of nondegenerate forms on `Z_n` up to generator change and
/// orientation, i.e. `|U(n)| / |±U(n)^2|`.
///
/// Computed from the factorization: the squaring map on `U(n)` has kernel of
/// size `prod_i r_i` (2 per odd prime power, 1/2/4 for `2`, `4`, `2^k` with
/// `k >= 3`), and `-1` is itself a square iff every odd prime is `1 mod 4`
/// and `4` does not divide `n`.
pub fn square_class_count(n: &BigInt) -> Result<BigInt> {
    check_modulus(n)?;
    let f = modcore::factor(n)?;
    let mut kernel = BigInt::one();
    let mut minus_one_square = true;
    for (p, k) in f.factors() {
        if *p == BigInt::from(2) {
            kernel *= match k {
                1 => 1,
                2 => 2,
                _ => 4,
            };
            minus_one_square &= *k == 1;
        } else {
            kernel *= 2;
            minus_one_square &= (p % 4u32) == BigInt::one();
        }
    }
    Ok(if minus_one_square {
        kernel
    } else {
        kernel.div_floor(&BigInt::from(2))
    })
}

/// Orbits of `U(n)` under `lambda -> ±u^2 lambda`, by enumeration. Used to
/// cross-check [`square_class_count`] and handy for small `n`.
pub fn square_classes(n: &BigInt) -> Result<Vec<Vec<Residue>>> {
    let units = modcore::unit_group(n)?;
    let squares: Vec<Residue> = units.iter().map(Residue::square).collect();
    let mut seen = std::collections::BTreeSet::new();
    let mut classes = Vec::new();
    for u in &units {
        if seen.contains(u) {
            continue;
        }
        let mut orbit = std::collections::BTreeSet::new();
        for s in &squares {
            let v = u.mul(s)?;
            orbit.insert(v.neg());
            orbit.insert(v);
        }
        seen.extend(orbit.iter().cloned());
        classes.push(orbit.into_iter().collect());
    }
    Ok(classes)
}
