//! Classification machinery for spaces with the cohomology of an
//! S^3-bundle over S^4.
//!
//! A simply connected complex `X` with `H^0 = H^7 = Z`, `H^4 = Z_n` and all
//! other groups zero carries a linking form on `H^4`, which on a cyclic group
//! is a single unit `lambda mod n`. The crate decides whether that form is
//! standard (`lambda = ±tau^2`), builds the corresponding fibration data,
//! models the bundles `M_{m,n}` with their homotopy and PL invariants, and
//! runs the Berger space `Sp(2)/Sp(1)` through the whole pipeline.
//!
//! Modules, bottom up:
//!
//! * [`modcore`]: residues, factorization, Jacobi symbols, square roots, CRT.
//! * [`linkforms`]: linking forms on `Z_n` and their equivalence.
//! * [`bundles`]: `M_{m,n}`, its cohomology, `beta` class and homotopy types.
//! * [`decide`]: homotopy and PL decision procedures with witnesses.
//! * [`berger`]: the homogeneous space computation for torus weights `(a, b)`.

pub mod berger;
pub mod bundles;
pub mod decide;
pub mod error;
pub mod linkforms;
pub mod modcore;

pub use error::{Error, Result};
