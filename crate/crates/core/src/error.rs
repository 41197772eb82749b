use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least 1, got {0}")]
    InvalidModulus(BigInt),

    #[error("Jacobi symbol needs an odd positive modulus, got {0}")]
    EvenModulus(BigInt),

    #[error("{value} is not a unit modulo {modulus}")]
    NonUnit { value: BigInt, modulus: BigInt },

    #[error("moduli {0} and {1} are not coprime")]
    NonCoprimeModuli(BigInt, BigInt),

    #[error("linking form with lambda = {lambda} on Z_{n} is degenerate")]
    DegenerateForm { n: BigInt, lambda: BigInt },

    #[error("forms live on groups of different order ({0} vs {1})")]
    ModulusMismatch(BigInt, BigInt),

    #[error("Euler number n = 0 gives infinite H^4; n must be nonzero")]
    ZeroEulerNumber,

    #[error("torus weights must not both be zero")]
    ZeroWeights,

    #[error("beta = {beta} x is odd while n = {n} is even; w4 = 0 forces an even class")]
    InvalidManifoldData { n: BigInt, beta: BigInt },

    #[error("Theta cannot be nontrivial when n = {0} is odd: H^4(X; F_2) vanishes")]
    InconsistentTheta(BigInt),
}

pub type Result<T> = std::result::Result<T, Error>;
