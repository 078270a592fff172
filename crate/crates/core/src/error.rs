use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be at least {min}, got {got}")]
    ModulusTooSmall { got: u64, min: u64 },
    #[error("modulus must be odd, got {0}")]
    EvenModulus(u64),
    #[error("{value} is not coprime to {modulus}")]
    NotCoprime { value: i128, modulus: u64 },
    #[error("invalid seed {seed} for modulus {modulus}: {reason}")]
    InvalidSeed {
        seed: u64,
        modulus: u64,
        reason: &'static str,
    },
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("ring elements belong to different moduli ({left} and {right})")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("malformed {what}: {reason}")]
    Malformed {
        what: &'static str,
        reason: &'static str,
    },
}

pub type Result<T> = core::result::Result<T, Error>;
