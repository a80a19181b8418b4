use thiserror::Error;

/// Errors raised by the library.
///
/// `Inconsistent` marks an internal cross-check that failed; it means a
/// transcribed table or an algorithmic step disagrees with an independent
/// computation and should never occur on valid input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partitions have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("invalid prime {0}")]
    InvalidPrime(usize),
    #[error("invalid abacus display: {0}")]
    InvalidDisplay(String),
    #[error("expected weight 2, found weight {0}")]
    NotWeightTwo(usize),
    #[error("partition {0} does not lie in the block")]
    NotInBlock(String),
    #[error("({0},1^{1}) is not a valid hook core")]
    InvalidHook(usize, usize),
    #[error("blocks do not form the required pair: {0}")]
    NotAPair(String),
    #[error("no image under the pair bijection: {0}")]
    NoImage(String),
    #[error("invalid generator parameters: {0}")]
    InvalidParams(String),
    #[error("case 5 step requires hook mode")]
    CaseFiveWithoutHookMode,
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Returns true iff `p` is a prime number.
pub fn is_prime(p: usize) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn check_prime(p: usize, min: usize) -> Result<()> {
    if p < min || !is_prime(p) {
        return Err(Error::InvalidPrime(p));
    }
    Ok(())
}
