use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("text is empty")]
    EmptyText,
    #[error("string is empty")]
    EmptyString,
    #[error("text of length {0} exceeds the 32-bit index limit")]
    TextTooLarge(usize),
    #[error("position {pos} out of range 1..={max}")]
    PositionOutOfRange { pos: usize, max: usize },
    #[error("family parameter m = {0} is too small (need m >= 2)")]
    ParameterTooSmall(usize),
    #[error("text of length {len} exceeds oracle cap {cap}")]
    TextTooLargeForOracle { len: usize, cap: usize },
    #[error("work budget exceeded: {needed} > {budget}")]
    BudgetExceeded { needed: u128, budget: u128 },
    #[error("edit leaves an empty text")]
    ResultEmpty,
    #[error("alphabet size {0} not in 1..=256")]
    BadAlphabet(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
