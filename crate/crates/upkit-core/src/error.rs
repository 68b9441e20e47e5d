use thiserror::Error;

/// Domain errors shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("partition is not contained in the minuend")]
    NotContained,
    #[error("partition total {got} does not match N = {expected}")]
    WrongTotal { expected: u64, got: u64 },
    #[error("partition violates the parity condition for s = {s}")]
    ParityViolation { s: i8 },
    #[error("N = {n} does not have the parity required by s = {s}")]
    GroupParity { s: i8, n: u64 },
    #[error("bound exceeded: {what} ({value} > {bound})")]
    BoundExceeded { what: &'static str, value: u64, bound: u64 },
    #[error("subset is not contained in the good-parity support S(lambda)")]
    NotInSupport,
    #[error("{0} is not in I(lambda)")]
    NotInI(u64),
    #[error("{0} is not in J(lambda)")]
    NotInJ(u64),
    #[error("character is not in the canonical subgroup")]
    NotCanonical,
    #[error("partition is not in the special piece")]
    NotInPiece,
    #[error("character is not of Springer type")]
    NotSpringerType,
    #[error("partition is not of good parity")]
    BadParity,
    #[error("springer formula produced a malformed sequence")]
    MalformedOutput,
    #[error("move is not applicable")]
    MoveNotApplicable,
    #[error("table is not near-tempered")]
    NotNearTempered,
    #[error("table violates the parity condition")]
    TableParity,
    #[error("central sign z = -1 is only available when s = -1")]
    BadCentralSign,
    #[error("moeglin parameter does not match the table")]
    ParamMismatch,
    #[error("parameter gives inconsistent signs on repeated entries")]
    InconsistentCharacter,
}

pub type Result<T> = core::result::Result<T, Error>;
