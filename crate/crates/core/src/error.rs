use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("operands belong to different fields")]
    SpecMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element has negative valuation")]
    NegativeValuation,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("residue is zero")]
    ZeroResidue,
    #[error("residue is not a simple root")]
    NotASimpleRoot,
    #[error("residue point is not a solution of the system")]
    ResidueNotASolution,
    #[error("jacobian is singular modulo p")]
    SingularJacobian,
    #[error("newton iteration did not converge")]
    NoConvergence,
    #[error("invalid automorphism: {0}")]
    InvalidMap(String),
    #[error("expanded degree {degree} exceeds limit {limit}")]
    DegreeOverflow { degree: u32, limit: u32 },
    #[error("coefficient is not integral")]
    NonIntegralCoefficient,
    #[error("reduction modulo p is not invertible")]
    DegenerateReduction,
    #[error("operation requires dimension {expected}, got {got}")]
    UnsupportedDimension { expected: usize, got: usize },
    #[error("point space of size {size} exceeds budget {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("no listed prime gives a special reduction")]
    NoGoodPrime,
    #[error("period spectrum did not stabilize")]
    NotStabilized,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
