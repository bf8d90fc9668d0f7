use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("lcm is undefined for a list containing zero")]
    LcmZero,
    #[error("BP exponent {0} is less than 2")]
    BadExponent(String),
    #[error("invalid link descriptor: {0}")]
    InvalidDescriptor(String),
    #[error("syntax error at byte {offset}: {msg}")]
    Parse { offset: usize, msg: String },
    #[error("polynomial is zero after merging monomials")]
    ZeroPolynomial,
    #[error("variable z{index} out of declared range (got {vars} variables)")]
    VarOutOfRange { index: usize, vars: usize },
    #[error("no positive weight solution exists for the given support")]
    NoPositiveWeights,
    #[error("weight solution space has dimension > 1; no unique positive ray")]
    AmbiguousWeights,
    #[error("expected a polynomial in {expected} variables, found {found}")]
    WrongVariableCount { expected: usize, found: usize },
    #[error("polynomial is not weighted homogeneous for the given descriptor")]
    NotWeightedHomogeneous,
    #[error("polynomial is not quasi-smooth for the given descriptor")]
    NotQuasiSmooth,
    #[error("degenerate quasi-smoothness test: d = {degree} does not exceed exponent at z{index}")]
    DegenerateDegree { index: usize, degree: String },
    #[error("non-integral Orlik c-value at subset {0}")]
    NonIntegralC(String),
    #[error("link must be 5-dimensional (4 weights), found {0} weights")]
    WrongDimension(usize),
    #[error("non-integral invariant: {0}")]
    NonIntegralInvariant(String),
    #[error("genus formula did not yield a non-negative integer for weights {weights} and degree {degree}")]
    NonIntegralGenus { weights: String, degree: String },
    #[error("torsion is not a 5-link homology group: elementary divisor {0} has odd multiplicity")]
    UnpairedTorsion(String),
    #[error("homology routes disagree: {0}")]
    InternalInconsistency(String),
    #[error("table data error: {0}")]
    TableData(String),
}
