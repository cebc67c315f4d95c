use crate::axes::AxisViolation;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("prime modulus {0} exceeds the supported limit 2^31")]
    ModulusTooLarge(u64),

    #[error("cannot parse {text:?} as a scalar over {field}")]
    ScalarParse { text: String, field: String },

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("subspace is not an ideal: basis row {row} times basis vector {basis} leaves the span")]
    NotAnIdeal { row: usize, basis: usize },

    #[error("summands live over different fields")]
    MixedFields,

    #[error("gram matrix is not symmetric at entry ({i},{j})")]
    FormNotSymmetric { i: usize, j: usize },

    #[error("form is not associative on the basis triple ({i},{j},{k}): (b{i}b{j},b{k}) != (b{i},b{j}b{k})")]
    FormNotAssociative { i: usize, j: usize, k: usize },

    #[error("axis {index} rejected: {}", crate::axes::format_violations(violations))]
    AxisRejected {
        index: usize,
        violations: Vec<AxisViolation>,
    },

    #[error("axes generate a {closure_dim}-dimensional subalgebra of the {ambient}-dimensional algebra")]
    AxesDoNotGenerate { closure_dim: usize, ambient: usize },

    #[error("an axial algebra needs at least one axis")]
    NoAxes,

    #[error("direct sums require a fusion law containing 0 with 0 in 0*0")]
    DirectSumNotAdmissible,

    #[error("not a 3-transposition class: the product of {d} and {e} has order {order}")]
    NotThreeTransposition { d: String, e: String, order: usize },

    #[error("transposition class exceeds {limit} elements")]
    ClassTooLarge { limit: usize },

    #[error("unknown algebra name {0:?}")]
    UnknownAlgebra(String),

    #[error("ideal enumeration needs {estimate} steps, above the bound {bound}")]
    OracleBound { estimate: u128, bound: u64 },

    #[error("the brute-force ideal enumeration requires a prime-field algebra")]
    OracleNeedsPrimeField,

    #[error("the Jacobson radical is nonzero ({dim}-dimensional); quotient by it first")]
    SemisimplePrecondition { dim: usize },

    #[error("subset member {index} is not in the maximal-ideal list")]
    NotInMaximalList { index: usize },

    #[error("a supplied form is required by form policy \"given\"")]
    MissingForm,

    #[error("{0}")]
    FileFormat(String),

    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("parsing {path}: {source}")]
    Json {
        path: String,
        source: serde_json::Error,
    },
}
