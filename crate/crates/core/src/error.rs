use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field order {p}^{e} exceeds the configured bound {max_q}")]
    TooLarge { p: u64, e: u32, max_q: u64 },
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("invalid modulus: {0}")]
    InvalidModulus(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("{r} does not divide q - 1 = {unit_order}")]
    OrderNotDivisible { r: u64, unit_order: u64 },
    #[error("zero input has no unit-group semantics")]
    ZeroInput,
    #[error("no {d}-th root exists in the field")]
    NoRoot { d: u64 },
    #[error("matrix is {nrows}x{ncols}, expected square")]
    NotSquare { nrows: usize, ncols: usize },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("tower index i = {i} outside 1..={max}")]
    BadIndex { i: u32, max: u32 },
    #[error("tower exponent m = {m} not allowed here (need m >= {min})")]
    BadM { m: u32, min: u32 },
    #[error("r = {0} not allowed here (need r > 3)")]
    BadR(u64),
    #[error("matrix is singular")]
    Singular,
    #[error("parse error: {0}")]
    Parse(String),
}
