use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NonPrimeCharacteristic(u64),
    #[error("extension degree {0} out of range")]
    DegreeOutOfRange(u32),
    #[error("field of order {p}^{e} exceeds the cap of {cap} elements")]
    FieldTooLarge { p: u64, e: u32, cap: u64 },
    #[error("operands live over different fields")]
    FieldMismatch,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("{what} = {value} is out of range ({range})")]
    OutOfRange {
        what: &'static str,
        value: i64,
        range: &'static str,
    },
    #[error("partition of {partition} evaluated on a cycle type of {cycle_type}")]
    OrderMismatch { partition: usize, cycle_type: usize },
    #[error("group enumeration exceeded the cap of {cap} elements")]
    CapExceeded { cap: usize },
    #[error("group `{0}` has not been enumerated")]
    NotEnumerated(String),
    #[error("coprimality violated: {0}")]
    CoprimalityViolated(String),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("tuple space of {size} exceeds the cap of {cap}")]
    TupleSpaceTooLarge { size: String, cap: u128 },
    #[error("parse error: {0}")]
    Parse(String),
}
