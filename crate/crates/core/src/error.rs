use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    /// Lehmer entry `c_position` is larger than `n - position`.
    #[error("lehmer code entry c{position} = {value} exceeds {max}")]
    UndecodableCode {
        position: usize,
        value: u32,
        max: usize,
    },

    #[error("size {n} exceeds the enumeration cap {cap}")]
    CapExceeded { n: usize, cap: usize },

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// Input is well formed but outside the domain of the requested map.
    #[error("outside domain: {0}")]
    Domain(String),
}
