//! Grassmannian permutations: recognition, enumeration, pattern avoidance,
//! bijections with Dyck paths and restricted Schröder words, and the split
//! by inversion parity. [`verify`] holds the brute-force oracles used to
//! check every closed form.

pub mod error;
pub mod grassmann;
pub mod numbers;
pub mod parity;
pub mod paths;
pub mod patterns;
pub mod permcore;
pub mod report;
pub mod schroder;
pub mod tables;
pub mod verify;

pub use error::{Error, Result};
pub use permcore::{LehmerCode, Permutation, SymmetricGroup};
pub use report::CountReport;
