//! Finite-field linear groups, supports and base probabilities.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`] and [`linalg`] provide exact arithmetic in `GF(p^e)` and dense
//!   matrices over it (kernels, ranks, Kronecker products, fixed spaces).
//! * [`characters`] evaluates symmetric-group characters exactly (hook lengths
//!   and the Murnaghan–Nakayama rule).
//! * [`group`] enumerates matrix groups from generators and computes support
//!   spectra and minimal supports.
//! * [`constructions`] builds the concrete group families used throughout.
//! * [`probability`] computes base probabilities (brute force, closed forms,
//!   Monte Carlo) and evaluates the lower bounds that relate them to supports.
//! * [`verify`] bundles the checks above into named suites with reports.

pub mod characters;
pub mod constructions;
pub mod error;
pub mod field;
pub mod group;
pub mod linalg;
pub mod probability;
pub mod verify;
pub use characters::{CharValue, CycleType, Partition};
pub use constructions::GroupSpec;
pub use group::{MatrixGroup, SupportKind, SupportSpectrum};
pub use probability::{BoundReport, PbEstimate};

pub use error::{Error, Result};
pub use field::{Field, Scalar};
pub use linalg::{Matrix, Subspace};
