//! Hall–Littlewood expansions of chromatic quasisymmetric functions and
//! unicellular LLT polynomials of Dyck paths, through linked rook placements.
//!
//! All arithmetic is exact: coefficients live in `Z[q, q⁻¹]` with
//! arbitrary-precision integers, and the identity checks in [`verify`]
//! compare polynomials for equality with no tolerance.

pub mod chromatic;
pub mod dyck;
pub mod error;
pub mod partition;
pub mod qseries;
pub mod rook;
pub mod symfunc;
pub mod verify;

pub use dyck::{DyckPath, ModularTriple};
pub use error::{Error, Result};
pub use partition::Partition;
pub use qseries::QLaurent;
pub use symfunc::{Basis, SymFunc};
