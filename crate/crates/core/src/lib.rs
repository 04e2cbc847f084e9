//! Young walls of type D_{n+1}^(2) over the basic weight Λ0, encoded as
//! partitions of column block counts.
//!
//! The crate provides:
//!
//! - [`partition`]: partitions, enumeration and counting DPs
//! - [`series`]: truncated power series with exact, overflow-checked coefficients
//! - [`wall`]: proper/reduced walls, block colors and weights
//! - [`bijection`]: the stripping maps ψ (reduced walls) and φ (strict
//!   partitions) together with their inverses
//! - [`character`]: virtual and principally specialized characters
//! - [`verify`]: exhaustive checkers for the counting and character identities

pub mod bijection;
pub mod character;
pub mod error;
pub mod partition;
pub mod series;
pub mod verify;
pub mod wall;

pub use bijection::{insert_blocks, phi, phi_inv, psi, psi_inv, MapResult, StepKind, TraceStep};
pub use character::{principal_character, virtual_character, VirtualCharacter};
pub use error::{Error, Result};
pub use partition::{
    count_odd, count_partitions, count_strict, enumerate_partitions, enumerate_strict, Partition,
};
pub use series::{series_product_odd, series_product_strict, PowerSeries};
pub use verify::{
    verify_bijections, verify_count_identity, verify_euler, verify_fock,
    verify_reduced_equivalence, verify_vch_identity, Counterexample, VerificationReport,
};
pub use wall::{
    block_color, enumerate_proper, enumerate_reduced, has_removable_delta, is_full_column,
    is_proper, is_reduced, weight, WallParams, WeightVector,
};
