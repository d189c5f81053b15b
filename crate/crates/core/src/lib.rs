//! Integral lattices of generic Hitchin fibers.
//!
//! The crate computes, with exact integer arithmetic, the cocharacter
//! lattices of generalized Prym varieties attached to cameral covers, the
//! folding of ADE data into BCFG data, and the comparison maps between them.
//!
//! The linear algebra in [`intlin`] is generic over [`IntScalar`]; the rest of
//! the crate fixes the scalar to [`Int`].

pub mod folding;
pub mod intlin;
pub mod oracle;
pub mod prym;
pub mod rootdatum;
pub mod scalar;
pub mod surfcoh;

pub use scalar::IntScalar;

/// Arbitrary-precision integer used throughout the pipeline.
pub type Int = num_bigint::BigInt;
pub type IntMatrix = intlin::Matrix<Int>;
pub type FgAbGroup = intlin::AbelianGroup<Int>;
