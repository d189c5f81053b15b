//! Exact integer linear algebra.

pub mod group;
pub mod lattice;
pub mod matrix;
pub mod smith;

pub use group::{subgroup_quotient, AbelianGroup};
pub use lattice::{
    column_basis, column_echelon, contains_lattice, dual_lattice, kernel_basis, lattice_intersection,
    lattice_sum, preimage_lattice, rank, same_lattice, sublattice_index, unimodular_inverse, ScaledLattice,
    Solver,
};
pub use matrix::{vec_ops, Matrix};
pub use smith::{smith_diagonal, smith_normal_form, SmithForm};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntLinError {
    #[error("sublattice B is not contained in K (first offending column {column})")]
    Containment { column: usize },
    #[error("pairing is degenerate over the rationals")]
    DegeneratePairing,
    #[error("basis has rank {rank} but {columns} columns")]
    DependentBasis { rank: usize, columns: usize },
}
