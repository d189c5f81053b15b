//! Finitely generated abelian groups presented as subquotients of `Z^n`.

use std::fmt;

use super::lattice::{column_basis, Solver};
use super::matrix::Matrix;
use super::smith::smith_normal_form;
use super::IntLinError;
use crate::scalar::IntScalar;

/// `Z^rank ⊕ ⊕ Z/d_i` with `d_1 | d_2 | ...` and every `d_i ≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup<T> {
    pub rank: usize,
    pub invariant_factors: Vec<T>,
    /// Coset representatives in the ambient lattice: one column per torsion
    /// factor (same order), then `rank` free generators.
    pub generators: Option<Matrix<T>>,
}

impl<T: IntScalar> AbelianGroup<T> {
    pub fn trivial() -> Self {
        Self::new(0, Vec::new())
    }

    pub fn free(rank: usize) -> Self {
        Self::new(rank, Vec::new())
    }

    /// Normalizes arbitrary diagonal entries: units are dropped, zeros become
    /// free rank, and the rest is rewritten as a divisibility chain.
    pub fn from_diagonal(rank: usize, entries: &[T]) -> Self {
        let mut extra = 0;
        let mut nz = Vec::new();
        for e in entries {
            if e.is_zero() {
                extra += 1;
            } else {
                nz.push(e.abs());
            }
        }
        let d = Matrix::diagonal(&nz);
        let inv = smith_normal_form(&d).diagonal;
        Self::new(rank + extra, inv)
    }

    fn new(rank: usize, factors: Vec<T>) -> Self {
        let invariant_factors: Vec<T> = factors.into_iter().filter(|d| !d.is_one()).collect();
        debug_assert!(invariant_factors.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        AbelianGroup {
            rank,
            invariant_factors,
            generators: None,
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.invariant_factors.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.invariant_factors.is_empty()
    }

    /// Order of the torsion subgroup.
    pub fn torsion_order(&self) -> T {
        self.invariant_factors.iter().fold(T::one(), |a, d| a * d)
    }

    pub fn torsion(&self) -> Self {
        Self::new(0, self.invariant_factors.clone())
    }

    pub fn torsion_free_part(&self) -> Self {
        Self::free(self.rank)
    }

    /// Isomorphism type only; generators are ignored.
    pub fn same_type(&self, other: &Self) -> bool {
        self.rank == other.rank && self.invariant_factors == other.invariant_factors
    }

    /// Direct sum, renormalized.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut all = self.invariant_factors.clone();
        all.extend(other.invariant_factors.iter().cloned());
        Self::from_diagonal(self.rank + other.rank, &all)
    }

    /// Largest invariant factor (1 for a torsion-free group).
    pub fn exponent(&self) -> T {
        self.invariant_factors.last().cloned().unwrap_or_else(T::one)
    }
}

impl<T: IntScalar> fmt::Display for AbelianGroup<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for d in &self.invariant_factors {
            parts.push(format!("Z/{d}"));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

/// `span(sub_k) / span(sub_b)` inside `Z^ambient_rank`.
///
/// Fails with [`IntLinError::Containment`] unless every generator of `sub_b`
/// is an integer combination of the generators of `sub_k`. With
/// `with_generators`, coset representatives are returned in ambient
/// coordinates.
pub fn subgroup_quotient<T: IntScalar>(
    ambient_rank: usize,
    sub_k: &Matrix<T>,
    sub_b: &Matrix<T>,
    with_generators: bool,
) -> Result<AbelianGroup<T>, IntLinError> {
    assert_eq!(sub_k.rows(), ambient_rank, "subgroup_quotient: K has wrong ambient rank");
    assert_eq!(sub_b.rows(), ambient_rank, "subgroup_quotient: B has wrong ambient rank");
    let kb = column_basis(sub_k);
    let k = kb.cols();
    let solver = Solver::new(&kb)?;
    let coords = match solver.solve_columns(sub_b) {
        Some(c) => c,
        None => {
            let column = (0..sub_b.cols())
                .find(|&j| !solver.contains(&sub_b.column(j)))
                .unwrap_or(0);
            return Err(IntLinError::Containment { column });
        }
    };
    let s = smith_normal_form(&coords);
    let rank = k - s.rank;
    let mut tors_idx = Vec::new();
    let mut factors = Vec::new();
    for (i, d) in s.nonzero().iter().enumerate() {
        if !d.is_one() {
            tors_idx.push(i);
            factors.push(d.clone());
        }
    }
    let mut g = AbelianGroup::new(rank, factors);
    if with_generators {
        let basis = kb.mul(&s.left_inverse);
        let idx: Vec<usize> = tors_idx.into_iter().chain(s.rank..k).collect();
        g.generators = Some(basis.select_columns(idx));
    }
    Ok(g)
}
