//! Sublattices of `Z^n` given by generating columns.
//!
//! The workhorse is a column echelon form computed with unimodular column
//! operations: `m * u = [h | 0]` where `h` has strictly increasing pivot
//! rows. Its trailing columns of `u` span the integer kernel, and the
//! reduced `h` is the canonical (Hermite) basis of the column span.

use super::matrix::{vec_ops, Matrix};
use super::smith::smith_normal_form;
use super::IntLinError;
use crate::scalar::IntScalar;

#[derive(Clone, Debug)]
pub struct ColumnEchelon<T> {
    /// `m * transform`; columns `rank..` are zero.
    pub reduced: Matrix<T>,
    pub transform: Option<Matrix<T>>,
    /// Pivot row of each of the first `rank` columns, strictly increasing.
    pub pivot_rows: Vec<usize>,
}

impl<T: IntScalar> ColumnEchelon<T> {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }
}

fn col_add<T: IntScalar>(a: &mut Matrix<T>, u: &mut Option<Matrix<T>>, dst: usize, src: usize, f: &T) {
    a.add_col_multiple(dst, src, f);
    if let Some(u) = u.as_mut() {
        u.add_col_multiple(dst, src, f);
    }
}

fn col_swap<T: IntScalar>(a: &mut Matrix<T>, u: &mut Option<Matrix<T>>, x: usize, y: usize) {
    a.swap_cols(x, y);
    if let Some(u) = u.as_mut() {
        u.swap_cols(x, y);
    }
}

fn col_negate<T: IntScalar>(a: &mut Matrix<T>, u: &mut Option<Matrix<T>>, j: usize) {
    a.negate_col(j);
    if let Some(u) = u.as_mut() {
        u.negate_col(j);
    }
}

/// Column echelon form. With `hermite`, entries left of each pivot are
/// reduced into `[0, pivot)`, making the nonzero columns canonical.
pub fn column_echelon<T: IntScalar>(m: &Matrix<T>, track: bool, hermite: bool) -> ColumnEchelon<T> {
    let (rows, cols) = m.shape();
    let mut a = m.clone();
    let mut u = track.then(|| Matrix::identity(cols));
    let mut pivot_rows = Vec::new();
    let mut k = 0;
    for i in 0..rows {
        if k == cols {
            break;
        }
        loop {
            let mut best: Option<usize> = None;
            for j in k..cols {
                let v = &a[(i, j)];
                if !v.is_zero() && best.is_none_or(|b| v.abs() < a[(i, b)].abs()) {
                    best = Some(j);
                }
            }
            let Some(j) = best else { break };
            col_swap(&mut a, &mut u, k, j);
            let mut clear = true;
            for j in k + 1..cols {
                if a[(i, j)].is_zero() {
                    continue;
                }
                let q = a[(i, j)].clone() / &a[(i, k)];
                col_add(&mut a, &mut u, j, k, &-q);
                if !a[(i, j)].is_zero() {
                    clear = false;
                }
            }
            if clear {
                break;
            }
        }
        if !a[(i, k)].is_zero() {
            if a[(i, k)].is_negative() {
                col_negate(&mut a, &mut u, k);
            }
            if hermite {
                for j in 0..k {
                    let q = a[(i, j)].div_floor(&a[(i, k)]);
                    col_add(&mut a, &mut u, j, k, &-q);
                }
            }
            pivot_rows.push(i);
            k += 1;
        }
    }
    ColumnEchelon {
        reduced: a,
        transform: u,
        pivot_rows,
    }
}

/// Rank over the rationals.
pub fn rank<T: IntScalar>(m: &Matrix<T>) -> usize {
    column_echelon(m, false, false).rank()
}

/// Canonical basis (Hermite form) of the column span of `m`.
pub fn column_basis<T: IntScalar>(m: &Matrix<T>) -> Matrix<T> {
    let e = column_echelon(m, false, true);
    e.reduced.select_columns(0..e.rank())
}

/// Basis of the integer kernel `{x in Z^cols : m x = 0}`, in Hermite form.
///
/// The result is saturated: it spans the full lattice of integer solutions.
pub fn kernel_basis<T: IntScalar>(m: &Matrix<T>) -> Matrix<T> {
    let e = column_echelon(m, true, false);
    let r = e.rank();
    let k = e.transform.unwrap().select_columns(r..m.cols());
    column_basis(&k)
}

/// Coordinates with respect to a fixed generating set of full column rank.
#[derive(Clone, Debug)]
pub struct Solver<T> {
    echelon: Matrix<T>,
    pivot_rows: Vec<usize>,
    transform: Matrix<T>,
    ambient: usize,
}

impl<T: IntScalar> Solver<T> {
    /// Fails if the columns of `basis` are linearly dependent.
    pub fn new(basis: &Matrix<T>) -> Result<Self, IntLinError> {
        let e = column_echelon(basis, true, false);
        if e.rank() != basis.cols() {
            return Err(IntLinError::DependentBasis {
                rank: e.rank(),
                columns: basis.cols(),
            });
        }
        Ok(Solver {
            echelon: e.reduced,
            pivot_rows: e.pivot_rows,
            transform: e.transform.unwrap(),
            ambient: basis.rows(),
        })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// `x` with `basis * x == v`, or `None` when `v` is outside the lattice.
    pub fn solve(&self, v: &[T]) -> Option<Vec<T>> {
        assert_eq!(v.len(), self.ambient);
        let k = self.pivot_rows.len();
        let mut residual = v.to_vec();
        let mut y = vec![T::zero(); k];
        for (p, &r) in self.pivot_rows.iter().enumerate() {
            let piv = &self.echelon[(r, p)];
            let (q, rem) = residual[r].div_rem(piv);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for (i, x) in residual.iter_mut().enumerate().skip(r) {
                    let h = &self.echelon[(i, p)];
                    if !h.is_zero() {
                        *x -= q.clone() * h;
                    }
                }
            }
            y[p] = q;
        }
        if !vec_ops::is_zero(&residual) {
            return None;
        }
        Some(self.transform.mul_vec(&y))
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.solve(v).is_some()
    }

    /// Coordinates of every column of `m`; `None` if any column is outside.
    pub fn solve_columns(&self, m: &Matrix<T>) -> Option<Matrix<T>> {
        let cols: Option<Vec<Vec<T>>> = (0..m.cols()).map(|j| self.solve(&m.column(j))).collect();
        cols.map(|c| Matrix::from_columns(self.transform.rows(), &c))
    }
}

/// Inverse of a square integer matrix, `None` unless it is unimodular.
pub fn unimodular_inverse<T: IntScalar>(m: &Matrix<T>) -> Option<Matrix<T>> {
    if !m.is_square() {
        return None;
    }
    Solver::new(m).ok()?.solve_columns(&Matrix::identity(m.rows()))
}

/// Whether every column of `sub` lies in the column span of `lattice`.
pub fn contains_lattice<T: IntScalar>(lattice: &Matrix<T>, sub: &Matrix<T>) -> bool {
    let basis = column_basis(lattice);
    let solver = Solver::new(&basis).expect("hermite basis is independent");
    (0..sub.cols()).all(|j| solver.contains(&sub.column(j)))
}

/// Equality of column spans.
pub fn same_lattice<T: IntScalar>(a: &Matrix<T>, b: &Matrix<T>) -> bool {
    a.rows() == b.rows() && column_basis(a) == column_basis(b)
}

/// Basis of `span(a) + span(b)`.
pub fn lattice_sum<T: IntScalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    column_basis(&a.hstack(b))
}

/// Basis of `span(a) ∩ span(b)`.
pub fn lattice_intersection<T: IntScalar>(a: &Matrix<T>, b: &Matrix<T>) -> Matrix<T> {
    let stacked = a.hstack(&b.neg());
    let k = kernel_basis(&stacked);
    let top = k.submatrix(0..a.cols(), 0..k.cols());
    column_basis(&a.mul(&top))
}

/// Basis of `{x : m x ∈ span(target)}`.
pub fn preimage_lattice<T: IntScalar>(m: &Matrix<T>, target: &Matrix<T>) -> Matrix<T> {
    assert_eq!(m.rows(), target.rows(), "preimage: row mismatch");
    let stacked = m.hstack(&target.neg());
    let k = kernel_basis(&stacked);
    column_basis(&k.submatrix(0..m.cols(), 0..k.cols()))
}

/// Index `[span(lattice) : span(sub)]` for a sublattice of equal rank, `None`
/// when `sub` is not contained or has smaller rank.
pub fn sublattice_index<T: IntScalar>(lattice: &Matrix<T>, sub: &Matrix<T>) -> Option<T> {
    let basis = column_basis(lattice);
    let solver = Solver::new(&basis).ok()?;
    let coords = solver.solve_columns(sub)?;
    let s = smith_normal_form(&coords);
    if s.rank != basis.cols() {
        return None;
    }
    Some(s.nonzero().iter().fold(T::one(), |acc, d| acc * d))
}

/// A rational lattice `basis / denominator` with integer `basis`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledLattice<T> {
    pub basis: Matrix<T>,
    pub denominator: T,
}

impl<T: IntScalar> ScaledLattice<T> {
    fn normalized(basis: Matrix<T>, denominator: T) -> Self {
        let g = crate::scalar::gcd_all(basis.entries().iter().chain(std::iter::once(&denominator)));
        let (basis, denominator) = if g.is_zero() || g.is_one() {
            (basis, denominator)
        } else {
            let b = basis.map(|v| v.clone() / &g);
            (b, denominator / &g)
        };
        ScaledLattice {
            basis: column_basis(&basis),
            denominator,
        }
    }

    pub fn integral(basis: &Matrix<T>) -> Self {
        Self::normalized(basis.clone(), T::one())
    }

    /// Dual with respect to `pairing`: `{z : (basis/d)^T · pairing · z ∈ Z^n}`.
    pub fn dual(&self, pairing: &Matrix<T>) -> Result<Self, IntLinError> {
        let g = self.basis.transpose().mul(pairing);
        let inner = dual_lattice(&g)?;
        Self::normalized(inner.basis.scale(&self.denominator), inner.denominator).pipe(Ok)
    }
}

trait Pipe: Sized {
    fn pipe<R>(self, f: impl FnOnce(Self) -> R) -> R {
        f(self)
    }
}
impl<T> Pipe for T {}

/// Dual of `Z^n` under `⟨x, y⟩ = xᵀ · pairing · y`: the rational lattice
/// `{y : pairing · y ∈ Z^n} = pairing⁻¹ Z^n`.
pub fn dual_lattice<T: IntScalar>(pairing: &Matrix<T>) -> Result<ScaledLattice<T>, IntLinError> {
    if !pairing.is_square() {
        return Err(IntLinError::DegeneratePairing);
    }
    let n = pairing.rows();
    let s = smith_normal_form(pairing);
    if s.rank < n {
        return Err(IntLinError::DegeneratePairing);
    }
    // pairing⁻¹ = right · D⁻¹ · left, and left is unimodular.
    let den = s.diagonal.iter().fold(T::one(), |acc, d| acc.lcm(d));
    let mut basis = s.right.clone();
    for (j, d) in s.diagonal.iter().enumerate() {
        let f = den.clone() / d;
        for i in 0..n {
            basis[(i, j)] *= f.clone();
        }
    }
    Ok(ScaledLattice::normalized(basis, den))
}
