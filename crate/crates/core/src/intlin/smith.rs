//! Smith normal form by elementary row and column operations.
//!
//! Pivot rule: the nonzero entry of least absolute value in the active
//! submatrix, ties broken by lowest (row, column) in row-major order. The
//! transforms are therefore a deterministic function of the input.

use super::matrix::Matrix;
use crate::scalar::IntScalar;

/// `left * m * right == diag(diagonal)` with `diagonal[i] | diagonal[i+1]`
/// among the nonzero entries, nonzero entries positive and zeros last.
#[derive(Clone, Debug)]
pub struct SmithForm<T> {
    pub diagonal: Vec<T>,
    pub left: Matrix<T>,
    pub right: Matrix<T>,
    /// Inverse of `left`, tracked alongside it.
    pub left_inverse: Matrix<T>,
    pub rank: usize,
}

impl<T: IntScalar> SmithForm<T> {
    /// Nonzero diagonal entries.
    pub fn nonzero(&self) -> &[T] {
        &self.diagonal[..self.rank]
    }
}

struct Work<T> {
    a: Matrix<T>,
    left: Option<Matrix<T>>,
    left_inv: Option<Matrix<T>>,
    right: Option<Matrix<T>>,
}

impl<T: IntScalar> Work<T> {
    fn row_add(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_row_multiple(dst, src, f);
        if let Some(l) = self.left.as_mut() {
            l.add_row_multiple(dst, src, f);
        }
        if let Some(li) = self.left_inv.as_mut() {
            li.add_col_multiple(src, dst, &-f.clone());
        }
    }

    fn col_add(&mut self, dst: usize, src: usize, f: &T) {
        self.a.add_col_multiple(dst, src, f);
        if let Some(r) = self.right.as_mut() {
            r.add_col_multiple(dst, src, f);
        }
    }

    fn row_swap(&mut self, x: usize, y: usize) {
        self.a.swap_rows(x, y);
        if let Some(l) = self.left.as_mut() {
            l.swap_rows(x, y);
        }
        if let Some(li) = self.left_inv.as_mut() {
            li.swap_cols(x, y);
        }
    }

    fn col_swap(&mut self, x: usize, y: usize) {
        self.a.swap_cols(x, y);
        if let Some(r) = self.right.as_mut() {
            r.swap_cols(x, y);
        }
    }

    fn row_negate(&mut self, i: usize) {
        self.a.negate_row(i);
        if let Some(l) = self.left.as_mut() {
            l.negate_row(i);
        }
        if let Some(li) = self.left_inv.as_mut() {
            li.negate_col(i);
        }
    }
}

fn smaller<T: IntScalar>(candidate: &T, best: Option<&T>) -> bool {
    match best {
        None => true,
        Some(b) => candidate.abs() < b.abs(),
    }
}

fn run<T: IntScalar>(m: &Matrix<T>, track: bool) -> (Vec<T>, Work<T>, usize) {
    let (rows, cols) = m.shape();
    let mut w = Work {
        a: m.clone(),
        left: track.then(|| Matrix::identity(rows)),
        left_inv: track.then(|| Matrix::identity(rows)),
        right: track.then(|| Matrix::identity(cols)),
    };
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        // Global pivot over the active block.
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let v = &w.a[(i, j)];
                if !v.is_zero() && smaller(v, best.map(|(x, y)| &w.a[(x, y)])) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.row_swap(t, pi);
        w.col_swap(t, pj);

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w.a[(i, t)].is_zero() {
                    continue;
                }
                let q = w.a[(i, t)].clone() / &w.a[(t, t)];
                w.row_add(i, t, &-q);
                if !w.a[(i, t)].is_zero() {
                    dirty = true;
                }
            }
            for j in t + 1..cols {
                if w.a[(t, j)].is_zero() {
                    continue;
                }
                let q = w.a[(t, j)].clone() / &w.a[(t, t)];
                w.col_add(j, t, &-q);
                if !w.a[(t, j)].is_zero() {
                    dirty = true;
                }
            }
            if dirty {
                // Remainders left in the pivot cross: bring the smallest to (t, t).
                let mut best_row = None;
                let mut best_col = None;
                let mut best_val: Option<T> = None;
                for i in t + 1..rows {
                    let v = &w.a[(i, t)];
                    if !v.is_zero() && smaller(v, best_val.as_ref()) {
                        best_val = Some(v.clone());
                        best_row = Some(i);
                        best_col = None;
                    }
                }
                for j in t + 1..cols {
                    let v = &w.a[(t, j)];
                    if !v.is_zero() && smaller(v, best_val.as_ref()) {
                        best_val = Some(v.clone());
                        best_col = Some(j);
                        best_row = None;
                    }
                }
                if let Some(i) = best_row {
                    w.row_swap(t, i);
                } else if let Some(j) = best_col {
                    w.col_swap(t, j);
                }
                continue;
            }
            // Cross is clear; enforce divisibility of the remaining block.
            let p = w.a[(t, t)].clone();
            let offender =
                (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !w.a[(i, j)].is_multiple_of(&p)));
            match offender {
                Some(i) => w.row_add(t, i, &T::one()),
                None => break,
            }
        }
        if w.a[(t, t)].is_negative() {
            w.row_negate(t);
        }
        t += 1;
    }
    let diag = (0..n).map(|i| w.a[(i, i)].clone()).collect();
    (diag, w, t)
}

/// Smith normal form with both unimodular transforms.
pub fn smith_normal_form<T: IntScalar>(m: &Matrix<T>) -> SmithForm<T> {
    let (diagonal, w, rank) = run(m, true);
    SmithForm {
        diagonal,
        left: w.left.unwrap(),
        right: w.right.unwrap(),
        left_inverse: w.left_inv.unwrap(),
        rank,
    }
}

/// Diagonal of the Smith normal form only (no transforms are accumulated).
pub fn smith_diagonal<T: IntScalar>(m: &Matrix<T>) -> Vec<T> {
    run(m, false).0
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_integer::Integer;

    type M = Matrix<BigInt>;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check(m: &M) -> SmithForm<BigInt> {
        let s = smith_normal_form(m);
        let d = s.left.mul(m).mul(&s.right);
        assert!(d.is_diagonal(), "not diagonal: {d:?}");
        for i in 0..s.diagonal.len() {
            assert_eq!(d[(i, i)], s.diagonal[i]);
        }
        assert!(s.left.mul(&s.left_inverse).is_identity());
        for w in s.nonzero().windows(2) {
            assert!(w[1].is_multiple_of(&w[0]));
        }
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&M::from_i64_rows(&[&[2, 0], &[0, 3]]));
        assert_eq!(s.diagonal, ints(&[1, 6]));
    }

    #[test]
    fn zero_matrix() {
        let s = check(&M::zeros(2, 2));
        assert_eq!(s.diagonal, ints(&[0, 0]));
        assert_eq!(s.rank, 0);
    }

    #[test]
    fn cartan_a2() {
        let s = check(&M::from_i64_rows(&[&[2, -1], &[-1, 2]]));
        assert_eq!(s.diagonal, ints(&[1, 3]));
    }

    #[test]
    fn empty_shapes() {
        let s = check(&M::zeros(0, 3));
        assert!(s.diagonal.is_empty());
        assert_eq!(s.right.shape(), (3, 3));
        let s = check(&M::zeros(2, 0));
        assert!(s.diagonal.is_empty());
    }

    #[test]
    fn rectangular() {
        let s = check(&M::from_i64_rows(&[&[1, 0], &[1, 1], &[0, 1]]));
        assert_eq!(s.diagonal, ints(&[1, 1]));
        let s = check(&M::from_i64_rows(&[&[4, 6, 10], &[6, 9, 15]]));
        assert_eq!(s.diagonal, ints(&[1, 0]));
    }

    #[test]
    fn deterministic_transforms() {
        let m = M::from_i64_rows(&[&[3, 5, 7], &[2, 4, 6], &[1, 8, 9]]);
        let a = smith_normal_form(&m);
        let b = smith_normal_form(&m);
        assert_eq!(a.left, b.left);
        assert_eq!(a.right, b.right);
    }

    #[test]
    fn machine_integers_agree() {
        let m = Matrix::<i64>::from_i64_rows(&[&[6, 4, 2], &[10, 8, 0], &[2, 2, 4]]);
        let big = m.map(|v| BigInt::from(*v));
        let small: Vec<BigInt> = smith_diagonal(&m).into_iter().map(BigInt::from).collect();
        assert_eq!(small, smith_diagonal(&big));
    }
}
