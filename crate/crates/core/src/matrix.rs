//! Dense exact matrices and Gauss–Jordan elimination.
//!
//! Row-reduction is the workhorse behind every homology rank, coboundary
//! solve and idempotent check in the crate, so it returns everything at
//! once: rank, a particular solution and a kernel basis.

use crate::error::{KernelError, Result};
use crate::scalar::Field;

#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<K: Field> {
    rows: usize,
    cols: usize,
    entries: Vec<K>,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome<K: Field> {
    pub rank: usize,
    /// A particular solution of `M x = b`, if one exists.
    pub solution: Option<Vec<K>>,
    /// Basis of the kernel of `M`.
    pub kernel: Vec<Vec<K>>,
}

impl<K: Field> Matrix<K> {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = K::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|x| x.len()).unwrap_or(0);
        assert!(rows.iter().all(|x| x.len() == c), "ragged rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> K) -> Self {
        let mut m = Self::zero(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m[(i, j)] = f(i, j);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[K] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix<K> {
        Matrix::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn mul(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!(self.cols, other.rows, "matrix product shape mismatch");
        Matrix::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = K::zero();
            for k in 0..self.cols {
                acc = acc + self[(i, k)].clone() * other[(k, j)].clone();
            }
            acc
        })
    }

    pub fn mul_vec(&self, v: &[K]) -> Vec<K> {
        assert_eq!(self.cols, v.len());
        (0..self.rows)
            .map(|i| {
                let mut acc = K::zero();
                for k in 0..self.cols {
                    acc = acc + self[(i, k)].clone() * v[k].clone();
                }
                acc
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix<K>) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() + other[(i, j)].clone())
    }

    pub fn scale(&self, c: &K) -> Matrix<K> {
        Matrix::from_fn(self.rows, self.cols, |i, j| self[(i, j)].clone() * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn rank(&self) -> usize {
        solve(self, None).rank
    }

    pub fn kernel_basis(&self) -> Vec<Vec<K>> {
        solve(self, None).kernel
    }
}

impl<K: Field> std::ops::Index<(usize, usize)> for Matrix<K> {
    type Output = K;
    fn index(&self, (i, j): (usize, usize)) -> &K {
        &self.entries[i * self.cols + j]
    }
}

impl<K: Field> std::ops::IndexMut<(usize, usize)> for Matrix<K> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut K {
        &mut self.entries[i * self.cols + j]
    }
}

/// Gauss–Jordan with first-nonzero pivoting. Exact over any [`Field`].
fn solve<K: Field>(m: &Matrix<K>, b: Option<&[K]>) -> SolveOutcome<K> {
    let rows = m.rows;
    let cols = m.cols;
    let mut a = m.entries.clone();
    let mut rhs: Vec<K> = b.map(|v| v.to_vec()).unwrap_or_else(|| vec![K::zero(); rows]);
    let at = |a: &Vec<K>, i: usize, j: usize| a[i * cols + j].clone();

    let mut pivots: Vec<(usize, usize)> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        // Find a pivot in this column at or below `row`.
        let mut pr = None;
        for r in row..rows {
            if !at(&a, r, col).is_zero() {
                pr = Some(r);
                break;
            }
        }
        let Some(pr) = pr else { continue };
        // Swap into place.
        if pr != row {
            for j in 0..cols {
                a.swap(pr * cols + j, row * cols + j);
            }
            rhs.swap(pr, row);
        }
        // Normalize pivot row.
        let inv = at(&a, row, col).inv();
        for j in 0..cols {
            a[row * cols + j] = at(&a, row, j) * inv.clone();
        }
        rhs[row] = rhs[row].clone() * inv.clone();
        // Eliminate the column everywhere else.
        for r in 0..rows {
            if r == row {
                continue;
            }
            let f = at(&a, r, col);
            if f.is_zero() {
                continue;
            }
            for j in 0..cols {
                a[r * cols + j] = at(&a, r, j) - f.clone() * at(&a, row, j);
            }
            rhs[r] = rhs[r].clone() - f * rhs[row].clone();
        }
        pivots.push((row, col));
        row += 1;
        if row == rows {
            break;
        }
    }

    let rank = pivots.len();

    // Consistency and particular solution.
    let solution = if b.is_some() {
        let consistent = (rank..rows).all(|r| rhs[r].is_zero());
        if consistent {
            let mut x = vec![K::zero(); cols];
            for &(r, c) in &pivots {
                x[c] = rhs[r].clone();
            }
            Some(x)
        } else {
            None
        }
    } else {
        None
    };

    // Kernel basis from the free columns.
    let pivot_cols: Vec<usize> = pivots.iter().map(|&(_, c)| c).collect();
    let mut kernel = Vec::new();
    for free in 0..cols {
        if pivot_cols.contains(&free) {
            continue;
        }
        let mut v = vec![K::zero(); cols];
        v[free] = K::one();
        for &(r, c) in &pivots {
            v[c] = -at(&a, r, free);
        }
        kernel.push(v);
    }

    SolveOutcome { rank, solution, kernel }
}

/// Exact linear solve: particular solution (when consistent), kernel basis
/// and rank. Errors on a shape mismatch between `m` and `b`.
pub fn solve_exact<K: Field>(m: &Matrix<K>, b: &[K]) -> Result<SolveOutcome<K>> {
    if b.len() != m.rows() {
        return Err(KernelError::DimensionMismatch(format!(
            "matrix has {} rows but right-hand side has {} entries",
            m.rows(),
            b.len()
        )));
    }
    Ok(solve(m, Some(b)))
}

/// Dimension of the span of `vectors` (each of length `dim`).
pub fn span_rank<K: Field>(vectors: &[Vec<K>], dim: usize) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    assert!(vectors.iter().all(|v| v.len() == dim));
    Matrix::from_rows(vectors.to_vec()).rank()
}

/// Is `v` in the span of `basis`? Solves the transposed system.
pub fn in_span<K: Field>(basis: &[Vec<K>], v: &[K]) -> bool {
    if v.iter().all(|c| c.is_zero()) {
        return true;
    }
    if basis.is_empty() {
        return false;
    }
    let m = Matrix::from_rows(basis.to_vec()).transpose();
    solve_exact(&m, v).map(|o| o.solution.is_some()).unwrap_or(false)
}

/// Row-reduces `vectors` to an independent subset (a basis of their span),
/// keeping the first occurrence of each new direction. Deterministic.
pub fn independent_subset<K: Field>(vectors: &[Vec<K>], dim: usize) -> Vec<usize> {
    let mut kept: Vec<Vec<K>> = Vec::new();
    let mut idx = Vec::new();
    for (i, v) in vectors.iter().enumerate() {
        assert_eq!(v.len(), dim);
        if !in_span(&kept, v) {
            kept.push(v.clone());
            idx.push(i);
        }
    }
    idx
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Rat;
    use num_traits::Zero;

    fn q(n: i64, d: i64) -> Rat {
        use crate::scalar::Field;
        Rat::from_ratio(n, d)
    }

    #[test]
    fn identity_solves_directly() {
        let m: Matrix<Rat> = Matrix::identity(2);
        let out = solve_exact(&m, &[q(1, 1), q(2, 1)]).unwrap();
        assert_eq!(out.rank, 2);
        assert_eq!(out.solution.unwrap(), vec![q(1, 1), q(2, 1)]);
        assert!(out.kernel.is_empty());
    }

    #[test]
    fn underdetermined_has_kernel() {
        let m: Matrix<Rat> = Matrix::from_rows(vec![vec![q(1, 1), q(1, 1)]]);
        let out = solve_exact(&m, &[q(0, 1)]).unwrap();
        assert_eq!(out.rank, 1);
        assert_eq!(out.solution.unwrap(), vec![q(0, 1), q(0, 1)]);
        assert_eq!(out.kernel.len(), 1);
        // Kernel vector is proportional to (1, -1).
        let k = &out.kernel[0];
        assert_eq!(k[0].clone() + k[1].clone(), q(0, 1));
        assert!(!k[0].is_zero());
    }

    #[test]
    fn inconsistent_system_reports_none() {
        let m: Matrix<Rat> =
            Matrix::from_rows(vec![vec![q(1, 1), q(0, 1)], vec![q(1, 1), q(0, 1)]]);
        let out = solve_exact(&m, &[q(1, 1), q(2, 1)]).unwrap();
        assert!(out.solution.is_none());
        assert_eq!(out.rank, 1);
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        let m: Matrix<Rat> = Matrix::identity(2);
        assert!(solve_exact(&m, &[q(1, 1)]).is_err());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let m: Matrix<Rat> = Matrix::from_rows(vec![
            vec![q(1, 1), q(2, 1), q(3, 1)],
            vec![q(2, 1), q(4, 1), q(6, 1)],
        ]);
        for k in m.kernel_basis() {
            assert!(m.mul_vec(&k).iter().all(|c| c.is_zero()));
        }
        assert_eq!(m.rank(), 1);
        assert_eq!(m.kernel_basis().len(), 2);
    }
}
