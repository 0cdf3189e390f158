//! Incremental reduced row-echelon form over the rationals.
//!
//! Rows are inserted one at a time; the stored rows are kept fully reduced
//! (pivot 1, zero in every other pivot column). Large sparse constraint
//! systems (e.g. the 10⁴ × 729 derivation system) never get materialised as
//! dense matrices: each constraint is streamed in and either enlarges the row
//! space or is discarded.

use super::matrix::MatrixQ;
use super::scalar::Scalar;

/// Sparse row: `(column, value)` pairs sorted by column, no explicit zeros.
pub type SparseRow = Vec<(usize, Scalar)>;

#[derive(Clone, Debug)]
pub struct Echelon {
    ncols: usize,
    rows: Vec<SparseRow>,
    pivot_row: Vec<Option<usize>>,
    scratch: Vec<Scalar>,
    marked: Vec<bool>,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![None; ncols],
            scratch: vec![Scalar::ZERO; ncols],
            marked: vec![false; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    pub fn insert_dense(&mut self, row: &[Scalar]) -> bool {
        assert_eq!(row.len(), self.ncols, "row width mismatch");
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        self.insert(sparse)
    }

    /// Reduce `row` against the current pivots; if a nonzero remainder is
    /// left, add it as a new pivot row. Returns whether the rank grew.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        if row.is_empty() || self.is_full() {
            return false;
        }
        let touched = self.reduce_into_scratch(&row);
        let mut remainder: SparseRow = Vec::new();
        for j in touched {
            let x = std::mem::take(&mut self.scratch[j]);
            if !x.is_zero() {
                remainder.push((j, x));
            }
        }
        if remainder.is_empty() {
            return false;
        }
        remainder.sort_by_key(|(j, _)| *j);
        let (pcol, pval) = remainder[0].clone();
        let inv = pval.recip();
        for (_, x) in remainder.iter_mut() {
            *x = &*x * &inv;
        }
        // Clear the new pivot column from existing rows.
        for r in self.rows.iter_mut() {
            if let Ok(pos) = r.binary_search_by_key(&pcol, |(j, _)| *j) {
                let f = r[pos].1.clone();
                *r = axpy_sparse(r, &(-f), &remainder);
            }
        }
        self.pivot_row[pcol] = Some(self.rows.len());
        self.rows.push(remainder);
        true
    }

    /// Scatter `row` into the scratch buffer, eliminate pivot columns, and
    /// return the list of columns that may hold nonzeros.
    fn reduce_into_scratch(&mut self, row: &SparseRow) -> Vec<usize> {
        let mut touched: Vec<usize> = Vec::with_capacity(row.len() * 2);
        for (j, x) in row {
            self.scratch[*j] = x.clone();
            self.marked[*j] = true;
            touched.push(*j);
        }
        // Pivot rows only carry entries at their own pivot and at non-pivot
        // columns, so eliminating in a single pass is enough.
        let pivots_hit: Vec<usize> = row.iter().filter_map(|(j, _)| self.pivot_row[*j]).collect();
        for ri in pivots_hit {
            let prow = &self.rows[ri];
            let pcol = prow[0].0;
            let f = self.scratch[pcol].clone();
            if f.is_zero() {
                continue;
            }
            for (j, x) in prow {
                let delta = &f * x;
                self.scratch[*j] -= &delta;
                if !self.marked[*j] {
                    self.marked[*j] = true;
                    touched.push(*j);
                }
            }
        }
        for &j in &touched {
            self.marked[j] = false;
        }
        touched
    }

    /// Reduce a vector modulo the row space without modifying the basis.
    pub fn reduce(&mut self, row: &[Scalar]) -> Vec<Scalar> {
        let sparse: SparseRow = row
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(j, x)| (j, x.clone()))
            .collect();
        let touched = self.reduce_into_scratch(&sparse);
        let mut out = vec![Scalar::ZERO; self.ncols];
        for j in touched {
            out[j] = std::mem::take(&mut self.scratch[j]);
        }
        out
    }

    pub fn contains(&mut self, row: &[Scalar]) -> bool {
        self.reduce(row).iter().all(Scalar::is_zero)
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|r| r[0].0).collect();
        p.sort_unstable();
        p
    }

    /// Rows in order of increasing pivot column.
    pub fn sorted_rows(&self) -> Vec<&SparseRow> {
        let mut rows: Vec<&SparseRow> = self.rows.iter().collect();
        rows.sort_by_key(|r| r[0].0);
        rows
    }

    /// The RREF basis as a dense `rank × ncols` matrix.
    pub fn basis_matrix(&self) -> MatrixQ {
        let mut m = MatrixQ::zeros(self.rank(), self.ncols);
        for (i, r) in self.sorted_rows().into_iter().enumerate() {
            for (j, x) in r {
                m[(i, *j)] = x.clone();
            }
        }
        m
    }

    /// Basis of `{x : row · x = 0 for every stored row}`.
    pub fn null_space(&self) -> Vec<Vec<Scalar>> {
        let mut is_pivot = vec![false; self.ncols];
        for r in &self.rows {
            is_pivot[r[0].0] = true;
        }
        let free: Vec<usize> = (0..self.ncols).filter(|&j| !is_pivot[j]).collect();
        let mut col_pos = vec![usize::MAX; self.ncols];
        for (k, &f) in free.iter().enumerate() {
            col_pos[f] = k;
        }
        let mut basis = vec![vec![Scalar::ZERO; self.ncols]; free.len()];
        for (k, &f) in free.iter().enumerate() {
            basis[k][f] = Scalar::ONE;
        }
        for r in &self.rows {
            let p = r[0].0;
            for (j, x) in &r[1..] {
                let k = col_pos[*j];
                debug_assert!(k != usize::MAX);
                basis[k][p] = -x;
            }
        }
        basis
    }
}

/// `a + f·b` for sparse rows.
fn axpy_sparse(a: &SparseRow, f: &Scalar, b: &SparseRow) -> SparseRow {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ca = a.get(i).map_or(usize::MAX, |e| e.0);
        let cb = b.get(j).map_or(usize::MAX, |e| e.0);
        if ca < cb {
            out.push(a[i].clone());
            i += 1;
        } else if cb < ca {
            out.push((cb, f * &b[j].1));
            j += 1;
        } else {
            let v = &a[i].1 + &(f * &b[j].1);
            if !v.is_zero() {
                out.push((ca, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Reduced row-echelon form of `m` (same shape, zero rows at the bottom)
/// together with its rank.
pub fn rref(m: &MatrixQ) -> (MatrixQ, usize) {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert_dense(m.row(i));
    }
    let rank = e.rank();
    let mut out = MatrixQ::zeros(m.rows(), m.cols());
    for (i, r) in e.sorted_rows().into_iter().enumerate() {
        for (j, x) in r {
            out[(i, *j)] = x.clone();
        }
    }
    (out, rank)
}

pub fn rank(m: &MatrixQ) -> usize {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert_dense(m.row(i));
    }
    e.rank()
}

/// Null-space basis vectors of `m` (not yet canonicalised).
pub fn null_space(m: &MatrixQ) -> Vec<Vec<Scalar>> {
    let mut e = Echelon::new(m.cols());
    for i in 0..m.rows() {
        e.insert_dense(m.row(i));
    }
    e.null_space()
}

/// Inverse of a square matrix, `None` when singular.
pub fn inverse(m: &MatrixQ) -> Option<MatrixQ> {
    assert!(m.is_square());
    let n = m.rows();
    let mut e = Echelon::new(2 * n);
    for i in 0..n {
        let mut row: SparseRow = Vec::new();
        for (j, x) in m.row(i).iter().enumerate() {
            if !x.is_zero() {
                row.push((j, x.clone()));
            }
        }
        row.push((n + i, Scalar::ONE));
        e.insert(row);
    }
    let rows = e.sorted_rows();
    if rows.iter().take(n).enumerate().any(|(i, r)| r[0].0 != i) || rows.len() < n {
        return None;
    }
    let mut inv = MatrixQ::zeros(n, n);
    for (i, r) in rows.into_iter().enumerate() {
        for (j, x) in r {
            if *j >= n {
                inv[(i, j - n)] = x.clone();
            }
        }
    }
    Some(inv)
}

/// Solve `m · x = b` for one particular solution.
pub fn solve(m: &MatrixQ, b: &[Scalar]) -> Option<Vec<Scalar>> {
    assert_eq!(m.rows(), b.len());
    let n = m.cols();
    let mut e = Echelon::new(n + 1);
    for (i, bi) in b.iter().enumerate() {
        let mut row: Vec<Scalar> = m.row(i).to_vec();
        row.push(bi.clone());
        e.insert_dense(&row);
    }
    let mut x = vec![Scalar::ZERO; n];
    for r in e.sorted_rows() {
        let p = r[0].0;
        if p == n {
            return None;
        }
        if let Some((j, v)) = r.last() {
            if *j == n {
                x[p] = v.clone();
            }
        }
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::scalar::q;

    #[test]
    fn identity_rref() {
        let (r, k) = rref(&MatrixQ::identity(2));
        assert_eq!(r, MatrixQ::identity(2));
        assert_eq!(k, 2);
    }

    #[test]
    fn dependent_rows() {
        let m = MatrixQ::from_i64(2, 2, &[1, 2, 2, 4]);
        let (r, k) = rref(&m);
        assert_eq!(r, MatrixQ::from_i64(2, 2, &[1, 2, 0, 0]));
        assert_eq!(k, 1);
    }

    #[test]
    fn fully_reduced_after_late_pivot() {
        // Second row creates a pivot in column 1 which must be cleared from row 0.
        let m = MatrixQ::from_i64(2, 3, &[1, 1, 1, 0, 2, 4]);
        let (r, _) = rref(&m);
        assert_eq!(
            r,
            MatrixQ::from_vec(
                2,
                3,
                vec![q(1, 1), q(0, 1), q(-1, 1), q(0, 1), q(1, 1), q(2, 1)]
            )
        );
    }

    #[test]
    fn kernel_basics() {
        assert_eq!(null_space(&MatrixQ::zeros(3, 3)).len(), 3);
        assert!(null_space(&MatrixQ::identity(3)).is_empty());
        let m = MatrixQ::from_i64(1, 3, &[1, 1, 0]);
        let ker = null_space(&m);
        assert_eq!(ker.len(), 2);
        for v in &ker {
            assert!((&v[0] + &v[1]).is_zero());
        }
    }

    #[test]
    fn inverse_and_solve() {
        let m = MatrixQ::from_i64(3, 3, &[2, 1, 0, 1, 3, 1, 0, 1, 4]);
        let inv = inverse(&m).unwrap();
        assert_eq!(m.mul(&inv), MatrixQ::identity(3));
        let b = vec![q(1, 1), q(2, 1), q(3, 1)];
        let x = solve(&m, &b).unwrap();
        assert_eq!(m.mul_vec(&x), b);
        assert!(inverse(&MatrixQ::from_i64(2, 2, &[1, 2, 2, 4])).is_none());
        assert!(solve(&MatrixQ::from_i64(2, 1, &[1, 1]), &[q(1, 1), q(2, 1)]).is_none());
    }
}
