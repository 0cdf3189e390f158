use super::echelon::{Echelon, SparseRow};
use super::matrix::MatrixQ;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Coordinates with respect to a fixed list of linearly independent matrices.
///
/// The flattened basis is row-reduced together with an identity block, so the
/// coordinates of a member `v` are read off from `v` at the pivot positions and
/// pushed through the recorded transform.
#[derive(Clone, Debug)]
pub struct MatrixSpan {
    rows: usize,
    cols: usize,
    basis: Vec<SparseRow>,
    pivots: Vec<usize>,
    transform: Vec<SparseRow>,
}

fn flat_sparse(m: &MatrixQ) -> SparseRow {
    m.entries()
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}

impl MatrixSpan {
    pub fn new(basis: &[MatrixQ]) -> Result<Self> {
        let (rows, cols) = basis.first().map_or((0, 0), |m| (m.rows(), m.cols()));
        let width = rows * cols;
        let n = basis.len();
        let mut e = Echelon::new(width + n);
        let mut flat = Vec::with_capacity(n);
        for (i, m) in basis.iter().enumerate() {
            if (m.rows(), m.cols()) != (rows, cols) {
                return Err(Error::DimensionMismatch {
                    expected: width,
                    found: m.rows() * m.cols(),
                });
            }
            let mut r = flat_sparse(m);
            flat.push(r.clone());
            r.push((width + i, Scalar::ONE));
            e.insert(r);
        }
        let mut pivots = Vec::with_capacity(n);
        let mut transform = Vec::with_capacity(n);
        for r in e.sorted_rows() {
            let p = r[0].0;
            if p >= width {
                return Err(Error::DegenerateInput(
                    "basis matrices are linearly dependent".into(),
                ));
            }
            pivots.push(p);
            transform.push(
                r.iter()
                    .filter(|(j, _)| *j >= width)
                    .map(|(j, x)| (j - width, x.clone()))
                    .collect(),
            );
        }
        Ok(MatrixSpan {
            rows,
            cols,
            basis: flat,
            pivots,
            transform,
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    /// Coordinates of `m`, or `None` if `m` is outside the span.
    pub fn coords(&self, m: &MatrixQ) -> Option<Vec<Scalar>> {
        assert_eq!((m.rows(), m.cols()), (self.rows, self.cols));
        let v = m.entries();
        let mut c = vec![Scalar::ZERO; self.dim()];
        for (p, t) in self.pivots.iter().zip(&self.transform) {
            let d = &v[*p];
            if d.is_zero() {
                continue;
            }
            for (i, x) in t {
                c[*i] += &(d * x);
            }
        }
        (self.matrix(&c).entries() == v).then_some(c)
    }

    pub fn matrix(&self, c: &[Scalar]) -> MatrixQ {
        let mut out = vec![Scalar::ZERO; self.rows * self.cols];
        for (ci, row) in c.iter().zip(&self.basis) {
            if ci.is_zero() {
                continue;
            }
            for (j, x) in row {
                out[*j] += &(ci * x);
            }
        }
        MatrixQ::from_vec(self.rows, self.cols, out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::scalar::q;

    #[test]
    fn coordinates_roundtrip() {
        let a = MatrixQ::from_i64(2, 2, &[1, 1, 0, 0]);
        let b = MatrixQ::from_i64(2, 2, &[0, 1, 1, 0]);
        let s = MatrixSpan::new(&[a.clone(), b.clone()]).unwrap();
        let m = a.scale(&q(3, 2)).sub(&b.scale(&q(5, 1)));
        assert_eq!(s.coords(&m), Some(vec![q(3, 2), q(-5, 1)]));
        assert_eq!(s.coords(&MatrixQ::identity(2)), None);
    }

    #[test]
    fn dependent_basis_rejected() {
        let a = MatrixQ::identity(2);
        assert!(s_err(MatrixSpan::new(&[a.clone(), a.scale(&q(2, 1))])));
    }

    fn s_err(r: Result<MatrixSpan>) -> bool {
        matches!(r, Err(Error::DegenerateInput(_)))
    }
}
