use serde::Serialize;

use super::matrix::MatrixQ;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Sylvester signature: counts of positive, negative and zero squares.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Signature {
    pub fn new(n_plus: usize, n_minus: usize, n_zero: usize) -> Self {
        Signature {
            n_plus,
            n_minus,
            n_zero,
        }
    }

    pub fn dim(&self) -> usize {
        self.n_plus + self.n_minus + self.n_zero
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.n_zero == 0
    }

    pub fn is_positive_definite(&self) -> bool {
        self.n_minus == 0 && self.n_zero == 0
    }

    pub fn is_zero_form(&self) -> bool {
        self.n_plus == 0 && self.n_minus == 0
    }

    /// Index-first ordering `(min, max)` of the nonzero part, the usual way a
    /// pseudo-Euclidean space `R^{p,q}` is named.
    pub fn index_ordered(&self) -> (usize, usize) {
        (self.n_plus.min(self.n_minus), self.n_plus.max(self.n_minus))
    }

    pub fn as_tuple(&self) -> (usize, usize, usize) {
        (self.n_plus, self.n_minus, self.n_zero)
    }
}

impl std::fmt::Display for Signature {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{},{})", self.n_plus, self.n_minus, self.n_zero)
    }
}

/// Signature of a symmetric matrix by symmetric Lagrange elimination.
///
/// Rows and columns are eliminated simultaneously. A zero diagonal pivot with
/// a nonzero entry `q_ij` in its row (first such `j`) is repaired by the basis
/// change `e_i ← e_i + e_j`, or `e_i ← e_i − e_j` if the former leaves the
/// pivot zero.
pub fn signature(gram: &MatrixQ) -> Result<Signature> {
    if !gram.is_symmetric() {
        return Err(Error::NonSymmetric);
    }
    let n = gram.rows();
    let mut a = gram.clone();
    let (mut plus, mut minus, mut zero) = (0, 0, 0);
    for i in 0..n {
        if a[(i, i)].is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a[(i, j)].is_zero()) {
                let plus_pivot = &(&a[(i, i)] + &a[(j, j)]) + &(&a[(i, j)] * &Scalar::int(2));
                let sign = if plus_pivot.is_zero() {
                    Scalar::int(-1)
                } else {
                    Scalar::ONE
                };
                add_row_col(&mut a, i, j, &sign);
            }
        }
        let d = a[(i, i)].clone();
        if d.is_zero() {
            // Row i is entirely zero on the remaining block.
            zero += 1;
            continue;
        }
        if d.signum() > 0 {
            plus += 1;
        } else {
            minus += 1;
        }
        for j in i + 1..n {
            if a[(j, i)].is_zero() {
                continue;
            }
            let f = &a[(j, i)] / &d;
            for k in i..n {
                if !a[(i, k)].is_zero() {
                    let delta = &f * &a[(i, k)];
                    a[(j, k)] -= &delta;
                }
            }
            for k in i..n {
                if !a[(k, i)].is_zero() {
                    let delta = &f * &a[(k, i)];
                    a[(k, j)] -= &delta;
                }
            }
        }
    }
    Ok(Signature::new(plus, minus, zero))
}

/// Congruence by `e_i ← e_i + s·e_j` on rows and columns.
fn add_row_col(a: &mut MatrixQ, i: usize, j: usize, s: &Scalar) {
    let n = a.rows();
    for k in 0..n {
        let delta = s * &a[(j, k)];
        a[(i, k)] += &delta;
    }
    for k in 0..n {
        let delta = s * &a[(k, j)];
        a[(k, i)] += &delta;
    }
}

/// A symmetric bilinear form on `Qⁿ` with its cached signature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuadFormQ {
    gram: MatrixQ,
    signature: Signature,
}

impl QuadFormQ {
    pub fn new(gram: MatrixQ) -> Result<Self> {
        let signature = signature(&gram)?;
        Ok(QuadFormQ { gram, signature })
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &MatrixQ {
        &self.gram
    }

    pub fn signature(&self) -> Signature {
        self.signature
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.gram.bilinear(x, y)
    }

    /// The same form in the basis given by the columns of `b`.
    pub fn pull_back(&self, b: &MatrixQ) -> Result<QuadFormQ> {
        QuadFormQ::new(self.gram.congruence(b))
    }

    pub fn scaled(&self, s: &Scalar) -> Result<QuadFormQ> {
        QuadFormQ::new(self.gram.scale(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(data: &[i64], n: usize) -> (usize, usize, usize) {
        signature(&MatrixQ::from_i64(n, n, data))
            .unwrap()
            .as_tuple()
    }

    #[test]
    fn diagonal_and_hyperbolic() {
        assert_eq!(sig(&[1, 0, 0, -1], 2), (1, 1, 0));
        assert_eq!(sig(&[0, 1, 1, 0], 2), (1, 1, 0));
    }

    #[test]
    fn zero_pivot_where_plus_repair_vanishes() {
        // q_00 = 0, q_01 = 1, q_11 = -2: e0 + e1 is null, e0 - e1 is not.
        assert_eq!(sig(&[0, 1, 1, -2], 2), (1, 1, 0));
    }

    #[test]
    fn degenerate() {
        assert_eq!(sig(&[1, 1, 1, 1], 2), (1, 0, 1));
        assert_eq!(sig(&[0, 0, 0, 0], 2), (0, 0, 2));
        assert_eq!(sig(&[0, 0, 0, 0, 0, 1, 0, 1, 0], 3), (1, 1, 1));
    }

    #[test]
    fn non_symmetric_rejected() {
        assert!(matches!(
            signature(&MatrixQ::from_i64(2, 2, &[1, 2, 3, 4])),
            Err(Error::NonSymmetric)
        ));
    }
}
