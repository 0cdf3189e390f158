use serde::Serialize;

use super::echelon::Echelon;
use super::matrix::{combine, MatrixQ};
use super::quadform::QuadFormQ;
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// A linear subspace of `Qⁿ`, stored by its reduced row-echelon basis.
///
/// The RREF basis is unique, so two subspaces are equal exactly when their
/// stored bases are equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    ambient_dim: usize,
    basis: MatrixQ,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: MatrixQ::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: MatrixQ::identity(ambient_dim),
        }
    }

    pub fn span(ambient_dim: usize, vectors: &[Vec<Scalar>]) -> Self {
        let mut e = Echelon::new(ambient_dim);
        for v in vectors {
            assert_eq!(
                v.len(),
                ambient_dim,
                "vector length does not match ambient dimension"
            );
            e.insert_dense(v);
        }
        Subspace {
            ambient_dim,
            basis: e.basis_matrix(),
        }
    }

    pub fn from_echelon(e: &Echelon) -> Self {
        Subspace {
            ambient_dim: e.ncols(),
            basis: e.basis_matrix(),
        }
    }

    /// Null space `{x : m·x = 0}`.
    pub fn kernel_of(m: &MatrixQ) -> Self {
        let mut e = Echelon::new(m.cols());
        for i in 0..m.rows() {
            e.insert_dense(m.row(i));
        }
        Subspace::span(m.cols(), &e.null_space())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn basis(&self) -> &MatrixQ {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_vecs()
    }

    /// Vector with the given coordinates in the stored basis.
    pub fn vector(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim());
        combine(coords, &self.basis_vectors(), self.ambient_dim)
    }

    fn echelon(&self) -> Echelon {
        let mut e = Echelon::new(self.ambient_dim);
        for i in 0..self.dim() {
            e.insert_dense(self.basis.row(i));
        }
        e
    }

    fn check(&self, other: &Subspace) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: other.ambient_dim,
            });
        }
        Ok(())
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        self.echelon().contains(v)
    }

    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check(other)?;
        let mut e = self.echelon();
        Ok((0..other.dim()).all(|i| e.contains(other.basis.row(i))))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let mut e = self.echelon();
        for i in 0..other.dim() {
            e.insert_dense(other.basis.row(i));
        }
        Ok(Subspace::from_echelon(&e))
    }

    /// Vectors `w` with `v·w = 0` for every `v` in the subspace (Euclidean
    /// annihilator).
    pub fn annihilator(&self) -> Subspace {
        Subspace::kernel_of(&self.basis)
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace> {
        self.check(other)?;
        let constraints = self.annihilator().basis.vstack(&other.annihilator().basis);
        Ok(Subspace::kernel_of(&constraints))
    }

    /// `{w : b(v, w) = 0 ∀ v ∈ S}` for the bilinear form of `q`.
    pub fn orthogonal_complement(&self, q: &QuadFormQ) -> Result<Subspace> {
        if q.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: q.dim(),
            });
        }
        Ok(Subspace::kernel_of(&self.basis.mul(q.gram())))
    }

    /// Gram matrix of `q` restricted to the stored basis.
    pub fn restrict_form(&self, q: &QuadFormQ) -> Result<QuadFormQ> {
        if q.dim() != self.ambient_dim {
            return Err(Error::DimensionMismatch {
                expected: self.ambient_dim,
                found: q.dim(),
            });
        }
        let g = self.basis.mul(q.gram()).mul(&self.basis.transpose());
        QuadFormQ::new(g)
    }

    /// Coordinates of `v` in the stored basis, if `v` lies in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        // RREF basis: the coordinates are the entries at the pivot columns.
        let pivots = self.pivots();
        let coords: Vec<Scalar> = pivots.iter().map(|&p| v[p].clone()).collect();
        let back = self.vector(&coords);
        (back.as_slice() == v).then_some(coords)
    }

    pub fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .position(|x| !x.is_zero())
                    .expect("nonzero basis row")
            })
            .collect()
    }

    /// Image of the subspace under a linear map given by `m` (acting on
    /// column vectors).
    pub fn image(&self, m: &MatrixQ) -> Subspace {
        let imgs: Vec<Vec<Scalar>> = self.basis_vectors().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &imgs)
    }
}

impl std::fmt::Debug for Subspace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Subspace(dim {} in {}) {:?}",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}
