use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linear::eigen::eigenspace;
use crate::linear::{Echelon, MatrixQ, MatrixSpan, QuadFormQ, Scalar, SparseRow, Subspace};

/// `[bᵢ, bⱼ]` in basis coordinates for every ordered pair, indexed `i·n + j`.
/// Fails if some commutator leaves the span.
pub fn structure_constants(basis: &[MatrixQ], span: &MatrixSpan) -> Result<Vec<SparseRow>> {
    let n = basis.len();
    let upper: Vec<Result<Vec<(usize, usize, SparseRow)>>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (i + 1..n)
                .map(|j| {
                    let c = basis[i].commutator(&basis[j]);
                    let coords = span.coords(&c).ok_or_else(|| {
                        Error::SolverInconsistency(format!(
                            "commutator of basis elements {i} and {j} leaves the span"
                        ))
                    })?;
                    Ok((i, j, to_sparse(&coords)))
                })
                .collect()
        })
        .collect();
    let mut out = vec![SparseRow::new(); n * n];
    for chunk in upper {
        for (i, j, v) in chunk? {
            out[j * n + i] = v.iter().map(|(k, x)| (*k, -x)).collect();
            out[i * n + j] = v;
        }
    }
    Ok(out)
}

pub fn to_sparse(v: &[Scalar]) -> SparseRow {
    v.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(j, x)| (j, x.clone()))
        .collect()
}

fn lookup(row: &SparseRow, k: usize) -> Option<&Scalar> {
    row.binary_search_by_key(&k, |(j, _)| *j)
        .ok()
        .map(|p| &row[p].1)
}

/// A real Lie algebra on an ordered rational basis.
#[derive(Clone, Debug, Serialize)]
pub struct LieAlgebraQ {
    name: String,
    labels: Vec<String>,
    #[serde(skip)]
    brackets: Vec<SparseRow>,
    #[serde(skip)]
    realization: Option<Vec<MatrixQ>>,
    #[serde(skip)]
    span: Option<MatrixSpan>,
    /// Matrix of the Cartan involution acting on coordinate columns.
    theta: MatrixQ,
    killing: QuadFormQ,
}

impl LieAlgebraQ {
    /// Algebra spanned by linearly independent matrices, closed under the
    /// commutator; `theta` acts on matrices and must preserve the span.
    pub fn from_matrices(
        name: &str,
        labels: Vec<String>,
        mats: Vec<MatrixQ>,
        theta: impl Fn(&MatrixQ) -> MatrixQ + Sync,
    ) -> Result<Self> {
        let span = MatrixSpan::new(&mats)?;
        let brackets = structure_constants(&mats, &span)?;
        Self::assemble(name, labels, brackets, mats, span, theta)
    }

    /// Like `from_matrices` with structure constants supplied by the caller.
    pub fn from_parts(
        name: &str,
        labels: Vec<String>,
        brackets: Vec<SparseRow>,
        mats: Vec<MatrixQ>,
        theta: impl Fn(&MatrixQ) -> MatrixQ + Sync,
    ) -> Result<Self> {
        let span = MatrixSpan::new(&mats)?;
        Self::assemble(name, labels, brackets, mats, span, theta)
    }

    fn assemble(
        name: &str,
        labels: Vec<String>,
        brackets: Vec<SparseRow>,
        mats: Vec<MatrixQ>,
        span: MatrixSpan,
        theta: impl Fn(&MatrixQ) -> MatrixQ + Sync,
    ) -> Result<Self> {
        let n = mats.len();
        if labels.len() != n || brackets.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: labels.len(),
            });
        }
        let theta_cols: Vec<Result<Vec<Scalar>>> = mats
            .par_iter()
            .map(|m| {
                span.coords(&theta(m)).ok_or_else(|| {
                    Error::SolverInconsistency("involution leaves the algebra".into())
                })
            })
            .collect();
        let theta_cols: Vec<Vec<Scalar>> = theta_cols.into_iter().collect::<Result<_>>()?;
        let theta = MatrixQ::from_columns(&theta_cols, n);
        let killing = QuadFormQ::new(killing_gram(&brackets, n))?;
        Ok(LieAlgebraQ {
            name: name.to_string(),
            labels,
            brackets,
            realization: Some(mats),
            span: Some(span),
            theta,
            killing,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn realization(&self) -> Option<&[MatrixQ]> {
        self.realization.as_deref()
    }

    pub fn theta(&self) -> &MatrixQ {
        &self.theta
    }

    pub fn killing(&self) -> &QuadFormQ {
        &self.killing
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &SparseRow {
        &self.brackets[i * self.dim() + j]
    }

    /// `[x, y]` through the structure constants.
    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let n = self.dim();
        let mut out = vec![Scalar::ZERO; n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let row = self.bracket_basis(i, j);
                if row.is_empty() {
                    continue;
                }
                let f = xi * yj;
                for (k, c) in row {
                    out[*k] += &(&f * c);
                }
            }
        }
        out
    }

    /// Matrix of `ad x`; column `j` is `[x, bⱼ]`.
    pub fn ad(&self, x: &[Scalar]) -> MatrixQ {
        let n = self.dim();
        let cols: Vec<Vec<Scalar>> = (0..n)
            .map(|j| self.bracket(x, &crate::linear::unit_vec(n, j)))
            .collect();
        MatrixQ::from_columns(&cols, n)
    }

    pub fn apply_theta(&self, x: &[Scalar]) -> Vec<Scalar> {
        self.theta.mul_vec(x)
    }

    pub fn killing_value(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        self.killing.eval(x, y)
    }

    /// `B_θ(x, y) = −B(θx, y)`
    pub fn b_theta(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        -self.killing_value(&self.apply_theta(x), y)
    }

    pub fn b_theta_form(&self) -> Result<QuadFormQ> {
        QuadFormQ::new(
            self.theta
                .transpose()
                .mul(self.killing.gram())
                .scale(&Scalar::int(-1)),
        )
    }

    /// `k`, the fixed points of θ.
    pub fn k_part(&self) -> Subspace {
        eigenspace(&self.theta, &Scalar::ONE)
    }

    /// `p`, the `−1`-eigenspace of θ.
    pub fn p_part(&self) -> Subspace {
        eigenspace(&self.theta, &Scalar::int(-1))
    }

    /// Matrix of `x` in the realization.
    pub fn to_matrix(&self, x: &[Scalar]) -> Option<MatrixQ> {
        self.span.as_ref().map(|s| s.matrix(x))
    }

    pub fn from_matrix(&self, m: &MatrixQ) -> Option<Vec<Scalar>> {
        self.span.as_ref().and_then(|s| s.coords(m))
    }

    /// `[x, y]` through the realization: commutator of matrices, read back.
    pub fn bracket_via_matrices(&self, x: &[Scalar], y: &[Scalar]) -> Option<Vec<Scalar>> {
        let (mx, my) = (self.to_matrix(x)?, self.to_matrix(y)?);
        self.from_matrix(&mx.commutator(&my))
    }

    /// Span of all `[a, b]` with `a ∈ s`, `b ∈ t`.
    pub fn bracket_span(&self, s: &Subspace, t: &Subspace) -> Subspace {
        let n = self.dim();
        let mut e = Echelon::new(n);
        let tb = t.basis_vectors();
        for a in s.basis_vectors() {
            for b in &tb {
                e.insert_dense(&self.bracket(&a, b));
            }
        }
        Subspace::from_echelon(&e)
    }

    /// `{z ∈ within : [z, s] = 0}`.
    pub fn centralizer(&self, s: &Subspace, within: &Subspace) -> Subspace {
        let n = self.dim();
        let wb = within.basis_vectors();
        // Columns: images of within-basis vectors under z ↦ ([z, s₁], …, [z, s_r]).
        let sb = s.basis_vectors();
        let mut rows: Vec<Vec<Scalar>> = vec![Vec::with_capacity(wb.len()); n * sb.len()];
        for w in &wb {
            let mut stacked = Vec::with_capacity(n * sb.len());
            for v in &sb {
                stacked.extend(self.bracket(w, v));
            }
            for (r, x) in stacked.into_iter().enumerate() {
                rows[r].push(x);
            }
        }
        if sb.is_empty() {
            return within.clone();
        }
        let m = MatrixQ::from_rows_with_width(&rows, wb.len()).expect("rectangular");
        let coeffs = Subspace::kernel_of(&m);
        let vecs: Vec<Vec<Scalar>> = coeffs
            .basis_vectors()
            .iter()
            .map(|c| within.vector(c))
            .collect();
        Subspace::span(n, &vecs)
    }

    /// Matrix of `ad x` restricted to `s`, assuming `[x, s] ⊆ s`, in the
    /// stored basis of `s`.
    pub fn restricted_action(&self, x: &[Scalar], s: &Subspace) -> Option<MatrixQ> {
        let cols: Option<Vec<Vec<Scalar>>> = s
            .basis_vectors()
            .iter()
            .map(|v| s.coordinates(&self.bracket(x, v)))
            .collect();
        Some(MatrixQ::from_columns(&cols?, s.dim()))
    }

    pub fn is_antisymmetric(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| {
            self.bracket_basis(i, i).is_empty()
                && (i + 1..n).all(|j| {
                    let (a, b) = (self.bracket_basis(i, j), self.bracket_basis(j, i));
                    a.len() == b.len()
                        && a.iter()
                            .zip(b)
                            .all(|((ka, va), (kb, vb))| ka == kb && (va + vb).is_zero())
                })
        })
    }

    /// Jacobi identity on every basis triple `i < j < k`.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim();
        (0..n).into_par_iter().all(|i| {
            (i + 1..n).all(|j| {
                (j + 1..n).all(|k| {
                    let mut acc = vec![Scalar::ZERO; n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, x) in self.bracket_basis(a, b) {
                            for (l, y) in self.bracket_basis(*m, c) {
                                acc[*l] += &(x * y);
                            }
                        }
                    }
                    acc.iter().all(Scalar::is_zero)
                })
            })
        })
    }

    pub fn theta_is_involution(&self) -> bool {
        self.theta.mul(&self.theta) == MatrixQ::identity(self.dim())
    }

    /// `θ[bᵢ, bⱼ] = [θbᵢ, θbⱼ]` for all basis pairs.
    pub fn theta_is_automorphism(&self) -> bool {
        let n = self.dim();
        let images: Vec<Vec<Scalar>> = (0..n).map(|i| self.theta.col(i)).collect();
        (0..n).into_par_iter().all(|i| {
            (i + 1..n).all(|j| {
                let mut lhs = vec![Scalar::ZERO; n];
                for (k, c) in self.bracket_basis(i, j) {
                    lhs = crate::linear::vec_add(&lhs, &crate::linear::vec_scale(&images[*k], c));
                }
                lhs == self.bracket(&images[i], &images[j])
            })
        })
    }

    /// Killing form agrees with `Tr(ad bᵢ ∘ ad bⱼ)` computed from dense `ad`
    /// matrices (an independent path from the sparse formula).
    pub fn killing_matches_dense_traces(&self) -> bool {
        let n = self.dim();
        let ads: Vec<MatrixQ> = (0..n)
            .map(|i| self.ad(&crate::linear::unit_vec(n, i)))
            .collect();
        (0..n).into_par_iter().all(|i| {
            (i..n).all(|j| ads[i].trace_of_product(&ads[j]) == self.killing.gram()[(i, j)])
        })
    }
}

/// `B_ij = Σ_l Σ_k [bᵢ, b_l]_k · [bⱼ, b_k]_l`.
fn killing_gram(brackets: &[SparseRow], n: usize) -> MatrixQ {
    let rows: Vec<Vec<Scalar>> = (0..n)
        .into_par_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    if j < i {
                        return Scalar::ZERO;
                    }
                    let mut acc = Scalar::ZERO;
                    for l in 0..n {
                        for (k, x) in &brackets[i * n + l] {
                            if let Some(y) = lookup(&brackets[j * n + k], l) {
                                acc += &(x * y);
                            }
                        }
                    }
                    acc
                })
                .collect()
        })
        .collect();
    let mut g = MatrixQ::from_rows(&rows);
    for i in 0..n {
        for j in 0..i {
            g[(i, j)] = g[(j, i)].clone();
        }
    }
    g
}
