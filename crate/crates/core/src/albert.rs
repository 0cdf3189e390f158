//! The Albert algebra `J(O,p)` of `p`-Hermitian octonionic 3×3 matrices,
//! `p = diag(−1, 1, 1)`, and its derivation algebra.
//!
//! Coordinates are ordered `(ξ1, ξ2, ξ3, c1, c2, c3)` with each `cᵢ` in
//! octonion-basis order, 27 in total. The element with these coordinates is
//!
//! ```text
//! [  ξ1    c1   c3 ]
//! [ −c̄1   ξ2   c2 ]
//! [ −c̄3   c̄2   ξ3 ]
//! ```

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;

use crate::composition::{oct_mul, Octonion};
use crate::error::{Error, Result};
use crate::lie::algebra::structure_constants;
use crate::linear::{Echelon, MatrixQ, MatrixSpan, Scalar, SparseRow, Subspace};
use crate::rep;

pub const DIM: usize = 27;
pub const J0_DIM: usize = 26;
pub const DER_DIM: usize = 52;

/// Signs of `p = diag(−1, 1, 1)`.
const P_DIAG: [i64; 3] = [-1, 1, 1];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AlbertElement {
    pub xi: [Scalar; 3],
    pub c: [Octonion; 3],
}

type OctMatrix = [[Octonion; 3]; 3];

impl AlbertElement {
    pub fn zero() -> Self {
        AlbertElement {
            xi: [Scalar::ZERO, Scalar::ZERO, Scalar::ZERO],
            c: [Octonion::zero(), Octonion::zero(), Octonion::zero()],
        }
    }

    pub fn identity() -> Self {
        AlbertElement {
            xi: [Scalar::ONE, Scalar::ONE, Scalar::ONE],
            ..Self::zero()
        }
    }

    pub fn diagonal(xi: [Scalar; 3]) -> Self {
        AlbertElement { xi, ..Self::zero() }
    }

    pub fn from_coords(v: &[Scalar]) -> Self {
        assert_eq!(v.len(), DIM);
        let oct = |o: usize| Octonion::new(std::array::from_fn(|i| v[3 + 8 * o + i].clone()));
        AlbertElement {
            xi: [v[0].clone(), v[1].clone(), v[2].clone()],
            c: [oct(0), oct(1), oct(2)],
        }
    }

    pub fn coords(&self) -> Vec<Scalar> {
        let mut v: Vec<Scalar> = self.xi.to_vec();
        for o in &self.c {
            v.extend(o.coords.iter().cloned());
        }
        v
    }

    pub fn basis(i: usize) -> Self {
        Self::from_coords(&crate::linear::unit_vec(DIM, i))
    }

    pub fn trace(&self) -> Scalar {
        self.xi.iter().sum()
    }

    fn to_matrix(&self) -> OctMatrix {
        let [x1, x2, x3] = &self.xi;
        let [c1, c2, c3] = &self.c;
        [
            [Octonion::from_real(x1.clone()), c1.clone(), c3.clone()],
            [-&c1.conj(), Octonion::from_real(x2.clone()), c2.clone()],
            [-&c3.conj(), c2.conj(), Octonion::from_real(x3.clone())],
        ]
    }

    /// Reads a matrix back into the parametrization, checking that it is
    /// `p`-Hermitian.
    fn from_matrix(m: &OctMatrix) -> Self {
        debug_assert!(is_p_hermitian(m), "matrix leaves J(O,p)");
        AlbertElement {
            xi: [
                m[0][0].real().clone(),
                m[1][1].real().clone(),
                m[2][2].real().clone(),
            ],
            c: [m[0][1].clone(), m[1][2].clone(), m[0][2].clone()],
        }
    }

    /// `p·x·p⁻¹`, a Jordan automorphism; it flips the signs of `c1` and `c3`.
    pub fn conjugate_by_p(&self) -> Self {
        let m = self.to_matrix();
        let conj: OctMatrix = std::array::from_fn(|a| {
            std::array::from_fn(|b| m[a][b].scale(&Scalar::int(P_DIAG[a] * P_DIAG[b])))
        });
        Self::from_matrix(&conj)
    }
}

fn oct_matmul(x: &OctMatrix, y: &OctMatrix) -> OctMatrix {
    std::array::from_fn(|a| {
        std::array::from_fn(|b| {
            (0..3).fold(Octonion::zero(), |acc, k| {
                &acc + &oct_mul(&x[a][k], &y[k][b])
            })
        })
    })
}

/// `x = p·x*·p⁻¹`, where `x*` is the conjugate transpose.
fn is_p_hermitian(m: &OctMatrix) -> bool {
    (0..3).all(|a| {
        (0..3).all(|b| m[a][b] == m[b][a].conj().scale(&Scalar::int(P_DIAG[a] * P_DIAG[b])))
    })
}

/// `x ⋆ y = ½(xy + yx)`
pub fn jordan_product(x: &AlbertElement, y: &AlbertElement) -> AlbertElement {
    let (mx, my) = (x.to_matrix(), y.to_matrix());
    let xy = oct_matmul(&mx, &my);
    let yx = oct_matmul(&my, &mx);
    let half = Scalar::new(1, 2);
    let sym: OctMatrix =
        std::array::from_fn(|a| std::array::from_fn(|b| (&xy[a][b] + &yx[a][b]).scale(&half)));
    AlbertElement::from_matrix(&sym)
}

/// `q(x, y) = Tr(x ⋆ y)`
pub fn trace_form(x: &AlbertElement, y: &AlbertElement) -> Scalar {
    jordan_product(x, y).trace()
}

/// Products of basis elements, `table[i][j] = coords(bᵢ ⋆ bⱼ)` (sparse).
pub fn structure_table() -> &'static Vec<Vec<SparseRow>> {
    static TABLE: OnceLock<Vec<Vec<SparseRow>>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let basis: Vec<AlbertElement> = (0..DIM).map(AlbertElement::basis).collect();
        (0..DIM)
            .map(|i| {
                (0..DIM)
                    .map(|j| {
                        jordan_product(&basis[i], &basis[j])
                            .coords()
                            .into_iter()
                            .enumerate()
                            .filter(|(_, x)| !x.is_zero())
                            .collect()
                    })
                    .collect()
            })
            .collect()
    })
}

/// Gram matrix of `q` on the 27 coordinates.
pub fn gram() -> MatrixQ {
    let mut g = MatrixQ::zeros(DIM, DIM);
    let basis: Vec<AlbertElement> = (0..DIM).map(AlbertElement::basis).collect();
    for i in 0..DIM {
        for j in i..DIM {
            let v = trace_form(&basis[i], &basis[j]);
            g[(i, j)] = v.clone();
            g[(j, i)] = v;
        }
    }
    g
}

/// Basis of the traceless part `J_0`, as columns of a 27×26 matrix:
/// `ξ = (1,−1,0)`, `ξ = (1,1,−2)`, then the 24 octonion coordinates.
pub fn j0_embedding() -> MatrixQ {
    let mut e = MatrixQ::zeros(DIM, J0_DIM);
    e[(0, 0)] = Scalar::ONE;
    e[(1, 0)] = Scalar::int(-1);
    e[(0, 1)] = Scalar::ONE;
    e[(1, 1)] = Scalar::ONE;
    e[(2, 1)] = Scalar::int(-2);
    for i in 3..DIM {
        e[(i, i - 1)] = Scalar::ONE;
    }
    e
}

/// Left inverse of `j0_embedding` on `J_0`.
pub fn j0_projection() -> MatrixQ {
    let mut p = MatrixQ::zeros(J0_DIM, DIM);
    p[(0, 0)] = Scalar::ONE;
    p[(0, 2)] = Scalar::new(1, 2);
    p[(1, 2)] = Scalar::new(-1, 2);
    for i in 3..DIM {
        p[(i - 1, i)] = Scalar::ONE;
    }
    p
}

/// Gram matrix of `q` on the `J_0` basis.
pub fn j0_gram() -> MatrixQ {
    gram().congruence(&j0_embedding())
}

/// Coordinate matrix of `x ↦ p·x·p⁻¹` on the 27 coordinates.
pub fn p_conjugation() -> MatrixQ {
    let cols: Vec<Vec<Scalar>> = (0..DIM)
        .map(|i| AlbertElement::basis(i).conjugate_by_p().coords())
        .collect();
    MatrixQ::from_columns(&cols, DIM)
}

#[derive(Clone, Debug, Serialize)]
pub struct DerivationAlgebra {
    pub basis: Vec<MatrixQ>,
    pub dim: usize,
    /// `[Dᵢ, Dⱼ]` in basis coordinates, indexed by `i·dim + j`.
    #[serde(skip)]
    pub structure_constants: Vec<SparseRow>,
    pub constraint_rank: usize,
}

impl DerivationAlgebra {
    pub fn bracket_coords(&self, i: usize, j: usize) -> &SparseRow {
        &self.structure_constants[i * self.dim + j]
    }

    /// Dense 3-index array `c[i][j][k]` with `[Dᵢ, Dⱼ] = Σ_k c[i][j][k] D_k`.
    pub fn structure_array(&self) -> Vec<Vec<Vec<Scalar>>> {
        (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let mut v = vec![Scalar::ZERO; self.dim];
                        for (k, x) in self.bracket_coords(i, j) {
                            v[*k] = x.clone();
                        }
                        v
                    })
                    .collect()
            })
            .collect()
    }
}

fn unknown(a: usize, b: usize) -> usize {
    a * DIM + b
}

/// One linear constraint per `(i ≤ j, c)`: the `c`-coordinate of
/// `D(bᵢ⋆bⱼ) − D(bᵢ)⋆bⱼ − bᵢ⋆D(bⱼ)`, with `D(b_b) = Σ_a D_ab b_a`.
fn derivation_constraint(t: &[Vec<SparseRow>], i: usize, j: usize, c: usize) -> SparseRow {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    let mut add = |idx: usize, v: Scalar| {
        let e = acc.entry(idx).or_insert(Scalar::ZERO);
        *e += &v;
    };
    for (k, v) in &t[i][j] {
        add(unknown(c, *k), v.clone());
    }
    for a in 0..DIM {
        if let Ok(p) = t[a][j].binary_search_by_key(&c, |(k, _)| *k) {
            add(unknown(a, i), -&t[a][j][p].1);
        }
        if let Ok(p) = t[i][a].binary_search_by_key(&c, |(k, _)| *k) {
            add(unknown(a, j), -&t[i][a][p].1);
        }
    }
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

fn solve_derivations() -> Result<DerivationAlgebra> {
    let t = structure_table();
    let mut e = Echelon::new(DIM * DIM);
    for i in 0..DIM {
        for j in i..DIM {
            for c in 0..DIM {
                let row = derivation_constraint(t, i, j, c);
                if !row.is_empty() {
                    e.insert(row);
                }
            }
        }
    }
    let kernel = Subspace::span(DIM * DIM, &e.null_space());
    let basis: Vec<MatrixQ> = kernel
        .basis_vectors()
        .into_iter()
        .map(|v| MatrixQ::from_vec(DIM, DIM, v))
        .collect();
    let span = MatrixSpan::new(&basis)?;
    let structure_constants = structure_constants(&basis, &span)?;
    let dim = basis.len();
    if dim != DER_DIM {
        return Err(Error::SolverInconsistency(format!(
            "derivation space has dimension {dim}, expected {DER_DIM}"
        )));
    }
    Ok(DerivationAlgebra {
        basis,
        dim,
        structure_constants,
        constraint_rank: e.rank(),
    })
}

/// Derivations of `J(O,p)`, solved from the full 729-unknown system (cached).
pub fn derivation_algebra() -> Result<&'static DerivationAlgebra> {
    static DER: OnceLock<Result<DerivationAlgebra>> = OnceLock::new();
    DER.get_or_init(solve_derivations)
        .as_ref()
        .map_err(Clone::clone)
}

/// `D(x⋆y) = D(x)⋆y + x⋆D(y)` on all basis pairs.
pub fn is_derivation(d: &MatrixQ) -> bool {
    let t = structure_table();
    (0..DIM).into_par_iter().all(|i| {
        (i..DIM).all(|j| {
            let lhs = apply_sparse(d, &t[i][j]);
            let di = AlbertElement::from_coords(&d.col(i));
            let dj = AlbertElement::from_coords(&d.col(j));
            let rhs = crate::linear::vec_add(
                &jordan_product(&di, &AlbertElement::basis(j)).coords(),
                &jordan_product(&AlbertElement::basis(i), &dj).coords(),
            );
            lhs == rhs
        })
    })
}

fn apply_sparse(d: &MatrixQ, v: &SparseRow) -> Vec<Scalar> {
    let mut out = vec![Scalar::ZERO; DIM];
    for (k, x) in v {
        for (a, o) in out.iter_mut().enumerate() {
            let e = &d[(a, *k)];
            if !e.is_zero() {
                *o += &(e * x);
            }
        }
    }
    out
}

/// `Gᵀ·D + Dᵀ·G = 0` for the Gram matrix `G` of `q`.
pub fn is_q_skew(d: &MatrixQ, g: &MatrixQ) -> bool {
    g.transpose().mul(d).add(&d.transpose().mul(g)).is_zero()
}

/// `D(J_0) ⊆ J_0`, i.e. the trace of `D` applied to each basis vector of
/// `J_0` vanishes.
pub fn preserves_j0(d: &MatrixQ) -> bool {
    let image = d.mul(&j0_embedding());
    (0..J0_DIM).all(|c| (0..3).map(|a| &image[(a, c)]).sum::<Scalar>().is_zero())
}

pub fn kills_identity(d: &MatrixQ) -> bool {
    d.mul_vec(&AlbertElement::identity().coords())
        .iter()
        .all(Scalar::is_zero)
}

/// The derivations acting on `J_0`, with the certificates used to call the
/// action faithful and irreducible.
#[derive(Clone, Debug, Serialize)]
pub struct J0Representation {
    pub rep: Vec<MatrixQ>,
    pub faithful: bool,
    pub irreducible: bool,
    pub commutant_dim: usize,
    pub invariant_forms_dim: usize,
    pub form_is_trace_form: bool,
}

pub fn restrict_to_j0(d: &DerivationAlgebra) -> J0Representation {
    let (emb, proj) = (j0_embedding(), j0_projection());
    let rep: Vec<MatrixQ> = d.basis.par_iter().map(|m| proj.mul(&m.mul(&emb))).collect();
    let flat: Vec<Vec<Scalar>> = rep.iter().map(MatrixQ::flatten).collect();
    let faithful = crate::linear::rank(&MatrixQ::from_rows(&flat)) == d.dim;
    let commutant_dim = rep::commutant(J0_DIM, &rep).dim();
    let forms = rep::invariant_symmetric_forms(J0_DIM, &rep);
    let g0 = j0_gram();
    let form_is_trace_form = forms.len() == 1 && {
        let s = &forms[0];
        let (i, j) = (0..J0_DIM)
            .flat_map(|i| (0..J0_DIM).map(move |j| (i, j)))
            .find(|&(i, j)| !g0[(i, j)].is_zero())
            .unwrap();
        s.scale(&(&g0[(i, j)] / &s[(i, j)])) == g0
    };
    // Commutant of dimension 1 plus complete reducibility (the action is skew
    // for the nondegenerate form q) rules out proper invariant subspaces.
    let skew = rep.iter().all(|x| is_q_skew(x, &g0));
    J0Representation {
        faithful,
        irreducible: commutant_dim == 1 && skew,
        commutant_dim,
        invariant_forms_dim: forms.len(),
        form_is_trace_form,
        rep,
    }
}

/// JSON export: basis labels, structure constants as `"n/d"` strings, and
/// the 26-dimensional representation.
pub fn export_json(d: &DerivationAlgebra, j0: &J0Representation) -> serde_json::Value {
    let labels: Vec<String> = (0..d.dim).map(|i| format!("D{i}")).collect();
    let constants: Vec<Vec<Vec<String>>> = d
        .structure_array()
        .into_iter()
        .map(|a| {
            a.into_iter()
                .map(|b| b.into_iter().map(|x| x.to_string()).collect())
                .collect()
        })
        .collect();
    let rep: Vec<Vec<Vec<String>>> = j0
        .rep
        .iter()
        .map(|m| {
            (0..m.rows())
                .map(|r| m.row(r).iter().map(ToString::to_string).collect())
                .collect()
        })
        .collect();
    serde_json::json!({
        "schema": 1,
        "algebra": "f4(-20)",
        "basis_labels": labels,
        "structure_constants": constants,
        "j0_representation": rep,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sampling::Sampler;

    fn random(s: &mut Sampler) -> AlbertElement {
        AlbertElement::from_coords(&s.vector(DIM))
    }

    #[test]
    fn identity_is_unit() {
        let mut s = Sampler::new(1);
        let x = random(&mut s);
        assert_eq!(jordan_product(&AlbertElement::identity(), &x), x);
        assert_eq!(
            trace_form(&AlbertElement::identity(), &AlbertElement::identity()),
            Scalar::int(3)
        );
        assert_eq!(trace_form(&AlbertElement::identity(), &x), x.trace());
    }

    #[test]
    fn diagonal_part_multiplies_entrywise() {
        let x = AlbertElement::diagonal([Scalar::int(2), Scalar::int(-3), Scalar::new(1, 2)]);
        let y = AlbertElement::diagonal([Scalar::int(5), Scalar::int(7), Scalar::int(4)]);
        assert_eq!(
            jordan_product(&x, &y),
            AlbertElement::diagonal([Scalar::int(10), Scalar::int(-21), Scalar::int(2)])
        );
    }

    #[test]
    fn gram_is_diagonal_with_expected_entries() {
        let g = gram();
        let mut expected = vec![Scalar::ONE; 3];
        for s in [-2, 2, -2] {
            expected.extend(std::iter::repeat_n(Scalar::int(s), 8));
        }
        assert_eq!(g, MatrixQ::diag(&expected));
    }

    #[test]
    fn product_stays_p_hermitian() {
        let mut s = Sampler::new(2);
        for _ in 0..10 {
            let (x, y) = (random(&mut s), random(&mut s));
            let z = jordan_product(&x, &y);
            assert!(is_p_hermitian(&z.to_matrix()));
        }
    }

    #[test]
    fn p_conjugation_flips_c1_c3() {
        let e = p_conjugation();
        let mut d = vec![Scalar::ONE; 3];
        for s in [-1, 1, -1] {
            d.extend(std::iter::repeat_n(Scalar::int(s), 8));
        }
        assert_eq!(e, MatrixQ::diag(&d));
    }

    #[test]
    fn projection_inverts_embedding() {
        assert_eq!(
            j0_projection().mul(&j0_embedding()),
            MatrixQ::identity(J0_DIM)
        );
    }
}
