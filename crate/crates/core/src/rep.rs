//! Linear-algebra certificates for a set of operators `ρ(X)` on `ℚⁿ`:
//! commutants and invariant symmetric bilinear forms.

use std::collections::BTreeMap;

use crate::linear::{Echelon, MatrixQ, Scalar, SparseRow, Subspace};

fn push(acc: &mut BTreeMap<usize, Scalar>, idx: usize, v: Scalar) {
    let e = acc.entry(idx).or_insert(Scalar::ZERO);
    *e += &v;
}

fn finish(acc: BTreeMap<usize, Scalar>) -> SparseRow {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

/// `{A : A·ρ(X) = ρ(X)·A for all X}` as a subspace of flattened `n×n`
/// matrices.
pub fn commutant(n: usize, ops: &[MatrixQ]) -> Subspace {
    let mut e = Echelon::new(n * n);
    for x in ops {
        for r in 0..n {
            for c in 0..n {
                let mut acc = BTreeMap::new();
                for k in 0..n {
                    let xkc = &x[(k, c)];
                    if !xkc.is_zero() {
                        push(&mut acc, r * n + k, xkc.clone());
                    }
                    let xrk = &x[(r, k)];
                    if !xrk.is_zero() {
                        push(&mut acc, k * n + c, -xrk);
                    }
                }
                let row = finish(acc);
                if !row.is_empty() {
                    e.insert(row);
                }
            }
        }
    }
    Subspace::span(n * n, &e.null_space())
}

fn sym_index(n: usize, a: usize, b: usize) -> usize {
    let (i, j) = if a <= b { (a, b) } else { (b, a) };
    i * n - i * (i + 1) / 2 + j
}

/// Basis of the symmetric `S` with `ρ(X)ᵀ·S + S·ρ(X) = 0` for all `X`.
pub fn invariant_symmetric_forms(n: usize, ops: &[MatrixQ]) -> Vec<MatrixQ> {
    let unknowns = n * (n + 1) / 2;
    let mut e = Echelon::new(unknowns);
    for x in ops {
        for r in 0..n {
            for c in r..n {
                let mut acc = BTreeMap::new();
                for k in 0..n {
                    let xkr = &x[(k, r)];
                    if !xkr.is_zero() {
                        push(&mut acc, sym_index(n, k, c), xkr.clone());
                    }
                    let xkc = &x[(k, c)];
                    if !xkc.is_zero() {
                        push(&mut acc, sym_index(n, r, k), xkc.clone());
                    }
                }
                let row = finish(acc);
                if !row.is_empty() {
                    e.insert(row);
                }
            }
        }
    }
    Subspace::span(unknowns, &e.null_space())
        .basis_vectors()
        .into_iter()
        .map(|v| {
            let mut s = MatrixQ::zeros(n, n);
            for a in 0..n {
                for b in 0..n {
                    s[(a, b)] = v[sym_index(n, a, b)].clone();
                }
            }
            s
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotation_generator_commutant_is_complex_structure() {
        let j = MatrixQ::from_i64(2, 2, &[0, -1, 1, 0]);
        assert_eq!(commutant(2, std::slice::from_ref(&j)).dim(), 2);
        let forms = invariant_symmetric_forms(2, &[j]);
        assert_eq!(forms, vec![MatrixQ::identity(2)]);
    }

    #[test]
    fn full_matrix_algebra_has_scalar_commutant() {
        let e01 = MatrixQ::from_i64(2, 2, &[0, 1, 0, 0]);
        let e10 = MatrixQ::from_i64(2, 2, &[0, 0, 1, 0]);
        assert_eq!(commutant(2, &[e01, e10]).dim(), 1);
    }

    #[test]
    fn no_operators_commute_with_everything() {
        assert_eq!(commutant(3, &[]).dim(), 9);
        assert_eq!(invariant_symmetric_forms(3, &[]).len(), 6);
    }
}
