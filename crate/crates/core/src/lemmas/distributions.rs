//! Tensors with curvature symmetries that vanish on two maximally
//! degenerate subspaces and take values in their intersection.
//!
//! `T` is a `(3,1)`-tensor on `ℝ^{p,q}` with components `T_{ijk}^l`,
//! antisymmetric in `(i, j)`, satisfying the first Bianchi identity and
//! `⟨T(u,v,w), z⟩ = −⟨T(u,v,z), w⟩`. In a basis of hyperbolic pairs
//! `(eₐ, fₐ)` plus a definite block `D`, the subspaces are
//! `V₁ = span(e)^⊥ = span(e) ⊕ D` and `V₂ = span(f)^⊥ = span(f) ⊕ D`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::linear::{Echelon, MatrixQ, Scalar, SparseRow};
use crate::report::Report;

/// Signatures exercised by the suite.
pub const SIGNATURES: [(usize, usize); 2] = [(1, 2), (2, 2)];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Hypotheses {
    /// `T(Vᵢ, Vᵢ, Vᵢ) = 0` for `i = 1, 2`.
    pub vanish_on_subspaces: bool,
    /// `Im T ⊆ V₁ ∩ V₂`.
    pub image_in_intersection: bool,
}

impl Hypotheses {
    pub const ALL: Hypotheses = Hypotheses {
        vanish_on_subspaces: true,
        image_in_intersection: true,
    };
    pub const NO_IMAGE: Hypotheses = Hypotheses {
        vanish_on_subspaces: true,
        image_in_intersection: false,
    };
    pub const NONE: Hypotheses = Hypotheses {
        vanish_on_subspaces: false,
        image_in_intersection: false,
    };
}

/// Index sets of `V₁`, `V₂` and `V₁ ∩ V₂` in the adapted basis, with the
/// Gram matrix of the form.
struct Setup {
    n: usize,
    gram: MatrixQ,
    v1: Vec<usize>,
    v2: Vec<usize>,
    meet: Vec<usize>,
}

fn setup(p: usize, q: usize, dim_v: usize) -> Result<Setup> {
    let n = p + q;
    let r = p.min(q);
    if r == 0 || dim_v != n - r {
        return Err(Error::HypothesisUnsatisfiable(format!(
            "maximally degenerate subspaces of R^({p},{q}) have dimension {}, requested {dim_v}",
            n - r
        )));
    }
    let mut gram = MatrixQ::zeros(n, n);
    for a in 0..r {
        gram[(a, r + a)] = Scalar::ONE;
        gram[(r + a, a)] = Scalar::ONE;
    }
    let sign = if q >= p { Scalar::ONE } else { Scalar::int(-1) };
    for j in 2 * r..n {
        gram[(j, j)] = sign.clone();
    }
    let meet: Vec<usize> = (2 * r..n).collect();
    let v1 = (0..r).chain(meet.iter().copied()).collect();
    let v2 = (r..2 * r).chain(meet.iter().copied()).collect();
    Ok(Setup {
        n,
        gram,
        v1,
        v2,
        meet,
    })
}

fn idx(n: usize, i: usize, j: usize, k: usize, l: usize) -> usize {
    ((i * n + j) * n + k) * n + l
}

fn insert(e: &mut Echelon, terms: impl IntoIterator<Item = (usize, Scalar)>) {
    let mut acc: BTreeMap<usize, Scalar> = BTreeMap::new();
    for (i, v) in terms {
        *acc.entry(i).or_insert(Scalar::ZERO) += &v;
    }
    let row: SparseRow = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    if !row.is_empty() {
        e.insert(row);
    }
}

/// Dimension of the space of tensors satisfying the symmetries and the
/// selected hypotheses.
pub fn solution_dim(p: usize, q: usize, dim_v: usize, hyp: Hypotheses) -> Result<usize> {
    let s = setup(p, q, dim_v)?;
    let n = s.n;
    let one = Scalar::ONE;
    let mut e = Echelon::new(n.pow(4));
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    // Antisymmetry in the first two slots.
                    if i <= j {
                        insert(
                            &mut e,
                            [
                                (idx(n, i, j, k, l), one.clone()),
                                (idx(n, j, i, k, l), one.clone()),
                            ],
                        );
                    }
                    // First Bianchi identity.
                    insert(
                        &mut e,
                        [
                            (idx(n, i, j, k, l), one.clone()),
                            (idx(n, j, k, i, l), one.clone()),
                            (idx(n, k, i, j, l), one.clone()),
                        ],
                    );
                }
                // ⟨T(i,j,k), m⟩ + ⟨T(i,j,m), k⟩ = 0.
                for m in k..n {
                    let terms = (0..n).flat_map(|l| {
                        [
                            (idx(n, i, j, k, l), s.gram[(l, m)].clone()),
                            (idx(n, i, j, m, l), s.gram[(l, k)].clone()),
                        ]
                    });
                    insert(&mut e, terms);
                }
            }
        }
    }
    if hyp.vanish_on_subspaces {
        for v in [&s.v1, &s.v2] {
            for &i in v {
                for &j in v {
                    for &k in v {
                        for l in 0..n {
                            insert(&mut e, [(idx(n, i, j, k, l), one.clone())]);
                        }
                    }
                }
            }
        }
    }
    if hyp.image_in_intersection {
        for l in (0..n).filter(|l| !s.meet.contains(l)) {
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        insert(&mut e, [(idx(n, i, j, k, l), one.clone())]);
                    }
                }
            }
        }
    }
    Ok(n.pow(4) - e.rank())
}

pub fn two_distributions() -> Report {
    let mut r = Report::new("two-distributions", "-");
    for (p, q) in SIGNATURES {
        let dim_v = p + q - p.min(q);
        let run = |h| solution_dim(p, q, dim_v, h);
        match (
            run(Hypotheses::ALL),
            run(Hypotheses::NO_IMAGE),
            run(Hypotheses::NONE),
        ) {
            (Ok(all), Ok(no_image), Ok(none)) => {
                r.expect_eq(&format!("({p},{q}): T = 0 under the hypotheses"), 0, all);
                r.observe(
                    &format!("({p},{q}): dim without image hypothesis"),
                    no_image,
                );
                r.observe(&format!("({p},{q}): dim of curvature-type tensors"), none);
                let n = p + q;
                r.expect_eq(
                    &format!("({p},{q}): curvature-type dimension n²(n²−1)/12"),
                    n * n * (n * n - 1) / 12,
                    none,
                );
                if p == q {
                    r.assert(
                        &format!("({p},{q}): negative control nonzero"),
                        no_image > 0,
                        || "image hypothesis not needed".into(),
                    );
                }
            }
            (a, b, c) => {
                let err = [a, b, c]
                    .into_iter()
                    .find_map(|x| x.err())
                    .expect("one failed");
                r.assert(&format!("({p},{q})"), false, || err.to_string());
            }
        }
    }
    r
}
