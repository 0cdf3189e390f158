//! Abelian subspaces of `g_{−α}`.
//!
//! The bracket `g_{−α} ∧ g_{−α} → g_{−2α}` bounds abelian subspaces: a
//! nondegenerate component of the pairing is a symplectic form, whose
//! isotropic subspaces have at most half its rank.

use crate::lie::{Family, LieAlgebraQ};
use crate::linear::{rank, MatrixQ, Scalar, Subspace};
use crate::report::Report;
use crate::sampling::Sampler;

use super::Context;

/// Abelian subspace of `space` built greedily: repeatedly adjoin the first
/// basis vector of the centralizer of the current subspace that is not
/// already in it.
pub fn greedy_abelian(g: &LieAlgebraQ, space: &Subspace) -> Subspace {
    let mut v = Subspace::zero(g.dim());
    loop {
        let c = g.centralizer(&v, space);
        let Some(next) = c
            .basis_vectors()
            .into_iter()
            .find(|b| !v.contains_vector(b))
        else {
            return v;
        };
        v = v
            .sum(&Subspace::span(g.dim(), &[next]))
            .expect("same ambient");
    }
}

/// Gram matrix of `(x, y) ↦` coordinate `j` of `[x, y]` in the stored basis
/// of `target`.
pub fn pairing_component(
    g: &LieAlgebraQ,
    space: &Subspace,
    target: &Subspace,
    j: usize,
) -> MatrixQ {
    let b = space.basis_vectors();
    let n = b.len();
    let mut m = MatrixQ::zeros(n, n);
    for i in 0..n {
        for k in i + 1..n {
            let c = target
                .coordinates(&g.bracket(&b[i], &b[k]))
                .expect("grading");
            m[(i, k)] = c[j].clone();
            m[(k, i)] = -&c[j];
        }
    }
    m
}

/// Dimension of `{y ∈ space : [x, y] = 0}`.
fn kernel_dim(g: &LieAlgebraQ, x: &[Scalar], space: &Subspace) -> usize {
    g.centralizer(&Subspace::span(g.dim(), &[x.to_vec()]), space)
        .dim()
}

pub fn abelian_bounds(ctx: &Context) -> Report {
    let (g, rd) = (ctx.g, ctx.rd);
    let stated = match ctx.family {
        Family::Su(k) => k - 1,
        Family::Sp(k) => 2 * (k - 1),
        Family::F4 => 1,
        Family::So(_) => {
            return Report::not_applicable(
                "abelian-bounds",
                &ctx.family.to_string(),
                "no 2alpha root space",
            );
        }
    };
    let mut r = ctx.report("abelian-bounds");
    r.observe("stated bound", stated);

    let witness = greedy_abelian(g, &rd.g_minus_a);
    let basis = witness.basis_vectors();
    let abelian = basis.iter().all(|a| {
        basis
            .iter()
            .all(|b| g.bracket(a, b).iter().all(Scalar::is_zero))
    });
    r.assert("witness abelian", abelian, || "[V, V] ≠ 0".into());
    r.observe("maximal abelian dim found", witness.dim());
    r.expect_eq("witness: dim equals stated bound", stated, witness.dim());
    r.assert("witness within bound", witness.dim() <= stated, || {
        format!("abelian subspace of dim {} exceeds {stated}", witness.dim())
    });

    let ga = rd.g_minus_a.dim();
    match ctx.family {
        Family::Su(_) => {
            let rk = rank(&pairing_component(g, &rd.g_minus_a, &rd.g_minus_2a, 0));
            r.expect_eq("pairing rank 2(k-1)", ga, rk);
        }
        Family::Sp(_) => {
            for j in 0..rd.g_minus_2a.dim() {
                let rk = rank(&pairing_component(g, &rd.g_minus_a, &rd.g_minus_2a, j));
                r.expect_eq(&format!("component {j} rank 4(k-1)"), ga, rk);
            }
        }
        Family::F4 => {
            let mut s = Sampler::new(ctx.seed);
            let samples = 50;
            r.trials = samples;
            for _ in 0..samples {
                let x = s.nonzero_in_subspace(&rd.g_minus_a);
                let d = kernel_dim(g, &x, &rd.g_minus_a);
                r.check(
                    "kernel of ad X on g_-alpha is span X",
                    d == 1,
                    || vec![x.clone()],
                    || format!("kernel dimension {d}"),
                );
            }
        }
        Family::So(_) => unreachable!(),
    }
    r
}
