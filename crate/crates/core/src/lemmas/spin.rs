//! Representation-theoretic certificates for the action of `m` on root
//! spaces: commutants, invariant forms, and stabilizers of vectors.

use crate::albert;
use crate::lie::{Family, LieAlgebraQ};
use crate::linear::{MatrixQ, Subspace};
use crate::rep::{commutant, invariant_symmetric_forms};
use crate::report::Report;
use crate::sampling::Sampler;

use super::Context;

/// Seeds tried when looking for a generic vector.
const GENERIC_SEEDS: u64 = 8;

fn action(g: &LieAlgebraQ, m: &Subspace, s: &Subspace) -> Vec<MatrixQ> {
    m.basis_vectors()
        .iter()
        .map(|z| g.restricted_action(z, s).expect("m preserves root spaces"))
        .collect()
}

/// Commutant dimension, invariant form count, and definiteness of the
/// unique invariant form when there is one.
fn certify(r: &mut Report, name: &str, n: usize, ops: &[MatrixQ], commutant_expected: usize) {
    let c = commutant(n, ops).dim();
    r.expect_eq(&format!("{name}: commutant dim"), commutant_expected, c);
    let forms = invariant_symmetric_forms(n, ops);
    r.expect_eq(
        &format!("{name}: invariant symmetric forms"),
        1,
        forms.len(),
    );
    if let [f] = forms.as_slice() {
        let sig = crate::linear::signature(f).expect("symmetric by construction");
        let definite = sig.n_zero == 0 && (sig.n_plus == 0 || sig.n_minus == 0);
        r.assert(
            &format!("{name}: invariant form definite"),
            definite,
            || format!("signature {sig}"),
        );
    }
}

/// Smallest stabilizer `{Z ∈ m : [Z, X] = 0}` over random `X ∈ s`.
fn generic_stabilizer(g: &LieAlgebraQ, m: &Subspace, s: &Subspace, seed: u64) -> usize {
    (0..GENERIC_SEEDS)
        .map(|i| {
            let x = Sampler::new(seed.wrapping_add(i)).nonzero_in_subspace(s);
            g.centralizer(&Subspace::span(g.dim(), &[x]), m).dim()
        })
        .min()
        .expect("at least one seed")
}

pub fn spin_facts(ctx: &Context) -> Report {
    let (g, rd) = (ctx.g, ctx.rd);
    match ctx.family {
        Family::So(k) => {
            let mut r = ctx.report("spin-facts");
            let n = rd.g_minus_a.dim();
            let ops = action(g, &rd.m, &rd.g_minus_a);
            // so(2) on ℝ² commutes with the rotation by a right angle.
            let expected = if k == 3 { 2 } else { 1 };
            certify(&mut r, "m on g_-alpha", n, &ops, expected);
            r
        }
        Family::F4 => {
            let mut r = ctx.report("spin-facts");
            for (name, s) in [
                ("m on g_alpha", &rd.g_plus_a),
                ("m on g_2alpha", &rd.g_plus_2a),
            ] {
                certify(&mut r, name, s.dim(), &action(g, &rd.m, s), 1);
            }
            let stab_a = generic_stabilizer(g, &rd.m, &rd.g_plus_a, ctx.seed);
            let stab_2a = generic_stabilizer(g, &rd.m, &rd.g_plus_2a, ctx.seed);
            r.expect_eq("stabilizer of generic X_alpha (g2)", 14, stab_a);
            r.expect_eq("stabilizer of generic X_2alpha (so(6))", 15, stab_2a);
            match albert::derivation_algebra() {
                Ok(der) => {
                    let j0 = albert::restrict_to_j0(der);
                    r.expect_eq("J_0: commutant dim", 1, j0.commutant_dim);
                    r.assert("J_0: faithful", j0.faithful, || {
                        "restriction has a kernel".into()
                    });
                    r.assert("J_0: irreducible", j0.irreducible, || {
                        "commutant or skewness certificate failed".into()
                    });
                    r.assert(
                        "J_0: invariant form is the trace form",
                        j0.form_is_trace_form,
                        || format!("{} invariant forms", j0.invariant_forms_dim),
                    );
                }
                Err(e) => r.assert("J_0 representation", false, || e.to_string()),
            }
            r
        }
        _ => Report::not_applicable(
            "spin-facts",
            &ctx.family.to_string(),
            "stated for so(1,k) and f4",
        ),
    }
}
