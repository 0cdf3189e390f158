//! The root-space table and the bracket identities between root spaces.

use crate::lie::roots::check_grading;
use crate::lie::Family;
use crate::linear::{vec_scale, Scalar, Subspace};
use crate::report::Report;

use super::{check_contained, check_equal, Context};

/// Tabulated dimensions; `m1`, `m2` are `None` where no splitting is claimed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ExpectedDims {
    pub m: usize,
    pub m1: Option<usize>,
    pub m2: Option<usize>,
    pub g_alpha: usize,
    pub g_2alpha: usize,
}

pub fn expected_dims(family: Family) -> ExpectedDims {
    match family {
        Family::So(k) => ExpectedDims {
            m: (k - 1) * (k - 2) / 2,
            m1: None,
            m2: None,
            g_alpha: k - 1,
            g_2alpha: 0,
        },
        Family::Su(k) => ExpectedDims {
            m: (k - 1) * (k - 1),
            m1: Some(1),
            m2: Some(k * k - 2 * k),
            g_alpha: 2 * (k - 1),
            g_2alpha: 1,
        },
        Family::Sp(k) => {
            let sp = (k - 1) * (2 * k - 1);
            ExpectedDims {
                m: 3 + sp,
                m1: Some(3),
                m2: Some(sp),
                g_alpha: 4 * (k - 1),
                g_2alpha: 3,
            }
        }
        Family::F4 => ExpectedDims {
            m: 21,
            m1: None,
            m2: None,
            g_alpha: 8,
            g_2alpha: 7,
        },
    }
}

/// Dimension table, the `m = m1 ⊕ m2` splitting, and the structural
/// invariants of the grading.
pub fn root_table(ctx: &Context) -> Report {
    let (g, rd) = (ctx.g, ctx.rd);
    let mut r = ctx.report("root-table");
    let d = rd.dims();
    let e = expected_dims(ctx.family);
    r.expect_eq("dim a", 1, d.a);
    r.expect_eq("dim m", e.m, d.m);
    r.expect_eq("dim g_alpha", e.g_alpha, d.g_alpha);
    r.expect_eq("dim g_2alpha", e.g_2alpha, d.g_2alpha);
    r.expect_eq("dim g_-alpha", d.g_alpha, rd.g_minus_a.dim());
    r.expect_eq("dim g_-2alpha", d.g_2alpha, rd.g_minus_2a.dim());
    if let Some(m1) = e.m1 {
        r.expect_eq("dim m1", m1, d.m1);
        r.expect_eq("dim m1 = dim g_2alpha", d.g_2alpha, d.m1);
    }
    if let Some(m2) = e.m2 {
        r.expect_eq("dim m2", m2, d.m2);
    }
    r.observe("dims", format!("{d:?}"));
    r.observe("B(H,H)", &rd.killing_hh);
    r.observe("|alpha|^2", rd.root_length_sq(1));

    r.expect_eq(
        "dimension sum",
        g.dim(),
        d.a + d.m + 2 * d.g_alpha + 2 * d.g_2alpha,
    );
    check_equal(
        &mut r,
        "g0 = a + m",
        &rd.g0,
        &rd.a.sum(&rd.m).expect("same ambient"),
    );

    if ctx.family.is_classical() && rd.has_2alpha() {
        r.expect_eq(
            "m1 ∩ m2 = 0",
            0,
            rd.m1.intersection(&rd.m2).expect("same ambient").dim(),
        );
        check_equal(
            &mut r,
            "m1 + m2 = m",
            &rd.m1.sum(&rd.m2).expect("same ambient"),
            &rd.m,
        );
        r.assert(
            "[m1, m2] = 0",
            g.bracket_span(&rd.m1, &rd.m2).is_zero(),
            || "m1 and m2 do not commute".into(),
        );
        check_contained(
            &mut r,
            "[m1, m1] ⊆ m1",
            &g.bracket_span(&rd.m1, &rd.m1),
            &rd.m1,
        );
        check_contained(
            &mut r,
            "[m2, m2] ⊆ m2",
            &g.bracket_span(&rd.m2, &rd.m2),
            &rd.m2,
        );
        let m1_derived = g.bracket_span(&rd.m1, &rd.m1).dim();
        match ctx.family {
            // u(1) is abelian, sp(1) is simple.
            Family::Su(_) => r.expect_eq("m1 abelian", 0, m1_derived),
            _ => r.expect_eq("m1 perfect", d.m1, m1_derived),
        }
    }

    // ad H acts by the eigenvalue on each space.
    for l in -2..=2 {
        let s = rd.space(l);
        let ok = s
            .basis_vectors()
            .iter()
            .all(|v| g.bracket(&rd.h, v) == vec_scale(v, &Scalar::int(l.into())));
        r.assert(&format!("ad H = {l} on g_{l}alpha"), ok, || {
            "eigenvalue mismatch".into()
        });
    }
    r.assert("grading", check_grading(g, rd).is_ok(), || {
        "[g_l, g_m] not in g_(l+m)".into()
    });

    // θ swaps opposite root spaces and fixes m and a.
    for l in [1, 2] {
        let img = rd.space(l).image(g.theta());
        check_equal(
            &mut r,
            &format!("theta(g_{l}alpha) = g_-{l}alpha"),
            &img,
            &rd.space(-l),
        );
    }
    check_equal(&mut r, "theta(m) = m", &rd.m.image(g.theta()), &rd.m);
    check_equal(&mut r, "theta(a) = a", &rd.a.image(g.theta()), &rd.a);

    // B(g_λ, g_μ) = 0 unless λ + μ = 0.
    for l in -2..=2 {
        for mu in l..=2 {
            if l + mu == 0 {
                continue;
            }
            let (s, t) = (rd.space(l), rd.space(mu));
            let tb = t.basis_vectors();
            let ok = s
                .basis_vectors()
                .iter()
                .all(|u| tb.iter().all(|w| g.killing_value(u, w).is_zero()));
            r.assert(&format!("B(g_{l}alpha, g_{mu}alpha) = 0"), ok, || {
                "nonzero Killing pairing".into()
            });
        }
    }
    for l in -2..=2 {
        let s = rd.space(l);
        check_contained(
            &mut r,
            &format!("[m, g_{l}alpha] ⊆ g_{l}alpha"),
            &g.bracket_span(&rd.m, &s),
            &s,
        );
    }

    let kill = g.killing().signature();
    let (p, k) = (g.p_part().dim(), g.k_part().dim());
    r.expect_eq(
        "Killing signature (dim p, dim k, 0)",
        (p, k, 0),
        kill.as_tuple(),
    );
    r.observe("Killing signature", kill);
    match g.b_theta_form() {
        Ok(bt) => r.expect_eq(
            "B_theta positive definite",
            (g.dim(), 0, 0),
            bt.signature().as_tuple(),
        ),
        Err(e) => r.assert("B_theta positive definite", false, || e.to_string()),
    }
    r
}

/// Subspace identities between bracket spaces.
pub fn bracket_identities(ctx: &Context) -> Report {
    let (g, rd) = (ctx.g, ctx.rd);
    let mut r = ctx.report("bracket-identities");
    let br = |s: &Subspace, t: &Subspace| g.bracket_span(s, t);
    let sum = |s: &Subspace, t: &Subspace| s.sum(t).expect("same ambient");

    for l in [-2, -1, 1, 2] {
        let s = rd.space(l);
        if !s.is_zero() {
            check_equal(
                &mut r,
                &format!("[a, g_{l}alpha] = g_{l}alpha"),
                &br(&rd.a, &s),
                &s,
            );
        }
    }
    r.assert("grading", check_grading(g, rd).is_ok(), || {
        "[g_l, g_m] not in g_(l+m)".into()
    });

    let top = br(&rd.g_plus_2a, &rd.g_minus_2a);
    let middle = br(&rd.g_plus_a, &rd.g_minus_a);
    r.observe("dim [g_2alpha, g_-2alpha]", top.dim());
    r.observe("dim [g_alpha, g_-alpha]", middle.dim());

    if !rd.has_2alpha() {
        check_equal(&mut r, "[g_alpha, g_-alpha] = g0", &middle, &rd.g0);
        return r;
    }
    check_contained(&mut r, "a ⊆ [g_2alpha, g_-2alpha]", &rd.a, &top);
    check_equal(
        &mut r,
        "g_-alpha = [g_alpha, g_-2alpha]",
        &br(&rd.g_plus_a, &rd.g_minus_2a),
        &rd.g_minus_a,
    );
    check_equal(
        &mut r,
        "g_alpha = [g_-alpha, g_2alpha]",
        &br(&rd.g_minus_a, &rd.g_plus_2a),
        &rd.g_plus_a,
    );
    check_equal(
        &mut r,
        "g_2alpha = [g_alpha, g_alpha]",
        &br(&rd.g_plus_a, &rd.g_plus_a),
        &rd.g_plus_2a,
    );
    match ctx.family {
        Family::F4 => {
            check_equal(&mut r, "[g_2alpha, g_-2alpha] = g0", &top, &rd.g0);
            check_equal(&mut r, "[g_alpha, g_-alpha] = g0", &middle, &rd.g0);
        }
        _ => {
            check_equal(
                &mut r,
                "m1: [m1, g_-2alpha] = g_-2alpha",
                &br(&rd.m1, &rd.g_minus_2a),
                &rd.g_minus_2a,
            );
            check_contained(&mut r, "m1: m1 ⊆ [g_alpha, g_-alpha]", &rd.m1, &middle);
            check_equal(
                &mut r,
                "m1: [g_2alpha, g_-2alpha] = a + m1",
                &top,
                &sum(&rd.a, &rd.m1),
            );
            r.observe("dim [m1, g_-2alpha]", br(&rd.m1, &rd.g_minus_2a).dim());
        }
    }
    r
}
