//! Construction and decomposition of each family against independent oracles:
//! textbook dimension formulas, a direct solve of the defining equations, and
//! the Killing form recomputed from root multiplicities.

use rank1::lie::{build_algebra, decompose, Family};
use rank1::linear::{rank, MatrixQ, Scalar};

const CLASSICAL_K: [usize; 3] = [2, 3, 4];

fn classical() -> Vec<Family> {
    CLASSICAL_K
        .iter()
        .flat_map(|&k| [Family::So(k), Family::Su(k), Family::Sp(k)])
        .collect()
}

/// `dim {X ∈ gl(n,ℝ) : XᵀJ + JX = 0}` for `J = diag(−1, 1, …, 1)`, solved directly.
fn so_dim_by_solving(n: usize) -> usize {
    let sign = |i: usize| if i == 0 { -1 } else { 1 };
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i..n {
            // (XᵀJ + JX)_{ij} = X_{ji} J_j + J_i X_{ij}
            let mut row = vec![Scalar::ZERO; n * n];
            row[j * n + i] = &row[j * n + i] + &Scalar::int(sign(j));
            row[i * n + j] = &row[i * n + j] + &Scalar::int(sign(i));
            rows.push(row);
        }
    }
    n * n - rank(&MatrixQ::from_rows(&rows))
}

fn textbook_dim(f: Family) -> usize {
    match f {
        Family::So(k) => k * (k + 1) / 2,
        Family::Su(k) => (k + 1) * (k + 1) - 1,
        Family::Sp(k) => (k + 1) * (2 * k + 3),
        Family::F4 => 52,
    }
}

/// `dim p`: the tangent space of the real hyperbolic space of the family.
fn textbook_dim_p(f: Family) -> usize {
    match f {
        Family::So(k) => k,
        Family::Su(k) => 2 * k,
        Family::Sp(k) => 4 * k,
        Family::F4 => 16,
    }
}

/// `(dim g_α, dim g_2α, dim m)`.
fn textbook_roots(f: Family) -> (usize, usize, usize) {
    match f {
        Family::So(k) => (k - 1, 0, (k - 1) * (k - 2) / 2),
        Family::Su(k) => (2 * (k - 1), 1, (k - 1) * (k - 1)),
        Family::Sp(k) => (4 * (k - 1), 3, 3 + (k - 1) * (2 * k - 1)),
        Family::F4 => (8, 7, 21),
    }
}

#[test]
fn dimensions_match_textbook_formulas() {
    for f in classical().into_iter().chain([Family::F4]) {
        assert_eq!(build_algebra(f).unwrap().dim(), textbook_dim(f), "{f}");
    }
}

#[test]
fn so_dimension_matches_direct_solve() {
    for k in CLASSICAL_K {
        assert_eq!(
            build_algebra(Family::So(k)).unwrap().dim(),
            so_dim_by_solving(k + 1)
        );
    }
}

#[test]
fn killing_signature_is_p_then_k() {
    for f in classical().into_iter().chain([Family::F4]) {
        let g = build_algebra(f).unwrap();
        let s = g.killing().signature();
        let p = textbook_dim_p(f);
        assert_eq!((s.n_plus, s.n_minus, s.n_zero), (p, g.dim() - p, 0), "{f}");
        assert_eq!(
            (g.p_part().dim(), g.k_part().dim()),
            (p, g.dim() - p),
            "{f}"
        );
        assert!(
            g.b_theta_form().unwrap().signature().is_positive_definite(),
            "{f}"
        );
        assert!(g.theta_is_involution() && g.theta_is_automorphism(), "{f}");
    }
}

#[test]
fn f4_killing_signature_is_16_36() {
    let s = build_algebra(Family::F4).unwrap().killing().signature();
    assert_eq!((s.n_plus, s.n_minus), (16, 36));
}

#[test]
fn root_tables_match() {
    for f in classical().into_iter().chain([Family::F4]) {
        let g = build_algebra(f).unwrap();
        let rd = decompose(f, &g).unwrap();
        let d = rd.dims();
        let (ga, g2a, m) = textbook_roots(f);
        assert_eq!((d.a, d.g_alpha, d.g_2alpha, d.m), (1, ga, g2a, m), "{f}");
        assert_eq!(rd.g_minus_a.dim(), ga, "{f}");
        assert_eq!(rd.g_minus_2a.dim(), g2a, "{f}");
        assert_eq!(1 + m + 2 * ga + 2 * g2a, g.dim(), "{f}");
    }
}

#[test]
fn m1_matches_2alpha_for_su_and_sp() {
    for k in CLASSICAL_K {
        for f in [Family::Su(k), Family::Sp(k)] {
            let rd = decompose(f, &build_algebra(f).unwrap()).unwrap();
            assert_eq!(rd.m1.dim(), rd.g_plus_2a.dim(), "{f}");
            assert_eq!(rd.m1.dim() + rd.m2.dim(), rd.m.dim(), "{f}");
        }
    }
}

/// `B(H,H) = tr(ad H)² = Σ_λ dim g_λ · λ(H)²` with `α(H) = 1`.
#[test]
fn killing_of_h_matches_root_multiplicities() {
    for f in classical().into_iter().chain([Family::F4]) {
        let rd = decompose(f, &build_algebra(f).unwrap()).unwrap();
        let (ga, g2a, _) = textbook_roots(f);
        let expected = Scalar::int(2 * (ga as i64 + 4 * g2a as i64));
        assert_eq!(rd.killing_hh, expected, "{f}");
        assert_eq!(rd.root_length_sq(1), expected.recip(), "{f}");
    }
}

#[test]
fn measured_killing_values() {
    let cases = [
        (Family::Su(2), 12),
        (Family::Su(3), 16),
        (Family::Su(4), 20),
        (Family::Sp(2), 32),
        (Family::Sp(3), 40),
        (Family::Sp(4), 48),
        (Family::F4, 72),
    ];
    for (f, b) in cases {
        let rd = decompose(f, &build_algebra(f).unwrap()).unwrap();
        assert_eq!(rd.killing_hh, Scalar::int(b), "{f}");
    }
}

#[test]
fn unsupported_and_malformed_specs_are_rejected() {
    for s in ["so(1,1)", "su(2,3)", "g2", "sp(1,)", ""] {
        assert!(s.parse::<Family>().is_err(), "{s:?}");
    }
    assert_eq!("SU(1, 3)".parse::<Family>().unwrap(), Family::Su(3));
    assert_eq!("f4".parse::<Family>().unwrap(), Family::F4);
}
