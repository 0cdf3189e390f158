//! The verification catalog on each family. Checks known not to hold as
//! stated are named explicitly; every other check must pass.

use rank1::catalog::{run, run_many, Lemma};
use rank1::einstein;
use rank1::lemmas::abelian::greedy_abelian;
use rank1::lemmas::distributions::{solution_dim, Hypotheses};
use rank1::lemmas::normal_form::hyperbolic_normal_form;
use rank1::lie::{build_algebra, decompose, Family};
use rank1::linear::{Scalar, Subspace};
use rank1::report::Report;
use rank1::sampling::Sampler;
use rank1::Error;

const TRIALS: usize = 30;

/// Checks that fail because the claim is false as stated (see README).
fn known_false(family: Family, lemma: Lemma, check: &str) -> bool {
    match (family, lemma) {
        (Family::Su(_), Lemma::BracketIdentities) => check.starts_with("m1:"),
        (Family::Sp(_), Lemma::AbelianBounds) => check == "witness: dim equals stated bound",
        _ => false,
    }
}

fn assert_catalog(family: Family) {
    for r in run_many(family, &Lemma::ALL, 0, TRIALS).unwrap() {
        let lemma: Lemma = r.lemma_id.parse().unwrap();
        let unexpected: Vec<_> = r
            .failures
            .iter()
            .filter(|f| !known_false(family, lemma, &f.check))
            .collect();
        assert!(unexpected.is_empty(), "{family} {lemma}: {r}");
    }
}

#[test]
fn catalog_so() {
    for k in [2, 3, 4] {
        assert_catalog(Family::So(k));
    }
}

#[test]
fn catalog_su() {
    for k in [2, 3, 4] {
        assert_catalog(Family::Su(k));
    }
}

#[test]
fn catalog_sp() {
    for k in [2, 3] {
        assert_catalog(Family::Sp(k));
    }
}

#[test]
fn catalog_f4() {
    assert_catalog(Family::F4);
}

#[test]
fn su_m1_failures_are_dimensional() {
    let r = run(Family::Su(3), Lemma::BracketIdentities, 0, TRIALS).unwrap();
    let names: Vec<&str> = r.failures.iter().map(|f| f.check.as_str()).collect();
    assert_eq!(
        names,
        [
            "m1: [m1, g_-2alpha] = g_-2alpha",
            "m1: [g_2alpha, g_-2alpha] = a + m1"
        ]
    );
}

/// In `sp(1,k)` the three components of the pairing are `⟨iX,Y⟩, ⟨jX,Y⟩,
/// ⟨kX,Y⟩`, so an abelian `V` has `V, iV, jV, kV` mutually orthogonal and
/// `dim V ≤ k − 1`. For `k = 2` every nonzero `X` has centralizer `ℝX`.
#[test]
fn sp12_abelian_subspaces_are_lines() {
    let f = Family::Sp(2);
    let g = build_algebra(f).unwrap();
    let rd = decompose(f, &g).unwrap();
    let mut s = Sampler::new(11);
    for _ in 0..50 {
        let x = s.nonzero_in_subspace(&rd.g_minus_a);
        let c = g.centralizer(&Subspace::span(g.dim(), &[x]), &rd.g_minus_a);
        assert_eq!(c.dim(), 1);
    }
    assert_eq!(greedy_abelian(&g, &rd.g_minus_a).dim(), 1);
}

#[test]
fn greedy_witness_reaches_su_bound() {
    for k in [2, 3, 4] {
        let f = Family::Su(k);
        let g = build_algebra(f).unwrap();
        let rd = decompose(f, &g).unwrap();
        let v = greedy_abelian(&g, &rd.g_minus_a);
        assert_eq!(v.dim(), k - 1);
        assert!(g.bracket_span(&v, &v).is_zero());
    }
}

#[test]
fn transversality_quoted_sign_never_holds() {
    let r = run(Family::Sp(3), Lemma::Transversality, 5, TRIALS).unwrap();
    assert!(r.passed(), "{r}");
    let get = |k: &str| {
        r.observations
            .iter()
            .find(|(n, _)| n == k)
            .map(|(_, v)| v.clone())
            .unwrap()
    };
    assert_eq!(
        get("lambda=2alpha: corrected sign holds"),
        format!("{TRIALS}/{TRIALS}")
    );
    assert_eq!(
        get("lambda=2alpha: quoted sign holds"),
        format!("0/{TRIALS}")
    );
}

#[test]
fn zero_trials_is_vacuous() {
    let r = run(Family::Su(2), Lemma::Transversality, 0, 0).unwrap();
    assert!(r.passed());
    assert_eq!((r.trials, r.passes), (0, 0));
}

#[test]
fn reports_are_deterministic() {
    let a = run_many(Family::Su(3), &Lemma::ALL, 9, 10).unwrap();
    let b = run_many(Family::Su(3), &Lemma::ALL, 9, 10).unwrap();
    assert_eq!(a, b);
    let order: Vec<String> = a.iter().map(|r| r.lemma_id.clone()).collect();
    let expected: Vec<String> = Lemma::ALL.iter().map(|l| l.id().to_string()).collect();
    assert_eq!(order, expected);
}

#[test]
fn lemma_ids_round_trip() {
    for l in Lemma::ALL {
        assert_eq!(l.id().parse::<Lemma>().unwrap(), l);
    }
    assert!(matches!("bogus".parse::<Lemma>(), Err(Error::Parse(_))));
}

#[test]
fn two_distributions_values() {
    assert_eq!(solution_dim(1, 2, 2, Hypotheses::ALL).unwrap(), 0);
    assert_eq!(solution_dim(2, 2, 2, Hypotheses::ALL).unwrap(), 0);
    assert!(solution_dim(2, 2, 2, Hypotheses::NO_IMAGE).unwrap() > 0);
    // Curvature-type tensors: n²(n²−1)/12.
    assert_eq!(solution_dim(2, 2, 2, Hypotheses::NONE).unwrap(), 20);
    assert!(matches!(
        solution_dim(1, 2, 1, Hypotheses::ALL),
        Err(Error::HypothesisUnsatisfiable(_))
    ));
    assert!(matches!(
        solution_dim(0, 3, 3, Hypotheses::ALL),
        Err(Error::HypothesisUnsatisfiable(_))
    ));
}

#[test]
fn normal_form_rejects_bad_parameters() {
    assert!(hyperbolic_normal_form(3, 2, &Scalar::ONE, 0).is_err());
    assert!(hyperbolic_normal_form(1, 2, &Scalar::ZERO, 0).is_err());
    let r: Report = hyperbolic_normal_form(2, 3, &Scalar::new(-3, 2), 4).unwrap();
    assert!(r.passed(), "{r}");
}

#[test]
fn orbit_dimensions() {
    for (f, d) in [
        (Family::So(4), 3),
        (Family::Su(2), 4),
        (Family::Su(3), 6),
        (Family::Sp(2), 10),
        (Family::Sp(3), 14),
    ] {
        let g = build_algebra(f).unwrap();
        let rd = decompose(f, &g).unwrap();
        let e = einstein::build_embedding(f, &g).unwrap();
        let iso = einstein::null_isotropy(&e, &rd).unwrap();
        assert_eq!(iso.orbit_dim, d, "{f}");
        assert_eq!(g.dim() - iso.stabilizer.dim(), d, "{f}");
        let (p, q) = einstein::expected_ambient_signature(f);
        assert_eq!(d, p + q - 2, "{f}");
    }
}
