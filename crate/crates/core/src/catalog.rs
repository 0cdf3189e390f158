//! The verification catalog: every lemma id, and how to run it for a family.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::albert;
use crate::einstein;
use crate::error::{Error, Result};
use crate::lemmas::{
    abelian, distributions, normal_form, spin, structure, transversality, Context,
};
use crate::lie::{build_algebra, decompose, Family};
use crate::linear::signature;
use crate::report::Report;

/// Cap on the hyperbolic normal form instances per signature.
pub const NORMAL_FORM_INSTANCES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Lemma {
    Transversality,
    M1Identity,
    AbelianBounds,
    SignatureJ0,
    DerivationDim,
    RootTable,
    BracketIdentities,
    SpinFacts,
    HyperbolicNormalForm,
    TwoDistributions,
    EmbeddingSignature,
    NullIsotropy,
    OrbitDims,
}

impl Lemma {
    /// Every lemma, in report order.
    pub const ALL: [Lemma; 13] = [
        Lemma::Transversality,
        Lemma::M1Identity,
        Lemma::AbelianBounds,
        Lemma::SignatureJ0,
        Lemma::DerivationDim,
        Lemma::RootTable,
        Lemma::BracketIdentities,
        Lemma::SpinFacts,
        Lemma::HyperbolicNormalForm,
        Lemma::TwoDistributions,
        Lemma::EmbeddingSignature,
        Lemma::NullIsotropy,
        Lemma::OrbitDims,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            Lemma::Transversality => "transversality",
            Lemma::M1Identity => "m1-identity",
            Lemma::AbelianBounds => "abelian-bounds",
            Lemma::SignatureJ0 => "signature-J0",
            Lemma::DerivationDim => "derivation-dim",
            Lemma::RootTable => "root-table",
            Lemma::BracketIdentities => "bracket-identities",
            Lemma::SpinFacts => "spin-facts",
            Lemma::HyperbolicNormalForm => "hyperbolic-normal-form",
            Lemma::TwoDistributions => "two-distributions",
            Lemma::EmbeddingSignature => "embedding-signature",
            Lemma::NullIsotropy => "null-isotropy",
            Lemma::OrbitDims => "orbit-dims",
        }
    }

    /// Whether the lemma needs the algebra and its root decomposition.
    fn needs_decomposition(&self) -> bool {
        !matches!(
            self,
            Lemma::SignatureJ0
                | Lemma::DerivationDim
                | Lemma::HyperbolicNormalForm
                | Lemma::TwoDistributions
        )
    }
}

impl fmt::Display for Lemma {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Lemma {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Lemma::ALL
            .into_iter()
            .find(|l| l.id().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown lemma {s:?}")))
    }
}

fn signature_j0(family: Family) -> Report {
    if family != Family::F4 {
        return Report::not_applicable("signature-J0", &family.to_string(), "J_0 belongs to f4");
    }
    let mut r = Report::new("signature-J0", "f4");
    match (signature(&albert::j0_gram()), signature(&albert::gram())) {
        (Ok(j0), Ok(full)) => {
            r.observe("q on J_0", j0);
            r.observe("q on J", full);
            r.expect_eq("q on J_0 signature", (10, 16, 0), j0.as_tuple());
            r.expect_eq("q on J signature", (11, 16, 0), full.as_tuple());
        }
        (a, b) => r.assert("signatures", false, || format!("{a:?} {b:?}")),
    }
    r
}

fn derivation_dim(family: Family) -> Report {
    if family != Family::F4 {
        return Report::not_applicable(
            "derivation-dim",
            &family.to_string(),
            "derivations of the Albert algebra give f4",
        );
    }
    let mut r = Report::new("derivation-dim", "f4");
    let der = match albert::derivation_algebra() {
        Ok(d) => d,
        Err(e) => {
            r.assert("derivation algebra", false, || e.to_string());
            return r;
        }
    };
    r.expect_eq("dimension", albert::DER_DIM, der.dim);
    r.observe("constraint rank", der.constraint_rank);
    let gram = albert::gram();
    let all = |f: &(dyn Fn(&crate::linear::MatrixQ) -> bool + Sync)| der.basis.par_iter().all(f);
    r.assert(
        "each basis element is a derivation",
        all(&albert::is_derivation),
        || "Leibniz rule fails".into(),
    );
    r.assert(
        "each basis element is q-skew",
        all(&|d| albert::is_q_skew(d, &gram)),
        || "not skew".into(),
    );
    r.assert(
        "each basis element preserves J_0",
        all(&albert::preserves_j0),
        || "J_0 not preserved".into(),
    );
    r.assert(
        "each basis element kills the identity",
        all(&albert::kills_identity),
        || "D(I) ≠ 0".into(),
    );
    let closed = (0..der.dim).into_par_iter().all(|i| {
        (i + 1..der.dim).all(|j| albert::is_derivation(&der.basis[i].commutator(&der.basis[j])))
    });
    r.assert("commutators are derivations", closed, || {
        "closure fails".into()
    });
    match build_algebra(Family::F4) {
        Ok(g) => {
            r.assert("antisymmetric", g.is_antisymmetric(), || {
                "structure constants not antisymmetric".into()
            });
            r.assert("Jacobi", g.jacobi_holds(), || "Jacobi fails".into());
        }
        Err(e) => r.assert("algebra", false, || e.to_string()),
    }
    let j0 = albert::restrict_to_j0(der);
    r.assert("J_0 representation faithful", j0.faithful, || {
        "kernel".into()
    });
    r.assert("J_0 representation irreducible", j0.irreducible, || {
        format!("commutant dim {}", j0.commutant_dim)
    });
    r
}

/// Runs one lemma for `family`.
pub fn run(family: Family, lemma: Lemma, seed: u64, trials: usize) -> Result<Report> {
    let report = match lemma {
        Lemma::SignatureJ0 => signature_j0(family),
        Lemma::DerivationDim => derivation_dim(family),
        Lemma::HyperbolicNormalForm => {
            normal_form::hyperbolic_suite(seed, trials.min(NORMAL_FORM_INSTANCES))
        }
        Lemma::TwoDistributions => distributions::two_distributions(),
        _ => {
            debug_assert!(lemma.needs_decomposition());
            let g = build_algebra(family)?;
            let rd = decompose(family, &g)?;
            let ctx = Context {
                family,
                g: &g,
                rd: &rd,
                seed,
                trials,
            };
            match lemma {
                Lemma::Transversality => transversality::transversality(&ctx),
                Lemma::M1Identity => transversality::m1_identity(&ctx),
                Lemma::AbelianBounds => abelian::abelian_bounds(&ctx),
                Lemma::RootTable => structure::root_table(&ctx),
                Lemma::BracketIdentities => structure::bracket_identities(&ctx),
                Lemma::SpinFacts => spin::spin_facts(&ctx),
                Lemma::EmbeddingSignature => einstein::embedding_signature(&ctx),
                Lemma::NullIsotropy => einstein::null_isotropy_report(&ctx),
                Lemma::OrbitDims => einstein::orbit_dims(&ctx),
                _ => unreachable!(),
            }
        }
    };
    Ok(report)
}

/// Runs `lemmas` in parallel; results come back in the order given.
pub fn run_many(family: Family, lemmas: &[Lemma], seed: u64, trials: usize) -> Result<Vec<Report>> {
    if lemmas.iter().any(Lemma::needs_decomposition) {
        // Build once up front so parallel runs share the cached algebra.
        build_algebra(family)?;
    }
    lemmas
        .par_iter()
        .map(|&l| run(family, l, seed, trials))
        .collect()
}
