//! One verifier per algebraic claim. Every verifier returns a [`Report`];
//! failures are report entries, never panics.

pub mod abelian;
pub mod distributions;
pub mod normal_form;
pub mod spin;
pub mod structure;
pub mod transversality;

use crate::lie::{Family, LieAlgebraQ, RootDecomposition};
use crate::linear::Subspace;
use crate::report::Report;

/// Inputs shared by the verifiers that act on a decomposed algebra.
pub struct Context<'a> {
    pub family: Family,
    pub g: &'a LieAlgebraQ,
    pub rd: &'a RootDecomposition,
    pub seed: u64,
    pub trials: usize,
}

impl Context<'_> {
    pub fn report(&self, lemma_id: &str) -> Report {
        Report::new(lemma_id, &self.family.to_string())
            .param("seed", self.seed)
            .param("trials", self.trials)
    }
}

/// Records `s == t` as one check.
pub(crate) fn check_equal(r: &mut Report, name: &str, s: &Subspace, t: &Subspace) {
    let ok = s == t;
    r.assert(name, ok, || {
        format!(
            "dimensions {} and {} (equal subspaces required)",
            s.dim(),
            t.dim()
        )
    });
}

/// Records `s ⊆ t` as one check.
pub(crate) fn check_contained(r: &mut Report, name: &str, s: &Subspace, t: &Subspace) {
    let ok = t.contains(s).unwrap_or(false);
    r.assert(name, ok, || {
        format!(
            "subspace of dimension {} not contained in one of dimension {}",
            s.dim(),
            t.dim()
        )
    });
}
