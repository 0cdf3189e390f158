//! Restricted root-space decomposition for rank-one algebras.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lie::algebra::LieAlgebraQ;
use crate::lie::families::{designated_h0, Family};
use crate::linear::eigen::rational_spectrum;
use crate::linear::{vec_add, vec_scale, vec_sub, Scalar, Subspace};
use crate::sampling::Sampler;

/// Seed for the probe vectors used to find minimal polynomials.
const PROBE_SEED: u64 = 0x0005_eed0_0001;

#[derive(Clone, Debug, Serialize)]
pub struct RootDecomposition {
    /// `H` spanning `a`, normalized so that `α(H) = 1`.
    pub h: Vec<Scalar>,
    pub a: Subspace,
    pub m: Subspace,
    pub m1: Subspace,
    pub m2: Subspace,
    pub g0: Subspace,
    pub g_plus_a: Subspace,
    pub g_minus_a: Subspace,
    pub g_plus_2a: Subspace,
    pub g_minus_2a: Subspace,
    /// `B(H, H)`.
    pub killing_hh: Scalar,
}

impl RootDecomposition {
    /// `g_{λα}` for `λ ∈ {−2, …, 2}`; zero subspace outside that range.
    pub fn space(&self, lambda: i32) -> Subspace {
        match lambda {
            -2 => self.g_minus_2a.clone(),
            -1 => self.g_minus_a.clone(),
            0 => self.g0.clone(),
            1 => self.g_plus_a.clone(),
            2 => self.g_plus_2a.clone(),
            _ => Subspace::zero(self.h.len()),
        }
    }

    pub fn has_2alpha(&self) -> bool {
        !self.g_plus_2a.is_zero()
    }

    /// `|λ|² = λ(H)² / B(H, H)` for `λ = c·α`.
    pub fn root_length_sq(&self, c: i64) -> Scalar {
        &Scalar::int(c * c) / &self.killing_hh
    }

    /// Killing dual `H_λ = λ(H)/B(H,H) · H` of `λ = c·α`.
    pub fn h_dual(&self, c: i64) -> Vec<Scalar> {
        vec_scale(&self.h, &(&Scalar::int(c) / &self.killing_hh))
    }

    pub fn dims(&self) -> RootDims {
        RootDims {
            a: self.a.dim(),
            m: self.m.dim(),
            m1: self.m1.dim(),
            m2: self.m2.dim(),
            g_alpha: self.g_plus_a.dim(),
            g_2alpha: self.g_plus_2a.dim(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RootDims {
    pub a: usize,
    pub m: usize,
    pub m1: usize,
    pub m2: usize,
    pub g_alpha: usize,
    pub g_2alpha: usize,
}

fn probes(n: usize) -> Vec<Vec<Scalar>> {
    let mut s = Sampler::new(PROBE_SEED);
    (0..2).map(|_| s.nonzero_vector(n)).collect()
}

/// Eigenvalues of `ad x` when it is diagonalizable over ℚ.
fn ad_spectrum(g: &LieAlgebraQ, x: &[Scalar]) -> Option<Vec<(Scalar, Subspace)>> {
    rational_spectrum(&g.ad(x), &probes(g.dim()))
}

/// Decomposition along `h0 ∈ p`.
pub fn root_decomposition(g: &LieAlgebraQ, h0: &[Scalar]) -> Result<RootDecomposition> {
    let n = g.dim();
    if g.apply_theta(h0) != vec_scale(h0, &Scalar::int(-1)) {
        return Err(Error::DegenerateInput("H0 is not in p".into()));
    }
    let spectrum = ad_spectrum(g, h0).ok_or_else(|| {
        Error::DegenerateInput("ad H0 is not diagonalizable over the rationals".into())
    })?;
    let c = spectrum
        .iter()
        .map(|(l, _)| l.clone())
        .filter(|l| l.signum() > 0)
        .min()
        .ok_or_else(|| Error::DegenerateInput("ad H0 has no positive eigenvalue".into()))?;
    let h = vec_scale(h0, &c.recip());
    let mut spaces: [Subspace; 5] = std::array::from_fn(|_| Subspace::zero(n));
    for (l, s) in &spectrum {
        let r = l / &c;
        let idx = (-2..=2).find(|&i| r == Scalar::int(i)).ok_or_else(|| {
            Error::GradingViolation(format!("eigenvalue {r} of ad H outside {{0, ±1, ±2}}"))
        })?;
        spaces[(idx + 2) as usize] = s.clone();
    }
    let [g_minus_2a, g_minus_a, g0, g_plus_a, g_plus_2a] = spaces;
    let k = g.k_part();
    let p = g.p_part();
    let g0p = g0.intersection(&p)?;
    if g0p.dim() != 1 {
        return Err(Error::NotRankOne(g0p.dim()));
    }
    let a = Subspace::span(n, std::slice::from_ref(&h));
    let m = g0.intersection(&k)?;
    // `k ∩ [g_{−2α}, g_{2α}]` alone is zero for su(1,k), where that bracket is
    // exactly `a`; its `u(1)` factor is the centre of `m`.
    let mut m1 = k.intersection(&g.bracket_span(&g_minus_2a, &g_plus_2a))?;
    let mut m2 = g.centralizer(&m1, &m);
    if !g_plus_2a.is_zero() {
        m1 = m1.sum(&g.centralizer(&m, &m))?;
        m2 = g
            .centralizer(&m1, &m)
            .intersection(&g.bracket_span(&m, &m))?;
    }
    let killing_hh = g.killing_value(&h, &h);
    let rd = RootDecomposition {
        h,
        a,
        m,
        m1,
        m2,
        g0,
        g_plus_a,
        g_minus_a,
        g_plus_2a,
        g_minus_2a,
        killing_hh,
    };
    check_grading(g, &rd)?;
    Ok(rd)
}

/// `[g_λ, g_μ] ⊆ g_{λ+μ}` for all `λ, μ`.
pub fn check_grading(g: &LieAlgebraQ, rd: &RootDecomposition) -> Result<()> {
    for l in -2..=2 {
        for mu in l..=2 {
            let br = g.bracket_span(&rd.space(l), &rd.space(mu));
            if !rd.space(l + mu).contains(&br)? {
                return Err(Error::GradingViolation(format!(
                    "[g_{l}α, g_{mu}α] not in g_{}α",
                    l + mu
                )));
            }
        }
    }
    Ok(())
}

/// An element of `p` whose `ad` has five distinct rational eigenvalues.
///
/// Candidates are scanned in a fixed order: the `p`-components
/// `(bᵢ − θbᵢ)/2` of the basis vectors, then sums and differences of pairs of
/// them, then combinations `xᵢ + 2xⱼ`.
pub fn find_hyperbolic_element(g: &LieAlgebraQ) -> Result<Vec<Scalar>> {
    let n = g.dim();
    let half = Scalar::new(1, 2);
    let comps: Vec<Vec<Scalar>> = (0..n)
        .map(|i| {
            let b = crate::linear::unit_vec(n, i);
            vec_scale(&vec_sub(&b, &g.apply_theta(&b)), &half)
        })
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .collect();
    let two = Scalar::int(2);
    let pairs = || (0..comps.len()).flat_map(|i| (i + 1..comps.len()).map(move |j| (i, j)));
    let candidates = comps
        .iter()
        .cloned()
        .chain(pairs().map(|(i, j)| vec_add(&comps[i], &comps[j])))
        .chain(pairs().map(|(i, j)| vec_sub(&comps[i], &comps[j])))
        .chain(pairs().map(|(i, j)| vec_add(&comps[i], &vec_scale(&comps[j], &two))));
    for x in candidates {
        if ad_spectrum(g, &x).is_some_and(|s| s.len() == 5) {
            return Ok(x);
        }
    }
    Err(Error::DegenerateInput(
        "no element of p with a rational five-point ad spectrum".into(),
    ))
}

/// Decomposition with the family's designated `H0`.
pub fn decompose(family: Family, g: &LieAlgebraQ) -> Result<RootDecomposition> {
    let h0 = match family {
        Family::F4 => find_hyperbolic_element(g)?,
        _ => designated_h0(family, g)
            .ok_or_else(|| Error::DegenerateInput("H0 outside the algebra".into()))?,
    };
    root_decomposition(g, &h0)
}
