//! Flat conformal models: `g ↪ so(p+1, q+1)` and the stabilizer of a null
//! line with the quadratic form it induces on `g/g_x`.

use serde::Serialize;

use crate::albert;
use crate::error::{Error, Result};
use crate::lemmas::{check_contained, check_equal, Context};
use crate::lie::families::standard_form;
use crate::lie::{Family, LieAlgebraQ, RootDecomposition};
use crate::linear::eigen::rational_spectrum;
use crate::linear::{rank, vec_scale, MatrixQ, QuadFormQ, Scalar, Signature, Subspace};
use crate::report::Report;
use crate::sampling::Sampler;

const PROBE_SEED: u64 = 0x0005_eed0_0002;

/// A faithful representation preserving a nondegenerate symmetric form.
#[derive(Clone, Debug, Serialize)]
pub struct ConformalEmbedding {
    pub family: Family,
    pub form: QuadFormQ,
    pub images: Vec<MatrixQ>,
}

impl ConformalEmbedding {
    pub fn ambient_dim(&self) -> usize {
        self.form.dim()
    }

    /// `ρ(x)` for a coordinate vector `x`.
    pub fn image(&self, x: &[Scalar]) -> MatrixQ {
        let n = self.ambient_dim();
        let mut m = MatrixQ::zeros(n, n);
        for (c, b) in x.iter().zip(&self.images) {
            if !c.is_zero() {
                m.add_scaled(c, b);
            }
        }
        m
    }
}

/// Standard representation with its Hermitian form (realified) for the
/// classical families; `J_0` with the trace form for `f4`.
pub fn build_embedding(family: Family, g: &LieAlgebraQ) -> Result<ConformalEmbedding> {
    let images = g
        .realization()
        .ok_or_else(|| Error::DegenerateInput("algebra has no matrix realization".into()))?
        .to_vec();
    let gram = match family {
        Family::F4 => albert::j0_gram(),
        _ => standard_form(family).expect("classical family"),
    };
    Ok(ConformalEmbedding {
        family,
        form: QuadFormQ::new(gram)?,
        images,
    })
}

/// Index-ordered signature `(p+1, q+1)` of the ambient form.
pub fn expected_ambient_signature(family: Family) -> (usize, usize) {
    match family {
        Family::So(k) => (1, k),
        Family::Su(k) => (2, 2 * k),
        Family::Sp(k) => (4, 4 * k),
        Family::F4 => (10, 16),
    }
}

pub fn embedding_signature(ctx: &Context) -> Report {
    let mut r = ctx.report("embedding-signature");
    let e = match build_embedding(ctx.family, ctx.g) {
        Ok(e) => e,
        Err(err) => {
            r.assert("embedding", false, || err.to_string());
            return r;
        }
    };
    let g = ctx.g;
    let gram = e.form.gram();
    let skew = e
        .images
        .iter()
        .all(|x| x.transpose().mul(gram).add(&gram.mul(x)).is_zero());
    r.assert("images skew for the form", skew, || {
        "ρ(X)ᵀQ + Qρ(X) ≠ 0".into()
    });
    let n = g.dim();
    let mut hom = true;
    for i in 0..n {
        for j in i + 1..n {
            let row = g.bracket_basis(i, j);
            let mut rhs = MatrixQ::zeros(e.ambient_dim(), e.ambient_dim());
            for (k, c) in row {
                rhs.add_scaled(c, &e.images[*k]);
            }
            if e.images[i].commutator(&e.images[j]) != rhs {
                hom = false;
            }
        }
    }
    r.assert("homomorphism", hom, || {
        "commutators do not match the structure constants".into()
    });
    let flat: Vec<Vec<Scalar>> = e.images.iter().map(MatrixQ::flatten).collect();
    r.expect_eq("injective", n, rank(&MatrixQ::from_rows(&flat)));
    let sig = e.form.signature();
    r.observe("ambient signature", sig);
    r.expect_eq(
        "ambient signature (index-ordered)",
        expected_ambient_signature(ctx.family),
        sig.index_ordered(),
    );
    r.assert("ambient form nondegenerate", sig.is_nondegenerate(), || {
        format!("signature {sig}")
    });
    r
}

/// Stabilizer of the null line through `null_vector` and the induced form.
#[derive(Clone, Debug, Serialize)]
pub struct IsotropyReport {
    pub null_vector: Vec<Scalar>,
    /// `g_x = {X : ρ(X)v ∈ span v}`.
    pub stabilizer: Subspace,
    /// `(X, Y) ↦ ⟨ρ(X)v, ρ(Y)v⟩` on `g`; its radical contains `g_x`.
    pub induced_form: QuadFormQ,
    /// Signature of the form descended to `g/g_x`.
    pub quotient_signature: Signature,
    pub block_signatures: Vec<(String, Signature)>,
    /// Dimension of the radical of the quotient form.
    pub kernel_dim: usize,
    pub orbit_dim: usize,
}

fn column_images(e: &ConformalEmbedding, v: &[Scalar]) -> Vec<Vec<Scalar>> {
    e.images.iter().map(|m| m.mul_vec(v)).collect()
}

/// `{X : ρ(X)v ∈ span v}`: kernel of `c ↦ Σ cᵢρ(bᵢ)v − t·v` projected to `c`.
fn line_stabilizer(e: &ConformalEmbedding, v: &[Scalar]) -> Subspace {
    let mut cols = column_images(e, v);
    let n = cols.len();
    cols.push(vec_scale(v, &Scalar::int(-1)));
    let m = MatrixQ::from_columns(&cols, e.ambient_dim());
    let k = Subspace::kernel_of(&m);
    let vecs: Vec<Vec<Scalar>> = k
        .basis_vectors()
        .into_iter()
        .map(|c| c[..n].to_vec())
        .collect();
    Subspace::span(n, &vecs)
}

fn induced_gram(e: &ConformalEmbedding, v: &[Scalar]) -> MatrixQ {
    let w = column_images(e, v);
    let n = w.len();
    let mut g = MatrixQ::zeros(n, n);
    for i in 0..n {
        for j in i..n {
            let x = e.form.eval(&w[i], &w[j]);
            g[(i, j)] = x.clone();
            g[(j, i)] = x;
        }
    }
    g
}

/// Null eigenvector of `ρ(H)` for the largest eigenvalue whose line is
/// preserved by `g_α` and `g_{2α}`; other eigen-directions are tried in
/// decreasing eigenvalue order if the first fails.
pub fn basepoint(e: &ConformalEmbedding, rd: &RootDecomposition) -> Result<Vec<Scalar>> {
    let rho_h = e.image(&rd.h);
    let mut s = Sampler::new(PROBE_SEED);
    let probes: Vec<Vec<Scalar>> = (0..2).map(|_| s.nonzero_vector(e.ambient_dim())).collect();
    let mut spectrum = rational_spectrum(&rho_h, &probes)
        .ok_or_else(|| Error::BadBasepoint("ρ(H) not diagonalizable over ℚ".into()))?;
    spectrum.sort_by(|a, b| b.0.cmp(&a.0));
    let raising: Vec<Vec<Scalar>> = rd
        .g_plus_a
        .basis_vectors()
        .into_iter()
        .chain(rd.g_plus_2a.basis_vectors())
        .collect();
    for (_, space) in &spectrum {
        for v in space.basis_vectors() {
            if !e.form.eval(&v, &v).is_zero() {
                continue;
            }
            let line = Subspace::span(v.len(), std::slice::from_ref(&v));
            if raising
                .iter()
                .all(|x| line.contains_vector(&e.image(x).mul_vec(&v)))
            {
                return Ok(v);
            }
        }
    }
    Err(Error::BadBasepoint(
        "no H-eigen null direction preserved by g_alpha and g_2alpha".into(),
    ))
}

pub fn null_isotropy(e: &ConformalEmbedding, rd: &RootDecomposition) -> Result<IsotropyReport> {
    let v = basepoint(e, rd)?;
    let stabilizer = line_stabilizer(e, &v);
    let induced_form = QuadFormQ::new(induced_gram(e, &v))?;
    let sig = induced_form.signature();
    let n0 = sig
        .n_zero
        .checked_sub(stabilizer.dim())
        .ok_or_else(|| Error::BadBasepoint("radical smaller than g_x".into()))?;
    let quotient_signature = Signature::new(sig.n_plus, sig.n_minus, n0);
    let blocks = [
        ("g_-2alpha", &rd.g_minus_2a),
        ("g_-alpha", &rd.g_minus_a),
        ("m", &rd.m),
        ("a", &rd.a),
    ];
    let block_signatures = blocks
        .iter()
        .map(|(name, s)| {
            Ok((
                name.to_string(),
                s.restrict_form(&induced_form)?.signature(),
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let orbit_dim = stabilizer.ambient_dim() - stabilizer.dim();
    Ok(IsotropyReport {
        null_vector: v,
        stabilizer,
        induced_form,
        quotient_signature,
        block_signatures,
        kernel_dim: n0,
        orbit_dim,
    })
}

fn cross_block(q: &QuadFormQ, s: &Subspace, t: &Subspace) -> MatrixQ {
    s.basis().mul(q.gram()).mul(&t.basis().transpose())
}

pub fn null_isotropy_report(ctx: &Context) -> Report {
    if ctx.family == Family::F4 {
        return Report::not_applicable(
            "null-isotropy",
            "f4",
            "flat-model isotropy is checked for so, su and sp",
        );
    }
    let (g, rd) = (ctx.g, ctx.rd);
    let mut r = ctx.report("null-isotropy");
    let res =
        build_embedding(ctx.family, g).and_then(|e| null_isotropy(&e, rd).map(|iso| (e, iso)));
    let (e, iso) = match res {
        Ok(x) => x,
        Err(err) => {
            r.assert("isotropy computed", false, || err.to_string());
            return r;
        }
    };
    let gx = &iso.stabilizer;
    let q = &iso.induced_form;
    let sum = |a: &Subspace, b: &Subspace| a.sum(b).expect("same ambient");
    r.observe("null vector", format!("{:?}", iso.null_vector));
    r.observe("dim g_x", gx.dim());
    r.observe("quotient signature", iso.quotient_signature);
    for (name, s) in &iso.block_signatures {
        r.observe(&format!("block {name}"), s);
    }

    let v = &iso.null_vector;
    let tangent = (0..g.dim()).all(|i| e.form.eval(&e.images[i].mul_vec(v), v).is_zero());
    r.assert("<Xv, v> = 0", tangent, || {
        "ρ(X)v not orthogonal to v".into()
    });
    let radical = Subspace::kernel_of(q.gram());
    check_equal(&mut r, "radical of induced form = g_x", &radical, gx);
    r.expect_eq("quotient form nondegenerate", 0, iso.kernel_dim);
    for c in [2, 3] {
        let cv = vec_scale(v, &Scalar::int(c));
        let ok = induced_gram(&e, &cv) == q.gram().scale(&Scalar::int(c * c));
        r.assert(
            &format!("rescaling v by {c} scales the form by {}", c * c),
            ok,
            || "form not homogeneous".into(),
        );
    }
    let s_alg = sum(&sum(&rd.a, &rd.g_plus_a), &rd.g_plus_2a);
    check_contained(&mut r, "[s, g_x] ⊆ g_x", &g.bracket_span(&s_alg, gx), gx);

    let m_x = rd.m.intersection(gx).expect("same ambient");
    r.observe("dim m ∩ g_x", m_x.dim());
    if let Family::So(k) = ctx.family {
        check_equal(
            &mut r,
            "g_x = a + m + g_alpha",
            gx,
            &sum(&rd.g0, &rd.g_plus_a),
        );
        r.expect_eq(
            "quotient positive definite",
            (k - 1, 0, 0),
            iso.quotient_signature.as_tuple(),
        );
        return r;
    }

    let d = rd.g_plus_2a.dim();
    check_contained(&mut r, "a + g_alpha + g_2alpha ⊆ g_x", &s_alg, gx);
    r.expect_eq(
        "g_x ∩ g_-alpha = 0",
        0,
        gx.intersection(&rd.g_minus_a).expect("same ambient").dim(),
    );
    r.expect_eq(
        "g_x ∩ g_-2alpha = 0",
        0,
        gx.intersection(&rd.g_minus_2a).expect("same ambient").dim(),
    );
    check_equal(
        &mut r,
        "g_x = a + (m ∩ g_x) + g_alpha + g_2alpha",
        gx,
        &sum(&s_alg, &m_x),
    );
    r.expect_eq(
        "codim of m ∩ g_x in m = dim g_2alpha",
        d,
        rd.m.dim() - m_x.dim(),
    );

    let zero_block = |s: &Subspace| {
        s.restrict_form(q)
            .map(|f| f.gram().is_zero())
            .unwrap_or(false)
    };
    r.assert(
        "g_-2alpha image isotropic",
        zero_block(&rd.g_minus_2a),
        || "nonzero block".into(),
    );
    r.assert("m image isotropic", zero_block(&rd.m), || {
        "nonzero block".into()
    });
    let ga = rd.g_minus_a.restrict_form(q).map(|f| f.signature());
    r.assert(
        "g_-alpha image positive definite",
        ga.as_ref().is_ok_and(|s| s.is_positive_definite()),
        || format!("{ga:?}"),
    );
    r.assert(
        "g_-alpha ⊥ g_-2alpha",
        cross_block(q, &rd.g_minus_a, &rd.g_minus_2a).is_zero(),
        || "nonzero pairing".into(),
    );
    r.assert(
        "g_-alpha ⊥ m",
        cross_block(q, &rd.g_minus_a, &rd.m).is_zero(),
        || "nonzero pairing".into(),
    );
    r.expect_eq(
        "g_-2alpha pairs with m in rank dim g_2alpha",
        d,
        rank(&cross_block(q, &rd.g_minus_2a, &rd.m)),
    );
    check_equal(&mut r, "m(x) = m1(x)", &rd.m, &sum(&rd.m1, &m_x));
    let orbit = iso.orbit_dim;
    r.expect_eq(
        "quotient signature (orbit - d, d, 0)",
        (orbit - d, d, 0),
        iso.quotient_signature.as_tuple(),
    );

    let k = ctx.family.k().expect("classical");
    let m2_match = m_x == rd.m2;
    r.observe("m ∩ g_x = m2", m2_match);
    if k >= 3 {
        r.assert("m ∩ g_x = m2 (k ≥ 3)", m2_match, || {
            format!("dims {} and {}", m_x.dim(), rd.m2.dim())
        });
    }
    r
}

pub fn expected_orbit_dim(family: Family) -> Option<usize> {
    match family {
        Family::So(k) => Some(k - 1),
        Family::Su(k) => Some(2 * k),
        Family::Sp(k) => Some(4 * k + 2),
        Family::F4 => None,
    }
}

pub fn orbit_dims(ctx: &Context) -> Report {
    let Some(expected) = expected_orbit_dim(ctx.family) else {
        return Report::not_applicable(
            "orbit-dims",
            "f4",
            "flat-model orbits are checked for so, su and sp",
        );
    };
    let mut r = ctx.report("orbit-dims");
    match build_embedding(ctx.family, ctx.g).and_then(|e| null_isotropy(&e, ctx.rd)) {
        Ok(iso) => {
            r.observe("dim g - dim g_x", iso.orbit_dim);
            r.expect_eq("orbit dimension", expected, iso.orbit_dim);
            let (p, q) = expected_ambient_signature(ctx.family);
            r.expect_eq("orbit dimension = dim Ein", p + q - 2, iso.orbit_dim);
        }
        Err(err) => r.assert("isotropy computed", false, || err.to_string()),
    }
    r
}
