//! Normal form of an element of `so(p,q)` acting by `λ·id` on a maximally
//! isotropic invariant subspace `V`: recovered from `X` and the form alone
//! as `V ⊕ (V ⊕ V')^⊥ ⊕ V'` with blocks `diag(λ, 0, −λ)`.

use crate::error::{Error, Result};
use crate::linear::eigen::eigenspace;
use crate::linear::{inverse, MatrixQ, QuadFormQ, Scalar, Subspace};
use crate::report::Report;
use crate::sampling::Sampler;

/// Signatures `(p, q)` exercised by the suite.
pub const SIGNATURES: [(usize, usize); 3] = [(1, 1), (2, 3), (3, 5)];

/// Hyperbolic pairs `(eᵢ, fᵢ)` followed by a positive definite block.
fn model_form(p: usize, q: usize) -> MatrixQ {
    let n = p + q;
    let mut g = MatrixQ::zeros(n, n);
    for i in 0..p {
        g[(i, p + i)] = Scalar::ONE;
        g[(p + i, i)] = Scalar::ONE;
    }
    for j in 2 * p..n {
        g[(j, j)] = Scalar::ONE;
    }
    g
}

fn model_element(p: usize, q: usize, lambda: &Scalar) -> MatrixQ {
    let d: Vec<Scalar> = (0..p + q)
        .map(|i| {
            if i < p {
                lambda.clone()
            } else if i < 2 * p {
                -lambda
            } else {
                Scalar::ZERO
            }
        })
        .collect();
    MatrixQ::diag(&d)
}

/// One random instance: the model conjugated by a random invertible map,
/// then decomposed again from scratch.
pub fn hyperbolic_normal_form(p: usize, q: usize, lambda: &Scalar, seed: u64) -> Result<Report> {
    if p > q || p == 0 || lambda.is_zero() {
        return Err(Error::UnsupportedParameters(format!(
            "need 0 < p ≤ q and λ ≠ 0, got p={p}, q={q}, λ={lambda}"
        )));
    }
    let n = p + q;
    let mut r = Report::new("hyperbolic-normal-form", "-")
        .param("p", p)
        .param("q", q)
        .param("lambda", lambda)
        .param("seed", seed);
    let b = Sampler::new(seed).invertible(n);
    let b_inv = inverse(&b).expect("invertible by construction");
    let x = b.mul(&model_element(p, q, lambda)).mul(&b_inv);
    let form = QuadFormQ::new(b_inv.transpose().mul(&model_form(p, q)).mul(&b_inv))?;
    let gram = form.gram();
    r.assert(
        "X skew for the form",
        x.transpose().mul(gram).add(&gram.mul(&x)).is_zero(),
        || "XᵀG + GX ≠ 0".into(),
    );

    let v = eigenspace(&x, lambda);
    let v_dual = eigenspace(&x, &-lambda);
    let middle = eigenspace(&x, &Scalar::ZERO);
    if (v.dim(), v_dual.dim(), middle.dim()) != (p, p, q - p) {
        return Err(Error::DegenerateInput(format!(
            "eigenspace dimensions {}, {}, {} for p={p}, q={q}",
            v.dim(),
            v_dual.dim(),
            middle.dim()
        )));
    }
    let sig = form.signature();
    r.expect_eq("form signature (q, p)", (q, p, 0), sig.as_tuple());
    r.expect_eq(
        "V maximally isotropic: dim V = index",
        sig.index_ordered().0,
        v.dim(),
    );
    r.assert(
        "V isotropic",
        v.restrict_form(&form)?.gram().is_zero(),
        || "V not isotropic".into(),
    );
    r.assert(
        "V' isotropic",
        v_dual.restrict_form(&form)?.gram().is_zero(),
        || "V' not isotropic".into(),
    );
    let pair = v.sum(&v_dual)?;
    r.expect_eq(
        "V + V' signature (p, p)",
        (p, p, 0),
        pair.restrict_form(&form)?.signature().as_tuple(),
    );
    check_middle(&mut r, &form, &pair, &middle)?;

    // Block diagonal in the adapted basis.
    let cols: Vec<Vec<Scalar>> = [&v, &middle, &v_dual]
        .iter()
        .flat_map(|s| s.basis_vectors())
        .collect();
    let c = MatrixQ::from_columns(&cols, n);
    let c_inv =
        inverse(&c).ok_or_else(|| Error::DegenerateInput("eigenspaces do not span".into()))?;
    let blocks = c_inv.mul(&x).mul(&c);
    // The adapted order is (V, middle, V').
    let d: Vec<Scalar> = (0..n)
        .map(|i| {
            if i < p {
                lambda.clone()
            } else if i < n - p {
                Scalar::ZERO
            } else {
                -lambda
            }
        })
        .collect();
    let expected = MatrixQ::diag(&d);
    r.assert("block diag(λ, 0, −λ)", blocks == expected, || {
        format!("recovered {blocks:?}")
    });
    Ok(r)
}

fn check_middle(
    r: &mut Report,
    form: &QuadFormQ,
    pair: &Subspace,
    middle: &Subspace,
) -> Result<()> {
    let perp = pair.orthogonal_complement(form)?;
    r.assert("middle = (V + V')^⊥", &perp == middle, || {
        format!("dims {} and {}", perp.dim(), middle.dim())
    });
    let sig = middle.restrict_form(form)?.signature();
    r.assert(
        "middle positive definite",
        sig.is_positive_definite() || middle.is_zero(),
        || format!("signature {sig}"),
    );
    Ok(())
}

/// `instances` random instances for each signature in [`SIGNATURES`].
pub fn hyperbolic_suite(seed: u64, instances: usize) -> Report {
    let mut r = Report::new("hyperbolic-normal-form", "-")
        .param("seed", seed)
        .param("instances", instances);
    let mut s = Sampler::new(seed);
    for (p, q) in SIGNATURES {
        for _ in 0..instances {
            let lambda = s.nonzero_scalar();
            let inst_seed = s.next_u64();
            r.trials += 1;
            match hyperbolic_normal_form(p, q, &lambda, inst_seed) {
                Ok(one) => {
                    r.passes += one.passes;
                    r.failures.extend(one.failures);
                }
                Err(e) => r.assert(&format!("instance ({p},{q})"), false, || e.to_string()),
            }
        }
    }
    r
}
