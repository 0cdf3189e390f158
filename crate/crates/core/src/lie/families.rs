//! `so(1,k)`, `su(1,k)`, `sp(1,k)` as real matrix algebras, and `f4(-20)`
//! from the Albert algebra.
//!
//! The classical families preserve `h(v,w) = Σ J_aa v̄_a w_a` on `𝔽^{k+1}`
//! with `J = diag(−1, 1, …, 1)`. Entries are realified blockwise: a complex
//! number `a+bi` becomes `[[a,−b],[b,a]]` and a quaternion becomes its 4×4
//! left-multiplication matrix in the basis `(1, i, j, k)`.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use serde::Serialize;

use crate::albert;
use crate::composition::Quaternion;
use crate::error::{Error, Result};
use crate::lie::algebra::LieAlgebraQ;
use crate::linear::{MatrixQ, Scalar};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Family {
    So(usize),
    Su(usize),
    Sp(usize),
    F4,
}

impl Family {
    /// Real dimension of the scalars: 1, 2 or 4 (`f4` reports 1).
    pub fn field_dim(&self) -> usize {
        match self {
            Family::So(_) | Family::F4 => 1,
            Family::Su(_) => 2,
            Family::Sp(_) => 4,
        }
    }

    pub fn k(&self) -> Option<usize> {
        match *self {
            Family::So(k) | Family::Su(k) | Family::Sp(k) => Some(k),
            Family::F4 => None,
        }
    }

    pub fn is_classical(&self) -> bool {
        !matches!(self, Family::F4)
    }

    pub fn expected_dim(&self) -> usize {
        match *self {
            Family::So(k) => k * (k + 1) / 2,
            Family::Su(k) => (k + 1) * (k + 1) - 1,
            Family::Sp(k) => (k + 1) * (2 * k + 3),
            Family::F4 => 52,
        }
    }

    fn validate(&self) -> Result<()> {
        match self.k() {
            Some(k) if k < 2 => Err(Error::UnsupportedParameters(format!(
                "{self}: k must be at least 2"
            ))),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::So(k) => write!(f, "so(1,{k})"),
            Family::Su(k) => write!(f, "su(1,{k})"),
            Family::Sp(k) => write!(f, "sp(1,{k})"),
            Family::F4 => write!(f, "f4"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t: String = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .collect::<String>()
            .to_ascii_lowercase();
        if matches!(t.as_str(), "f4" | "f4(-20)" | "f4^-20" | "f4^{-20}") {
            return Ok(Family::F4);
        }
        let bad = || {
            Error::Parse(format!(
                "expected so(1,k), su(1,k), sp(1,k) or f4, got {s:?}"
            ))
        };
        let (head, rest) = t.split_at_checked(2).ok_or_else(bad)?;
        let inner = rest
            .strip_prefix("(1,")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(bad)?;
        let k: usize = inner.parse().map_err(|_| bad())?;
        let fam = match head {
            "so" => Family::So(k),
            "su" => Family::Su(k),
            "sp" => Family::Sp(k),
            _ => return Err(bad()),
        };
        fam.validate()?;
        Ok(fam)
    }
}

/// A matrix over `𝔽 ∈ {ℝ, ℂ, ℍ}` with quaternion entries (complex entries
/// use only `1, i`).
struct FMatrix {
    n: usize,
    entries: Vec<((usize, usize), Quaternion)>,
}

impl FMatrix {
    fn new(n: usize) -> Self {
        FMatrix {
            n,
            entries: Vec::new(),
        }
    }

    fn set(mut self, a: usize, b: usize, q: Quaternion) -> Self {
        self.entries.push(((a, b), q));
        self
    }

    /// `J·self`: row `a` scaled by `J_aa`.
    fn twisted(mut self) -> Self {
        for ((a, _), q) in self.entries.iter_mut() {
            if *a == 0 {
                *q = -&*q;
            }
        }
        self
    }

    fn realify(&self, d: usize) -> MatrixQ {
        let mut m = MatrixQ::zeros(self.n * d, self.n * d);
        for ((a, b), q) in &self.entries {
            let l = q.left_matrix();
            for r in 0..d {
                for c in 0..d {
                    m[(a * d + r, b * d + c)] += &l[r][c];
                }
            }
        }
        m
    }
}

fn quat_units(d: usize) -> Vec<(Quaternion, &'static str)> {
    let all = [
        (Quaternion::unit(0), "1"),
        (Quaternion::unit(1), "i"),
        (Quaternion::unit(2), "j"),
        (Quaternion::unit(3), "k"),
    ];
    all[..d].to_vec()
}

/// Diagonal form `J ⊗ I_d` preserved by the realified classical family.
pub fn standard_form(family: Family) -> Option<MatrixQ> {
    let k = family.k()?;
    let d = family.field_dim();
    let n = k + 1;
    let diag: Vec<Scalar> = (0..n * d)
        .map(|i| if i < d { Scalar::int(-1) } else { Scalar::ONE })
        .collect();
    Some(MatrixQ::diag(&diag))
}

fn classical_basis(family: Family) -> (Vec<String>, Vec<MatrixQ>) {
    let k = family.k().expect("classical family");
    let n = k + 1;
    let d = family.field_dim();
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    let mut push = |label: String, m: FMatrix| {
        labels.push(label);
        mats.push(m.realify(d));
    };
    // Diagonal part.
    match family {
        Family::Su(_) => {
            for a in 0..n - 1 {
                let m = FMatrix::new(n).set(a, a, Quaternion::unit(1)).set(
                    a + 1,
                    a + 1,
                    -&Quaternion::unit(1),
                );
                push(format!("i(E{a}{a}-E{b}{b})", b = a + 1), m);
            }
        }
        Family::Sp(_) => {
            for a in 0..n {
                for (q, name) in quat_units(4).into_iter().skip(1) {
                    push(
                        format!("J({name}E{a}{a})"),
                        FMatrix::new(n).set(a, a, q).twisted(),
                    );
                }
            }
        }
        _ => {}
    }
    // Off-diagonal part: J(q E_ab − q̄ E_ba) for the real units (and
    // J(q E_ab + q E_ba) style entries for imaginary q).
    for a in 0..n {
        for b in a + 1..n {
            for (q, name) in quat_units(d) {
                let m = FMatrix::new(n)
                    .set(a, b, q.clone())
                    .set(b, a, -&q.conj())
                    .twisted();
                push(format!("J({name}E{a}{b}-{name}*E{b}{a})"), m);
            }
        }
    }
    (labels, mats)
}

fn build_classical(family: Family) -> Result<LieAlgebraQ> {
    family.validate()?;
    let (labels, mats) = classical_basis(family);
    LieAlgebraQ::from_matrices(&family.to_string(), labels, mats, |m| {
        m.transpose().scale(&Scalar::int(-1))
    })
}

/// Sign matrix of `p`-conjugation restricted to the `J_0` basis.
pub fn f4_theta_signs() -> MatrixQ {
    albert::j0_projection()
        .mul(&albert::p_conjugation())
        .mul(&albert::j0_embedding())
}

fn build_f4() -> Result<LieAlgebraQ> {
    let der = albert::derivation_algebra()?;
    let j0 = albert::restrict_to_j0(der);
    let e = f4_theta_signs();
    let labels = (0..der.dim).map(|i| format!("D{i}")).collect();
    LieAlgebraQ::from_parts(
        "f4(-20)",
        labels,
        der.structure_constants.clone(),
        j0.rep,
        |m| e.mul(m).mul(&e),
    )
}

type Cached = (Family, Arc<LieAlgebraQ>);

/// Builds (and caches) the algebra for `family`.
pub fn build_algebra(family: Family) -> Result<Arc<LieAlgebraQ>> {
    static CACHE: OnceLock<Mutex<Vec<Cached>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    if let Some((_, g)) = cache.lock().unwrap().iter().find(|(f, _)| *f == family) {
        return Ok(g.clone());
    }
    let g = Arc::new(match family {
        Family::F4 => build_f4()?,
        _ => build_classical(family)?,
    });
    let mut c = cache.lock().unwrap();
    if let Some((_, existing)) = c.iter().find(|(f, _)| *f == family) {
        return Ok(existing.clone());
    }
    c.push((family, g.clone()));
    Ok(g)
}

/// `E_{0,k} + E_{k,0}` realified, in basis coordinates.
pub fn designated_h0(family: Family, g: &LieAlgebraQ) -> Option<Vec<Scalar>> {
    let k = family.k()?;
    let m = FMatrix::new(k + 1)
        .set(0, k, Quaternion::one())
        .set(k, 0, Quaternion::one());
    g.from_matrix(&m.realify(family.field_dim()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display() {
        for s in ["so(1,2)", "su(1,3)", "sp(1,9)", "f4"] {
            assert_eq!(s.parse::<Family>().unwrap().to_string(), s);
        }
        assert_eq!("F4(-20)".parse::<Family>().unwrap(), Family::F4);
        assert!(matches!("so(2,3)".parse::<Family>(), Err(Error::Parse(_))));
        assert!(matches!(
            "su(1,1)".parse::<Family>(),
            Err(Error::UnsupportedParameters(_))
        ));
        assert!(matches!("g2".parse::<Family>(), Err(Error::Parse(_))));
    }

    #[test]
    fn classical_dimensions() {
        for f in [
            Family::So(2),
            Family::So(4),
            Family::Su(2),
            Family::Su(3),
            Family::Sp(2),
        ] {
            let g = build_algebra(f).unwrap();
            assert_eq!(g.dim(), f.expected_dim(), "{f}");
        }
    }

    #[test]
    fn basis_preserves_form() {
        for f in [Family::So(3), Family::Su(2), Family::Sp(2)] {
            let g = build_algebra(f).unwrap();
            let j = standard_form(f).unwrap();
            for m in g.realization().unwrap() {
                assert!(m.transpose().mul(&j).add(&j.mul(m)).is_zero(), "{f}");
            }
        }
    }

    #[test]
    fn designated_element_lies_in_p() {
        for f in [Family::So(3), Family::Su(3), Family::Sp(2)] {
            let g = build_algebra(f).unwrap();
            let h = designated_h0(f, &g).unwrap();
            assert_eq!(
                g.apply_theta(&h),
                crate::linear::vec_scale(&h, &Scalar::int(-1))
            );
        }
    }
}
