//! Rational eigenvalues and eigenspaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::echelon::{solve, Echelon};
use super::matrix::MatrixQ;
use super::scalar::Scalar;
use super::subspace::Subspace;

/// Largest integer whose divisors are enumerated by trial division.
const DIVISOR_LIMIT: u64 = 100_000_000_000_000;

/// Minimal polynomial of `v` under `a`, monic, coefficients low to high.
pub fn min_poly_of_vector(a: &MatrixQ, v: &[Scalar]) -> Vec<Scalar> {
    let n = a.rows();
    let mut e = Echelon::new(n);
    let mut krylov: Vec<Vec<Scalar>> = Vec::new();
    let mut cur = v.to_vec();
    loop {
        if !e.insert_dense(&cur) {
            let k = MatrixQ::from_columns(&krylov, n);
            let c = solve(&k, &cur).expect("dependent Krylov vector lies in the span");
            let mut poly: Vec<Scalar> = c.iter().map(|x| -x).collect();
            poly.push(Scalar::ONE);
            return poly;
        }
        let next = a.mul_vec(&cur);
        krylov.push(cur);
        cur = next;
    }
}

pub fn eval_poly(poly: &[Scalar], x: &Scalar) -> Scalar {
    poly.iter()
        .rev()
        .fold(Scalar::ZERO, |acc, c| &(&acc * x) + c)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > DIVISOR_LIMIT {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// All rational roots of `poly`, sorted and without repetition. `None` if the
/// integer coefficients are too large for divisor enumeration.
pub fn rational_roots(poly: &[Scalar]) -> Option<Vec<Scalar>> {
    let mut lcm = BigInt::one();
    for c in poly {
        lcm = lcm.lcm(&c.denom());
    }
    let mut ints: Vec<BigInt> = poly
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    while ints.last().is_some_and(Zero::is_zero) {
        ints.pop();
    }
    let mut roots = Vec::new();
    let shift = ints.iter().position(|c| !c.is_zero())?;
    if shift > 0 {
        roots.push(Scalar::ZERO);
        ints.drain(..shift);
    }
    if ints.len() > 1 {
        let lead = ints.last().unwrap().clone();
        let ps = divisors(&ints[0])?;
        let qs = divisors(&lead)?;
        let reduced: Vec<Scalar> = ints
            .iter()
            .map(|c| Scalar::from_big(c.clone().into()))
            .collect();
        for p in &ps {
            for q in &qs {
                for s in [1, -1] {
                    let r = Scalar::from_big(num_rational::BigRational::new(p * s, q.clone()));
                    if eval_poly(&reduced, &r).is_zero() {
                        roots.push(r);
                    }
                }
            }
        }
    }
    roots.sort();
    roots.dedup();
    Some(roots)
}

pub fn eigenspace(a: &MatrixQ, lambda: &Scalar) -> Subspace {
    let shifted = a.sub(&MatrixQ::identity(a.rows()).scale(lambda));
    Subspace::kernel_of(&shifted)
}

/// Full rational eigen-decomposition of `a`, found from the minimal
/// polynomials of the given probe vectors. `None` unless `a` is
/// diagonalizable over ℚ with every eigenvalue among the roots found.
pub fn rational_spectrum(a: &MatrixQ, probes: &[Vec<Scalar>]) -> Option<Vec<(Scalar, Subspace)>> {
    let mut roots: Vec<Scalar> = Vec::new();
    for v in probes {
        roots.extend(rational_roots(&min_poly_of_vector(a, v))?);
    }
    roots.sort();
    roots.dedup();
    let spaces: Vec<(Scalar, Subspace)> = roots
        .into_iter()
        .map(|r| {
            let s = eigenspace(a, &r);
            (r, s)
        })
        .collect();
    let total: usize = spaces.iter().map(|(_, s)| s.dim()).sum();
    (total == a.rows()).then_some(spaces)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linear::scalar::q;

    #[test]
    fn roots_of_known_polynomial() {
        // t (t - 1/2)(t + 3) = t³ + 5/2 t² − 3/2 t
        let p = vec![q(0, 1), q(-3, 2), q(5, 2), q(1, 1)];
        assert_eq!(rational_roots(&p), Some(vec![q(-3, 1), q(0, 1), q(1, 2)]));
        // t² − 2 has no rational roots.
        assert_eq!(rational_roots(&[q(-2, 1), q(0, 1), q(1, 1)]), Some(vec![]));
    }

    #[test]
    fn spectrum_of_diagonalizable_matrix() {
        let a = MatrixQ::from_i64(3, 3, &[2, 0, 0, 0, -1, 0, 0, 0, 2]);
        let probe = vec![q(1, 1), q(1, 1), q(1, 1)];
        let spec = rational_spectrum(&a, &[probe]).unwrap();
        let dims: Vec<(Scalar, usize)> = spec.iter().map(|(l, s)| (l.clone(), s.dim())).collect();
        assert_eq!(dims, vec![(q(-1, 1), 1), (q(2, 1), 2)]);
    }

    #[test]
    fn irrational_spectrum_rejected() {
        let a = MatrixQ::from_i64(2, 2, &[0, 2, 1, 0]);
        assert!(rational_spectrum(&a, &[vec![q(1, 1), q(0, 1)]]).is_none());
    }

    #[test]
    fn nilpotent_rejected() {
        let a = MatrixQ::from_i64(2, 2, &[0, 1, 0, 0]);
        assert!(rational_spectrum(&a, &[vec![q(0, 1), q(1, 1)]]).is_none());
    }
}
