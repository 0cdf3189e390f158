//! Quaternions and octonions over ℚ.
//!
//! Octonions are pairs of quaternions under the Cayley–Dickson rule
//! `(a,b)(c,d) = (ac − d̄b, da + bc̄)`. With the new unit `e4 = (0,1)` the
//! basis is `1, e1=i, e2=j, e3=k, e4, e5=e1e4, e6=e2e4, e7=e3e4`.

use std::ops::{Add, Mul, Neg, Sub};

use serde::Serialize;

use crate::linear::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Quaternion {
    pub coords: [Scalar; 4],
}

impl Quaternion {
    pub fn new(coords: [Scalar; 4]) -> Self {
        Quaternion { coords }
    }

    pub fn from_i64(c: [i64; 4]) -> Self {
        Quaternion {
            coords: c.map(Scalar::int),
        }
    }

    pub fn zero() -> Self {
        Self::from_i64([0; 4])
    }

    pub fn one() -> Self {
        Self::from_i64([1, 0, 0, 0])
    }

    /// Basis element: 0 → 1, 1 → i, 2 → j, 3 → k.
    pub fn unit(i: usize) -> Self {
        let mut c = [0; 4];
        c[i] = 1;
        Self::from_i64(c)
    }

    pub fn real(&self) -> &Scalar {
        &self.coords[0]
    }

    pub fn conj(&self) -> Self {
        let [a, b, c, d] = &self.coords;
        Quaternion {
            coords: [a.clone(), -b, -c, -d],
        }
    }

    pub fn norm(&self) -> Scalar {
        self.coords.iter().map(|x| x * x).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Quaternion {
            coords: std::array::from_fn(|i| &self.coords[i] * s),
        }
    }

    /// Matrix of `x ↦ self·x` in the basis `(1, i, j, k)`.
    pub fn left_matrix(&self) -> [[Scalar; 4]; 4] {
        std::array::from_fn(|r| {
            std::array::from_fn(|c| (self * &Quaternion::unit(c)).coords[r].clone())
        })
    }
}

impl Mul for &Quaternion {
    type Output = Quaternion;
    fn mul(self, o: &Quaternion) -> Quaternion {
        let [a1, b1, c1, d1] = &self.coords;
        let [a2, b2, c2, d2] = &o.coords;
        Quaternion {
            coords: [
                &(&(a1 * a2) - &(b1 * b2)) - &(&(c1 * c2) + &(d1 * d2)),
                &(&(a1 * b2) + &(b1 * a2)) + &(&(c1 * d2) - &(d1 * c2)),
                &(&(a1 * c2) - &(b1 * d2)) + &(&(c1 * a2) + &(d1 * b2)),
                &(&(a1 * d2) + &(b1 * c2)) - &(&(c1 * b2) - &(d1 * a2)),
            ],
        }
    }
}

impl Add for &Quaternion {
    type Output = Quaternion;
    fn add(self, o: &Quaternion) -> Quaternion {
        Quaternion {
            coords: std::array::from_fn(|i| &self.coords[i] + &o.coords[i]),
        }
    }
}

impl Sub for &Quaternion {
    type Output = Quaternion;
    fn sub(self, o: &Quaternion) -> Quaternion {
        Quaternion {
            coords: std::array::from_fn(|i| &self.coords[i] - &o.coords[i]),
        }
    }
}

impl Neg for &Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Quaternion {
        Quaternion {
            coords: std::array::from_fn(|i| -&self.coords[i]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Octonion {
    pub coords: [Scalar; 8],
}

impl Octonion {
    pub fn new(coords: [Scalar; 8]) -> Self {
        Octonion { coords }
    }

    pub fn from_i64(c: [i64; 8]) -> Self {
        Octonion {
            coords: c.map(Scalar::int),
        }
    }

    pub fn zero() -> Self {
        Self::from_i64([0; 8])
    }

    pub fn one() -> Self {
        Self::unit(0)
    }

    /// `e_i`, with `e_0 = 1`.
    pub fn unit(i: usize) -> Self {
        let mut c = [0; 8];
        c[i] = 1;
        Self::from_i64(c)
    }

    pub fn from_real(s: Scalar) -> Self {
        let mut o = Self::zero();
        o.coords[0] = s;
        o
    }

    fn halves(&self) -> (Quaternion, Quaternion) {
        let c = &self.coords;
        (
            Quaternion::new([c[0].clone(), c[1].clone(), c[2].clone(), c[3].clone()]),
            Quaternion::new([c[4].clone(), c[5].clone(), c[6].clone(), c[7].clone()]),
        )
    }

    fn from_halves(a: Quaternion, b: Quaternion) -> Self {
        let [a0, a1, a2, a3] = a.coords;
        let [b0, b1, b2, b3] = b.coords;
        Octonion {
            coords: [a0, a1, a2, a3, b0, b1, b2, b3],
        }
    }

    pub fn real(&self) -> &Scalar {
        &self.coords[0]
    }

    /// `conj(x) = 2·Re(x) − x`
    pub fn conj(&self) -> Self {
        let mut c = self.coords.clone();
        for x in c.iter_mut().skip(1) {
            *x = -&*x;
        }
        Octonion { coords: c }
    }

    /// `N(x) = Σ xᵢ²`
    pub fn norm(&self) -> Scalar {
        self.coords
            .iter()
            .filter(|x| !x.is_zero())
            .map(|x| x * x)
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn is_imaginary(&self) -> bool {
        self.coords[0].is_zero()
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        Octonion {
            coords: std::array::from_fn(|i| &self.coords[i] * s),
        }
    }
}

pub fn oct_mul(x: &Octonion, y: &Octonion) -> Octonion {
    if x.is_zero() || y.is_zero() {
        return Octonion::zero();
    }
    let (a, b) = x.halves();
    let (c, d) = y.halves();
    let first = &(&a * &c) - &(&d.conj() * &b);
    let second = &(&d * &a) + &(&b * &c.conj());
    Octonion::from_halves(first, second)
}

/// `(x1, x2) ↦ x1·x̄2 − x2·x̄1`, an antisymmetric map into the imaginary
/// octonions.
pub fn oct_bracket_form(x1: &Octonion, x2: &Octonion) -> Octonion {
    &oct_mul(x1, &x2.conj()) - &oct_mul(x2, &x1.conj())
}

impl Mul for &Octonion {
    type Output = Octonion;
    fn mul(self, o: &Octonion) -> Octonion {
        oct_mul(self, o)
    }
}

impl Add for &Octonion {
    type Output = Octonion;
    fn add(self, o: &Octonion) -> Octonion {
        Octonion {
            coords: std::array::from_fn(|i| &self.coords[i] + &o.coords[i]),
        }
    }
}

impl Sub for &Octonion {
    type Output = Octonion;
    fn sub(self, o: &Octonion) -> Octonion {
        Octonion {
            coords: std::array::from_fn(|i| &self.coords[i] - &o.coords[i]),
        }
    }
}

impl Neg for &Octonion {
    type Output = Octonion;
    fn neg(self) -> Octonion {
        Octonion {
            coords: std::array::from_fn(|i| -&self.coords[i]),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(i: usize) -> Octonion {
        Octonion::unit(i)
    }

    #[test]
    fn unit_is_neutral() {
        let x = Octonion::from_i64([3, -1, 4, 1, -5, 9, 2, -6]);
        assert_eq!(oct_mul(&Octonion::one(), &x), x);
        assert_eq!(oct_mul(&x, &Octonion::one()), x);
    }

    #[test]
    fn quaternionic_subalgebra() {
        assert_eq!(oct_mul(&e(1), &e(2)), e(3));
        assert_eq!(oct_mul(&e(2), &e(3)), e(1));
        assert_eq!(oct_mul(&e(3), &e(1)), e(2));
    }

    #[test]
    fn doubling_unit() {
        assert_eq!(oct_mul(&e(1), &e(4)), e(5));
        assert_eq!(oct_mul(&e(4), &e(1)), -&e(5));
        assert_eq!(oct_mul(&e(2), &e(4)), e(6));
        assert_eq!(oct_mul(&e(3), &e(4)), e(7));
    }

    #[test]
    fn imaginary_units_square_to_minus_one() {
        for i in 1..8 {
            assert_eq!(
                oct_mul(&e(i), &e(i)),
                Octonion::from_i64([-1, 0, 0, 0, 0, 0, 0, 0])
            );
        }
    }

    #[test]
    fn associativity_fails_on_witness() {
        let lhs = oct_mul(&oct_mul(&e(1), &e(2)), &e(4));
        let rhs = oct_mul(&e(1), &oct_mul(&e(2), &e(4)));
        assert_ne!(lhs, rhs);
        assert_eq!(lhs, -&rhs);
    }

    #[test]
    fn bracket_form_examples() {
        let x = Octonion::from_i64([1, 2, 0, -3, 0, 0, 5, 1]);
        assert!(oct_bracket_form(&x, &x).is_zero());
        assert_eq!(
            oct_bracket_form(&Octonion::one(), &e(1)),
            e(1).scale(&Scalar::int(-2))
        );
        assert_eq!(oct_bracket_form(&e(1), &e(2)), e(3).scale(&Scalar::int(-2)));
    }

    #[test]
    fn quaternion_left_matrix_is_multiplicative() {
        let p = Quaternion::from_i64([1, 2, -1, 3]);
        let r = Quaternion::from_i64([0, -2, 5, 1]);
        let lp = p.left_matrix();
        let lr = r.left_matrix();
        let lpr = (&p * &r).left_matrix();
        for i in 0..4 {
            for j in 0..4 {
                let s: Scalar = (0..4).map(|k| &lp[i][k] * &lr[k][j]).sum();
                assert_eq!(s, lpr[i][j]);
            }
        }
    }
}
