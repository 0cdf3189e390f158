//! Seeded random rational inputs.
//!
//! Every coordinate is an integer drawn uniformly from `[-9, 9]` by a
//! SplitMix64 stream, so a seed fixes every sample bit for bit.

use rand::{Rng, RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::linear::{MatrixQ, Scalar, Subspace};

pub const COORD_BOUND: i64 = 9;

pub struct Sampler {
    rng: SplitMix64,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler {
            rng: SplitMix64::seed_from_u64(seed),
        }
    }

    /// Raw output, for deriving seeds of sub-streams.
    pub fn next_u64(&mut self) -> u64 {
        self.rng.next_u64()
    }

    pub fn int(&mut self) -> i64 {
        self.rng.random_range(-COORD_BOUND..=COORD_BOUND)
    }

    pub fn scalar(&mut self) -> Scalar {
        Scalar::int(self.int())
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let x = self.int();
            if x != 0 {
                return Scalar::int(x);
            }
        }
    }

    pub fn vector(&mut self, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar()).collect()
    }

    pub fn nonzero_vector(&mut self, n: usize) -> Vec<Scalar> {
        assert!(n > 0);
        loop {
            let v = self.vector(n);
            if v.iter().any(|x| !x.is_zero()) {
                return v;
            }
        }
    }

    /// Random integer combination of the stored basis of `s`.
    pub fn in_subspace(&mut self, s: &Subspace) -> Vec<Scalar> {
        let c = self.vector(s.dim());
        s.vector(&c)
    }

    pub fn nonzero_in_subspace(&mut self, s: &Subspace) -> Vec<Scalar> {
        let c = self.nonzero_vector(s.dim());
        s.vector(&c)
    }

    pub fn matrix(&mut self, rows: usize, cols: usize) -> MatrixQ {
        MatrixQ::from_vec(rows, cols, self.vector(rows * cols))
    }

    /// Random invertible integer matrix (resampled until the rank is full).
    pub fn invertible(&mut self, n: usize) -> MatrixQ {
        loop {
            let m = self.matrix(n, n);
            if crate::linear::rank(&m) == n {
                return m;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let a: Vec<i64> = {
            let mut s = Sampler::new(42);
            (0..50).map(|_| s.int()).collect()
        };
        let b: Vec<i64> = {
            let mut s = Sampler::new(42);
            (0..50).map(|_| s.int()).collect()
        };
        assert_eq!(a, b);
        assert!(a.iter().all(|x| x.abs() <= COORD_BOUND));
    }
}
