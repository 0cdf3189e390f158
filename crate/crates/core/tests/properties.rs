//! Invariants of the exact kernels, checked on generated rational inputs.

use proptest::prelude::*;

use rank1::albert::{self, jordan_product, trace_form, AlbertElement};
use rank1::composition::{oct_bracket_form, oct_mul, Octonion};
use rank1::lie::{build_algebra, Family};
use rank1::linear::{rank, rref, signature, MatrixQ, QuadFormQ, Scalar, Subspace};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Scalar::new(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = MatrixQ> {
    prop::collection::vec(scalar(), rows * cols).prop_map(move |v| MatrixQ::from_vec(rows, cols, v))
}

fn any_matrix() -> impl Strategy<Value = MatrixQ> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))
}

fn symmetric(n: usize) -> impl Strategy<Value = MatrixQ> {
    matrix(n, n).prop_map(|m| m.add(&m.transpose()))
}

fn vectors(n: usize, count: usize) -> impl Strategy<Value = Vec<Vec<Scalar>>> {
    prop::collection::vec(prop::collection::vec(-3i64..=3, n), 0..=count).prop_map(|vs| {
        vs.into_iter()
            .map(|v| v.into_iter().map(Scalar::int).collect())
            .collect()
    })
}

fn octonion() -> impl Strategy<Value = Octonion> {
    prop::array::uniform8(-6i64..=6).prop_map(Octonion::from_i64)
}

fn albert_element() -> impl Strategy<Value = AlbertElement> {
    prop::collection::vec(-4i64..=4, albert::DIM).prop_map(|v| {
        AlbertElement::from_coords(&v.into_iter().map(Scalar::int).collect::<Vec<_>>())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rref_is_idempotent(m in any_matrix()) {
        let (r1, k1) = rref(&m);
        let (r2, k2) = rref(&r1);
        prop_assert_eq!(r1, r2);
        prop_assert_eq!(k1, k2);
    }

    #[test]
    fn rank_equals_transpose_rank(m in any_matrix()) {
        prop_assert_eq!(rank(&m), rank(&m.transpose()));
    }

    #[test]
    fn rank_of_product_is_bounded(a in matrix(3, 4), b in matrix(4, 2)) {
        prop_assert!(rank(&a.mul(&b)) <= rank(&a).min(rank(&b)));
    }

    #[test]
    fn signature_is_congruence_invariant(g in symmetric(4), p in matrix(4, 4)) {
        prop_assume!(rank(&p) == 4);
        let s = signature(&g).unwrap();
        let t = signature(&p.transpose().mul(&g).mul(&p)).unwrap();
        prop_assert_eq!(s, t);
        prop_assert_eq!(s.n_plus + s.n_minus, rank(&g));
    }

    #[test]
    fn negated_form_swaps_signature(g in symmetric(5)) {
        let s = signature(&g).unwrap();
        let t = signature(&g.scale(&Scalar::int(-1))).unwrap();
        prop_assert_eq!((s.n_plus, s.n_minus, s.n_zero), (t.n_minus, t.n_plus, t.n_zero));
    }

    #[test]
    fn grassmann_formula(s in vectors(5, 4), t in vectors(5, 4)) {
        let s = Subspace::span(5, &s);
        let t = Subspace::span(5, &t);
        let sum = s.sum(&t).unwrap();
        let meet = s.intersection(&t).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), s.dim() + t.dim());
        prop_assert!(sum.contains(&s).unwrap() && s.contains(&meet).unwrap());
    }

    #[test]
    fn orthogonal_complement_dimension(s in vectors(4, 4), d in prop::collection::vec(prop::sample::select(vec![-2i64, -1, 1, 3]), 4)) {
        let form = QuadFormQ::new(MatrixQ::diag(&d.into_iter().map(Scalar::int).collect::<Vec<_>>())).unwrap();
        let s = Subspace::span(4, &s);
        let perp = s.orthogonal_complement(&form).unwrap();
        prop_assert_eq!(s.dim() + perp.dim(), 4);
        prop_assert_eq!(perp.orthogonal_complement(&form).unwrap(), s);
    }

    #[test]
    fn octonion_norm_is_multiplicative(x in octonion(), y in octonion()) {
        prop_assert_eq!(oct_mul(&x, &y).norm(), &x.norm() * &y.norm());
    }

    #[test]
    fn octonions_are_alternative(x in octonion(), y in octonion()) {
        prop_assert_eq!(oct_mul(&oct_mul(&x, &x), &y), oct_mul(&x, &oct_mul(&x, &y)));
        prop_assert_eq!(oct_mul(&oct_mul(&y, &x), &x), oct_mul(&y, &oct_mul(&x, &x)));
    }

    #[test]
    fn conjugation_reverses_products(x in octonion(), y in octonion()) {
        prop_assert_eq!(oct_mul(&x, &y).conj(), oct_mul(&y.conj(), &x.conj()));
    }

    #[test]
    fn bracket_form_is_imaginary_and_antisymmetric(x in octonion(), y in octonion()) {
        let b = oct_bracket_form(&x, &y);
        prop_assert!(b.is_imaginary());
        prop_assert_eq!(&b + &oct_bracket_form(&y, &x), Octonion::zero());
    }

    #[test]
    fn jordan_product_is_commutative(x in albert_element(), y in albert_element()) {
        prop_assert_eq!(jordan_product(&x, &y), jordan_product(&y, &x));
    }

    #[test]
    fn jordan_identity(x in albert_element(), y in albert_element()) {
        let x2 = jordan_product(&x, &x);
        let lhs = jordan_product(&jordan_product(&x, &y), &x2);
        let rhs = jordan_product(&x, &jordan_product(&y, &x2));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn trace_form_is_associative(x in albert_element(), y in albert_element(), z in albert_element()) {
        prop_assert_eq!(trace_form(&jordan_product(&x, &y), &z), trace_form(&x, &jordan_product(&y, &z)));
        prop_assert_eq!(trace_form(&x, &y), trace_form(&y, &x));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn brackets_satisfy_jacobi(
        family in prop::sample::select(vec![Family::So(3), Family::Su(2), Family::Sp(2), Family::F4]),
        seed in any::<u64>(),
    ) {
        let g = build_algebra(family).unwrap();
        let mut s = rank1::sampling::Sampler::new(seed);
        let (x, y, z) = (s.vector(g.dim()), s.vector(g.dim()), s.vector(g.dim()));
        let cyc = |a: &[Scalar], b: &[Scalar], c: &[Scalar]| g.bracket(a, &g.bracket(b, c));
        let sum = rank1::linear::vec_add(&rank1::linear::vec_add(&cyc(&x, &y, &z), &cyc(&y, &z, &x)), &cyc(&z, &x, &y));
        prop_assert!(rank1::linear::vec_is_zero(&sum));
        prop_assert_eq!(g.bracket(&x, &y), rank1::linear::vec_scale(&g.bracket(&y, &x), &Scalar::int(-1)));
        // Killing form invariance: B([x,y],z) = B(x,[y,z]).
        prop_assert_eq!(g.killing_value(&g.bracket(&x, &y), &z), g.killing_value(&x, &g.bracket(&y, &z)));
    }
}
