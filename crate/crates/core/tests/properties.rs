//! Property tests for the algebraic invariants that hold on all inputs, not
//! just the named fixtures.

use proptest::prelude::*;

use liedeg::analysis::{comm_degree, DegreeMethod};
use liedeg::catalog::{make, Family};
use liedeg::corpus::{item_rng, random_invertible};
use liedeg::gfq::Field;
use liedeg::io;
use liedeg::linalg::{Matrix, Subspace};
use liedeg::DEFAULT_ENUMERATION_CAP;

const CAP: u64 = DEFAULT_ENUMERATION_CAP;

fn small_field() -> impl Strategy<Value = Field> {
    prop_oneof![
        Just(Field::new(2, 1, None).unwrap()),
        Just(Field::new(3, 1, None).unwrap()),
        Just(Field::new(5, 1, None).unwrap()),
        Just(Field::new(2, 2, None).unwrap()),
        Just(Field::new(3, 2, None).unwrap()),
    ]
}

fn matrix_of_codes(
    field: Field,
    rows: usize,
    cols: usize,
    codes: Vec<u64>,
) -> Matrix {
    let q = field.order();
    let vecs: Vec<Vec<_>> = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| field.element(codes[i * cols + j] % q).unwrap())
                .collect()
        })
        .collect();
    Matrix::from_rows(&field, cols, &vecs).unwrap()
}

fn small_family() -> impl Strategy<Value = Family> {
    prop_oneof![
        Just(Family::Heisenberg(1)),
        Just(Family::Affine2),
        Just(Family::L55),
        Just(Family::L57),
        Just(Family::Abelian(3)),
        Just(Family::DirectSum(
            Box::new(Family::Heisenberg(1)),
            Box::new(Family::Abelian(1))
        )),
    ]
}

proptest! {
    #[test]
    fn rank_nullity(
        field in small_field(),
        rows in 0usize..5,
        cols in 0usize..5,
        codes in proptest::collection::vec(any::<u64>(), 25),
    ) {
        let m = matrix_of_codes(field, rows, cols, codes);
        let (_, rank) = m.rref();
        prop_assert_eq!(rank + m.kernel_basis().dim(), cols);
    }

    #[test]
    fn rref_is_idempotent_and_canonical(
        field in small_field(),
        rows in 1usize..5,
        cols in 1usize..5,
        codes in proptest::collection::vec(any::<u64>(), 25),
        seed in any::<u64>(),
    ) {
        let m = matrix_of_codes(field.clone(), rows, cols, codes);
        let (r1, rank1) = m.rref();
        let (r2, rank2) = r1.rref();
        prop_assert_eq!(&r1, &r2);
        prop_assert_eq!(rank1, rank2);

        // Row-equivalent matrices share the same reduced form.
        let mut rng = item_rng(seed, "rref-canonical");
        let p = random_invertible(&field, rows, &mut rng);
        let (r3, rank3) = p.matmul(&m).unwrap().rref();
        prop_assert_eq!(r1, r3);
        prop_assert_eq!(rank1, rank3);
    }

    #[test]
    fn sum_and_intersection_dimensions(
        field in small_field(),
        n in 1usize..5,
        codes_u in proptest::collection::vec(any::<u64>(), 20),
        codes_v in proptest::collection::vec(any::<u64>(), 20),
    ) {
        let rows = 3.min(n + 1);
        let mu = matrix_of_codes(field.clone(), rows, n, codes_u);
        let mv = matrix_of_codes(field, rows, n, codes_v);
        let u = Subspace::row_space(&mu);
        let v = Subspace::row_space(&mv);
        let s = u.sum(&v).unwrap();
        let i = u.intersect(&v).unwrap();
        prop_assert_eq!(s.dim() + i.dim(), u.dim() + v.dim());
        prop_assert!(i.le(&u).unwrap());
        prop_assert!(i.le(&v).unwrap());
        prop_assert!(u.le(&s).unwrap());
    }

    #[test]
    fn complement_splits_the_ambient_space(
        field in small_field(),
        n in 1usize..5,
        codes in proptest::collection::vec(any::<u64>(), 20),
    ) {
        let rows = 3.min(n);
        let u = Subspace::row_space(&matrix_of_codes(field.clone(), rows, n, codes));
        let full = Subspace::full(&field, n);
        let c = u.complement_in(&full).unwrap();
        prop_assert!(u.intersect(&c).unwrap().is_zero());
        prop_assert_eq!(u.sum(&c).unwrap(), full);
        prop_assert_eq!(u.dim() + c.dim(), n);
    }

    #[test]
    fn brackets_are_alternating_and_jacobi_on_full_vectors(
        family in small_family(),
        p in prop_oneof![Just(2u64), Just(3u64)],
        codes in proptest::collection::vec(any::<u64>(), 21),
    ) {
        let f = Field::new(p, 1, None).unwrap();
        let l = make(&family, &f).unwrap();
        let n = l.dim();
        let vec_at = |offset: usize| -> Vec<_> {
            (0..n).map(|t| f.element(codes[offset + t] % p).unwrap()).collect()
        };
        let (u, v, w) = (vec_at(0), vec_at(7), vec_at(14));
        prop_assert_eq!(l.bracket(&u, &u).unwrap(), l.zero_vector());

        // [u,[v,w]] + [w,[u,v]] + [v,[w,u]] = 0.
        let t1 = l.bracket(&u, &l.bracket(&v, &w).unwrap()).unwrap();
        let t2 = l.bracket(&w, &l.bracket(&u, &v).unwrap()).unwrap();
        let t3 = l.bracket(&v, &l.bracket(&w, &u).unwrap()).unwrap();
        let total: Vec<_> = (0..n)
            .map(|i| f.add(t1[i], f.add(t2[i], t3[i])))
            .collect();
        prop_assert_eq!(total, l.zero_vector());
    }

    #[test]
    fn degree_is_invariant_under_basis_change(
        family in small_family(),
        p in prop_oneof![Just(2u64), Just(3u64)],
        seed in any::<u64>(),
    ) {
        let f = Field::new(p, 1, None).unwrap();
        let l = make(&family, &f).unwrap();
        let mut rng = item_rng(seed, "degree-invariance");
        let m = random_invertible(&f, l.dim(), &mut rng);
        let moved = l.change_basis(&m).unwrap();
        let before = comm_degree(&l, DegreeMethod::RankProjective, CAP).unwrap();
        let after = comm_degree(&moved, DegreeMethod::RankProjective, CAP).unwrap();
        prop_assert_eq!(before.degree, after.degree);
        prop_assert_eq!(before.breadth, after.breadth);
        prop_assert_eq!(before.center_dim, after.center_dim);
        prop_assert_eq!(before.derived_dim, after.derived_dim);
        prop_assert_eq!(before.rank_histogram, after.rank_histogram);
    }

    #[test]
    fn algebra_files_roundtrip(
        family in small_family(),
        field in small_field(),
    ) {
        let l = make(&family, &field).unwrap();
        let text = io::emit(&l);
        let back = io::parse(&text).unwrap();
        prop_assert_eq!(io::emit(&back), text);
        prop_assert_eq!(back.sparse_brackets(), l.sparse_brackets());
    }
}
