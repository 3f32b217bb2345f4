//! Randomized law checks: algebraic identities that must hold for *every*
//! input, probed with proptest-generated matrices, subspaces, permutations,
//! and small representations over the bundled field sizes.

use proptest::prelude::*;

use vsrep::field::Field;
use vsrep::linalg::{Matrix, Subspace};
use vsrep::meataxe::{is_invariant, spin};
use vsrep::normalg::{is_normal_subalgebra, normal_closure};
use vsrep::perm::Permutation;
use vsrep::rep::{perm_matrix, Representation};

fn small_field() -> impl Strategy<Value = Field> {
    prop_oneof![Just(2u32), Just(3), Just(4), Just(5), Just(8), Just(9)]
        .prop_map(|q| Field::gf(q).expect("supported size"))
}

fn entries(q: u32, len: usize) -> impl Strategy<Value = Vec<u8>> {
    proptest::collection::vec(0..q as u8, len)
}

fn matrix(field: Field, rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    entries(field.q(), rows * cols)
        .prop_map(move |data| Matrix::from_flat(&field, rows, cols, &data).expect("shape fits"))
}

/// An always-invertible matrix: a permutation of the rows of a product of a
/// unit lower and a unit upper triangular matrix (a PLU sample).
fn invertible(field: Field, n: usize) -> impl Strategy<Value = Matrix> {
    let q = field.q();
    (
        Just(field),
        entries(q, n * n),
        entries(q, n * n),
        proptest::sample::subsequence((0..n).collect::<Vec<usize>>(), n).prop_shuffle(),
    )
        .prop_map(move |(field, lo, hi, perm)| {
            let l = Matrix::from_fn(&field, n, n, |i, j| {
                if i == j {
                    1
                } else if i > j {
                    lo[i * n + j]
                } else {
                    0
                }
            });
            let u = Matrix::from_fn(&field, n, n, |i, j| {
                if i == j {
                    1
                } else if i < j {
                    hi[i * n + j]
                } else {
                    0
                }
            });
            let p = Matrix::from_fn(&field, n, n, |i, j| u8::from(perm[j] == i));
            p.mul(&l).and_then(|pl| pl.mul(&u)).expect("shapes agree")
        })
}

fn permutation(degree: usize) -> impl Strategy<Value = Permutation> {
    proptest::sample::subsequence((0..degree).collect::<Vec<usize>>(), degree)
        .prop_shuffle()
        .prop_map(|images| Permutation::from_images(images).expect("a bijection"))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn matrix_product_is_associative(
        (f, a, b, c) in (small_field(), 1usize..=4, 1usize..=4, 1usize..=4, 1usize..=4)
            .prop_flat_map(|(f, n, m, k, l)| {
                (Just(f.clone()), matrix(f.clone(), n, m), matrix(f.clone(), m, k), matrix(f, k, l))
            })
    ) {
        let _ = &f;
        let left = a.mul(&b).unwrap().mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn kronecker_satisfies_the_mixed_product_rule(
        (a, b, c, d) in (small_field(), 1usize..=3, 1usize..=3, 1usize..=2, 1usize..=2)
            .prop_flat_map(|(f, n, m, p, r)| {
                (
                    matrix(f.clone(), n, m),
                    matrix(f.clone(), p, r),
                    matrix(f.clone(), m, n),
                    matrix(f, r, p),
                )
            })
    ) {
        let left = a.kron(&b).unwrap().mul(&c.kron(&d).unwrap()).unwrap();
        let right = a.mul(&c).unwrap().kron(&b.mul(&d).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn column_action_is_the_transposed_row_action(
        (m, v) in (small_field(), 1usize..=5, 1usize..=5)
            .prop_flat_map(|(f, rows, cols)| {
                let q = f.q();
                (matrix(f, rows, cols), entries(q, cols))
            })
    ) {
        prop_assert_eq!(m.act(&v), m.transpose().row_times(&v));
    }

    #[test]
    fn row_reduction_is_idempotent_with_bounded_rank(
        m in (small_field(), 1usize..=6, 1usize..=6)
            .prop_flat_map(|(f, rows, cols)| matrix(f, rows, cols))
    ) {
        let r = m.rref();
        prop_assert!(r.rank <= m.rows().min(m.cols()));
        prop_assert_eq!(r.matrix.rref().matrix, r.matrix.clone());
        prop_assert_eq!(r.matrix.rref().pivots, r.pivots);
    }

    #[test]
    fn subspace_dimensions_are_modular(
        (f, rows_u, rows_w) in (small_field(), 1usize..=6)
            .prop_flat_map(|(f, ambient)| {
                let q = f.q();
                (
                    Just(f),
                    proptest::collection::vec(entries(q, ambient), 0..=4),
                    proptest::collection::vec(entries(q, ambient), 0..=4),
                )
            })
    ) {
        let ambient = rows_u.first().or(rows_w.first()).map(|r| r.len()).unwrap_or(1);
        let u = Subspace::from_rows(&f, ambient, &rows_u);
        let w = Subspace::from_rows(&f, ambient, &rows_w);
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(u.dim() + w.dim(), sum.dim() + meet.dim());
        for row in meet.basis_rows() {
            prop_assert!(u.contains_vec(&row) && w.contains_vec(&row));
        }
    }

    #[test]
    fn permutation_matrices_respect_composition(
        (s, t) in (3usize..=8).prop_flat_map(|d| (permutation(d), permutation(d)))
    ) {
        let f = Field::gf(2).unwrap();
        let ms = perm_matrix(&f, &s);
        let mt = perm_matrix(&f, &t);
        // compose applies the right factor first, matching column-action
        // matrix products.
        prop_assert_eq!(perm_matrix(&f, &s.compose(&t)), ms.mul(&mt).unwrap());
        prop_assert!(s.compose(&s.inverse()).is_identity());
        prop_assert_eq!(
            s.compose(&t).inverse(),
            t.inverse().compose(&s.inverse())
        );
    }

    #[test]
    fn word_evaluation_is_multiplicative(
        (rep, w1, w2) in (small_field(), 2usize..=3)
            .prop_flat_map(|(f, n)| {
                (
                    Just(f.clone()),
                    Just(n),
                    proptest::collection::vec(invertible(f, n), 2),
                )
            })
            .prop_flat_map(|(f, n, gens)| {
                let rep = Representation::new(&f, n, gens).expect("invertible generators");
                (
                    Just(rep),
                    proptest::collection::vec(0usize..2, 0..=4),
                    proptest::collection::vec(0usize..2, 0..=4),
                )
            })
    ) {
        let joined: Vec<usize> = w1.iter().chain(w2.iter()).copied().collect();
        let left = rep.evaluate_word(&joined).unwrap();
        let right = rep
            .evaluate_word(&w1)
            .unwrap()
            .mul(&rep.evaluate_word(&w2).unwrap())
            .unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn spin_builds_the_smallest_invariant_superset(
        (rep, seed) in (prop_oneof![Just(2u32), Just(3)], 2usize..=4)
            .prop_flat_map(|(q, n)| {
                let f = Field::gf(q).unwrap();
                (
                    Just(f.clone()),
                    Just(n),
                    proptest::collection::vec(invertible(f, n), 1..=2),
                )
            })
            .prop_flat_map(|(f, n, gens)| {
                let q = f.q();
                (
                    Just(Representation::new(&f, n, gens).expect("invertible generators")),
                    entries(q, n),
                )
            })
    ) {
        let sub = spin(rep.field(), rep.dim(), rep.generators(), std::slice::from_ref(&seed));
        prop_assert!(sub.contains_vec(&seed));
        prop_assert!(is_invariant(rep.generators(), &sub));
        // Re-spinning the result adds nothing.
        let again = spin(rep.field(), rep.dim(), rep.generators(), &sub.basis_rows());
        prop_assert_eq!(again.dim(), sub.dim());
    }

    #[test]
    fn normal_closures_are_normal_unital_and_idempotent(
        (rep, seed) in (prop_oneof![Just(2u32), Just(3)], 2usize..=3)
            .prop_flat_map(|(q, n)| {
                let f = Field::gf(q).unwrap();
                (
                    Just(f.clone()),
                    Just(n),
                    proptest::collection::vec(invertible(f.clone(), n), 1..=2),
                    matrix(f, n, n),
                )
            })
            .prop_map(|(f, n, gens, seed)| {
                (Representation::new(&f, n, gens).expect("invertible generators"), seed)
            })
    ) {
        let closure = normal_closure(&rep, std::slice::from_ref(&seed));
        prop_assert!(is_normal_subalgebra(&rep, closure.basis()));
        let n2 = rep.dim() * rep.dim();
        let flat: Vec<Vec<u8>> = closure.basis().iter().map(|m| m.flatten()).collect();
        let span = Subspace::from_rows(rep.field(), n2, &flat);
        prop_assert!(span.contains_vec(&seed.flatten()));
        prop_assert!(span.contains_vec(&Matrix::identity(rep.field(), rep.dim()).flatten()));
        let re_closed = normal_closure(&rep, closure.basis());
        prop_assert_eq!(re_closed.dim(), closure.dim());
    }
}
