use proptest::prelude::*;
use relhom::catalog;
use relhom::exactlin::{Matrix, PrimeField};
use relhom::repmod::Representation;

fn matrix(p: u32) -> impl Strategy<Value = Matrix> {
    (0usize..6, 0usize..6).prop_flat_map(move |(r, c)| {
        prop::collection::vec(0..p, r * c)
            .prop_map(move |data| Matrix::from_vec(PrimeField::new(p).unwrap(), r, c, data))
    })
}

/// Low-rank matrices hit the degenerate cases more often.
fn product_matrix(p: u32) -> impl Strategy<Value = Matrix> {
    (1usize..6, 1usize..6, 0usize..3).prop_flat_map(move |(r, c, k)| {
        (prop::collection::vec(0..p, r * k), prop::collection::vec(0..p, k * c)).prop_map(move |(a, b)| {
            let f = PrimeField::new(p).unwrap();
            Matrix::from_vec(f, r, k, a).mul(&Matrix::from_vec(f, k, c, b))
        })
    })
}

proptest! {
    #[test]
    fn rank_nullity(m in prop_oneof![matrix(5), matrix(7), product_matrix(5)]) {
        prop_assert_eq!(m.rank() + m.kernel_basis().cols(), m.cols());
        prop_assert!(m.mul(&m.kernel_basis()).is_zero());
    }

    #[test]
    fn rref_is_idempotent(m in prop_oneof![matrix(5), product_matrix(7)]) {
        let once = m.rref().matrix;
        prop_assert_eq!(once.rref().matrix, once);
    }

    #[test]
    fn solve_matches_rank_test(m in product_matrix(5), entries in prop::collection::vec(0u32..5, 6)) {
        let f = m.field();
        let b = Matrix::column_vector(f, entries[..m.rows()].to_vec());
        let consistent = Matrix::hstack(f, m.rows(), &[&m, &b]).rank() == m.rank();
        match m.solve(&b) {
            Some(v) => {
                prop_assert!(consistent);
                prop_assert_eq!(m.mul(&v), b);
            }
            None => prop_assert!(!consistent),
        }
    }

    #[test]
    fn linear_algebras_have_expected_dimension(n in 1usize..5) {
        let a = catalog::linear(n, 11);
        prop_assert_eq!(a.dim(), n * (n + 1) / 2);
        let counted: usize = (0..n).flat_map(|v| (0..n).map(move |w| (v, w)))
            .map(|(v, w)| a.basis_between(v, w).len())
            .sum();
        prop_assert_eq!(counted, a.dim());
    }
}

#[test]
fn basis_paths_split_by_endpoints_and_opposite_is_involutive() {
    for alg in catalog::all() {
        let n = alg.num_vertices();
        let counted: usize = (0..n).flat_map(|v| (0..n).map(move |w| (v, w))).map(|(v, w)| alg.basis_between(v, w).len()).sum();
        assert_eq!(counted, alg.dim());
        let back = alg.opposite().opposite();
        assert_eq!(back.dim(), alg.dim());
        assert_eq!(back.fingerprint(), alg.fingerprint());
    }
}

#[test]
fn relations_vanish_on_the_regular_module() {
    for alg in catalog::all() {
        let reg = Representation::regular(&alg);
        assert_eq!(reg.total_dim(), alg.dim());
        assert!(Representation::new(&alg, reg.dims().to_vec(), reg.maps().to_vec()).is_ok());
    }
}
