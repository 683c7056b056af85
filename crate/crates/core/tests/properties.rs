use std::sync::{Arc, LazyLock};

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use relhom::catalog;
use relhom::complexes::{
    cone, inf_n, is_contractible, is_n_exact_complex, is_n_quasi_iso, random_complex, sup_n, ChainMap,
    RandomComplexSpec,
};
use relhom::exactlin::Matrix;
use relhom::homalg::{ext, fpd, gldim, pd};
use relhom::relhom::{
    is_n_exact, is_n_projective, n_exact_subspace_indexed, n_ext, n_pd, Level, TestClass,
};
use relhom::repmod::{
    decompose, enumerate_indecomposables, hom_dim, is_isomorphic, Ext1Space, Inventory, Morphism, Representation,
};
use relhom::verdict::{Answer, Bounds, DimValue, IntValue};

const BOUNDS: Bounds = Bounds { dim_bound: 6, cutoff: 16 };

static INVENTORIES: LazyLock<Vec<Arc<Inventory>>> =
    LazyLock::new(|| catalog::all().iter().map(|a| Arc::new(enumerate_indecomposables(a, 6))).collect());

static CLASSES: LazyLock<Vec<Vec<TestClass>>> = LazyLock::new(|| {
    INVENTORIES
        .iter()
        .map(|inv| {
            [Level::Finite(0), Level::Finite(1), Level::Finite(2), Level::Infinite]
                .into_iter()
                .map(|n| TestClass::build(inv, n, BOUNDS))
                .collect()
        })
        .collect()
});

/// (algebra, first member, second member) as raw indices, reduced modulo
/// the inventory size.
fn pair() -> impl Strategy<Value = (usize, usize, usize)> {
    (0usize..5, any::<usize>(), any::<usize>()).prop_map(|(a, i, j)| {
        let k = INVENTORIES[a].len();
        (a, i % k, j % k)
    })
}

fn member(a: usize, i: usize) -> &'static Representation {
    &INVENTORIES[a].modules()[i]
}

/// A random nonsplit-or-split extension of two inventory members.
fn extension(a: usize, i: usize, j: usize, coeffs: &[u32]) -> (Representation, Morphism, Morphism) {
    let ext = Ext1Space::new(member(a, i), member(a, j)).unwrap();
    let c: Vec<u32> = (0..ext.dim()).map(|k| coeffs[k % coeffs.len()]).collect();
    ext.middle_term(&ext.cocycle_of(&c))
}

fn conjugate(m: &Representation, seeds: &[u32]) -> Representation {
    let f = m.field();
    let mut k = 0;
    let mut next = || {
        k += 1;
        seeds[k % seeds.len()] as u64 + k as u64
    };
    let changes: Vec<Matrix> = m
        .dims()
        .iter()
        .map(|&d| loop {
            let g = Matrix::from_fn(f, d, d, |_, _| f.reduce(next() as i64 * 7919 % 1009));
            if g.is_invertible() {
                break g;
            }
        })
        .collect();
    let q = m.algebra().quiver();
    let maps = q
        .arrows()
        .iter()
        .zip(m.maps())
        .map(|(a, x)| changes[a.target].mul(x).mul(&changes[a.source].inverse().unwrap()))
        .collect();
    Representation::new(m.algebra(), m.dims().to_vec(), maps).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn euler_form_on_hereditary_algebras((a, i, j) in pair()) {
        let alg = INVENTORIES[a].algebra();
        prop_assume!(alg.is_path_algebra());
        let (m, n) = (member(a, i), member(a, j));
        let diag: i64 = m.dims().iter().zip(n.dims()).map(|(x, y)| (x * y) as i64).sum();
        let off: i64 = alg.quiver().arrows().iter().map(|e| (m.dims()[e.source] * n.dims()[e.target]) as i64).sum();
        prop_assert_eq!(diag - off, hom_dim(m, n).unwrap() as i64 - ext(m, n, 1) as i64);
    }

    #[test]
    fn decompose_then_sum_is_isomorphic((a, i, j) in pair(), coeffs in prop::collection::vec(0u32..5, 1..4)) {
        let (e, _, _) = extension(a, i, j, &coeffs);
        let parts = decompose(&e);
        let again = Representation::direct_sum(e.algebra(), &parts);
        prop_assert!(is_isomorphic(&again, &e).unwrap());
    }

    #[test]
    fn duality_reverses_hom((a, i, j) in pair()) {
        let (m, n) = (member(a, i), member(a, j));
        prop_assert_eq!(hom_dim(m, n).unwrap(), hom_dim(&n.dual(), &m.dual()).unwrap());
    }

    #[test]
    fn extensions_add_dimension_vectors((a, i, j) in pair(), coeffs in prop::collection::vec(0u32..5, 1..4)) {
        let (e, inj, surj) = extension(a, i, j, &coeffs);
        let sum: Vec<usize> = inj.source().dims().iter().zip(surj.target().dims()).map(|(x, y)| x + y).collect();
        prop_assert_eq!(e.dims(), &sum[..]);
    }

    #[test]
    fn ext_vanishes_beyond_gldim((a, i, j) in pair(), k in 1usize..4) {
        let alg = INVENTORIES[a].algebra();
        if let Some(g) = gldim(alg, BOUNDS).finite() {
            if k > g {
                prop_assert_eq!(ext(member(a, i), member(a, j), k), 0);
            }
        }
    }

    #[test]
    fn pd_of_a_sum_is_the_max((a, i, j) in pair()) {
        let (m, n) = (member(a, i), member(a, j));
        let alg = INVENTORIES[a].algebra();
        let (pm, pn) = (pd(m, BOUNDS), pd(n, BOUNDS));
        let ps = pd(&Representation::direct_sum(alg, &[m.clone(), n.clone()]), BOUNDS);
        if let (Some(x), Some(y), Some(z)) = (pm.decided(), pn.decided(), ps.decided()) {
            prop_assert_eq!(x.max(y), z);
        }
    }

    #[test]
    fn ext_is_invariant_under_base_change((a, i, j) in pair(), k in 1usize..3, seeds in prop::collection::vec(0u32..1000, 1..5)) {
        let (m, n) = (member(a, i), member(a, j));
        prop_assert_eq!(ext(&conjugate(m, &seeds), n, k), ext(m, n, k));
    }

    #[test]
    fn level_zero_matches_absolute_theory((a, i, j) in pair(), coeffs in prop::collection::vec(0u32..5, 1..4)) {
        let c = &CLASSES[a][0];
        let (m, n) = (member(a, i), member(a, j));
        prop_assert_eq!(n_ext(m, n, 1, c).decided(), Some(DimValue::Finite(ext(m, n, 1))));
        prop_assert_eq!(n_pd(m, c).decided(), pd(m, BOUNDS).decided());
        let projective = m.top_dims().iter().sum::<usize>() == 1 && m.total_dim() == m.projective_cover().unwrap().projective.total_dim();
        prop_assert_eq!(is_n_projective(m, c).answer, if projective { Answer::Yes } else { Answer::No });
        let (_, inj, surj) = extension(a, i, j, &coeffs);
        prop_assert_eq!(is_n_exact(&inj, &surj, c).unwrap().answer, Answer::Yes);
    }

    #[test]
    fn exact_subspaces_shrink_as_n_grows((a, i, j) in pair()) {
        let classes = &CLASSES[a];
        let spaces: Vec<Matrix> = classes.iter().map(|c| n_exact_subspace_indexed(i, j, c).basis).collect();
        for lo in 0..spaces.len() {
            for hi in lo + 1..spaces.len() {
                let f = spaces[lo].field();
                let joint = Matrix::hstack(f, spaces[lo].rows(), &[&spaces[lo], &spaces[hi]]);
                prop_assert_eq!(joint.rank(), spaces[lo].rank());
            }
        }
    }

    #[test]
    fn split_sequences_are_n_exact((a, i, j) in pair(), level in 0usize..4) {
        let c = &CLASSES[a][level];
        let alg = INVENTORIES[a].algebra();
        let (sum, incs, projs) = Representation::direct_sum_with_maps(alg, &[member(a, j).clone(), member(a, i).clone()]);
        let _ = sum;
        prop_assert_eq!(is_n_exact(&incs[0], &projs[1], c).unwrap().answer, Answer::Yes);
    }

    #[test]
    fn class_members_are_n_projective_with_vanishing_n_ext((a, i, j) in pair(), level in 0usize..4, k in 1usize..3) {
        let c = &CLASSES[a][level];
        let members = c.members();
        let p = &members[i % members.len()];
        prop_assert_eq!(is_n_projective(p, c).answer, Answer::Yes);
        let v = n_ext(p, member(a, j), k, c);
        prop_assert_eq!(v.value, DimValue::Finite(0));
    }

    #[test]
    fn ext_oracle_and_sandwich((a, i, j) in pair(), level in 0usize..4) {
        let c = &CLASSES[a][level];
        let (m, n) = (member(a, i), member(a, j));
        let sub = n_exact_subspace_indexed(i, j, c);
        let e = n_ext(m, n, 1, c);
        if e.certified && sub.certified {
            prop_assert_eq!(e.value, DimValue::Finite(sub.dim()));
        }
        let np = n_pd(m, c);
        if let (Some(DimValue::Finite(k)), Some(DimValue::Finite(p)), Some(lvl)) =
            (np.decided(), pd(m, BOUNDS).decided(), c.level().finite())
        {
            prop_assert!(k <= p && p <= lvl + k, "n-pd {k}, pd {p}, n {lvl}");
        }
    }

    #[test]
    fn stalk_pd_matches_ext_vanishing((a, i, _j) in pair(), level in 0usize..3) {
        let c = &CLASSES[a][level];
        let m = member(a, i);
        if let Some(DimValue::Finite(k)) = n_pd(m, c).decided() {
            let all_vanish = |deg: usize| INVENTORIES[a].modules().iter().all(|n| n_ext(m, n, deg, c).value == DimValue::Finite(0));
            prop_assert!(all_vanish(k + 1));
            if k > 0 {
                prop_assert!(!all_vanish(k));
            }
        }
    }

    #[test]
    fn complex_invariants(a in 0usize..5, seed in any::<u64>(), level in 0usize..3, k in -2i64..3) {
        let c = &CLASSES[a][level];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_complex(&INVENTORIES[a], RandomComplexSpec::default(), &mut rng);
        prop_assert!(is_contractible(&cone(&ChainMap::identity(&x))));
        let y = x.shift(k);
        let (i0, i1) = (inf_n(&x, c), inf_n(&y, c));
        if let (Some(IntValue::Finite(u)), Some(IntValue::Finite(v))) = (i0.decided(), i1.decided()) {
            prop_assert_eq!(v, u - k);
        }
        let (s0, s1) = (sup_n(&x, c), sup_n(&y, c));
        if let (Some(IntValue::Finite(u)), Some(IntValue::Finite(v))) = (s0.decided(), s1.decided()) {
            prop_assert_eq!(v, u - k);
        }
        if is_contractible(&x) {
            prop_assert_eq!(is_n_exact_complex(&x, c).bounded, Answer::Yes);
        }
        if level == 0 {
            prop_assert_eq!(is_n_exact_complex(&x, c).answer == Answer::Yes, x.is_exact());
            let zero = ChainMap::zero(&x, &x.shift(k));
            let homology = |z: &relhom::complexes::BoundedComplex| -> Vec<Vec<usize>> {
                (-6..7).map(|d| z.homology_dims(d)).collect()
            };
            let quasi = homology(&x).iter().all(|h| h.iter().all(|&v| v == 0))
                && homology(&x.shift(k)).iter().all(|h| h.iter().all(|&v| v == 0));
            prop_assert_eq!(is_n_quasi_iso(&zero, c).answer == Answer::Yes, quasi);
        }
    }
}

#[test]
fn fpd_at_most_gldim() {
    for inv in INVENTORIES.iter() {
        let (f, g) = (fpd(inv, BOUNDS), gldim(inv.algebra(), BOUNDS));
        if let (Some(f), Some(g)) = (f.finite(), g.finite()) {
            assert!(f <= g);
        }
    }
}
