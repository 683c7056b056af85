use std::sync::Arc;

use crate::error::Result;
use crate::exactlin::Matrix;
use crate::repmod::{check_short_exact, decompose, Ext1Space, HomSpace, Morphism, Representation};
use crate::verdict::{Answer, Verdict, Witness};

use super::class::TestClass;

/// Linear map `Ext^1(C, A) -> Ext^1(T, A)`, `ξ ↦ f^* ξ`, in basis coordinates.
pub(crate) fn pullback_matrix(ext_ca: &Ext1Space, ext_ta: &Ext1Space, f: &Morphism) -> Matrix {
    let field = ext_ca.right().field();
    let cols: Vec<Vec<u32>> = (0..ext_ca.dim())
        .map(|k| ext_ta.class_coords(&ext_ca.pullback(&ext_ca.basis_vector(k), f)))
        .collect();
    Matrix::from_fn(field, ext_ta.dim(), ext_ca.dim(), |r, c| cols[c][r])
}

/// Decides whether `0 -> A -> B -> C -> 0` stays exact under `Hom(T, -)` for
/// every `T` in the class. `No` carries a map `T -> C` that does not lift.
pub fn is_n_exact(inj: &Morphism, surj: &Morphism, class: &TestClass) -> Result<Verdict> {
    check_short_exact(inj, surj)?;
    let bounds = class.bounds();
    let (a, c) = (inj.source(), surj.target());
    let ext = Ext1Space::new(c, a)?;
    let xi = ext.class_coords(&ext.class_of_sequence(inj, surj)?);
    if xi.iter().all(|&x| x == 0) {
        return Ok(Verdict::yes(true, bounds));
    }
    if class.admits(c) == Some(true) {
        let id = Morphism::identity(c);
        return Ok(Verdict::no(true, bounds, Witness::Unliftable { test: c.clone(), map: id }));
    }
    let cocycle = ext.cocycle_of(&xi);
    for t in class.members() {
        let ext_ta = Ext1Space::new(t, a)?;
        if ext_ta.dim() == 0 {
            continue;
        }
        for f in HomSpace::new(t, c)?.elements() {
            let image = ext_ta.class_coords(&ext.pullback(&cocycle, &f));
            if image.iter().any(|&x| x != 0) {
                return Ok(Verdict::no(true, bounds, Witness::Unliftable { test: t.clone(), map: f }));
            }
        }
    }
    Ok(Verdict::yes(class.is_complete(), bounds))
}

/// The classes of `n`-exact sequences inside `Ext^1(C, A)`.
#[derive(Clone, Debug)]
pub struct ExactSubspace {
    pub ext: Arc<Ext1Space>,
    /// Columns spanning the subspace, in basis coordinates of `ext`.
    pub basis: Matrix,
    /// The subspace is exact rather than an upper bound: holds when the
    /// class is complete, or when the subspace is zero.
    pub certified: bool,
}

impl ExactSubspace {
    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// A nonsplit `n`-exact sequence from the first basis vector.
    pub fn witness(&self) -> Option<Witness> {
        if self.dim() == 0 {
            return None;
        }
        let coeffs: Vec<u32> = (0..self.basis.rows()).map(|r| self.basis.get(r, 0)).collect();
        let (_, inj, surj) = self.ext.middle_term(&self.ext.cocycle_of(&coeffs));
        Some(Witness::Sequence { inj, surj })
    }
}

fn joint_kernel(
    ext: &Arc<Ext1Space>,
    class: &TestClass,
    c: &Representation,
    member_ext: &dyn Fn(usize) -> Arc<Ext1Space>,
) -> Matrix {
    let field = c.field();
    let mut span = Matrix::identity(field, ext.dim());
    for (t_idx, t) in class.members().iter().enumerate() {
        if span.cols() == 0 {
            break;
        }
        let ext_ta = member_ext(t_idx);
        if ext_ta.dim() == 0 {
            continue;
        }
        for f in HomSpace::new(t, c).unwrap().elements() {
            let m = pullback_matrix(ext, &ext_ta, &f).mul(&span);
            let k = m.kernel_basis();
            if k.cols() < span.cols() {
                span = span.mul(&k).image_basis();
                if span.cols() == 0 {
                    break;
                }
            }
        }
    }
    span
}

/// The joint kernel of `ξ ↦ f^* ξ` over all members `T` and maps `f : T -> C`.
pub fn n_exact_subspace(c: &Representation, a: &Representation, class: &TestClass) -> Result<ExactSubspace> {
    let ext = Arc::new(Ext1Space::new(c, a)?);
    let field = c.field();
    if ext.dim() == 0 || class.admits(c) == Some(true) {
        return Ok(ExactSubspace { basis: Matrix::zeros(field, ext.dim(), 0), ext, certified: true });
    }
    let member_ext = |t: usize| Arc::new(Ext1Space::new(&class.members()[t], a).unwrap());
    let basis = joint_kernel(&ext, class, c, &member_ext);
    let certified = basis.cols() == 0 || class.is_complete();
    Ok(ExactSubspace { ext, basis, certified })
}

/// `n_exact_subspace` for inventory members, with shared caches.
pub fn n_exact_subspace_indexed(ci: usize, ai: usize, class: &TestClass) -> ExactSubspace {
    let inv = class.inventory();
    let (c, a) = (&inv.modules()[ci], &inv.modules()[ai]);
    let ext = Arc::new(Ext1Space::new(c, a).unwrap());
    if ext.dim() == 0 || class.contains_index(ci) {
        return ExactSubspace { basis: Matrix::zeros(c.field(), ext.dim(), 0), ext, certified: true };
    }
    let member_ext = |t: usize| class.member_ext(t, ai);
    let basis = joint_kernel(&ext, class, c, &member_ext);
    let certified = basis.cols() == 0 || class.is_complete();
    ExactSubspace { ext, basis, certified }
}

fn combine(parts: Vec<Verdict>, class: &TestClass) -> Verdict {
    let bounds = class.bounds();
    if let Some(v) = parts.iter().find(|v| v.answer == Answer::No) {
        return v.clone();
    }
    if let Some(v) = parts.iter().find(|v| v.bounded == Answer::No) {
        return v.clone();
    }
    Verdict::yes(parts.iter().all(Verdict::is_yes), bounds)
}

fn nproj_indexed(i: usize, class: &TestClass) -> Verdict {
    if let Some(v) = class.nproj_cache.lock().unwrap().get(&i) {
        return v.clone();
    }
    let v = nproj_indecomposable(&class.inventory().modules()[i], Some(i), class);
    class.nproj_cache.lock().unwrap().insert(i, v.clone());
    v
}

fn nproj_indecomposable(x: &Representation, index: Option<usize>, class: &TestClass) -> Verdict {
    let bounds = class.bounds();
    let member = match index {
        Some(i) if class.contains_index(i) => Some(true),
        _ => class.admits(x),
    };
    if member == Some(true) {
        return Verdict::yes(true, bounds);
    }
    let inv = class.inventory();
    for ai in 0..inv.len() {
        let sub = match index {
            Some(ci) => n_exact_subspace_indexed(ci, ai, class),
            None => n_exact_subspace(x, &inv.modules()[ai], class).unwrap(),
        };
        if let Some(w) = sub.witness() {
            return Verdict::no(sub.certified, bounds, w);
        }
    }
    Verdict::yes(inv.is_complete(), bounds)
}

/// Decides whether `M` lifts along every `n`-exact sequence, summand by
/// summand: a member of `P^{<n+1}` does by definition, and otherwise every
/// `n`-exact sequence ending in `M` must split.
pub fn is_n_projective(m: &Representation, class: &TestClass) -> Verdict {
    let bounds = class.bounds();
    if m.is_zero() || class.admits(m) == Some(true) {
        return Verdict::yes(true, bounds);
    }
    let inv = class.inventory();
    let parts = decompose(m)
        .iter()
        .map(|x| match inv.index_of(x) {
            Some(i) => nproj_indexed(i, class),
            None => nproj_indecomposable(x, None, class),
        })
        .collect();
    combine(parts, class)
}

/// `is_n_projective` for inventory member `i`, cached.
pub fn is_n_projective_indexed(i: usize, class: &TestClass) -> Verdict {
    nproj_indexed(i, class)
}

/// A right approximation `⊕ T_j -> M` by class members: every map from a
/// member into `M` factors through it, and it is surjective since the
/// class contains the projectives.
#[derive(Clone, Debug)]
pub struct Precover {
    pub module: Representation,
    pub map: Morphism,
    /// Member index of each summand of the domain, in order.
    pub summands: Vec<usize>,
}

fn assemble(m: &Representation, class: &TestClass, chosen: &[(usize, Morphism)]) -> Precover {
    let alg = m.algebra();
    let field = m.field();
    let parts: Vec<Representation> = chosen.iter().map(|(t, _)| class.members()[*t].clone()).collect();
    let module = Representation::direct_sum(alg, &parts);
    let maps = (0..alg.num_vertices())
        .map(|v| {
            let blocks: Vec<&Matrix> = chosen.iter().map(|(_, g)| g.map_at(v)).collect();
            Matrix::hstack(field, m.dim_at(v), &blocks)
        })
        .collect();
    let map = Morphism::new(&module, m, maps).expect("sum of homomorphisms");
    Precover { module, map, summands: chosen.iter().map(|(t, _)| *t).collect() }
}

fn approximates(p: &Precover, class: &TestClass) -> bool {
    p.map.is_surjective()
        && class.members().iter().all(|t| {
            let target = HomSpace::new(t, p.map.target()).unwrap();
            let through = HomSpace::new(t, &p.module).unwrap();
            through.dim() >= target.dim() && through.postcompose_matrix(&p.map).rank() == target.dim()
        })
}

/// Precover built member by member, adding copies of `T` only for maps
/// `T -> M` not already factoring through the summands chosen so far.
/// With `minimize`, copies are then dropped greedily while the result still
/// approximates.
pub fn n_precover(m: &Representation, class: &TestClass, minimize: bool) -> Precover {
    let field = m.field();
    let mut chosen: Vec<(usize, Morphism)> = Vec::new();
    for (ti, t) in class.members().iter().enumerate() {
        let h = HomSpace::new(t, m).unwrap();
        if h.dim() == 0 {
            continue;
        }
        let mut span = if chosen.is_empty() {
            Matrix::zeros(field, h.ambient_dim(), 0)
        } else {
            let current = assemble(m, class, &chosen);
            HomSpace::new(t, &current.module).unwrap().postcompose_matrix(&current.map).image_basis()
        };
        let basis = h.basis_matrix();
        for k in 0..h.dim() {
            let col = basis.column(k);
            let grown = Matrix::hstack(field, h.ambient_dim(), &[&span, &col]);
            if grown.rank() > span.cols() {
                span = grown.image_basis();
                chosen.push((ti, h.element(k)));
            }
        }
    }
    if minimize {
        let mut i = chosen.len();
        while i > 0 {
            i -= 1;
            let mut trial = chosen.clone();
            trial.remove(i);
            if !trial.is_empty() && approximates(&assemble(m, class, &trial), class) {
                chosen = trial;
            }
        }
    }
    assemble(m, class, &chosen)
}

/// Checks the approximation property of a precover against every member.
pub fn is_precover(p: &Precover, class: &TestClass) -> bool {
    approximates(p, class)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::relhom::class::Level;
    use crate::repmod::enumerate_indecomposables;
    use crate::verdict::Bounds;

    fn class(alg: &Arc<crate::quiveralg::BoundQuiverAlgebra>, n: Level) -> TestClass {
        let inv = Arc::new(enumerate_indecomposables(alg, 6));
        TestClass::build(&inv, n, Bounds::new(6, 16))
    }

    fn a2_sequence() -> (Morphism, Morphism) {
        let a = catalog::a2();
        let ext = Ext1Space::new(&Representation::simple(&a, 0), &Representation::simple(&a, 1)).unwrap();
        let (_, inj, surj) = ext.middle_term(&ext.basis_vector(0));
        (inj, surj)
    }

    #[test]
    fn nonsplit_a2_sequence() {
        let (inj, surj) = a2_sequence();
        let c1 = class(&catalog::a2(), Level::Finite(1));
        let v = is_n_exact(&inj, &surj, &c1).unwrap();
        assert_eq!(v.answer, Answer::No);
        match v.witness {
            Some(Witness::Unliftable { test, .. }) => assert_eq!(test.dims(), &[1, 0]),
            other => panic!("unexpected witness {other:?}"),
        }
        let c0 = class(&catalog::a2(), Level::Finite(0));
        assert_eq!(is_n_exact(&inj, &surj, &c0).unwrap().answer, Answer::Yes);
    }

    #[test]
    fn split_sequences_are_n_exact() {
        let a = catalog::kronecker();
        let s = Representation::simple(&a, 0);
        let t = Representation::simple(&a, 1);
        let (sum, incs, projs) = Representation::direct_sum_with_maps(&a, &[t, s]);
        let _ = sum;
        let c = class(&a, Level::Infinite);
        let v = is_n_exact(&incs[0], &projs[1], &c).unwrap();
        assert_eq!(v.bounded, Answer::Yes);
        assert!(v.is_decisive());
    }

    #[test]
    fn not_exact_is_an_error() {
        let (inj, _) = a2_sequence();
        let c = class(&catalog::a2(), Level::Finite(1));
        let zero = Morphism::zero(inj.target(), inj.target());
        assert!(is_n_exact(&inj, &zero, &c).is_err());
    }

    #[test]
    fn subspaces_over_a2() {
        let a = catalog::a2();
        let (s1, s2) = (Representation::simple(&a, 0), Representation::simple(&a, 1));
        let c0 = class(&a, Level::Finite(0));
        assert_eq!(n_exact_subspace(&s1, &s2, &c0).unwrap().dim(), 1);
        let c1 = class(&a, Level::Finite(1));
        let sub = n_exact_subspace(&s1, &s2, &c1).unwrap();
        assert_eq!(sub.dim(), 0);
        assert!(sub.certified);
    }

    #[test]
    fn projectivity_over_a2() {
        let a = catalog::a2();
        let s1 = Representation::simple(&a, 0);
        assert_eq!(is_n_projective(&s1, &class(&a, Level::Finite(1))).answer, Answer::Yes);
        let v = is_n_projective(&s1, &class(&a, Level::Finite(0)));
        assert_eq!(v.answer, Answer::No);
        assert!(matches!(v.witness, Some(Witness::Sequence { .. })));
        let p = Representation::projective(&a, 0);
        assert_eq!(is_n_projective(&p, &class(&a, Level::Finite(0))).answer, Answer::Yes);
    }

    #[test]
    fn dual_numbers_simple_is_not_n_projective() {
        let a = catalog::dual_numbers();
        let k = Representation::simple(&a, 0);
        for n in [Level::Finite(0), Level::Finite(2), Level::Infinite] {
            assert_eq!(is_n_projective(&k, &class(&a, n)).answer, Answer::No);
        }
    }

    #[test]
    fn precovers() {
        let a = catalog::a2();
        let s1 = Representation::simple(&a, 0);
        let c1 = class(&a, Level::Finite(1));
        let p = n_precover(&s1, &c1, false);
        assert!(is_precover(&p, &c1));
        assert!(p.summands.iter().any(|&t| c1.members()[t].dims() == [1, 0]));
        let c0 = class(&a, Level::Finite(0));
        let p = n_precover(&s1, &c0, true);
        assert!(is_precover(&p, &c0));
        assert_eq!(p.module.dims(), &[1, 1]);
        let r = Representation::regular(&catalog::kronecker());
        let ck = class(&catalog::kronecker(), Level::Finite(1));
        let p = n_precover(&r, &ck, true);
        assert!(is_precover(&p, &ck));
    }
}
