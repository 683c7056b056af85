use crate::homalg::cohomology_dim;
use crate::repmod::{decompose, is_isomorphic, HomSpace, Morphism, Representation};
use crate::verdict::{Answer, DimValue, DimVerdict, Witness};

use super::class::TestClass;
use super::exactness::{is_n_projective, n_precover};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelStatus {
    /// `K_m` is `n`-projective; it is the last term.
    Finite(usize),
    /// The essential parts of `K_start` and `K_repeat` are isomorphic.
    Infinite { start: usize, repeat: usize },
    /// Kernels `K_0 .. K_B` are not `n`-projective.
    CutoffReached(usize),
}

/// `0 -> K_m -> P_{m-1} -> ... -> P_0 -> M -> 0` with each `P_j` a sum of
/// class members and each step a precover.
#[derive(Clone, Debug)]
pub struct RelResolution {
    pub module: Representation,
    /// `P_0, P_1, ...`; for a finite resolution the last term is `K_m`.
    pub terms: Vec<Representation>,
    pub augmentation: Morphism,
    /// `differentials[j - 1] : P_j -> P_{j-1}`.
    pub differentials: Vec<Morphism>,
    /// `K_0 = M, K_1, ...` with `K_{j+1} = ker(P_j -> K_j)`.
    pub kernels: Vec<Representation>,
    /// `inclusions[j - 1] : K_j -> P_{j-1}`.
    pub inclusions: Vec<Morphism>,
    pub status: RelStatus,
    /// All `n`-projectivity decisions used were certified.
    pub certified: bool,
}

impl RelResolution {
    pub fn length(&self) -> Option<usize> {
        match self.status {
            RelStatus::Finite(m) => Some(m),
            _ => None,
        }
    }

    pub fn term(&self, j: usize) -> Option<Representation> {
        match self.terms.get(j) {
            Some(t) => Some(t.clone()),
            None if self.length().is_some() => Some(Representation::zero(self.module.algebra())),
            None => None,
        }
    }

    pub fn differential(&self, j: usize) -> Option<Morphism> {
        if j == 0 {
            return None;
        }
        if let Some(d) = self.differentials.get(j - 1) {
            return Some(d.clone());
        }
        let (s, t) = (self.term(j)?, self.term(j - 1)?);
        Some(Morphism::zero(&s, &t))
    }
}

/// The summands of `k` outside `P^{<n+1}`.
pub fn essential_part(k: &Representation, class: &TestClass) -> Representation {
    let parts: Vec<Representation> = decompose(k)
        .into_iter()
        .filter(|x| class.admits(x) != Some(true))
        .collect();
    Representation::direct_sum(k.algebra(), &parts)
}

fn build(m: &Representation, class: &TestClass, cutoff: usize, stop_on_period: bool, minimize: bool) -> RelResolution {
    let mut res = RelResolution {
        module: m.clone(),
        terms: Vec::new(),
        augmentation: Morphism::identity(m),
        differentials: Vec::new(),
        kernels: vec![m.clone()],
        inclusions: Vec::new(),
        status: RelStatus::CutoffReached(cutoff),
        certified: true,
    };
    let mut essentials: Vec<Representation> = Vec::new();
    for j in 0..=cutoff {
        let k = res.kernels[j].clone();
        let v = is_n_projective(&k, class);
        res.certified &= v.is_decisive();
        if v.bounded == Answer::Yes {
            res.terms.push(k.clone());
            if j > 0 {
                res.differentials.push(res.inclusions[j - 1].clone());
            }
            res.status = RelStatus::Finite(j);
            return res;
        }
        let p = n_precover(&k, class, minimize);
        let (kernel, inc) = p.map.kernel();
        if j == 0 {
            res.augmentation = p.map.clone();
        } else {
            res.differentials.push(p.map.then(&res.inclusions[j - 1]));
        }
        res.terms.push(p.module.clone());
        res.kernels.push(kernel.clone());
        res.inclusions.push(inc);
        if stop_on_period {
            if essentials.is_empty() {
                essentials.push(essential_part(&k, class));
            }
            let e = essential_part(&kernel, class);
            for (i, earlier) in essentials.iter().enumerate() {
                if !e.is_zero() && earlier.dims() == e.dims() && is_isomorphic(earlier, &e).unwrap() {
                    res.status = RelStatus::Infinite { start: i, repeat: j + 1 };
                    return res;
                }
            }
            essentials.push(e);
        }
    }
    res
}

/// Relative resolution by precovers, ending at the first `n`-projective
/// kernel, at a repeated essential kernel, or after `B` steps.
pub fn n_resolution(m: &Representation, class: &TestClass, minimize: bool) -> RelResolution {
    build(m, class, class.bounds().cutoff, true, minimize)
}

/// Relative resolution computed through `P_depth` unless it ends earlier.
pub fn n_resolution_to_depth(m: &Representation, class: &TestClass, depth: usize) -> RelResolution {
    build(m, class, depth, false, false)
}

/// `n`-Ext as the cohomology of `Hom(P_•, N)` over a relative resolution.
pub fn n_ext(m: &Representation, n: &Representation, i: usize, class: &TestClass) -> DimVerdict {
    let r = n_resolution_to_depth(m, class, i + 1);
    n_ext_from(&r, n, i, class)
}

pub fn n_ext_from(r: &RelResolution, n: &Representation, i: usize, class: &TestClass) -> DimVerdict {
    let bounds = class.bounds();
    if r.module.is_zero() {
        return DimVerdict::new(DimValue::Finite(0), true, bounds);
    }
    let reached = r.length().is_some() || r.terms.len() > i + 1;
    if !reached {
        return DimVerdict::new(DimValue::AtLeast(0), false, bounds);
    }
    let term = |j: usize| r.term(j).expect("deep enough");
    let diff = |j: usize| r.differential(j);
    let d = cohomology_dim(n, &term, &diff, i);
    DimVerdict::new(DimValue::Finite(d), class.decides() && r.certified, bounds)
}

/// Least `m` with `K_m` `n`-projective.
pub fn n_pd(m: &Representation, class: &TestClass) -> DimVerdict {
    let bounds = class.bounds();
    if m.is_zero() {
        return DimVerdict::new(DimValue::NegInfinite, true, bounds);
    }
    n_pd_of(&n_resolution(m, class, false), class)
}

pub fn n_pd_of(r: &RelResolution, class: &TestClass) -> DimVerdict {
    let bounds = class.bounds();
    if r.module.is_zero() {
        return DimVerdict::new(DimValue::NegInfinite, true, bounds);
    }
    match r.status {
        RelStatus::Finite(m) => DimVerdict::new(DimValue::Finite(m), r.certified, bounds),
        RelStatus::Infinite { start, repeat } => DimVerdict::new(DimValue::Infinite, r.certified, bounds)
            .with_witness(Witness::Period { start, repeat }),
        RelStatus::CutoffReached(b) => DimVerdict::new(DimValue::AtLeast(b + 1), false, bounds),
    }
}

/// `dim n-Ext^e(N, M)` for `e >= 1` from the kernels of a relative
/// resolution of `N`: the cokernel of `Hom(P_{e-1}, M) -> Hom(K_e, M)`.
/// `None` when the resolution stops before `K_e`.
fn shifted_ext(r: &RelResolution, m: &Representation, e: usize) -> Option<usize> {
    if r.length().is_some_and(|len| e > len) {
        return Some(0);
    }
    let k = r.kernels.get(e)?;
    let hk = HomSpace::new(k, m).unwrap().dim();
    let p = &r.terms[e - 1];
    let rank = HomSpace::new(p, m).unwrap().precompose_matrix(&r.inclusions[e - 1]).rank();
    Some(hk - rank)
}

/// `n`-Ext in degree `e >= 1`, extended along a detected period.
fn ext_in_degree(r: &RelResolution, m: &Representation, e: usize) -> Option<usize> {
    let mut e = e;
    if let RelStatus::Infinite { start, repeat } = r.status {
        while e > repeat {
            e -= repeat - start;
        }
    }
    shifted_ext(r, m, e)
}

/// Least `m` with `n-Ext^{m+1}(N, M) = 0` for every inventory member `N`.
pub fn n_id(m: &Representation, class: &TestClass) -> DimVerdict {
    let bounds = class.bounds();
    if m.is_zero() {
        return DimVerdict::new(DimValue::NegInfinite, true, bounds);
    }
    if class.covers_all() {
        return DimVerdict::new(DimValue::Finite(0), true, bounds);
    }
    let inv = class.inventory();
    let resolutions: Vec<RelResolution> = inv.modules().iter().map(|x| n_resolution(x, class, false)).collect();
    let mut certified = class.is_complete() && inv.is_complete();
    certified &= resolutions.iter().all(|r| r.certified);
    for deg in 0..=bounds.cutoff {
        let e = deg + 1;
        let mut all_zero = true;
        for (r, x) in resolutions.iter().zip(inv.modules()) {
            match ext_in_degree(r, m, e) {
                Some(0) => {}
                Some(_) => {
                    all_zero = false;
                    if let RelStatus::Infinite { start, .. } = r.status {
                        if e > start {
                            return DimVerdict::new(DimValue::Infinite, r.certified && class.is_complete(), bounds)
                                .with_witness(Witness::Module(x.clone()));
                        }
                    }
                }
                None => {
                    all_zero = false;
                    certified = false;
                }
            }
        }
        if all_zero {
            return DimVerdict::new(DimValue::Finite(deg), certified, bounds);
        }
    }
    DimVerdict::new(DimValue::AtLeast(bounds.cutoff + 1), false, bounds)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog;
    use crate::homalg::{ext, id, pd};
    use crate::relhom::class::Level;
    use crate::relhom::exactness::n_exact_subspace;
    use crate::repmod::enumerate_indecomposables;
    use crate::verdict::Bounds;

    fn class(alg: &Arc<crate::quiveralg::BoundQuiverAlgebra>, n: Level, d: usize) -> TestClass {
        let inv = Arc::new(enumerate_indecomposables(alg, d));
        TestClass::build(&inv, n, Bounds::new(d, 16))
    }

    #[test]
    fn level_zero_matches_classical() {
        for alg in [catalog::a2(), catalog::a3(), catalog::dual_numbers()] {
            let c = class(&alg, Level::Finite(0), 6);
            let b = c.bounds();
            for m in c.inventory().modules() {
                assert_eq!(n_pd(m, &c).decided(), pd(m, b).decided());
                assert_eq!(n_id(m, &c).decided(), id(m, b).decided());
                for n in c.inventory().modules() {
                    for i in 0..3 {
                        assert_eq!(n_ext(m, n, i, &c).finite(), Some(ext(m, n, i)));
                    }
                }
            }
        }
    }

    #[test]
    fn level_one_over_a2() {
        let c = class(&catalog::a2(), Level::Finite(1), 6);
        for m in c.inventory().modules() {
            assert_eq!(n_pd(m, &c).finite(), Some(0));
            assert_eq!(n_resolution(m, &c, false).length(), Some(0));
        }
    }

    #[test]
    fn dual_numbers_infinite_relative_dimension() {
        let a = catalog::dual_numbers();
        let c = class(&a, Level::Finite(1), 6);
        let k = Representation::simple(&a, 0);
        assert_eq!(n_pd(&k, &c).decided(), Some(DimValue::Infinite));
        assert_eq!(n_id(&k, &c).decided(), Some(DimValue::Infinite));
    }

    #[test]
    fn first_ext_matches_subspace() {
        for alg in [catalog::a2(), catalog::kronecker()] {
            for n in [Level::Finite(0), Level::Finite(1)] {
                let c = class(&alg, n, 3);
                for m in c.inventory().modules() {
                    for a in c.inventory().modules() {
                        let lhs = n_ext(m, a, 1, &c).value;
                        let rhs = n_exact_subspace(m, a, &c).unwrap().dim();
                        assert_eq!(lhs, DimValue::Finite(rhs));
                    }
                }
            }
        }
    }
}
