use rayon::prelude::*;

use crate::homalg::gldim;
use crate::verdict::{DimValue, DimVerdict, Witness};

use super::class::{Level, TestClass};
use super::resolution::n_pd;

/// Printed whenever the representation type is not certified finite.
pub const FD_CAVEAT: &str = "computed over finite-dimensional modules only; the algebra is not \
certified to be of finite representation type, and the relative global dimension over all \
modules can be larger (for hereditary algebras of infinite representation type the 1-global \
dimension is 1 while the finite-dimensional value is 0)";

/// Relative global dimension over finite-dimensional modules: the supremum
/// of `n`-projective dimensions over the inventory.
pub fn fd_n_gldim(class: &TestClass) -> DimVerdict {
    let bounds = class.bounds();
    let inv = class.inventory();
    let alg = inv.algebra();
    let gl = gldim(alg, bounds);
    let caveat = (!inv.is_complete()).then_some(FD_CAVEAT);
    let finish = |v: DimVerdict| match caveat {
        Some(c) => v.with_caveat(c),
        None => v,
    };
    // every finitely generated module lies in P^{<n+1} and is n-projective
    if let (Some(g), Level::Finite(n)) = (gl.finite(), class.level()) {
        if g <= n {
            return finish(DimVerdict::new(DimValue::Finite(0), true, bounds));
        }
    }
    if class.level() == Level::Infinite && gl.finite().is_some() {
        return finish(DimVerdict::new(DimValue::Finite(0), true, bounds));
    }
    let values: Vec<DimVerdict> = inv.modules().par_iter().map(|m| n_pd(m, class)).collect();
    let mut value = DimValue::Finite(0);
    let mut witness = None;
    let mut certified = inv.is_complete();
    for (v, m) in values.iter().zip(inv.modules()) {
        if v.decided() == Some(DimValue::Infinite) {
            return finish(
                DimVerdict::new(DimValue::Infinite, true, bounds).with_witness(Witness::Module(m.clone())),
            );
        }
        certified &= v.certified;
        let merged = value.max(v.value);
        if merged != value {
            witness = Some(Witness::Module(m.clone()));
        }
        value = merged;
    }
    // n-pd never exceeds pd
    if value.finite().is_some() && value.finite() == gl.finite() {
        certified = values.iter().any(|v| v.certified && v.value == value);
    }
    let mut out = DimVerdict::new(value, certified, bounds);
    if let Some(w) = witness {
        out = out.with_witness(w);
    }
    finish(out)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::catalog;
    use crate::repmod::enumerate_indecomposables;
    use crate::verdict::Bounds;

    fn value(alg: &Arc<crate::quiveralg::BoundQuiverAlgebra>, n: Level) -> DimVerdict {
        let inv = Arc::new(enumerate_indecomposables(alg, 6));
        fd_n_gldim(&TestClass::build(&inv, n, Bounds::new(6, 16)))
    }

    #[test]
    fn finite_type_hereditary() {
        for alg in [catalog::a2(), catalog::a3()] {
            let v = value(&alg, Level::Finite(1));
            assert_eq!(v.finite(), Some(0));
            assert!(v.caveat.is_none());
            assert_eq!(value(&alg, Level::Finite(0)).finite(), Some(1));
        }
    }

    #[test]
    fn kronecker_carries_caveat() {
        let v = value(&catalog::kronecker(), Level::Finite(1));
        assert_eq!(v.finite(), Some(0));
        assert_eq!(v.caveat.as_deref(), Some(FD_CAVEAT));
        assert_eq!(value(&catalog::kronecker(), Level::Finite(0)).finite(), Some(1));
    }

    #[test]
    fn level_zero_is_global_dimension() {
        for alg in catalog::all() {
            let b = Bounds::new(6, 16);
            assert_eq!(value(&alg, Level::Finite(0)).decided(), gldim(&alg, b).decided());
        }
    }

    #[test]
    fn dual_numbers_infinite() {
        for n in [Level::Finite(0), Level::Finite(2), Level::Infinite] {
            assert_eq!(value(&catalog::dual_numbers(), n).decided(), Some(DimValue::Infinite));
        }
    }
}
