use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::homalg::{gldim, pd};
use crate::quiveralg::BoundQuiverAlgebra;
use crate::repmod::{Ext1Space, Inventory, Representation};
use crate::verdict::{Bounds, DimValue, DimVerdict, Verdict};

/// The level `n` of the test class `P^{<n+1}`: a natural number or `∞`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Level {
    Finite(usize),
    Infinite,
}

impl Level {
    /// Whether a module of the given projective dimension belongs to the
    /// class; `None` while the dimension is unsettled and could.
    pub fn admits(self, pd: DimValue) -> Option<bool> {
        match (self, pd) {
            (_, DimValue::NegInfinite) => Some(true),
            (_, DimValue::Infinite) => Some(false),
            (Level::Infinite, DimValue::Finite(_)) => Some(true),
            (Level::Finite(n), DimValue::Finite(k)) => Some(k <= n),
            (Level::Finite(n), DimValue::AtLeast(k)) if k > n => Some(false),
            _ => None,
        }
    }

    pub fn finite(self) -> Option<usize> {
        match self {
            Level::Finite(n) => Some(n),
            Level::Infinite => None,
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(n) => write!(f, "{n}"),
            Level::Infinite => f.write_str("inf"),
        }
    }
}

impl FromStr for Level {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "inf" | "∞" | "infinity" => Ok(Level::Infinite),
            t => t
                .parse()
                .map(Level::Finite)
                .map_err(|_| Error::Parse(format!("level must be a natural number or `inf`, got `{t}`"))),
        }
    }
}

/// Projective dimensions of every inventory member.
pub fn inventory_pds(inv: &Inventory, bounds: Bounds) -> Arc<Vec<DimVerdict>> {
    Arc::new(inv.modules().par_iter().map(|m| pd(m, bounds)).collect())
}

/// Indecomposables of `P^{<n+1}` found in the inventory, together with
/// every indecomposable projective, and caches for the computations that
/// quantify over the class.
pub struct TestClass {
    level: Level,
    inventory: Arc<Inventory>,
    bounds: Bounds,
    pds: Arc<Vec<DimVerdict>>,
    members: Vec<Representation>,
    member_inventory: Vec<Option<usize>>,
    in_class: Vec<bool>,
    unsettled: Vec<usize>,
    complete: bool,
    covers_all: bool,
    pub(crate) ext_cache: Mutex<HashMap<(usize, usize), Arc<Ext1Space>>>,
    pub(crate) nproj_cache: Mutex<HashMap<usize, Verdict>>,
}

impl fmt::Debug for TestClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TestClass")
            .field("level", &self.level)
            .field("members", &self.members.len())
            .field("complete", &self.complete)
            .finish()
    }
}

impl TestClass {
    pub fn build(inv: &Arc<Inventory>, level: Level, bounds: Bounds) -> Self {
        let pds = inventory_pds(inv, bounds);
        Self::with_pds(inv, level, bounds, pds)
    }

    /// Builds the class from precomputed projective dimensions of the
    /// inventory members.
    pub fn with_pds(inv: &Arc<Inventory>, level: Level, bounds: Bounds, pds: Arc<Vec<DimVerdict>>) -> Self {
        let alg = inv.algebra();
        let mut members = Vec::new();
        let mut member_inventory = Vec::new();
        let mut in_class = vec![false; inv.len()];
        let mut unsettled = Vec::new();
        for (i, (m, p)) in inv.modules().iter().zip(pds.iter()).enumerate() {
            match level.admits(p.value) {
                Some(true) => {
                    in_class[i] = true;
                    members.push(m.clone());
                    member_inventory.push(Some(i));
                }
                Some(false) => {}
                None => unsettled.push(i),
            }
        }
        for v in 0..alg.num_vertices() {
            let p = Representation::projective(alg, v);
            if inv.index_of(&p).is_none() {
                members.push(p);
                member_inventory.push(None);
            }
        }
        let complete = level == Level::Finite(0) || (inv.is_complete() && unsettled.is_empty());
        let gl = gldim(alg, bounds);
        let covers_all = gl.certified && level.admits(gl.value) == Some(true);
        TestClass {
            level,
            inventory: inv.clone(),
            bounds,
            pds,
            members,
            member_inventory,
            in_class,
            unsettled,
            complete,
            covers_all,
            ext_cache: Mutex::new(HashMap::new()),
            nproj_cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn level(&self) -> Level {
        self.level
    }

    pub fn inventory(&self) -> &Arc<Inventory> {
        &self.inventory
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        self.inventory.algebra()
    }

    pub fn bounds(&self) -> Bounds {
        self.bounds
    }

    pub fn members(&self) -> &[Representation] {
        &self.members
    }

    /// Inventory index of each member (`None` for projectives beyond the
    /// dimension bound).
    pub fn member_inventory(&self) -> &[Option<usize>] {
        &self.member_inventory
    }

    /// Whether inventory member `i` lies in the class.
    pub fn contains_index(&self, i: usize) -> bool {
        self.in_class[i]
    }

    /// Projective dimension of inventory member `i`.
    pub fn inventory_pd(&self, i: usize) -> &DimVerdict {
        &self.pds[i]
    }

    pub fn inventory_pds(&self) -> &Arc<Vec<DimVerdict>> {
        &self.pds
    }

    /// Inventory members whose membership could not be settled.
    pub fn unsettled(&self) -> &[usize] {
        &self.unsettled
    }

    /// Certified to contain every indecomposable of `P^{<n+1}`.
    pub fn is_complete(&self) -> bool {
        self.complete
    }

    /// Certified `gldim <= n`: every finitely generated module is in the class.
    pub fn covers_all(&self) -> bool {
        self.covers_all
    }

    /// Quantifiers over the class are settled: it is complete or it
    /// contains every module.
    pub fn decides(&self) -> bool {
        self.complete || self.covers_all
    }

    /// Membership of an arbitrary module, decided by its projective dimension.
    pub fn admits(&self, m: &Representation) -> Option<bool> {
        self.level.admits(pd(m, self.bounds).value)
    }

    /// `Ext^1(T, A)` for member `t` and inventory member `a`, cached.
    pub(crate) fn member_ext(&self, t: usize, a: usize) -> Arc<Ext1Space> {
        if let Some(e) = self.ext_cache.lock().unwrap().get(&(t, a)) {
            return e.clone();
        }
        let e = Arc::new(Ext1Space::new(&self.members[t], &self.inventory.modules()[a]).unwrap());
        self.ext_cache.lock().unwrap().insert((t, a), e.clone());
        e
    }
}

/// Builds the class `P^{<n+1}` from an inventory.
pub fn build_test_class(inv: &Arc<Inventory>, level: Level, bounds: Bounds) -> TestClass {
    TestClass::build(inv, level, bounds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::repmod::enumerate_indecomposables;

    fn class(alg: &Arc<BoundQuiverAlgebra>, n: Level, d: usize) -> TestClass {
        let inv = Arc::new(enumerate_indecomposables(alg, d));
        TestClass::build(&inv, n, Bounds::new(d, 16))
    }

    #[test]
    fn a2_level_one_contains_everything() {
        let c = class(&catalog::a2(), Level::Finite(1), 2);
        assert_eq!(c.members().len(), 3);
        assert!(c.is_complete());
    }

    #[test]
    fn level_zero_is_projectives() {
        for alg in catalog::all() {
            let c = class(&alg, Level::Finite(0), 4);
            assert_eq!(c.members().len(), alg.num_vertices());
            assert!(c.is_complete());
        }
    }

    #[test]
    fn dual_numbers_only_projective() {
        for n in [Level::Finite(1), Level::Finite(3), Level::Infinite] {
            let c = class(&catalog::dual_numbers(), n, 4);
            assert_eq!(c.members().len(), 1);
            assert_eq!(c.members()[0].dims(), &[2]);
        }
    }

    #[test]
    fn level_parsing() {
        assert_eq!("inf".parse::<Level>().unwrap(), Level::Infinite);
        assert_eq!("2".parse::<Level>().unwrap(), Level::Finite(2));
        assert!("x".parse::<Level>().is_err());
        assert!(Level::Finite(3) < Level::Infinite);
    }
}
