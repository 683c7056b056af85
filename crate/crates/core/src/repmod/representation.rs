use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, PrimeField};
use crate::quiveralg::{BoundQuiverAlgebra, Relation};

struct Inner {
    alg: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

/// A finite-dimensional representation: a vector space per vertex and a
/// matrix of shape `dim(target) x dim(source)` per arrow. Cheap to clone.
#[derive(Clone)]
pub struct Representation(Arc<Inner>);

impl PartialEq for Representation {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.alg.fingerprint() == other.0.alg.fingerprint()
                && self.0.dims == other.0.dims
                && self.0.maps == other.0.maps)
    }
}

impl Eq for Representation {}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Rep{:?}", self.0.dims)?;
        for (a, m) in self.0.alg.quiver().arrows().iter().zip(&self.0.maps) {
            write!(f, " {}={}", a.label, m)?;
        }
        Ok(())
    }
}

fn relation_value(
    field: PrimeField,
    rel: &Relation,
    rows: usize,
    cols: usize,
    eval: impl Fn(&[usize]) -> Matrix,
) -> Matrix {
    let mut acc = Matrix::zeros(field, rows, cols);
    for (c, p) in &rel.terms {
        acc.add_scaled(*c, &eval(p));
    }
    acc
}

impl Representation {
    /// Validating constructor: checks shapes and that every relation (and
    /// every path of length nilbound) acts as zero.
    pub fn new(alg: &Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        let q = alg.quiver();
        if dims.len() != q.num_vertices() || maps.len() != q.num_arrows() {
            return Err(Error::Shape(format!(
                "expected {} vertex dimensions and {} arrow maps",
                q.num_vertices(),
                q.num_arrows()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::Shape(format!(
                    "map {} must be {}x{}, got {}x{}",
                    a.label,
                    dims[a.target],
                    dims[a.source],
                    m.rows(),
                    m.cols()
                )));
            }
            if m.field() != alg.field() {
                return Err(Error::Shape(format!("map {} lives over another field", a.label)));
            }
        }
        let rep = Representation::from_parts(alg.clone(), dims, maps);
        if let Some(rel) = rep.violated_relation() {
            let what = if alg.relations().contains(rel) {
                format!("relation {} not satisfied", rel.display(alg.field(), q))
            } else {
                format!("path {} of nilbound length does not vanish", rel.display(alg.field(), q))
            };
            return Err(Error::InvariantViolation(what));
        }
        Ok(rep)
    }

    pub(crate) fn from_parts(alg: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        Representation(Arc::new(Inner { alg, dims, maps }))
    }

    fn violated_relation(&self) -> Option<&Relation> {
        let alg = &self.0.alg;
        let q = alg.quiver();
        alg.module_relations().iter().find(|rel| {
            let Some((_, p)) = rel.terms.first() else {
                return false;
            };
            let s = q.arrow(p[0]).source;
            let t = q.arrow(*p.last().unwrap()).target;
            !relation_value(alg.field(), rel, self.0.dims[t], self.0.dims[s], |p| {
                self.path_matrix(p)
            })
            .is_zero()
        })
    }

    pub fn zero(alg: &Arc<BoundQuiverAlgebra>) -> Self {
        let q = alg.quiver();
        let f = alg.field();
        Representation::from_parts(
            alg.clone(),
            vec![0; q.num_vertices()],
            vec![Matrix::zeros(f, 0, 0); q.num_arrows()],
        )
    }

    pub fn simple(alg: &Arc<BoundQuiverAlgebra>, v: usize) -> Self {
        let q = alg.quiver();
        let f = alg.field();
        let mut dims = vec![0; q.num_vertices()];
        dims[v] = 1;
        let maps = q
            .arrows()
            .iter()
            .map(|a| Matrix::zeros(f, dims[a.target], dims[a.source]))
            .collect();
        Representation::from_parts(alg.clone(), dims, maps)
    }

    /// The indecomposable projective `P(v)`: at `w` its basis is the
    /// standard paths from `v` to `w`; arrows act by right concatenation.
    pub fn projective(alg: &Arc<BoundQuiverAlgebra>, v: usize) -> Self {
        let q = alg.quiver();
        let f = alg.field();
        let n = q.num_vertices();
        let local: Vec<Vec<usize>> = (0..n).map(|w| alg.basis_between(v, w)).collect();
        let mut pos = vec![usize::MAX; alg.dim()];
        for l in &local {
            for (i, &b) in l.iter().enumerate() {
                pos[b] = i;
            }
        }
        let dims: Vec<usize> = local.iter().map(Vec::len).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let mut m = Matrix::zeros(f, dims[a.target], dims[a.source]);
                for (j, &b) in local[a.source].iter().enumerate() {
                    let mut path = alg.basis()[b].clone();
                    path.arrows.push(ai);
                    path.target = a.target;
                    for (idx, c) in alg.normal_form(&path) {
                        m.set(pos[idx], j, c);
                    }
                }
                m
            })
            .collect();
        Representation::from_parts(alg.clone(), dims, maps)
    }

    /// The indecomposable injective `I(v)`, the dual of the opposite projective.
    pub fn injective(alg: &Arc<BoundQuiverAlgebra>, v: usize) -> Self {
        Representation::projective(&alg.opposite(), v).transpose_onto(alg)
    }

    /// `Hom_k(M, k)` as a representation of the opposite algebra.
    pub fn dual(&self) -> Representation {
        self.transpose_onto(&self.0.alg.opposite())
    }

    /// Dual onto an algebra whose quiver is the opposite of ours.
    pub fn transpose_onto(&self, target: &Arc<BoundQuiverAlgebra>) -> Representation {
        debug_assert_eq!(target.quiver(), &self.0.alg.quiver().opposite());
        Representation::from_parts(
            target.clone(),
            self.0.dims.clone(),
            self.0.maps.iter().map(Matrix::transpose).collect(),
        )
    }

    /// The regular module `⊕ P(v)`.
    pub fn regular(alg: &Arc<BoundQuiverAlgebra>) -> Self {
        let ps: Vec<_> = (0..alg.num_vertices())
            .map(|v| Representation::projective(alg, v))
            .collect();
        Representation::direct_sum(alg, &ps)
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.0.alg
    }

    pub fn field(&self) -> PrimeField {
        self.0.alg.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.0.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.0.dims[v]
    }

    pub fn total_dim(&self) -> usize {
        self.0.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.0.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.0.maps[arrow]
    }

    pub fn same_algebra(&self, other: &Representation) -> bool {
        Arc::ptr_eq(&self.0.alg, &other.0.alg)
            || self.0.alg.fingerprint() == other.0.alg.fingerprint()
    }

    pub(crate) fn check_same_algebra(&self, other: &Representation) -> Result<()> {
        if self.same_algebra(other) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// Action of a nonempty arrow sequence (first arrow applied first).
    pub fn path_matrix(&self, arrows: &[usize]) -> Matrix {
        let mut it = arrows.iter();
        let first = it.next().expect("path_matrix of an empty path");
        let mut acc = self.0.maps[*first].clone();
        for &a in it {
            acc = self.0.maps[a].mul(&acc);
        }
        acc
    }

    /// Action of a path given as a vertex plus arrows (identity when trivial).
    pub fn path_action(&self, source: usize, arrows: &[usize]) -> Matrix {
        if arrows.is_empty() {
            Matrix::identity(self.field(), self.0.dims[source])
        } else {
            self.path_matrix(arrows)
        }
    }

    pub fn direct_sum(alg: &Arc<BoundQuiverAlgebra>, parts: &[Representation]) -> Self {
        let q = alg.quiver();
        let f = alg.field();
        let dims: Vec<usize> = (0..q.num_vertices())
            .map(|v| parts.iter().map(|p| p.0.dims[v]).sum())
            .collect();
        let maps = (0..q.num_arrows())
            .map(|a| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| &p.0.maps[a]).collect();
                Matrix::block_diag(f, &blocks)
            })
            .collect();
        Representation::from_parts(alg.clone(), dims, maps)
    }

    /// Direct sum with its canonical inclusions and projections.
    pub fn direct_sum_with_maps(
        alg: &Arc<BoundQuiverAlgebra>,
        parts: &[Representation],
    ) -> (Representation, Vec<Morphism>, Vec<Morphism>) {
        let sum = Representation::direct_sum(alg, parts);
        let f = alg.field();
        let n = alg.num_vertices();
        let mut offsets = vec![0usize; n];
        let mut incs = Vec::new();
        let mut projs = Vec::new();
        for p in parts {
            let mut inc = Vec::with_capacity(n);
            let mut proj = Vec::with_capacity(n);
            for v in 0..n {
                let mut i = Matrix::zeros(f, sum.0.dims[v], p.0.dims[v]);
                i.set_block(offsets[v], 0, &Matrix::identity(f, p.0.dims[v]));
                proj.push(i.transpose());
                inc.push(i);
                offsets[v] += p.0.dims[v];
            }
            incs.push(Morphism::from_parts(p.clone(), sum.clone(), inc));
            projs.push(Morphism::from_parts(sum.clone(), p.clone(), proj));
        }
        (sum, incs, projs)
    }

    /// Submodule spanned by the given per-vertex column bases, which must be
    /// linearly independent and stable under the arrows.
    pub fn submodule(&self, spaces: Vec<Matrix>) -> (Representation, Morphism) {
        let q = self.0.alg.quiver();
        let dims: Vec<usize> = spaces.iter().map(Matrix::cols).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| {
                let img = self.0.maps[ai].mul(&spaces[a.source]);
                spaces[a.target]
                    .solve(&img)
                    .expect("subspace is not stable under an arrow")
            })
            .collect();
        let sub = Representation::from_parts(self.0.alg.clone(), dims, maps);
        let inc = Morphism::from_parts(sub.clone(), self.clone(), spaces);
        (sub, inc)
    }

    /// Quotient by a stable family of subspaces given by column bases.
    pub fn quotient(&self, spaces: &[Matrix]) -> (Representation, Morphism) {
        let q = self.0.alg.quiver();
        let f = self.field();
        let proj: Vec<Matrix> = spaces
            .iter()
            .zip(&self.0.dims)
            .map(|(s, &d)| {
                if s.cols() == 0 {
                    Matrix::identity(f, d)
                } else {
                    s.left_annihilator()
                }
            })
            .collect();
        let sections: Vec<Matrix> = proj
            .iter()
            .map(|y| {
                y.solve(&Matrix::identity(f, y.rows()))
                    .expect("annihilator has full row rank")
            })
            .collect();
        let dims: Vec<usize> = proj.iter().map(Matrix::rows).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, a)| proj[a.target].mul(&self.0.maps[ai]).mul(&sections[a.source]))
            .collect();
        let quot = Representation::from_parts(self.0.alg.clone(), dims, maps);
        let pi = Morphism::from_parts(self.clone(), quot.clone(), proj);
        (quot, pi)
    }

    /// Per-vertex column basis of `rad M = J M`.
    pub fn radical_spaces(&self) -> Vec<Matrix> {
        let q = self.0.alg.quiver();
        let f = self.field();
        (0..q.num_vertices())
            .map(|w| {
                let incoming: Vec<&Matrix> = q
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.target == w)
                    .map(|(i, _)| &self.0.maps[i])
                    .collect();
                Matrix::hstack(f, self.0.dims[w], &incoming).image_basis()
            })
            .collect()
    }

    pub fn top_dims(&self) -> Vec<usize> {
        self.radical_spaces()
            .iter()
            .zip(&self.0.dims)
            .map(|(r, &d)| d - r.cols())
            .collect()
    }

    pub fn socle_dims(&self) -> Vec<usize> {
        let q = self.0.alg.quiver();
        let f = self.field();
        (0..q.num_vertices())
            .map(|w| {
                let outgoing: Vec<&Matrix> = q
                    .arrows()
                    .iter()
                    .enumerate()
                    .filter(|(_, a)| a.source == w)
                    .map(|(i, _)| &self.0.maps[i])
                    .collect();
                let stacked = Matrix::vstack(f, self.0.dims[w], &outgoing);
                self.0.dims[w] - stacked.rank()
            })
            .collect()
    }

    /// Projective cover `P -> M`. The cover is `⊕_w P(w)^{top_w}` with
    /// summands ordered by vertex; the generator of each copy maps to a
    /// vector of `M_w` completing a basis of `rad M` at `w`.
    pub fn projective_cover(&self) -> Result<Cover> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        let alg = &self.0.alg;
        let f = self.field();
        let n = alg.num_vertices();
        let rad = self.radical_spaces();
        let mut generators = Vec::new();
        for w in 0..n {
            let d = self.0.dims[w];
            let aug = Matrix::hstack(f, d, &[&rad[w], &Matrix::identity(f, d)]);
            for &c in aug.rref().pivots.iter().filter(|&&c| c >= rad[w].cols()) {
                let mut g = Matrix::zeros(f, d, 1);
                g.set(c - rad[w].cols(), 0, 1);
                generators.push((w, g));
            }
        }
        let summands: Vec<Representation> = generators
            .iter()
            .map(|(w, _)| Representation::projective(alg, *w))
            .collect();
        let projective = Representation::direct_sum(alg, &summands);
        let maps = (0..n)
            .map(|u| {
                let mut cols: Vec<Matrix> = Vec::new();
                for (w, g) in &generators {
                    for b in alg.basis_between(*w, u) {
                        let p = &alg.basis()[b];
                        cols.push(self.path_action(p.source, &p.arrows).mul(g));
                    }
                }
                let refs: Vec<&Matrix> = cols.iter().collect();
                Matrix::hstack(f, self.0.dims[u], &refs)
            })
            .collect();
        let top_dims = (0..n)
            .map(|w| generators.iter().filter(|(v, _)| *v == w).count())
            .collect();
        let map = Morphism::from_parts(projective.clone(), self.clone(), maps);
        Ok(Cover {
            top_dims,
            summand_vertices: generators.iter().map(|(w, _)| *w).collect(),
            projective,
            map,
        })
    }

    /// Middle term of the extension of `c` by `a` given by a cocycle: one
    /// matrix `delta_x: C_{s(x)} -> A_{t(x)}` per arrow. Returns
    /// `(E, A -> E, E -> C)` with `E_v = A_v ⊕ C_v`.
    pub fn extension(
        c: &Representation,
        a: &Representation,
        deltas: &[Matrix],
    ) -> (Representation, Morphism, Morphism) {
        let alg = a.algebra();
        let f = a.field();
        let q = alg.quiver();
        let n = q.num_vertices();
        let dims: Vec<usize> = (0..n).map(|v| a.0.dims[v] + c.0.dims[v]).collect();
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let (at, cs) = (a.0.dims[x.target], c.0.dims[x.source]);
                let mut m = Matrix::zeros(f, dims[x.target], dims[x.source]);
                m.set_block(0, 0, &a.0.maps[i]);
                m.set_block(0, a.0.dims[x.source], &deltas[i]);
                m.set_block(at, a.0.dims[x.source], &c.0.maps[i]);
                debug_assert_eq!(deltas[i].shape(), (at, cs));
                m
            })
            .collect();
        let e = Representation::from_parts(alg.clone(), dims.clone(), maps);
        debug_assert!(e.violated_relation().is_none(), "extension data is not a cocycle");
        let inj = (0..n)
            .map(|v| {
                let mut m = Matrix::zeros(f, dims[v], a.0.dims[v]);
                m.set_block(0, 0, &Matrix::identity(f, a.0.dims[v]));
                m
            })
            .collect();
        let surj = (0..n)
            .map(|v| {
                let mut m = Matrix::zeros(f, c.0.dims[v], dims[v]);
                m.set_block(0, a.0.dims[v], &Matrix::identity(f, c.0.dims[v]));
                m
            })
            .collect();
        (
            e.clone(),
            Morphism::from_parts(a.clone(), e.clone(), inj),
            Morphism::from_parts(e, c.clone(), surj),
        )
    }

    /// Copies the representation onto an equal algebra handle.
    pub fn rebase(&self, alg: &Arc<BoundQuiverAlgebra>) -> Result<Representation> {
        if alg.fingerprint() != self.0.alg.fingerprint() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Representation::from_parts(alg.clone(), self.0.dims.clone(), self.0.maps.clone()))
    }
}

/// A projective cover with its summand layout.
#[derive(Clone, Debug)]
pub struct Cover {
    pub top_dims: Vec<usize>,
    /// Vertex of each indecomposable projective summand, in order.
    pub summand_vertices: Vec<usize>,
    pub projective: Representation,
    pub map: Morphism,
}

/// A module homomorphism given by one matrix per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    source: Representation,
    target: Representation,
    maps: Vec<Matrix>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hom[")?;
        for (i, m) in self.maps.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "]")
    }
}

impl Morphism {
    /// Validating constructor: shapes and commutation with every arrow.
    pub fn new(source: &Representation, target: &Representation, maps: Vec<Matrix>) -> Result<Self> {
        source.check_same_algebra(target)?;
        let q = source.algebra().quiver();
        if maps.len() != q.num_vertices() {
            return Err(Error::Shape("one matrix per vertex expected".into()));
        }
        for (v, m) in maps.iter().enumerate() {
            if m.shape() != (target.dim_at(v), source.dim_at(v)) {
                return Err(Error::Shape(format!(
                    "vertex {} map must be {}x{}",
                    q.vertices()[v],
                    target.dim_at(v),
                    source.dim_at(v)
                )));
            }
        }
        for (i, a) in q.arrows().iter().enumerate() {
            let lhs = target.map(i).mul(&maps[a.source]);
            let rhs = maps[a.target].mul(source.map(i));
            if lhs != rhs {
                return Err(Error::InvariantViolation(format!(
                    "morphism does not commute with arrow {}",
                    a.label
                )));
            }
        }
        Ok(Morphism::from_parts(source.clone(), target.clone(), maps))
    }

    pub(crate) fn from_parts(source: Representation, target: Representation, maps: Vec<Matrix>) -> Self {
        Morphism { source, target, maps }
    }

    pub fn identity(m: &Representation) -> Self {
        let f = m.field();
        let maps = m.dims().iter().map(|&d| Matrix::identity(f, d)).collect();
        Morphism::from_parts(m.clone(), m.clone(), maps)
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        let f = source.field();
        let maps = source
            .dims()
            .iter()
            .zip(target.dims())
            .map(|(&s, &t)| Matrix::zeros(f, t, s))
            .collect();
        Morphism::from_parts(source.clone(), target.clone(), maps)
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map_at(&self, v: usize) -> &Matrix {
        &self.maps[v]
    }

    /// `g ∘ self`.
    pub fn then(&self, g: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&g.maps).map(|(f, g)| g.mul(f)).collect();
        Morphism::from_parts(self.source.clone(), g.target.clone(), maps)
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        let maps = self.maps.iter().zip(&other.maps).map(|(a, b)| a.add(b)).collect();
        Morphism::from_parts(self.source.clone(), self.target.clone(), maps)
    }

    pub fn scale(&self, s: u32) -> Morphism {
        let maps = self.maps.iter().map(|a| a.scale(s)).collect();
        Morphism::from_parts(self.source.clone(), self.target.clone(), maps)
    }

    pub fn is_zero(&self) -> bool {
        self.maps.iter().all(Matrix::is_zero)
    }

    pub fn is_injective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.cols())
    }

    pub fn is_surjective(&self) -> bool {
        self.maps.iter().all(|m| m.rank() == m.rows())
    }

    pub fn is_isomorphism(&self) -> bool {
        self.maps.iter().all(Matrix::is_invertible)
    }

    pub fn kernel(&self) -> (Representation, Morphism) {
        self.source
            .submodule(self.maps.iter().map(Matrix::kernel_basis).collect())
    }

    /// `(Im f, M -> Im f, Im f -> N)`.
    pub fn image(&self) -> (Representation, Morphism, Morphism) {
        let spaces: Vec<Matrix> = self.maps.iter().map(Matrix::image_basis).collect();
        let corestrict = spaces
            .iter()
            .zip(&self.maps)
            .map(|(s, m)| s.solve(m).expect("image contains the map"))
            .collect::<Vec<_>>();
        let (im, inc) = self.target.submodule(spaces);
        let onto = Morphism::from_parts(self.source.clone(), im.clone(), corestrict);
        (im, onto, inc)
    }

    pub fn cokernel(&self) -> (Representation, Morphism) {
        let spaces: Vec<Matrix> = self.maps.iter().map(Matrix::image_basis).collect();
        self.target.quotient(&spaces)
    }
}
