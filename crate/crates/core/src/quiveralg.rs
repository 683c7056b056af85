//! Bound quiver algebras `kQ/I` over a prime field.
//!
//! Paths are written left to right: `a.b` means "first `a`, then `b`". On a
//! representation the path `a.b` acts as `M_b * M_a` (column vectors).
//!
//! The algebra built from a nilbound `L` is `kQ/(I + J^L)`, where `J` is the
//! arrow ideal. Construction succeeds only when every path of length `L` is
//! already congruent to longer paths modulo `I`, i.e. `J^L ⊆ I + J^(L+1)`;
//! for admissible ideals this is the same as `J^L ⊆ I`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::exactlin::{Matrix, PrimeField};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

fn valid_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

impl Quiver {
    pub fn new() -> Self {
        Quiver::default()
    }

    pub fn add_vertex(&mut self, label: &str) -> Result<usize> {
        if !valid_label(label) {
            return Err(Error::InvariantViolation(format!("bad vertex label {label:?}")));
        }
        if self.vertex_index(label).is_some() {
            return Err(Error::InvariantViolation(format!("duplicate vertex {label}")));
        }
        self.vertices.push(label.to_string());
        Ok(self.vertices.len() - 1)
    }

    pub fn add_arrow(&mut self, label: &str, source: &str, target: &str) -> Result<usize> {
        if !valid_label(label) {
            return Err(Error::InvariantViolation(format!("bad arrow label {label:?}")));
        }
        if self.arrow_index(label).is_some() {
            return Err(Error::InvariantViolation(format!("duplicate arrow {label}")));
        }
        let s = self
            .vertex_index(source)
            .ok_or_else(|| Error::InvariantViolation(format!("unknown vertex {source}")))?;
        let t = self
            .vertex_index(target)
            .ok_or_else(|| Error::InvariantViolation(format!("unknown vertex {target}")))?;
        self.arrows.push(Arrow {
            label: label.to_string(),
            source: s,
            target: t,
        });
        Ok(self.arrows.len() - 1)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn num_arrows(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn's algorithm
        let n = self.vertices.len();
        let mut indeg = vec![0usize; n];
        for a in &self.arrows {
            indeg[a.target] += 1;
        }
        let mut stack: Vec<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for a in self.arrows.iter().filter(|a| a.source == v) {
                indeg[a.target] -= 1;
                if indeg[a.target] == 0 {
                    stack.push(a.target);
                }
            }
        }
        seen == n
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    label: a.label.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Composability check; returns (source, target) of the arrow sequence.
    fn endpoints(&self, arrows: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*arrows.first()?)?;
        let mut t = first.target;
        for &a in &arrows[1..] {
            let a = self.arrows.get(a)?;
            if a.source != t {
                return None;
            }
            t = a.target;
        }
        Some((first.source, t))
    }
}

/// A path in the quiver: a vertex for the trivial path, otherwise a
/// composable arrow sequence.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` followed by `other`; the caller guarantees composability.
    pub fn then(&self, other: &Path) -> Path {
        debug_assert_eq!(self.target, other.source);
        let mut arrows = self.arrows.clone();
        arrows.extend_from_slice(&other.arrows);
        Path {
            source: self.source,
            target: other.target,
            arrows,
        }
    }

    pub fn label(&self, q: &Quiver) -> String {
        if self.arrows.is_empty() {
            format!("e_{}", q.vertices[self.source])
        } else {
            self.arrows
                .iter()
                .map(|&a| q.arrows[a].label.as_str())
                .collect::<Vec<_>>()
                .join(".")
        }
    }
}

/// A linear combination of paths given by arrow labels, as written in files.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSpec {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl RelationSpec {
    pub fn resolve(&self, field: PrimeField, q: &Quiver) -> Result<Relation> {
        let mut terms = Vec::new();
        for (c, labels) in &self.terms {
            let arrows = labels
                .iter()
                .map(|l| {
                    q.arrow_index(l)
                        .ok_or_else(|| Error::InvalidRelation(format!("unknown arrow {l}")))
                })
                .collect::<Result<Vec<_>>>()?;
            terms.push((field.reduce(*c), arrows));
        }
        Ok(Relation { terms })
    }
}

/// A relation over arrow indices. Validated when the algebra is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(u32, Vec<usize>)>,
}

impl Relation {
    pub fn new(terms: Vec<(u32, Vec<usize>)>) -> Self {
        Relation { terms }
    }

    /// Merges repeated paths and drops zero coefficients.
    fn normalized(&self, field: PrimeField) -> Relation {
        let mut acc: Vec<(u32, Vec<usize>)> = Vec::new();
        for (c, p) in &self.terms {
            match acc.iter_mut().find(|(_, q)| q == p) {
                Some(entry) => entry.0 = field.add(entry.0, *c % field.p()),
                None => acc.push((*c % field.p(), p.clone())),
            }
        }
        acc.retain(|(c, _)| *c != 0);
        Relation { terms: acc }
    }

    pub fn display(&self, field: PrimeField, q: &Quiver) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(c, p)| {
                let labels: Vec<&str> = p.iter().map(|&a| q.arrows[a].label.as_str()).collect();
                format!("{}*{}", field.signed(*c), labels.join("."))
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (*c, p.iter().rev().copied().collect()))
                .collect(),
        }
    }
}

/// A finite-dimensional bound quiver algebra with a basis of standard paths.
#[derive(Clone, Debug)]
pub struct BoundQuiverAlgebra {
    field: PrimeField,
    quiver: Quiver,
    relations: Vec<Relation>,
    nilbound: usize,
    basis: Vec<Path>,
    // all paths of length <= nilbound, with their normal forms
    path_index: HashMap<Path, usize>,
    normal_forms: Vec<Vec<(usize, u32)>>,
    // relations plus every path of length nilbound: generators of I + J^L
    module_relations: Vec<Relation>,
    fingerprint: String,
    opposite: OnceLock<Arc<BoundQuiverAlgebra>>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.fingerprint == other.fingerprint
    }
}

impl Eq for BoundQuiverAlgebra {}

fn paths_up_to(q: &Quiver, max_len: usize) -> Vec<Vec<Path>> {
    let mut levels = vec![(0..q.num_vertices()).map(Path::trivial).collect::<Vec<_>>()];
    for _ in 0..max_len {
        let prev = levels.last().unwrap();
        let mut next = Vec::new();
        for p in prev {
            for (ai, a) in q.arrows.iter().enumerate() {
                if a.source == p.target {
                    let mut arrows = p.arrows.clone();
                    arrows.push(ai);
                    next.push(Path {
                        source: p.source,
                        target: a.target,
                        arrows,
                    });
                }
            }
        }
        next.sort();
        levels.push(next);
    }
    levels
}

impl BoundQuiverAlgebra {
    pub fn build(
        field: PrimeField,
        quiver: Quiver,
        relations: Vec<Relation>,
        nilbound: usize,
    ) -> Result<Self> {
        if nilbound < 2 {
            return Err(Error::InvariantViolation(format!(
                "nilbound must be at least 2, got {nilbound}"
            )));
        }
        let mut rels = Vec::new();
        let mut rel_ends = Vec::new();
        for r in &relations {
            let r = r.normalized(field);
            let mut ends = None;
            for (_, p) in &r.terms {
                if p.len() < 2 {
                    return Err(Error::InvalidRelation(format!(
                        "{} has a term of length < 2",
                        r.display(field, &quiver)
                    )));
                }
                let e = quiver.endpoints(p).ok_or_else(|| {
                    Error::InvalidRelation(format!(
                        "{} has a non-composable path",
                        r.display(field, &quiver)
                    ))
                })?;
                if *ends.get_or_insert(e) != e {
                    return Err(Error::InvalidRelation(format!(
                        "{} has non-parallel terms",
                        r.display(field, &quiver)
                    )));
                }
            }
            if let Some(e) = ends {
                rel_ends.push(e);
                rels.push(r);
            }
        }

        let levels = paths_up_to(&quiver, nilbound);
        // columns ordered longest first so long paths become pivots
        let columns: Vec<Path> = levels.iter().rev().flatten().cloned().collect();
        let path_index: HashMap<Path, usize> = columns
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i))
            .collect();
        let ncols = columns.len();

        let mut generators: Vec<Vec<u32>> = Vec::new();
        for (r, &(s, t)) in rels.iter().zip(&rel_ends) {
            let min_len = r.terms.iter().map(|(_, p)| p.len()).min().unwrap();
            for (lu, us) in levels.iter().enumerate() {
                for u in us.iter().filter(|u| u.target == s) {
                    for (lv, vs) in levels.iter().enumerate() {
                        if lu + lv + min_len > nilbound {
                            continue;
                        }
                        for v in vs.iter().filter(|v| v.source == t) {
                            let mut row = vec![0u32; ncols];
                            for (c, p) in &r.terms {
                                if lu + lv + p.len() > nilbound {
                                    continue;
                                }
                                let mut arrows = u.arrows.clone();
                                arrows.extend_from_slice(p);
                                arrows.extend_from_slice(&v.arrows);
                                let path = Path {
                                    source: u.source,
                                    target: v.target,
                                    arrows,
                                };
                                let col = path_index[&path];
                                row[col] = field.add(row[col], *c);
                            }
                            if row.iter().any(|&x| x != 0) {
                                generators.push(row);
                            }
                        }
                    }
                }
            }
        }
        let span = Matrix::from_vec(
            field,
            generators.len(),
            ncols,
            generators.into_iter().flatten().collect(),
        );
        let rref = span.rref();
        let mut pivot_row = vec![None; ncols];
        for (i, &c) in rref.pivots.iter().enumerate() {
            pivot_row[c] = Some(i);
        }
        if levels[nilbound]
            .iter()
            .any(|p| pivot_row[path_index[p]].is_none())
        {
            return Err(Error::NotFiniteDimensional(nilbound));
        }

        let mut basis: Vec<Path> = columns
            .iter()
            .enumerate()
            .filter(|(c, _)| pivot_row[*c].is_none())
            .map(|(_, p)| p.clone())
            .collect();
        basis.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
        let basis_of: HashMap<&Path, usize> =
            basis.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let dim = basis.len();
        if field.p() as usize <= dim {
            return Err(Error::FieldTooSmall { p: field.p(), dim });
        }

        let normal_forms = columns
            .iter()
            .enumerate()
            .map(|(c, p)| match pivot_row[c] {
                None => vec![(basis_of[p], 1)],
                Some(i) => {
                    let mut v: Vec<(usize, u32)> = (0..ncols)
                        .filter(|&c2| c2 != c && pivot_row[c2].is_none())
                        .filter_map(|c2| {
                            let x = rref.matrix.get(i, c2);
                            (x != 0).then(|| (basis_of[&columns[c2]], field.neg(x)))
                        })
                        .collect();
                    v.sort();
                    v
                }
            })
            .collect();

        let mut module_relations = rels.clone();
        module_relations.extend(
            levels[nilbound]
                .iter()
                .map(|p| Relation::new(vec![(1, p.arrows.clone())])),
        );
        let mut alg = BoundQuiverAlgebra {
            field,
            quiver,
            relations: rels,
            nilbound,
            basis,
            path_index,
            normal_forms,
            module_relations,
            fingerprint: String::new(),
            opposite: OnceLock::new(),
        };
        alg.fingerprint = hex::encode(Sha256::digest(alg.canonical_text().as_bytes()));
        Ok(alg)
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn nilbound(&self) -> usize {
        self.nilbound
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn num_vertices(&self) -> usize {
        self.quiver.num_vertices()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Hex SHA-256 of the canonical text form.
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    /// Basis indices of standard paths from `v` to `w`.
    pub fn basis_between(&self, v: usize, w: usize) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| self.basis[i].source == v && self.basis[i].target == w)
            .collect()
    }

    /// Normal form of an arbitrary path, as sparse basis coordinates.
    pub fn normal_form(&self, path: &Path) -> Vec<(usize, u32)> {
        if path.len() > self.nilbound {
            return Vec::new();
        }
        let c = self.path_index[path];
        self.normal_forms[c].clone()
    }

    /// Basis elements spanning the radical (paths of positive length).
    pub fn radical_basis(&self) -> Vec<usize> {
        (0..self.basis.len())
            .filter(|&i| !self.basis[i].is_trivial())
            .collect()
    }

    pub fn is_semisimple(&self) -> bool {
        self.quiver.num_arrows() == 0
    }

    /// True when the algebra is the full path algebra of an acyclic quiver,
    /// hence hereditary.
    pub fn is_path_algebra(&self) -> bool {
        if !self.quiver.is_acyclic() {
            return false;
        }
        let levels = paths_up_to(&self.quiver, self.nilbound);
        levels[self.nilbound].is_empty()
            && self.dim() == levels.iter().map(|l| l.len()).sum::<usize>()
    }

    /// Generators of the ideal a representation must annihilate: the
    /// relations and all paths of length `nilbound`.
    pub fn module_relations(&self) -> &[Relation] {
        &self.module_relations
    }

    /// The opposite algebra (arrows and relation paths reversed), built once.
    pub fn opposite(&self) -> Arc<BoundQuiverAlgebra> {
        self.opposite
            .get_or_init(|| {
                let op = BoundQuiverAlgebra::build(
                    self.field,
                    self.quiver.opposite(),
                    self.relations.iter().map(Relation::reversed).collect(),
                    self.nilbound,
                )
                .expect("the opposite of a finite-dimensional algebra builds");
                Arc::new(op)
            })
            .clone()
    }

    /// Text in the algebra file format; stable for a given construction.
    pub fn canonical_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "field p={}", self.field.p()).unwrap();
        for v in &self.quiver.vertices {
            writeln!(s, "vertex {v}").unwrap();
        }
        for a in &self.quiver.arrows {
            writeln!(
                s,
                "arrow {}: {} -> {}",
                a.label, self.quiver.vertices[a.source], self.quiver.vertices[a.target]
            )
            .unwrap();
        }
        for r in &self.relations {
            writeln!(s, "relation {}", r.display(self.field, &self.quiver)).unwrap();
        }
        writeln!(s, "nilbound {}", self.nilbound).unwrap();
        s
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.quiver.vertices[v]
    }
}

/// Data for a triangular matrix algebra glued from `left` (S) and `right` (T).
/// Connecting arrows run from vertices of T to vertices of S. In the glued
/// quiver S-labels get the prefix `s_` and T-labels the prefix `t_`;
/// connecting arrows and extra relations use glued labels.
#[derive(Clone, Debug)]
pub struct TriangularGluing<'a> {
    pub left: &'a BoundQuiverAlgebra,
    pub right: &'a BoundQuiverAlgebra,
    pub connecting: Vec<(String, String, String)>,
    pub relations: Vec<RelationSpec>,
    pub nilbound: Option<usize>,
}

pub fn glue_triangular(g: &TriangularGluing<'_>) -> Result<BoundQuiverAlgebra> {
    let (s, t) = (g.left, g.right);
    if s.field != t.field {
        return Err(Error::InvalidGluing("S and T live over different fields".into()));
    }
    let field = s.field;
    let mut q = Quiver::new();
    for (prefix, alg) in [("s_", s), ("t_", t)] {
        for v in &alg.quiver.vertices {
            q.add_vertex(&format!("{prefix}{v}"))?;
        }
    }
    for (prefix, alg) in [("s_", s), ("t_", t)] {
        for a in &alg.quiver.arrows {
            q.add_arrow(
                &format!("{prefix}{}", a.label),
                &format!("{prefix}{}", alg.quiver.vertices[a.source]),
                &format!("{prefix}{}", alg.quiver.vertices[a.target]),
            )?;
        }
    }
    for (label, from, to) in &g.connecting {
        let from_t = from
            .strip_prefix("t_")
            .is_some_and(|v| t.quiver.vertex_index(v).is_some());
        let to_s = to
            .strip_prefix("s_")
            .is_some_and(|v| s.quiver.vertex_index(v).is_some());
        if !from_t || !to_s {
            return Err(Error::InvalidGluing(format!(
                "connecting arrow {label}: {from} -> {to} must run from a t_ vertex to an s_ vertex"
            )));
        }
        q.add_arrow(label, from, to)?;
    }
    let ns = s.quiver.num_arrows();
    let mut rels: Vec<Relation> = s.relations.clone();
    rels.extend(t.relations.iter().map(|r| Relation {
        terms: r
            .terms
            .iter()
            .map(|(c, p)| (*c, p.iter().map(|a| a + ns).collect()))
            .collect(),
    }));
    for spec in &g.relations {
        rels.push(spec.resolve(field, &q)?);
    }
    let nilbound = g.nilbound.unwrap_or(s.nilbound + t.nilbound);
    BoundQuiverAlgebra::build(field, q, rels, nilbound)
}
