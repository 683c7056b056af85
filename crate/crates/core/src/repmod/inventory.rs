//! Indecomposable modules up to a total dimension bound.
//!
//! Every indecomposable `E` of dimension `k >= 2` has a maximal submodule
//! `X` with `E / X ≅ S_v` simple, so `E` is the middle term of some
//! `ξ ∈ Ext^1(S_v, X)`. Writing `X = ⊕ X_i^{m_i}`, the components of `ξ`
//! along the copies of `X_i` must be linearly independent in
//! `Ext^1(S_v, X_i)`, or a copy of `X_i` splits off; up to the action of
//! `GL_{m_i}` only their span matters. Enumerating, for each vertex and each
//! admissible multiset of smaller indecomposables, one point of every
//! Grassmannian `Gr(m_i, Ext^1(S_v, X_i))` therefore reaches every
//! indecomposable of dimension `k`.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::exactlin::{Matrix, PrimeField};
use crate::quiveralg::BoundQuiverAlgebra;

use super::decompose::{decompose, indecomposable_locality, iso_indecomposables, Locality};
use super::ext1::Ext1Space;
use super::hom::HomSpace;
use super::representation::Representation;

/// Whether the inventory provably contains every indecomposable module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Completeness {
    /// Certified; the string names the certificate.
    Complete(String),
    /// Complete only up to the dimension bound.
    BestEffort,
}

impl Completeness {
    pub fn is_complete(&self) -> bool {
        matches!(self, Completeness::Complete(_))
    }
}

#[derive(Clone, Debug)]
pub struct Inventory {
    alg: Arc<BoundQuiverAlgebra>,
    dim_bound: usize,
    modules: Vec<Representation>,
    completeness: Completeness,
    uncertain: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
struct Key {
    dims: Vec<usize>,
    end_dim: usize,
    top: Vec<usize>,
    socle: Vec<usize>,
}

fn key_of(m: &Representation) -> Key {
    Key {
        dims: m.dims().to_vec(),
        end_dim: HomSpace::new(m, m).unwrap().dim(),
        top: m.top_dims(),
        socle: m.socle_dims(),
    }
}

impl Inventory {
    pub fn from_parts(
        alg: Arc<BoundQuiverAlgebra>,
        dim_bound: usize,
        modules: Vec<Representation>,
        completeness: Completeness,
    ) -> Self {
        Inventory { alg, dim_bound, modules, completeness, uncertain: 0 }
    }

    /// Restores the count reported by [`Inventory::uncertain_count`].
    pub fn with_uncertain_count(mut self, k: usize) -> Self {
        self.uncertain = k;
        self
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.alg
    }

    pub fn dim_bound(&self) -> usize {
        self.dim_bound
    }

    pub fn modules(&self) -> &[Representation] {
        &self.modules
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn completeness(&self) -> &Completeness {
        &self.completeness
    }

    pub fn is_complete(&self) -> bool {
        self.completeness.is_complete()
    }

    /// Members whose indecomposability rests on a randomized search only.
    pub fn uncertain_count(&self) -> usize {
        self.uncertain
    }

    /// Index of the member isomorphic to an indecomposable `m`.
    pub fn index_of(&self, m: &Representation) -> Option<usize> {
        self.modules.iter().position(|x| {
            x.dims() == m.dims() && iso_indecomposables(x, m).ok().flatten().is_some()
        })
    }

    /// Inventory indices of the indecomposable summands of `m`, or `None`
    /// when some summand lies outside the inventory.
    pub fn summand_indices(&self, m: &Representation) -> Option<Vec<usize>> {
        decompose(m).iter().map(|x| self.index_of(x)).collect()
    }
}

/// All `m x e` reduced row echelon matrices of rank `m` over F_p, one per
/// `m`-dimensional subspace of F_p^e.
fn grassmannian(field: PrimeField, m: usize, e: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    let mut pivots = Vec::new();
    grass_pivots(field, m, e, 0, &mut pivots, &mut out);
    out
}

fn grass_pivots(f: PrimeField, m: usize, e: usize, start: usize, piv: &mut Vec<usize>, out: &mut Vec<Matrix>) {
    if piv.len() == m {
        let free: Vec<(usize, usize)> = (0..m)
            .flat_map(|r| {
                let piv = piv.clone();
                (piv[r] + 1..e).filter(move |c| !piv.contains(c)).map(move |c| (r, c))
            })
            .collect();
        let p = f.p();
        let mut vals = vec![0u32; free.len()];
        loop {
            let mut mat = Matrix::zeros(f, m, e);
            for (r, &c) in piv.iter().enumerate() {
                mat.set(r, c, 1);
            }
            for (&(r, c), &x) in free.iter().zip(&vals) {
                mat.set(r, c, x);
            }
            out.push(mat);
            let mut i = 0;
            while i < vals.len() {
                vals[i] += 1;
                if vals[i] < p {
                    break;
                }
                vals[i] = 0;
                i += 1;
            }
            if i == vals.len() {
                return;
            }
        }
    }
    for c in start..e {
        piv.push(c);
        grass_pivots(f, m, e, c + 1, piv, out);
        piv.pop();
    }
}

/// Multisets `{(index, multiplicity)}` of eligible members with the given
/// total dimension and multiplicities bounded by the Ext dimensions.
fn multisets(eligible: &[(usize, usize, usize)], total: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(
        el: &[(usize, usize, usize)],
        i: usize,
        left: usize,
        cur: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        if i == el.len() {
            return;
        }
        let (idx, dim, e) = el[i];
        go(el, i + 1, left, cur, out);
        for m in 1..=e {
            if m * dim > left {
                break;
            }
            cur.push((idx, m));
            go(el, i + 1, left - m * dim, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(eligible, 0, total, &mut Vec::new(), &mut out);
    out
}

struct Candidate {
    vertex: usize,
    parts: Vec<(usize, Matrix)>,
}

fn build_candidate(
    alg: &Arc<BoundQuiverAlgebra>,
    members: &[Representation],
    exts: &HashMap<(usize, usize), Arc<Ext1Space>>,
    cand: &Candidate,
) -> Representation {
    let f = alg.field();
    let q = alg.quiver();
    let v = cand.vertex;
    let mut summands = Vec::new();
    let mut cocycles: Vec<(usize, Vec<u32>)> = Vec::new();
    for (j, sub) in &cand.parts {
        let ext = &exts[&(v, *j)];
        for r in 0..sub.rows() {
            summands.push(members[*j].clone());
            cocycles.push((*j, ext.cocycle_of(sub.row(r))));
        }
    }
    let x = Representation::direct_sum(alg, &summands);
    let simple = Representation::simple(alg, v);
    let deltas: Vec<Matrix> = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, arrow)| {
            let blocks: Vec<Matrix> = cocycles
                .iter()
                .map(|(j, c)| exts[&(v, *j)].deltas(c)[ai].clone())
                .collect();
            let refs: Vec<&Matrix> = blocks.iter().collect();
            Matrix::vstack(f, simple.dim_at(arrow.source), &refs)
        })
        .collect();
    Representation::extension(&simple, &x, &deltas).0
}

/// Enumerates indecomposable modules of total dimension at most `d`, up to
/// isomorphism, in order of dimension.
pub fn enumerate_indecomposables(alg: &Arc<BoundQuiverAlgebra>, d: usize) -> Inventory {
    let n = alg.num_vertices();
    let f = alg.field();
    let mut members: Vec<Representation> = Vec::new();
    let mut keys: Vec<Key> = Vec::new();
    let mut uncertain = 0;
    if d >= 1 {
        for v in 0..n {
            let s = Representation::simple(alg, v);
            keys.push(key_of(&s));
            members.push(s);
        }
    }
    let mut exts: HashMap<(usize, usize), Arc<Ext1Space>> = HashMap::new();
    for k in 2..=d {
        let mut candidates = Vec::new();
        for v in 0..n {
            let simple = Representation::simple(alg, v);
            let todo: Vec<usize> = (0..members.len())
                .filter(|j| !exts.contains_key(&(v, *j)) && members[*j].total_dim() < k)
                .collect();
            let computed: Vec<(usize, Ext1Space)> = todo
                .par_iter()
                .map(|&j| (j, Ext1Space::new(&simple, &members[j]).unwrap()))
                .collect();
            for (j, e) in computed {
                exts.insert((v, j), Arc::new(e));
            }
            let eligible: Vec<(usize, usize, usize)> = (0..members.len())
                .filter(|j| members[*j].total_dim() < k)
                .map(|j| (j, members[j].total_dim(), exts[&(v, j)].dim()))
                .filter(|&(_, _, e)| e > 0)
                .collect();
            for ms in multisets(&eligible, k - 1) {
                let choices: Vec<Vec<Matrix>> = ms
                    .iter()
                    .map(|&(j, m)| grassmannian(f, m, exts[&(v, j)].dim()))
                    .collect();
                let mut idx = vec![0usize; ms.len()];
                'product: loop {
                    candidates.push(Candidate {
                        vertex: v,
                        parts: ms
                            .iter()
                            .zip(&idx)
                            .enumerate()
                            .map(|(t, (&(j, _), &i))| (j, choices[t][i].clone()))
                            .collect(),
                    });
                    let mut t = 0;
                    loop {
                        if t == idx.len() {
                            break 'product;
                        }
                        idx[t] += 1;
                        if idx[t] < choices[t].len() {
                            break;
                        }
                        idx[t] = 0;
                        t += 1;
                    }
                }
            }
        }
        let found: Vec<Option<(Representation, Key, Locality)>> = candidates
            .par_iter()
            .map(|c| {
                let e = build_candidate(alg, &members, &exts, c);
                indecomposable_locality(&e).map(|loc| {
                    let key = key_of(&e);
                    (e, key, loc)
                })
            })
            .collect();
        let level_start = members.len();
        for (e, key, loc) in found.into_iter().flatten() {
            let duplicate = (level_start..members.len()).any(|i| {
                keys[i] == key && iso_indecomposables(&members[i], &e).unwrap().is_some()
            });
            if !duplicate {
                if loc == Locality::Probable {
                    uncertain += 1;
                }
                members.push(e);
                keys.push(key);
            }
        }
    }
    let mut order: Vec<usize> = (0..members.len()).collect();
    order.sort_by(|&a, &b| {
        (members[a].total_dim(), members[a].dims(), a).cmp(&(members[b].total_dim(), members[b].dims(), b))
    });
    let modules = order.into_iter().map(|i| members[i].clone()).collect();
    Inventory {
        alg: alg.clone(),
        dim_bound: d,
        modules,
        completeness: certify(alg, d),
        uncertain,
    }
}

fn certify(alg: &Arc<BoundQuiverAlgebra>, d: usize) -> Completeness {
    if d == 0 {
        return Completeness::BestEffort;
    }
    if alg.is_semisimple() {
        return Completeness::Complete("semisimple".into());
    }
    if alg.is_path_algebra() {
        if let Some(roots) = dynkin_positive_roots(alg) {
            let height = roots.iter().map(|r| r.iter().sum::<i64>()).max().unwrap_or(0);
            if height as usize <= d {
                return Completeness::Complete(format!(
                    "hereditary of Dynkin type, {} positive roots",
                    roots.len()
                ));
            }
            return Completeness::BestEffort;
        }
    }
    if is_nakayama(alg) {
        let max_p = (0..alg.num_vertices())
            .map(|v| Representation::projective(alg, v).total_dim())
            .max()
            .unwrap_or(0);
        if max_p <= d {
            return Completeness::Complete("Nakayama, all modules uniserial".into());
        }
    }
    Completeness::BestEffort
}

fn is_nakayama(alg: &BoundQuiverAlgebra) -> bool {
    let q = alg.quiver();
    (0..q.num_vertices()).all(|v| {
        q.arrows().iter().filter(|a| a.source == v).count() <= 1
            && q.arrows().iter().filter(|a| a.target == v).count() <= 1
    })
}

/// Symmetrized Tits form matrix `2I - (A + A^T)`.
pub fn tits_matrix(alg: &BoundQuiverAlgebra) -> Vec<Vec<i64>> {
    let q = alg.quiver();
    let n = q.num_vertices();
    let mut g = vec![vec![0i64; n]; n];
    for (i, row) in g.iter_mut().enumerate() {
        row[i] = 2;
    }
    for a in q.arrows() {
        g[a.source][a.target] -= 1;
        g[a.target][a.source] -= 1;
    }
    g
}

/// Determinant by fraction-free (Bareiss) elimination.
fn bareiss_det(mut m: Vec<Vec<i128>>) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1i128;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&i| m[i][k] != 0) {
                Some(i) => {
                    m.swap(i, k);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

/// Positive roots of the Tits form when it is positive definite (the
/// underlying graph is a disjoint union of Dynkin diagrams), else `None`.
pub fn dynkin_positive_roots(alg: &BoundQuiverAlgebra) -> Option<Vec<Vec<i64>>> {
    let g = tits_matrix(alg);
    let n = g.len();
    for k in 1..=n {
        let minor: Vec<Vec<i128>> = (0..k).map(|i| (0..k).map(|j| g[i][j] as i128).collect()).collect();
        if bareiss_det(minor) <= 0 {
            return None;
        }
    }
    let mut roots: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut frontier = roots.clone();
    while let Some(x) = frontier.pop() {
        for i in 0..n {
            let pair: i64 = (0..n).map(|j| x[j] * g[j][i]).sum();
            let mut y = x.clone();
            y[i] -= pair;
            if y.iter().all(|&c| c >= 0) && y.iter().any(|&c| c > 0) && !roots.contains(&y) {
                roots.push(y.clone());
                frontier.push(y);
            }
        }
    }
    roots.sort();
    Some(roots)
}
