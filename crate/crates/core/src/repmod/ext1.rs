//! `Ext^1(C, A)` through extension cocycles.
//!
//! An extension `0 -> A -> E -> C -> 0` is written `E_v = A_v ⊕ C_v` with
//! arrow matrices `[[A_x, δ_x], [0, C_x]]`. The family `δ = (δ_x)` must make
//! every relation vanish on `E`, a linear condition; two families give
//! equivalent extensions when they differ by `A_x g_s - g_t C_x`.

use crate::error::{Error, Result};
use crate::exactlin::Matrix;

use super::hom::{flatten, unflatten, BlockSystem, Term};
use super::representation::{Morphism, Representation};

#[derive(Clone, Debug)]
pub struct Ext1Space {
    c: Representation,
    a: Representation,
    shapes: Vec<(usize, usize)>,
    cocycles: Matrix,
    coboundaries: Matrix,
    basis: Matrix,
    coords: Matrix,
}

fn delta_shapes(c: &Representation, a: &Representation) -> Vec<(usize, usize)> {
    a.algebra()
        .quiver()
        .arrows()
        .iter()
        .map(|x| (a.dim_at(x.target), c.dim_at(x.source)))
        .collect()
}

impl Ext1Space {
    pub fn new(c: &Representation, a: &Representation) -> Result<Self> {
        c.check_same_algebra(a)?;
        let alg = a.algebra().clone();
        let f = a.field();
        let q = alg.quiver();
        let shapes = delta_shapes(c, a);
        let nvars: usize = shapes.iter().map(|(r, c)| r * c).sum();

        let mut sys = BlockSystem::new(f, shapes.clone());
        for rel in alg.module_relations() {
            let Some((_, p0)) = rel.terms.first() else { continue };
            let s = q.arrow(p0[0]).source;
            let t = q.arrow(*p0.last().unwrap()).target;
            let (r, cc) = (a.dim_at(t), c.dim_at(s));
            if r * cc == 0 {
                continue;
            }
            let mut owned: Vec<(u32, Option<Matrix>, usize, Option<Matrix>)> = Vec::new();
            for (coef, path) in &rel.terms {
                for j in 0..path.len() {
                    let suffix = &path[j + 1..];
                    let prefix = &path[..j];
                    let left = (!suffix.is_empty()).then(|| a.path_matrix(suffix));
                    let right = (!prefix.is_empty()).then(|| c.path_matrix(prefix));
                    owned.push((*coef, left, path[j], right));
                }
            }
            let terms: Vec<Term<'_>> = owned
                .iter()
                .map(|(coef, l, v, r)| Term { coef: *coef, left: l.as_ref(), var: *v, right: r.as_ref() })
                .collect();
            sys.add_condition(r, cc, &terms);
        }
        let cocycles = sys.solutions();

        // coboundary of g = (g_v : C_v -> A_v)
        let gshapes: Vec<(usize, usize)> =
            (0..q.num_vertices()).map(|v| (a.dim_at(v), c.dim_at(v))).collect();
        let offsets = super::hom::layout(&shapes);
        let mut cob_cols: Vec<Vec<u32>> = Vec::new();
        for (v, &(gr, gc)) in gshapes.iter().enumerate() {
            for k in 0..gr {
                for l in 0..gc {
                    let mut col = vec![0u32; nvars];
                    for (xi, x) in q.arrows().iter().enumerate() {
                        let (_, dc) = shapes[xi];
                        let off = offsets[xi];
                        if x.source == v {
                            // A_x E_kl: column l receives A_x[:, k]
                            let ax = a.map(xi);
                            for i in 0..ax.rows() {
                                let e = &mut col[off + i * dc + l];
                                *e = f.add(*e, ax.get(i, k));
                            }
                        }
                        if x.target == v {
                            // -E_kl C_x: row k receives -C_x[l, :]
                            let cx = c.map(xi);
                            for j in 0..cx.cols() {
                                let e = &mut col[off + k * dc + j];
                                *e = f.sub(*e, cx.get(l, j));
                            }
                        }
                    }
                    cob_cols.push(col);
                }
            }
        }
        let cob = Matrix::from_fn(f, nvars, cob_cols.len(), |i, j| cob_cols[j][i]);
        let coboundaries = cob.image_basis();
        let b = coboundaries.cols();

        let both = Matrix::hstack(f, nvars, &[&coboundaries, &cocycles]);
        let ext_cols: Vec<usize> = both
            .rref()
            .pivots
            .iter()
            .filter(|&&p| p >= b)
            .map(|&p| p - b)
            .collect();
        let basis = cocycles.select_columns(&ext_cols);
        let e = basis.cols();
        let frame = Matrix::hstack(f, nvars, &[&coboundaries, &basis]);
        let coords = if e == 0 {
            Matrix::zeros(f, 0, nvars)
        } else {
            let x = frame
                .transpose()
                .solve(&Matrix::identity(f, b + e))
                .expect("frame has independent columns");
            x.transpose().block(b, e, 0, nvars)
        };
        Ok(Ext1Space { c: c.clone(), a: a.clone(), shapes, cocycles, coboundaries, basis, coords })
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn left(&self) -> &Representation {
        &self.c
    }

    pub fn right(&self) -> &Representation {
        &self.a
    }

    pub fn cocycle_dim(&self) -> usize {
        self.cocycles.cols()
    }

    pub fn coboundary_dim(&self) -> usize {
        self.coboundaries.cols()
    }

    pub fn ambient_dim(&self) -> usize {
        self.coords.cols()
    }

    /// Cocycle representing the `i`-th basis class, flattened.
    pub fn basis_vector(&self, i: usize) -> Vec<u32> {
        (0..self.basis.rows()).map(|r| self.basis.get(r, i)).collect()
    }

    /// Cocycle for a class given in basis coordinates.
    pub fn cocycle_of(&self, coeffs: &[u32]) -> Vec<u32> {
        let f = self.a.field();
        self.basis
            .mul(&Matrix::column_vector(f, coeffs.to_vec()))
            .data()
            .to_vec()
    }

    /// Coordinates of the class of a cocycle.
    pub fn class_coords(&self, cocycle: &[u32]) -> Vec<u32> {
        let f = self.a.field();
        self.coords
            .mul(&Matrix::column_vector(f, cocycle.to_vec()))
            .data()
            .to_vec()
    }

    /// Matrix sending cocycles to class coordinates (`dim x ambient`).
    pub fn coords_matrix(&self) -> &Matrix {
        &self.coords
    }

    pub fn is_cocycle(&self, v: &[u32]) -> bool {
        let f = self.a.field();
        let col = Matrix::column_vector(f, v.to_vec());
        self.cocycles.solve(&col).is_some()
    }

    pub fn deltas(&self, v: &[u32]) -> Vec<Matrix> {
        unflatten(self.a.field(), &self.shapes, v)
    }

    /// `f^*`: cocycle of the pullback along `f : C' -> C`, flattened for `(C', A)`.
    pub fn pullback(&self, v: &[u32], f: &Morphism) -> Vec<u32> {
        let q = self.a.algebra().quiver();
        let d = self.deltas(v);
        let out: Vec<Matrix> = q
            .arrows()
            .iter()
            .zip(&d)
            .map(|(x, dx)| dx.mul(f.map_at(x.source)))
            .collect();
        flatten(&out)
    }

    /// `g_*`: cocycle of the pushout along `g : A -> A'`, flattened for `(C, A')`.
    pub fn pushout(&self, v: &[u32], g: &Morphism) -> Vec<u32> {
        let q = self.a.algebra().quiver();
        let d = self.deltas(v);
        let out: Vec<Matrix> = q
            .arrows()
            .iter()
            .zip(&d)
            .map(|(x, dx)| g.map_at(x.target).mul(dx))
            .collect();
        flatten(&out)
    }

    /// Middle term of the extension with the given cocycle.
    pub fn middle_term(&self, v: &[u32]) -> (Representation, Morphism, Morphism) {
        Representation::extension(&self.c, &self.a, &self.deltas(v))
    }

    /// Cocycle of a short exact sequence `A -> B -> C` whose end terms are
    /// ours. Fails with `NotExact` when the sequence is not exact.
    pub fn class_of_sequence(&self, inj: &Morphism, surj: &Morphism) -> Result<Vec<u32>> {
        check_short_exact(inj, surj)?;
        let f = self.a.field();
        let b = inj.target();
        let q = self.a.algebra().quiver();
        let n = q.num_vertices();
        let sections: Vec<Matrix> = (0..n)
            .map(|v| {
                surj.map_at(v)
                    .solve(&Matrix::identity(f, surj.map_at(v).rows()))
                    .expect("surjective")
            })
            .collect();
        let out: Vec<Matrix> = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let defect = b.map(i).mul(&sections[x.source]).sub(&sections[x.target].mul(self.c.map(i)));
                inj.map_at(x.target).solve(&defect).expect("defect lies in the image of A")
            })
            .collect();
        Ok(flatten(&out))
    }
}

/// Checks that `0 -> A -> B -> C -> 0` is exact vertexwise.
pub fn check_short_exact(inj: &Morphism, surj: &Morphism) -> Result<()> {
    if inj.target() != surj.source() {
        return Err(Error::NotExact("middle terms differ".into()));
    }
    if !inj.is_injective() {
        return Err(Error::NotExact("left map is not injective".into()));
    }
    if !surj.is_surjective() {
        return Err(Error::NotExact("right map is not surjective".into()));
    }
    if !inj.then(surj).is_zero() {
        return Err(Error::NotExact("composite is nonzero".into()));
    }
    for v in 0..inj.maps().len() {
        let b = inj.target().dim_at(v);
        if inj.source().dim_at(v) + surj.target().dim_at(v) != b {
            return Err(Error::NotExact(format!("dimensions do not add up at vertex {v}")));
        }
    }
    Ok(())
}

pub fn ext1_dim(c: &Representation, a: &Representation) -> Result<usize> {
    Ok(Ext1Space::new(c, a)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::repmod::hom::hom_dim;

    #[test]
    fn a2_ext_between_simples() {
        let a = catalog::a2();
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        assert_eq!(ext1_dim(&s1, &s2).unwrap(), 1);
        assert_eq!(ext1_dim(&s2, &s1).unwrap(), 0);
        let p1 = Representation::projective(&a, 0);
        assert_eq!(ext1_dim(&p1, &s2).unwrap(), 0);
    }

    #[test]
    fn nonsplit_middle_term_is_projective() {
        let a = catalog::a2();
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        let ext = Ext1Space::new(&s1, &s2).unwrap();
        let xi = ext.basis_vector(0);
        let (e, inj, surj) = ext.middle_term(&xi);
        assert_eq!(e.dims(), &[1, 1]);
        assert_eq!(e.map(0).rank(), 1);
        let back = ext.class_of_sequence(&inj, &surj).unwrap();
        assert_eq!(ext.class_coords(&back), ext.class_coords(&xi));
    }

    #[test]
    fn dual_numbers_self_extension() {
        let a = catalog::dual_numbers();
        let s = Representation::simple(&a, 0);
        let p = Representation::projective(&a, 0);
        assert_eq!(ext1_dim(&s, &s).unwrap(), 1);
        assert_eq!(ext1_dim(&p, &s).unwrap(), 0);
        // x.x = 0 forces the middle term of any extension of S by S to be P or S ⊕ S
        let ext = Ext1Space::new(&s, &s).unwrap();
        let (e, _, _) = ext.middle_term(&ext.basis_vector(0));
        assert_eq!(e.map(0).rank(), 1);
    }

    #[test]
    fn euler_form_on_kronecker() {
        let a = catalog::kronecker();
        let mods = [
            Representation::simple(&a, 0),
            Representation::simple(&a, 1),
            Representation::projective(&a, 0),
            Representation::injective(&a, 1),
        ];
        for m in &mods {
            for n in &mods {
                let (dm, dn) = (m.dims(), n.dims());
                let euler = (dm[0] * dn[0] + dm[1] * dn[1]) as i64 - 2 * (dm[0] * dn[1]) as i64;
                let lhs = hom_dim(m, n).unwrap() as i64 - ext1_dim(m, n).unwrap() as i64;
                assert_eq!(lhs, euler);
            }
        }
    }

    #[test]
    fn pullback_along_identity_is_identity() {
        let a = catalog::kronecker();
        let s1 = Representation::simple(&a, 0);
        let s2 = Representation::simple(&a, 1);
        let ext = Ext1Space::new(&s1, &s2).unwrap();
        assert_eq!(ext.dim(), 2);
        let id = Morphism::identity(&s1);
        for i in 0..2 {
            let v = ext.basis_vector(i);
            assert_eq!(ext.pullback(&v, &id), v);
        }
    }

    #[test]
    fn sequence_checks() {
        let a = catalog::a2();
        let s1 = Representation::simple(&a, 0);
        let z = Morphism::zero(&s1, &s1);
        assert!(matches!(check_short_exact(&z, &z), Err(Error::NotExact(_))));
    }
}
