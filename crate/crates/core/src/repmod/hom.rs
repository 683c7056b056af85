use crate::error::Result;
use crate::exactlin::{Matrix, PrimeField};

use super::representation::{Morphism, Representation};

/// Linear system whose unknowns are a list of matrix blocks `X_k`, with
/// matrix-valued conditions `Σ c * L * X_k * R = 0`.
pub(crate) struct BlockSystem {
    field: PrimeField,
    shapes: Vec<(usize, usize)>,
    offsets: Vec<usize>,
    nvars: usize,
    rows: Vec<u32>,
    nrows: usize,
    rhs: Vec<u32>,
}

pub(crate) struct Term<'a> {
    pub coef: u32,
    pub left: Option<&'a Matrix>,
    pub var: usize,
    pub right: Option<&'a Matrix>,
}

impl BlockSystem {
    pub fn new(field: PrimeField, shapes: Vec<(usize, usize)>) -> Self {
        let offsets = layout(&shapes);
        let nvars = offsets.last().copied().unwrap_or(0);
        BlockSystem {
            field,
            shapes,
            offsets,
            nvars,
            rows: Vec::new(),
            nrows: 0,
            rhs: Vec::new(),
        }
    }

    /// Adds the `r x c` condition `Σ terms = 0`.
    pub fn add_condition(&mut self, r: usize, c: usize, terms: &[Term<'_>]) {
        let f = self.field;
        let start = self.rows.len();
        self.rows.resize(start + r * c * self.nvars, 0);
        for t in terms {
            let (vr, vc) = self.shapes[t.var];
            let off = self.offsets[t.var];
            let lrows = t.left.map_or(vr, Matrix::rows);
            let rcols = t.right.map_or(vc, Matrix::cols);
            debug_assert_eq!((lrows, rcols), (r, c));
            for i in 0..r {
                for j in 0..c {
                    let row = start + (i * c + j) * self.nvars;
                    // coefficient of X[k,l] is c * L[i,k] * R[l,j]
                    let ks: Vec<(usize, u32)> = match t.left {
                        None => vec![(i, 1)],
                        Some(l) => (0..vr).filter_map(|k| nz(l.get(i, k)).map(|x| (k, x))).collect(),
                    };
                    let ls: Vec<(usize, u32)> = match t.right {
                        None => vec![(j, 1)],
                        Some(m) => (0..vc).filter_map(|l| nz(m.get(l, j)).map(|x| (l, x))).collect(),
                    };
                    for &(k, lk) in &ks {
                        let ck = f.mul(t.coef, lk);
                        for &(l, rl) in &ls {
                            let idx = row + off + k * vc + l;
                            self.rows[idx] = f.mul_add(self.rows[idx], ck, rl);
                        }
                    }
                }
            }
        }
        self.nrows += r * c;
        self.rhs.resize(self.nrows, 0);
    }

    /// Adds the condition `Σ terms = rhs`.
    pub fn add_affine_condition(&mut self, terms: &[Term<'_>], rhs: &Matrix) {
        let (r, c) = rhs.shape();
        let start = self.nrows;
        self.add_condition(r, c, terms);
        self.rhs[start..start + r * c].copy_from_slice(rhs.data());
    }

    /// One solution of the affine system, flattened.
    pub fn solve_affine(self) -> Option<Vec<u32>> {
        let b = Matrix::column_vector(self.field, self.rhs);
        let a = Matrix::from_vec(self.field, self.nrows, self.nvars, self.rows);
        a.solve(&b).map(|x| x.data().to_vec())
    }

    /// Columns spanning the solution space, in flattened coordinates.
    pub fn solutions(self) -> Matrix {
        Matrix::from_vec(self.field, self.nrows, self.nvars, self.rows).kernel_basis()
    }
}

fn nz(x: u32) -> Option<u32> {
    (x != 0).then_some(x)
}

pub(crate) fn layout(shapes: &[(usize, usize)]) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(shapes.len() + 1);
    let mut acc = 0;
    for &(r, c) in shapes {
        offsets.push(acc);
        acc += r * c;
    }
    offsets.push(acc);
    offsets
}

/// Row-major concatenation of a list of blocks.
pub(crate) fn flatten(blocks: &[Matrix]) -> Vec<u32> {
    blocks.iter().flat_map(|m| m.data().iter().copied()).collect()
}

pub(crate) fn unflatten(field: PrimeField, shapes: &[(usize, usize)], v: &[u32]) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(shapes.len());
    let mut pos = 0;
    for &(r, c) in shapes {
        out.push(Matrix::from_vec(field, r, c, v[pos..pos + r * c].to_vec()));
        pos += r * c;
    }
    out
}

/// `Hom(M, N)` with a fixed basis. Elements are stored flattened: vertex
/// blocks `N_v x M_v` in vertex order, each row-major.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Representation,
    target: Representation,
    shapes: Vec<(usize, usize)>,
    basis: Matrix,
}

impl HomSpace {
    pub fn new(m: &Representation, n: &Representation) -> Result<Self> {
        m.check_same_algebra(n)?;
        let q = m.algebra().quiver();
        let shapes: Vec<(usize, usize)> = (0..q.num_vertices())
            .map(|v| (n.dim_at(v), m.dim_at(v)))
            .collect();
        let mut sys = BlockSystem::new(m.field(), shapes.clone());
        for (i, a) in q.arrows().iter().enumerate() {
            let (r, c) = (n.dim_at(a.target), m.dim_at(a.source));
            if r * c == 0 {
                continue;
            }
            let neg = m.field().neg(1);
            sys.add_condition(
                r,
                c,
                &[
                    Term { coef: 1, left: Some(n.map(i)), var: a.source, right: None },
                    Term { coef: neg, left: None, var: a.target, right: Some(m.map(i)) },
                ],
            );
        }
        Ok(HomSpace {
            source: m.clone(),
            target: n.clone(),
            shapes,
            basis: sys.solutions(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn source(&self) -> &Representation {
        &self.source
    }

    pub fn target(&self) -> &Representation {
        &self.target
    }

    /// Ambient dimension (number of matrix entries).
    pub fn ambient_dim(&self) -> usize {
        self.basis.rows()
    }

    /// Basis as columns of the flattened ambient space.
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn element(&self, i: usize) -> Morphism {
        let col: Vec<u32> = (0..self.basis.rows()).map(|r| self.basis.get(r, i)).collect();
        self.from_flat(&col)
    }

    pub fn elements(&self) -> Vec<Morphism> {
        (0..self.dim()).map(|i| self.element(i)).collect()
    }

    /// The element with the given coordinates in the basis.
    pub fn combination(&self, coeffs: &[u32]) -> Morphism {
        let f = self.source.field();
        let v = self.basis.mul(&Matrix::column_vector(f, coeffs.to_vec()));
        self.from_flat(v.data())
    }

    pub fn from_flat(&self, v: &[u32]) -> Morphism {
        let maps = unflatten(self.source.field(), &self.shapes, v);
        Morphism::from_parts(self.source.clone(), self.target.clone(), maps)
    }

    pub fn flatten(&self, f: &Morphism) -> Vec<u32> {
        flatten(f.maps())
    }

    /// Columns: flattened `g ∘ φ` for each basis element `φ` (so `g` maps
    /// out of our target).
    pub fn postcompose_matrix(&self, g: &Morphism) -> Matrix {
        let cols: Vec<Vec<u32>> = self.elements().iter().map(|phi| flatten(phi.then(g).maps())).collect();
        columns_to_matrix(self.source.field(), &cols, self.source.dims(), g.target().dims())
    }

    /// Columns: flattened `φ ∘ h` for each basis element `φ` (so `h` maps
    /// into our source).
    pub fn precompose_matrix(&self, h: &Morphism) -> Matrix {
        let cols: Vec<Vec<u32>> = self.elements().iter().map(|phi| flatten(h.then(phi).maps())).collect();
        columns_to_matrix(self.source.field(), &cols, h.source().dims(), self.target.dims())
    }
}

fn columns_to_matrix(
    field: PrimeField,
    cols: &[Vec<u32>],
    src: &[usize],
    tgt: &[usize],
) -> Matrix {
    let rows: usize = src.iter().zip(tgt).map(|(s, t)| s * t).sum();
    let mut m = Matrix::zeros(field, rows, cols.len());
    for (j, c) in cols.iter().enumerate() {
        for (i, &x) in c.iter().enumerate() {
            m.set(i, j, x);
        }
    }
    m
}

pub fn hom_basis(m: &Representation, n: &Representation) -> Result<Vec<Morphism>> {
    Ok(HomSpace::new(m, n)?.elements())
}

pub fn hom_dim(m: &Representation, n: &Representation) -> Result<usize> {
    Ok(HomSpace::new(m, n)?.dim())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn a2_hom_examples() {
        let a = catalog::a2();
        let p1 = Representation::projective(&a, 0);
        let p2 = Representation::projective(&a, 1);
        let s2 = Representation::simple(&a, 1);
        assert_eq!(hom_dim(&p1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(&p2, &s2).unwrap(), 1);
        assert_eq!(hom_dim(&s2, &s2).unwrap(), 1);
        assert_eq!(hom_dim(&p2, &p1).unwrap(), 1);
        assert_eq!(hom_dim(&p1, &p2).unwrap(), 0);
    }

    #[test]
    fn hom_elements_commute() {
        let a = catalog::kronecker();
        let r = Representation::regular(&a);
        for phi in hom_basis(&r, &r).unwrap() {
            assert!(Morphism::new(&r, &r, phi.maps().to_vec()).is_ok());
        }
        // End(kQ) = kQ^op has the dimension of the algebra
        assert_eq!(hom_dim(&r, &r).unwrap(), a.dim());
    }

    #[test]
    fn mismatch_is_rejected() {
        let s = Representation::simple(&catalog::a2(), 0);
        let t = Representation::simple(&catalog::kronecker(), 0);
        assert!(HomSpace::new(&s, &t).is_err());
    }
}
