use std::fmt;

use super::field::PrimeField;
use super::poly::Poly;
use crate::error::{Error, Result};

/// Dense row-major matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: Matrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

impl Matrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % field.p();
        }
        m
    }

    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        let p = field.p();
        debug_assert!(data.iter().all(|&x| x < p));
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Builds a matrix from integer rows, reducing every entry mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("ragged matrix rows".into()));
        }
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| field.reduce(x)))
            .collect();
        Ok(Matrix {
            field,
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c) % field.p());
            }
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    /// Column vector.
    pub fn column_vector(field: PrimeField, entries: Vec<u32>) -> Self {
        let n = entries.len();
        Self::from_vec(field, n, 1, entries)
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v % self.field.p();
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|r| (0..self.cols).all(|c| self.get(r, c) == u32::from(r == c)))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product shape mismatch {:?} * {:?}",
            self.shape(),
            other.shape()
        );
        let f = self.field;
        let p = f.p() as u64;
        let n = other.cols;
        let mut out = vec![0u32; self.rows * n];
        // number of products that fit in a u64 accumulator before reducing
        let max_term = (p - 1).max(1) * (p - 1).max(1);
        let budget = (u64::MAX / max_term.max(1)).clamp(1, 1 << 20) as usize;
        let mut acc = vec![0u64; n];
        for i in 0..self.rows {
            acc.iter_mut().for_each(|a| *a = 0);
            let mut pending = 0usize;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * n..(k + 1) * n];
                for (slot, &b) in acc.iter_mut().zip(brow) {
                    *slot += a * b as u64;
                }
                pending += 1;
                if pending + 1 >= budget {
                    acc.iter_mut().for_each(|x| *x %= p);
                    pending = 0;
                }
            }
            for (o, a) in out[i * n..(i + 1) * n].iter_mut().zip(&acc) {
                *o = (a % p) as u32;
            }
        }
        Matrix {
            field: f,
            rows: self.rows,
            cols: n,
            data: out,
        }
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix sum shape mismatch");
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        self.with_data(data)
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.shape(), other.shape(), "matrix difference shape mismatch");
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        self.with_data(data)
    }

    pub fn neg(&self) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.neg(a)).collect();
        self.with_data(data)
    }

    pub fn scale(&self, s: u32) -> Matrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, s)).collect();
        self.with_data(data)
    }

    /// `self += s * other`
    pub fn add_scaled(&mut self, s: u32, other: &Matrix) {
        assert_eq!(self.shape(), other.shape());
        if s == 0 {
            return;
        }
        let f = self.field;
        for (a, &b) in self.data.iter_mut().zip(&other.data) {
            *a = f.mul_add(*a, s, b);
        }
    }

    fn with_data(&self, data: Vec<u32>) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.data[r * self.cols + c];
            }
        }
        t
    }

    /// Horizontal concatenation. All blocks must share the row count `rows`.
    pub fn hstack(field: PrimeField, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row mismatch");
            for r in 0..rows {
                m.data[r * cols + off..r * cols + off + b.cols].copy_from_slice(b.row(r));
            }
            off += b.cols;
        }
        m
    }

    /// Vertical concatenation. All blocks must share the column count `cols`.
    pub fn vstack(field: PrimeField, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column mismatch");
            data.extend_from_slice(&b.data);
        }
        Matrix {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn block_diag(field: PrimeField, blocks: &[&Matrix]) -> Matrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for b in blocks {
            m.set_block(ro, co, b);
            ro += b.rows;
            co += b.cols;
        }
        m
    }

    pub fn set_block(&mut self, r0: usize, c0: usize, b: &Matrix) {
        assert!(r0 + b.rows <= self.rows && c0 + b.cols <= self.cols, "block out of range");
        for r in 0..b.rows {
            let dst = (r0 + r) * self.cols + c0;
            self.data[dst..dst + b.cols].copy_from_slice(b.row(r));
        }
    }

    pub fn block(&self, r0: usize, rows: usize, c0: usize, cols: usize) -> Matrix {
        assert!(r0 + rows <= self.rows && c0 + cols <= self.cols, "block out of range");
        let mut m = Matrix::zeros(self.field, rows, cols);
        for r in 0..rows {
            let src = (r0 + r) * self.cols + c0;
            m.data[r * cols..(r + 1) * cols].copy_from_slice(&self.data[src..src + cols]);
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |r, c| self.get(r, idx[c]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend_from_slice(self.row(r));
        }
        Matrix {
            field: self.field,
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn column(&self, c: usize) -> Matrix {
        self.select_columns(&[c])
    }

    /// Reduced row echelon form. Pivots are chosen as the first nonzero entry
    /// scanning columns left to right and rows top to bottom.
    pub fn rref(&self) -> Rref {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        let rank = pivots.len();
        Rref {
            matrix: m,
            pivots,
            rank,
        }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let f = self.field;
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(pr) = (r..rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for k in 0..cols {
                    self.data.swap(pr * cols + k, r * cols + k);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            if inv != 1 {
                for k in c..cols {
                    let x = &mut self.data[r * cols + k];
                    *x = f.mul(*x, inv);
                }
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (prow, after) = rest.split_at_mut(cols);
            let eliminate = |row: &mut [u32]| {
                let factor = row[c];
                if factor != 0 {
                    let nf = f.neg(factor);
                    for k in c..cols {
                        if prow[k] != 0 {
                            row[k] = f.mul_add(row[k], nf, prow[k]);
                        }
                    }
                }
            };
            before.chunks_mut(cols).for_each(eliminate);
            after.chunks_mut(cols).for_each(eliminate);
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        self.rref().rank
    }

    /// Columns spanning the null space `{x : self * x = 0}`.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { matrix, pivots, .. } = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&c| !is_pivot[c]).collect();
        let f = self.field;
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                k.data[pc * free.len() + j] = f.neg(matrix.get(i, fc));
            }
        }
        k
    }

    /// Columns of `self` forming a basis of its column space (the pivot columns).
    pub fn image_basis(&self) -> Matrix {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }

    /// Rows `y` (as a matrix) with `y * self = 0`, spanning the left null space.
    pub fn left_annihilator(&self) -> Matrix {
        self.transpose().kernel_basis().transpose()
    }

    /// One solution `x` of `self * x = b`, or `None` when `b` leaves the column space.
    pub fn solve(&self, b: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, b.rows, "solve: row mismatch");
        let aug = Matrix::hstack(self.field, self.rows, &[self, b]);
        let Rref { matrix, pivots, .. } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, b.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.data[pc * b.cols + j] = matrix.get(i, self.cols + j);
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let x = self.solve(&Matrix::identity(self.field, n))?;
        // a left-invertible square matrix is invertible, but the solve above
        // only certifies consistency; rank settles it
        (self.rank() == n).then_some(x)
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn pow(&self, mut e: u64) -> Matrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Matrix::identity(self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Monic polynomial of least degree annihilating the matrix.
    pub fn min_poly(&self) -> Poly {
        assert!(self.is_square(), "min_poly of a non-square matrix");
        let f = self.field;
        let n = self.rows;
        if n == 0 {
            return Poly::one(f);
        }
        // Krylov sequence of vectorized powers, eliminated incrementally.
        // Each stored row keeps (reduced vector, combination of powers).
        let len = n * n;
        let mut reduced: Vec<(usize, Vec<u32>, Vec<u32>)> = Vec::new();
        let mut power = Matrix::identity(f, n);
        for k in 0..=n {
            let mut v = power.data.clone();
            let mut comb = vec![0u32; k + 1];
            comb[k] = 1;
            for (pc, row, rc) in &reduced {
                let c = v[*pc];
                if c != 0 {
                    let nc = f.neg(c);
                    for (x, &y) in v.iter_mut().zip(row) {
                        *x = f.mul_add(*x, nc, y);
                    }
                    for (i, &y) in rc.iter().enumerate() {
                        comb[i] = f.mul_add(comb[i], nc, y);
                    }
                }
            }
            match v.iter().position(|&x| x != 0) {
                None => {
                    // comb annihilates and has leading coefficient 1 at x^k
                    return Poly::new(f, comb);
                }
                Some(pc) => {
                    let inv = f.inv(v[pc]);
                    v.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                    comb.iter_mut().for_each(|x| *x = f.mul(*x, inv));
                    // keep existing rows reduced against the new pivot
                    for (_, row, rc) in reduced.iter_mut() {
                        let c = row[pc];
                        if c != 0 {
                            let nc = f.neg(c);
                            for (x, &y) in row.iter_mut().zip(&v) {
                                *x = f.mul_add(*x, nc, y);
                            }
                            rc.resize(k + 1, 0);
                            for (i, &y) in comb.iter().enumerate() {
                                rc[i] = f.mul_add(rc[i], nc, y);
                            }
                        }
                    }
                    debug_assert_eq!(v.len(), len);
                    reduced.push((pc, v, comb));
                }
            }
            power = power.mul(self);
        }
        unreachable!("Cayley-Hamilton bounds the minimal polynomial degree by n")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} over {}: {}", self.rows, self.cols, self.field, self)
    }
}

impl fmt::Display for Matrix {
    /// `[[a,b],[c,d]]` with entries printed as residues in `0..p`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for c in 0..self.cols {
                if c > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(r, c))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
