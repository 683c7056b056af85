use std::fmt;

use super::field::PrimeField;
use super::matrix::Matrix;

/// Univariate polynomial over F_p, coefficients stored lowest degree first
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    field: PrimeField,
    coeffs: Vec<u32>,
}

impl Poly {
    pub fn new(field: PrimeField, mut coeffs: Vec<u32>) -> Self {
        let p = field.p();
        coeffs.iter_mut().for_each(|c| *c %= p);
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Poly { field, coeffs }
    }

    pub fn zero(field: PrimeField) -> Self {
        Poly {
            field,
            coeffs: Vec::new(),
        }
    }

    pub fn one(field: PrimeField) -> Self {
        Poly::new(field, vec![1])
    }

    pub fn x(field: PrimeField) -> Self {
        Poly::new(field, vec![0, 1])
    }

    pub fn constant(field: PrimeField, c: u32) -> Self {
        Poly::new(field, vec![c])
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn monic(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.leading());
        self.scale(inv)
    }

    pub fn scale(&self, s: u32) -> Poly {
        let f = self.field;
        Poly::new(f, self.coeffs.iter().map(|&c| f.mul(c, s)).collect())
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let f = self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                f.add(
                    self.coeffs.get(i).copied().unwrap_or(0),
                    other.coeffs.get(i).copied().unwrap_or(0),
                )
            })
            .collect();
        Poly::new(f, c)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(self.field.neg(1)))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        let f = self.field;
        let mut c = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                c[i + j] = f.mul_add(c[i + j], a, b);
            }
        }
        Poly::new(f, c)
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let f = self.field;
        let mut r = self.coeffs.clone();
        let dd = d.deg_or_zero();
        if r.len() < d.coeffs.len() {
            return (Poly::zero(f), self.clone());
        }
        let inv = f.inv(d.leading());
        let mut q = vec![0u32; r.len() - dd];
        for i in (dd..r.len()).rev() {
            let c = f.mul(r[i], inv);
            if c == 0 {
                continue;
            }
            q[i - dd] = c;
            let nc = f.neg(c);
            for (j, &dc) in d.coeffs.iter().enumerate() {
                r[i - dd + j] = f.mul_add(r[i - dd + j], nc, dc);
            }
        }
        (Poly::new(f, q), Poly::new(f, r))
    }

    pub fn rem(&self, d: &Poly) -> Poly {
        self.div_rem(d).1
    }

    /// Exact division; panics when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Poly) -> Poly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero if both are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*other = g`, `g` the monic gcd.
    pub fn ext_gcd(&self, other: &Poly) -> (Poly, Poly, Poly) {
        let f = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (Poly::one(f), Poly::zero(f));
        let (mut t0, mut t1) = (Poly::zero(f), Poly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.leading());
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> Poly {
        let f = self.field;
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.mul(a, (i as u64 % f.p() as u64) as u32))
            .collect();
        Poly::new(f, c)
    }

    pub fn pow_mod(&self, mut e: u64, modulus: &Poly) -> Poly {
        let mut base = self.rem(modulus);
        let mut acc = Poly::one(self.field).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        acc
    }

    /// Product of the distinct monic irreducible factors.
    pub fn radical(&self) -> Poly {
        let f = self.field;
        let m = self.monic();
        if m.deg_or_zero() == 0 {
            return Poly::one(f);
        }
        let d = m.derivative();
        if d.is_zero() {
            // m(x) = g(x^p); over F_p the p-th root of g(x^p) is g(x)
            let p = f.p() as usize;
            let g = Poly::new(f, m.coeffs.iter().step_by(p).copied().collect());
            return g.radical();
        }
        let c = m.gcd(&d);
        let w = m.div_exact(&c);
        // primes with multiplicity divisible by p survive only in c
        let mut rest = c;
        loop {
            let g = rest.gcd(&w);
            if g.deg_or_zero() == 0 {
                break;
            }
            rest = rest.div_exact(&g);
        }
        w.mul(&rest.radical()).monic()
    }

    /// Splits a squarefree monic polynomial into a nontrivial factor using
    /// Berlekamp's algorithm; `None` means the polynomial is irreducible (or constant).
    pub fn berlekamp_factor(&self) -> Option<Poly> {
        let f = self.field;
        let r = self.monic();
        let n = r.deg_or_zero();
        if n <= 1 {
            return None;
        }
        // rows: x^{ip} mod r
        let xp = Poly::x(f).pow_mod(f.p() as u64, &r);
        let mut q = Matrix::zeros(f, n, n);
        let mut cur = Poly::one(f);
        for i in 0..n {
            for (j, &c) in cur.coeffs.iter().enumerate() {
                q.set(i, j, c);
            }
            cur = cur.mul(&xp).rem(&r);
        }
        let fixed = q.transpose().sub(&Matrix::identity(f, n));
        let kernel = fixed.kernel_basis();
        if kernel.cols() <= 1 {
            return None;
        }
        for k in 0..kernel.cols() {
            let v = Poly::new(f, (0..n).map(|i| kernel.get(i, k)).collect());
            if v.deg_or_zero() == 0 {
                continue;
            }
            for s in f.elements() {
                let g = r.gcd(&v.sub(&Poly::constant(f, s)));
                let dg = g.deg_or_zero();
                if dg > 0 && dg < n {
                    return Some(g);
                }
            }
        }
        unreachable!("Berlekamp subalgebra of dimension >= 2 always yields a split")
    }

    /// A factorization `self = a * b` with `gcd(a, b) = 1` and both factors
    /// nonconstant, if one exists. Both returned factors are monic.
    pub fn coprime_split(&self) -> Option<(Poly, Poly)> {
        let m = self.monic();
        let rad = m.radical();
        let g = rad.berlekamp_factor()?;
        // a collects every prime power of m whose prime divides g
        let mut a = Poly::one(self.field);
        let mut rest = m;
        loop {
            let c = rest.gcd(&g);
            if c.deg_or_zero() == 0 {
                break;
            }
            a = a.mul(&c);
            rest = rest.div_exact(&c);
        }
        Some((a.monic(), rest.monic()))
    }

    /// Evaluates at a square matrix by Horner's rule.
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let f = self.field;
        let n = m.rows();
        let mut acc = Matrix::zeros(f, n, n);
        let id = Matrix::identity(f, n);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            acc.add_scaled(c, &id);
        }
        acc
    }

    pub fn lcm(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.field);
        }
        self.mul(other).div_exact(&self.gcd(other)).monic()
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}x")?,
                _ => write!(f, "{c}x^{i}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fp(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn poly(p: u32, c: &[u32]) -> Poly {
        Poly::new(fp(p), c.to_vec())
    }

    #[test]
    fn division_identity() {
        let a = poly(7, &[3, 0, 5, 1, 2]);
        let b = poly(7, &[1, 4, 1]);
        let (q, r) = a.div_rem(&b);
        assert_eq!(q.mul(&b).add(&r), a);
        assert!(r.degree().unwrap_or(0) < 2);
    }

    #[test]
    fn ext_gcd_bezout() {
        let a = poly(5, &[4, 0, 1]); // x^2 - 1
        let b = poly(5, &[1, 1]); // x + 1
        let (g, s, t) = a.ext_gcd(&b);
        assert_eq!(g, poly(5, &[1, 1]));
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }

    #[test]
    fn radical_strips_multiplicities() {
        // (x-1)^3 (x-2) over F_5
        let f = fp(5);
        let l1 = Poly::new(f, vec![4, 1]);
        let l2 = Poly::new(f, vec![3, 1]);
        let m = l1.mul(&l1).mul(&l1).mul(&l2);
        assert_eq!(m.radical(), l1.mul(&l2));
        // x^5 over F_5 has zero derivative
        let x5 = poly(5, &[0, 0, 0, 0, 0, 1]);
        assert_eq!(x5.radical(), Poly::x(f));
    }

    #[test]
    fn irreducible_quadratic_has_no_split() {
        // x^2 + 1 is irreducible over F_3
        assert!(poly(3, &[1, 0, 1]).coprime_split().is_none());
        assert!(poly(3, &[1, 0, 1]).mul(&poly(3, &[1, 0, 1])).coprime_split().is_none());
    }

    #[test]
    fn product_of_distinct_irreducibles_splits() {
        // (x^2 + 1)(x^2 + x + 2) over F_3, both irreducible
        let a = poly(3, &[1, 0, 1]);
        let b = poly(3, &[2, 1, 1]);
        let (g, h) = a.mul(&b).mul(&a).coprime_split().unwrap();
        assert_eq!(g.gcd(&h), Poly::one(fp(3)));
        assert_eq!(g.mul(&h), a.mul(&a).mul(&b).monic());
    }
}
