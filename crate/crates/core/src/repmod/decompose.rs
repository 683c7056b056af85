//! Krull-Schmidt decomposition by Fitting splits of endomorphisms.
//!
//! For an endomorphism `φ` whose minimal polynomial factors as `g * h` with
//! `gcd(g, h) = 1`, the Bezout element `e = (s g)(φ)` is an idempotent and
//! `M = e M ⊕ (1 - e) M`. Candidates are tried in a fixed order (basis
//! elements, pairwise sums, seeded random combinations); when the
//! endomorphism algebra is small it is searched exhaustively, which certifies
//! that it is local.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::exactlin::{Matrix, Poly};

use super::hom::HomSpace;
use super::representation::{Morphism, Representation};

/// Random endomorphism combinations tried before giving up on a split.
pub const RANDOM_TRIALS: usize = 64;

/// Endomorphism algebras with at most this many elements are searched exhaustively.
pub const EXHAUSTIVE_LIMIT: u64 = 4096;

/// How indecomposability was established.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Locality {
    /// `End(M)` is local: one-dimensional or exhaustively checked.
    Certain,
    /// No split found among the basis, pairwise sums and random trials.
    Probable,
}

fn min_poly_of(phi: &Morphism) -> Poly {
    let f = phi.source().field();
    phi.maps()
        .iter()
        .filter(|m| m.rows() > 0)
        .fold(Poly::one(f), |acc, m| acc.lcm(&m.min_poly()))
}

/// Splits `m` along `phi` when its minimal polynomial has coprime factors.
fn split_by(m: &Representation, phi: &Morphism) -> Option<(Representation, Representation)> {
    let mu = min_poly_of(phi);
    let (g, h) = mu.coprime_split()?;
    let (_, s, _) = g.ext_gcd(&h);
    let e_poly = s.mul(&g);
    let f = m.field();
    let mut left = Vec::new();
    let mut right = Vec::new();
    for (v, phi_v) in phi.maps().iter().enumerate() {
        let e = e_poly.eval_matrix(phi_v);
        let one_minus = Matrix::identity(f, m.dim_at(v)).sub(&e);
        left.push(e.image_basis());
        right.push(one_minus.image_basis());
    }
    let (a, _) = m.submodule(left);
    let (b, _) = m.submodule(right);
    debug_assert!(!a.is_zero() && !b.is_zero());
    Some((a, b))
}

fn seed_for(m: &Representation) -> u64 {
    m.dims()
        .iter()
        .fold(0x9e37_79b9_7f4a_7c15u64, |acc, &d| acc.rotate_left(7) ^ d as u64)
}

fn random_coeffs(rng: &mut ChaCha8Rng, p: u32, k: usize) -> Vec<u32> {
    (0..k).map(|_| rng.gen_range(0..p)).collect()
}

/// Looks for a Fitting split of `m`. Returns the split, or the locality
/// certificate when none exists (or none was found).
fn find_split(m: &Representation, end: &HomSpace) -> std::result::Result<(Representation, Representation), Locality> {
    let k = end.dim();
    if k <= 1 {
        return Err(Locality::Certain);
    }
    let basis = end.elements();
    for phi in &basis {
        if let Some(s) = split_by(m, phi) {
            return Ok(s);
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            if let Some(s) = split_by(m, &basis[i].add(&basis[j])) {
                return Ok(s);
            }
        }
    }
    let p = m.field().p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed_for(m));
    for _ in 0..RANDOM_TRIALS {
        let c = random_coeffs(&mut rng, p, k);
        if let Some(s) = split_by(m, &end.combination(&c)) {
            return Ok(s);
        }
    }
    let size = (p as u64).checked_pow(k as u32);
    if size.is_some_and(|s| s <= EXHAUSTIVE_LIMIT) {
        let mut c = vec![0u32; k];
        loop {
            // odometer over F_p^k
            let mut i = 0;
            while i < k {
                c[i] += 1;
                if c[i] < p {
                    break;
                }
                c[i] = 0;
                i += 1;
            }
            if i == k {
                break;
            }
            if let Some(s) = split_by(m, &end.combination(&c)) {
                return Ok(s);
            }
        }
        return Err(Locality::Certain);
    }
    Err(Locality::Probable)
}

/// Indecomposable summands of `m`, sorted by dimension vector.
pub fn decompose(m: &Representation) -> Vec<Representation> {
    decompose_with_locality(m).into_iter().map(|(r, _)| r).collect()
}

pub fn decompose_with_locality(m: &Representation) -> Vec<(Representation, Locality)> {
    let mut out = Vec::new();
    let mut stack = vec![m.clone()];
    while let Some(x) = stack.pop() {
        if x.is_zero() {
            continue;
        }
        let end = HomSpace::new(&x, &x).expect("same algebra");
        match find_split(&x, &end) {
            Ok((a, b)) => {
                stack.push(b);
                stack.push(a);
            }
            Err(loc) => out.push((x, loc)),
        }
    }
    out.sort_by(|(a, _), (b, _)| (a.total_dim(), a.dims()).cmp(&(b.total_dim(), b.dims())));
    out
}

/// `Some(locality)` when `m` is indecomposable, `None` when it splits (or is zero).
pub fn indecomposable_locality(m: &Representation) -> Option<Locality> {
    if m.is_zero() {
        return None;
    }
    let end = HomSpace::new(m, m).expect("same algebra");
    find_split(m, &end).err()
}

pub fn is_indecomposable(m: &Representation) -> bool {
    indecomposable_locality(m).is_some()
}

fn search_iso(h: &HomSpace, seed: u64) -> Option<Morphism> {
    let elems = h.elements();
    if let Some(phi) = elems.iter().find(|phi| phi.is_isomorphism()) {
        return Some(phi.clone());
    }
    let p = h.source().field().p();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let phi = h.combination(&random_coeffs(&mut rng, p, h.dim()));
        if phi.is_isomorphism() {
            return Some(phi);
        }
    }
    None
}

/// Isomorphism test for two indecomposable modules: `Hom(M, N)` contains an
/// isomorphism iff some basis element is one, since the non-isomorphisms
/// form a proper subspace.
pub fn iso_indecomposables(m: &Representation, n: &Representation) -> Result<Option<Morphism>> {
    m.check_same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    let h = HomSpace::new(m, n)?;
    Ok(h.elements().into_iter().find(Morphism::is_isomorphism))
}

/// Decides `M ≅ N`: a direct search for an invertible homomorphism, then
/// comparison of Krull-Schmidt decompositions.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool> {
    m.check_same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(false);
    }
    if m.is_zero() {
        return Ok(true);
    }
    if m.top_dims() != n.top_dims() || m.socle_dims() != n.socle_dims() {
        return Ok(false);
    }
    let h = HomSpace::new(m, n)?;
    if h.dim() == 0 {
        return Ok(false);
    }
    if search_iso(&h, seed_for(m)).is_some() {
        return Ok(true);
    }
    let dm = decompose(m);
    let dn = decompose(n);
    if dm.len() != dn.len() {
        return Ok(false);
    }
    if dm.len() == 1 {
        return Ok(false);
    }
    let mut used = vec![false; dn.len()];
    for x in &dm {
        let mut found = false;
        for (j, y) in dn.iter().enumerate() {
            if !used[j] && iso_indecomposables(x, y)?.is_some() {
                used[j] = true;
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}
