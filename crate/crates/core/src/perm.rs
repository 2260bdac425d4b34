//! The copy-swap permutations `P_I` acting on doubled vectors.
//!
//! A doubled vector has `D²` components indexed row-major by `(I₁; I₂)`.
//! `P_I` exchanges, for every party in `I`, that party's digit between the two
//! copies. It is applied as a gather through a pair of per-party-subset index
//! tables of length `D`, so no `D² × D²` operator is ever formed.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::index::{split_in_place, total_dim};
use crate::mask::BipartitionMask;

struct SwapTable {
    inside: Vec<u32>,
    outside: Vec<u32>,
}

type CacheKey = (Vec<usize>, u64);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<SwapTable>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<SwapTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn table(dims: &[usize], bits: u64) -> Arc<SwapTable> {
    let key = (dims.to_vec(), bits);
    if let Some(t) = cache().read().expect("perm cache poisoned").get(&key) {
        return Arc::clone(t);
    }
    let (inside, outside) = split_in_place(dims, bits);
    let built = Arc::new(SwapTable { inside, outside });
    let mut guard = cache().write().expect("perm cache poisoned");
    Arc::clone(guard.entry(key).or_insert(built))
}

fn gather(v: &[Complex64], dims: &[usize], bits: u64) -> Result<Vec<Complex64>> {
    let d = total_dim(dims);
    if v.len() != d * d {
        return Err(Error::LengthMismatch {
            expected: d * d,
            found: v.len(),
        });
    }
    if bits == 0 {
        return Ok(v.to_vec());
    }
    let t = table(dims, bits);
    let mut out = Vec::with_capacity(d * d);
    for i1 in 0..d {
        let (in1, out1) = (t.inside[i1] as usize, t.outside[i1] as usize);
        for i2 in 0..d {
            let (in2, out2) = (t.inside[i2] as usize, t.outside[i2] as usize);
            out.push(v[(in2 + out1) * d + in1 + out2]);
        }
    }
    Ok(out)
}

/// `P_I v` for a canonical bipartition.
///
/// Canonicalization is exact on every vector of the form `f(P) A`, since the
/// full swap commutes with every `P_I` and fixes `A`.
pub fn apply_perm(v: &[Complex64], dims: &[usize], mask: &BipartitionMask) -> Result<Vec<Complex64>> {
    if mask.n_parties() != dims.len() {
        return Err(Error::ArityMismatch(mask.n_parties(), dims.len()));
    }
    gather(v, dims, mask.bits())
}

/// Swaps exactly the parties in `bits`, with no complement folding.
pub fn permute_parties(v: &[Complex64], dims: &[usize], bits: u64) -> Result<Vec<Complex64>> {
    if dims.len() < 64 && bits >> dims.len() != 0 {
        return Err(Error::BadMask);
    }
    gather(v, dims, bits)
}

/// `(1 + sign·P_I) v`.
pub fn apply_factor(
    v: &[Complex64],
    dims: &[usize],
    mask: &BipartitionMask,
    sign: Sign,
) -> Result<Vec<Complex64>> {
    let pv = apply_perm(v, dims, mask)?;
    Ok(match sign {
        Sign::Plus => v.iter().zip(&pv).map(|(a, b)| a + b).collect(),
        Sign::Minus => v.iter().zip(&pv).map(|(a, b)| a - b).collect(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// `⟨a, b⟩` with the left argument conjugated.
pub fn inner(a: &[Complex64], b: &[Complex64]) -> Complex64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub fn norm_sq(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

pub fn max_abs_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mask::enumerate_bipartitions;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_vec(len: usize, seed: u64) -> Vec<Complex64> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..len)
            .map(|_| Complex64::new(rng.random::<f64>() - 0.5, rng.random::<f64>() - 0.5))
            .collect()
    }

    #[test]
    fn single_party_swap_moves_the_right_entry() {
        // dims [2, 2]: component (01; 10) under P_1 reads (11; 00)
        let dims = [2, 2];
        let v: Vec<Complex64> = (0..16).map(|k| Complex64::new(k as f64, 0.0)).collect();
        let p = permute_parties(&v, &dims, 0b01).unwrap();
        // I1 = 01, I2 = 10; swapping party 1 reads I1' = 11, I2' = 00, flat 12
        assert_eq!(p[4 + 2], Complex64::new(12.0, 0.0));
    }

    #[test]
    fn identity_and_involution() {
        let dims = [2, 3, 2];
        let v = random_vec(144, 5);
        for mask in enumerate_bipartitions(3) {
            let once = apply_perm(&v, &dims, &mask).unwrap();
            let twice = apply_perm(&once, &dims, &mask).unwrap();
            assert_eq!(twice, v);
            // same components, only reordered
            let mut a: Vec<f64> = once.iter().map(|z| z.norm_sqr()).collect();
            let mut b: Vec<f64> = v.iter().map(|z| z.norm_sqr()).collect();
            a.sort_by(f64::total_cmp);
            b.sort_by(f64::total_cmp);
            assert_eq!(a, b);
        }
        let trivial = BipartitionMask::trivial(3);
        assert_eq!(apply_perm(&v, &dims, &trivial).unwrap(), v);
    }

    #[test]
    fn length_checked() {
        let dims = [2, 2];
        let v = random_vec(15, 1);
        let m = BipartitionMask::from_parties(2, &[1]).unwrap();
        assert_eq!(
            apply_perm(&v, &dims, &m),
            Err(Error::LengthMismatch {
                expected: 16,
                found: 15
            })
        );
    }
}
