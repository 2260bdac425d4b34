//! Brute-force reference computations used as oracles. Everything here works
//! from explicit digit expansions and never touches the library's index
//! tables or permutation cache.

#![allow(dead_code)]

use concvec::StateTensor;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn digits(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for p in (0..dims.len()).rev() {
        out[p] = idx % dims[p];
        idx /= dims[p];
    }
    out
}

pub fn undigits(d: &[usize], dims: &[usize]) -> usize {
    d.iter().zip(dims).fold(0, |acc, (x, n)| acc * n + x)
}

/// Parties given 0-indexed in `set`.
pub fn in_set(set: u64, p: usize) -> bool {
    set >> p & 1 == 1
}

/// `tr ρ_S²` from `ρ_S[i, i'] = Σ_r a[i r] conj(a[i' r])`.
pub fn purity(amps: &[Complex64], dims: &[usize], set: u64) -> f64 {
    let n = dims.len();
    let keep: Vec<usize> = (0..n).filter(|&p| in_set(set, p)).collect();
    let rest: Vec<usize> = (0..n).filter(|&p| !in_set(set, p)).collect();
    let dk: usize = keep.iter().map(|&p| dims[p]).product();
    let dr: usize = rest.iter().map(|&p| dims[p]).product();
    let kd: Vec<usize> = keep.iter().map(|&p| dims[p]).collect();
    let rd: Vec<usize> = rest.iter().map(|&p| dims[p]).collect();
    let full = |i: usize, r: usize| {
        let (di, dr_) = (digits(i, &kd), digits(r, &rd));
        let mut d = vec![0; n];
        for (k, &p) in keep.iter().enumerate() {
            d[p] = di[k];
        }
        for (k, &p) in rest.iter().enumerate() {
            d[p] = dr_[k];
        }
        amps[undigits(&d, dims)]
    };
    let mut total = 0.0;
    for i in 0..dk {
        for j in 0..dk {
            let mut rho = Complex64::new(0.0, 0.0);
            for r in 0..dr {
                rho += full(i, r) * full(j, r).conj();
            }
            total += rho.norm_sqr();
        }
    }
    total
}

pub fn c2(state: &StateTensor, set: u64) -> f64 {
    2.0 * (1.0 - purity(state.amps(), state.dims(), set))
}

pub fn tsallis(state: &StateTensor, set: u64) -> f64 {
    1.0 - purity(state.amps(), state.dims(), set)
}

pub fn doubled(state: &StateTensor) -> Vec<Complex64> {
    let a = state.amps();
    let mut out = Vec::with_capacity(a.len() * a.len());
    for x in a {
        for y in a {
            out.push(x * y);
        }
    }
    out
}

/// Copy swap of the digits of every party in `set` (0-indexed bits).
pub fn swap(v: &[Complex64], dims: &[usize], set: u64) -> Vec<Complex64> {
    let d: usize = dims.iter().product();
    let mut out = vec![Complex64::new(0.0, 0.0); d * d];
    for i1 in 0..d {
        for i2 in 0..d {
            let (mut a, mut b) = (digits(i1, dims), digits(i2, dims));
            for p in 0..dims.len() {
                if in_set(set, p) {
                    std::mem::swap(&mut a[p], &mut b[p]);
                }
            }
            out[i1 * d + i2] = v[undigits(&a, dims) * d + undigits(&b, dims)];
        }
    }
    out
}

pub fn one_minus(v: &[Complex64], dims: &[usize], set: u64) -> Vec<Complex64> {
    let s = swap(v, dims, set);
    v.iter().zip(&s).map(|(x, y)| x - y).collect()
}

pub fn norm_sq(v: &[Complex64]) -> f64 {
    v.iter().map(|z| z.norm_sqr()).sum()
}

pub fn max_diff(a: &[Complex64], b: &[Complex64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Reorders parties: party `p` of the result is party `order[p]` of `state`.
pub fn reorder(state: &StateTensor, order: &[usize]) -> StateTensor {
    let dims = state.dims();
    let new_dims: Vec<usize> = order.iter().map(|&p| dims[p]).collect();
    let mut amps = vec![Complex64::new(0.0, 0.0); state.amps().len()];
    for (idx, amp) in amps.iter_mut().enumerate() {
        let d = digits(idx, &new_dims);
        let mut old = vec![0; dims.len()];
        for (p, &q) in order.iter().enumerate() {
            old[q] = d[p];
        }
        *amp = state.amps()[undigits(&old, dims)];
    }
    StateTensor::new(new_dims, amps, false).unwrap()
}

/// A random state that is a product across `sigma | rest` (0-indexed bits),
/// with parties in their natural order.
pub fn separable_along(dims: &[usize], sigma: u64, seed: u64) -> StateTensor {
    let n = dims.len();
    let left: Vec<usize> = (0..n).filter(|&p| in_set(sigma, p)).collect();
    let right: Vec<usize> = (0..n).filter(|&p| !in_set(sigma, p)).collect();
    let l = StateTensor::random(left.iter().map(|&p| dims[p]).collect(), seed).unwrap();
    let r = StateTensor::random(right.iter().map(|&p| dims[p]).collect(), seed ^ 0x5555).unwrap();
    let prod = l.tensor(&r);
    // party p of the product sits at position pos[p]
    let concat: Vec<usize> = left.iter().chain(&right).copied().collect();
    let order: Vec<usize> = (0..n).map(|p| concat.iter().position(|&q| q == p).unwrap()).collect();
    reorder(&prod, &order)
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_nontrivial(rng: &mut ChaCha8Rng, n: usize) -> u64 {
    rng.random_range(1..(1u64 << n) - 1)
}
