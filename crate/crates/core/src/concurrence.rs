//! Bipartition concurrences by three independent routes, the elementary
//! decomposition, and quadratic forms `A†(1 - P_I)(1 ± P_J)⋯A`.
//!
//! * vector route: `‖(1 - P_I) A‖²`
//! * minor route: sum of squared 2×2 minors of the coefficient matrix `a_{I, Ī}`
//! * ρ route: `2 (1 - tr ρ_I²)`

use std::collections::BTreeMap;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::mask::{enumerate_bipartitions, BipartitionMask};
use crate::perm::{apply_factor, apply_perm, inner, norm_sq, Sign};
use crate::state::{DoubledVector, StateTensor};
use crate::tol;

/// `C⃗_{I|Ī} = (1 - P_I) A`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConcurrenceVector {
    bipartition: BipartitionMask,
    comps: Vec<Complex64>,
}

impl ConcurrenceVector {
    pub fn bipartition(&self) -> BipartitionMask {
        self.bipartition
    }

    pub fn comps(&self) -> &[Complex64] {
        &self.comps
    }

    pub fn norm_sq(&self) -> f64 {
        norm_sq(&self.comps)
    }
}

fn check_mask(state: &StateTensor, mask: &BipartitionMask) -> Result<()> {
    if mask.n_parties() != state.n_parties() {
        return Err(Error::ArityMismatch(mask.n_parties(), state.n_parties()));
    }
    if mask.is_trivial() {
        return Err(Error::TrivialBipartition);
    }
    Ok(())
}

pub fn concurrence_vector(state: &StateTensor, mask: &BipartitionMask) -> Result<ConcurrenceVector> {
    check_mask(state, mask)?;
    let a = DoubledVector::new(state)?;
    concurrence_vector_of(&a, mask)
}

/// Same as [`concurrence_vector`], reusing an already built doubled vector.
pub fn concurrence_vector_of(a: &DoubledVector, mask: &BipartitionMask) -> Result<ConcurrenceVector> {
    if mask.is_trivial() {
        return Err(Error::TrivialBipartition);
    }
    let comps = apply_factor(a.comps(), a.dims(), mask, Sign::Minus)?;
    Ok(ConcurrenceVector {
        bipartition: *mask,
        comps,
    })
}

/// `Σ |a_{I₁Ī₁} a_{I₂Ī₂} - a_{I₁Ī₂} a_{I₂Ī₁}|²` over all index pairs, summed
/// over unordered row and column pairs and multiplied by 4.
pub fn concurrence_sq_minor(state: &StateTensor, mask: &BipartitionMask) -> Result<f64> {
    check_mask(state, mask)?;
    let m = state.coefficient_matrix(&mask.set())?;
    let (rows, cols) = m.shape();
    let mut acc = 0.0;
    for r1 in 0..rows {
        for r2 in r1 + 1..rows {
            for c1 in 0..cols {
                let (a11, a21) = (m[(r1, c1)], m[(r2, c1)]);
                for c2 in c1 + 1..cols {
                    let minor = a11 * m[(r2, c2)] - m[(r1, c2)] * a21;
                    acc += minor.norm_sqr();
                }
            }
        }
    }
    Ok(4.0 * acc)
}

/// `2 (1 - tr ρ_I²)`.
pub fn concurrence_sq_rho(state: &StateTensor, mask: &BipartitionMask) -> Result<f64> {
    check_mask(state, mask)?;
    Ok(2.0 * (1.0 - state.purity(&mask.set())?))
}

/// ρ-route value, with `0` for the trivial bipartition.
pub(crate) fn c2_or_zero(state: &StateTensor, mask: &BipartitionMask) -> Result<f64> {
    if mask.is_trivial() {
        return Ok(0.0);
    }
    concurrence_sq_rho(state, mask)
}

/// Rebuilds `C⃗_I` for `I = {i, j, …, n}` as
/// `C⃗_i + P_i C⃗_j + P_i P_j C⃗_k + … + P_i⋯P_m C⃗_n`
/// from elementary concurrence vectors only.
pub fn decompose_elementary(state: &StateTensor, mask: &BipartitionMask) -> Result<ConcurrenceVector> {
    check_mask(state, mask)?;
    let a = DoubledVector::new(state)?;
    let n = state.n_parties();
    let dims = state.dims();
    let mut acc = vec![Complex64::new(0.0, 0.0); a.comps().len()];
    let mut prefix = BipartitionMask::trivial(n);
    for party in mask.set().parties() {
        let single = BipartitionMask::from_parties(n, &[party])?;
        let elementary = concurrence_vector_of(&a, &single)?;
        let term = apply_perm(elementary.comps(), dims, &prefix)?;
        for (x, t) in acc.iter_mut().zip(&term) {
            *x += t;
        }
        prefix = prefix.sym_diff(&single)?;
    }
    Ok(ConcurrenceVector {
        bipartition: *mask,
        comps: acc,
    })
}

/// A real quadratic form together with the magnitude of its imaginary part,
/// which vanishes analytically.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadraticForm {
    pub value: f64,
    pub imag_residue: f64,
}

/// `A†(1 - P_first) ∏ (1 ± P_k) A`.
pub fn generic_form(
    state: &StateTensor,
    first: &BipartitionMask,
    signed_rest: &[(BipartitionMask, Sign)],
) -> Result<QuadraticForm> {
    let a = DoubledVector::new(state)?;
    generic_form_of(&a, first, signed_rest)
}

pub fn generic_form_of(
    a: &DoubledVector,
    first: &BipartitionMask,
    signed_rest: &[(BipartitionMask, Sign)],
) -> Result<QuadraticForm> {
    let dims = a.dims();
    let mut v = apply_factor(a.comps(), dims, first, Sign::Minus)?;
    for (mask, sign) in signed_rest {
        v = apply_factor(&v, dims, mask, *sign)?;
    }
    let z = inner(a.comps(), &v);
    Ok(QuadraticForm {
        value: z.re,
        imag_residue: z.im.abs(),
    })
}

/// `‖(1 - P_I)(1 - P_J) A‖²`.
pub fn double_projector_norm_sq(a: &DoubledVector, i: &BipartitionMask, j: &BipartitionMask) -> Result<f64> {
    let v = apply_factor(a.comps(), a.dims(), i, Sign::Minus)?;
    let v = apply_factor(&v, a.dims(), j, Sign::Minus)?;
    Ok(norm_sq(&v))
}

/// `C²` for every nontrivial canonical bipartition via the ρ route.
pub fn all_concurrences(state: &StateTensor) -> Result<BTreeMap<BipartitionMask, f64>> {
    all_concurrences_with_cap(state, tol::DEFAULT_MAX_DIM)
}

pub fn all_concurrences_with_cap(
    state: &StateTensor,
    max_dim: usize,
) -> Result<BTreeMap<BipartitionMask, f64>> {
    if state.total_dim() > max_dim {
        return Err(Error::SizeGuard {
            dim: state.total_dim(),
            cap: max_dim,
        });
    }
    let masks = enumerate_bipartitions(state.n_parties());
    let values: Vec<f64> = masks
        .par_iter()
        .map(|m| concurrence_sq_rho(state, m))
        .collect::<Result<_>>()?;
    Ok(masks.into_iter().zip(values).collect())
}

/// All three routes for one bipartition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RouteValues {
    pub mask: BipartitionMask,
    pub rho: f64,
    pub minor: f64,
    pub vector: f64,
}

impl RouteValues {
    pub fn max_disagreement(&self) -> f64 {
        (self.minor - self.rho).abs().max((self.vector - self.rho).abs())
    }
}

pub fn all_concurrences_checked(state: &StateTensor) -> Result<Vec<RouteValues>> {
    let a = DoubledVector::new(state)?;
    enumerate_bipartitions(state.n_parties())
        .par_iter()
        .map(|m| {
            Ok(RouteValues {
                mask: *m,
                rho: concurrence_sq_rho(state, m)?,
                minor: concurrence_sq_minor(state, m)?,
                vector: concurrence_vector_of(&a, m)?.norm_sq(),
            })
        })
        .collect()
}
