//! Pure states over a tensor product of finite-dimensional parties.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::index::{split_compact, total_dim};
use crate::mask::PartySet;
use crate::tol;

/// Normalized amplitudes `a_{ijk...}` stored row-major over the parties.
#[derive(Debug, Clone, PartialEq)]
pub struct StateTensor {
    dims: Vec<usize>,
    amps: Vec<Complex64>,
}

pub(crate) fn validate_dims(dims: &[usize]) -> Result<usize> {
    if dims.is_empty() || dims.len() > crate::mask::MAX_PARTIES || dims.contains(&0) {
        return Err(Error::InvalidDims(dims.to_vec()));
    }
    dims.iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .ok_or_else(|| Error::InvalidDims(dims.to_vec()))
}

impl StateTensor {
    /// Validates `amps` against `dims`. With `renormalize` the amplitudes are
    /// rescaled to unit norm; otherwise they must already be normalized.
    pub fn new(dims: Vec<usize>, amps: Vec<Complex64>, renormalize: bool) -> Result<Self> {
        let expected = validate_dims(&dims)?;
        if amps.len() != expected {
            return Err(Error::DimensionMismatch {
                expected,
                found: amps.len(),
            });
        }
        if let Some(k) = amps.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::NonFinite(k));
        }
        let norm_sq: f64 = amps.iter().map(|z| z.norm_sqr()).sum();
        if norm_sq.sqrt() < tol::MIN_NORM {
            return Err(Error::ZeroState);
        }
        let amps = if renormalize {
            let inv = 1.0 / norm_sq.sqrt();
            amps.into_iter().map(|z| z * inv).collect()
        } else {
            if (norm_sq - 1.0).abs() >= tol::NORM {
                return Err(Error::NotNormalized(norm_sq));
            }
            amps
        };
        Ok(Self { dims, amps })
    }

    /// Real amplitudes, renormalized.
    pub fn from_real(dims: Vec<usize>, amps: &[f64]) -> Result<Self> {
        Self::new(
            dims,
            amps.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
            true,
        )
    }

    /// A computational basis state `|levels⟩`.
    pub fn basis(dims: Vec<usize>, levels: &[usize]) -> Result<Self> {
        let d = validate_dims(&dims)?;
        if levels.len() != dims.len() || levels.iter().zip(&dims).any(|(l, d)| l >= d) {
            return Err(Error::BadParams(format!(
                "levels {levels:?} do not fit dims {dims:?}"
            )));
        }
        let idx = levels.iter().zip(&dims).fold(0, |acc, (l, d)| acc * d + l);
        let mut amps = vec![Complex64::new(0.0, 0.0); d];
        amps[idx] = Complex64::new(1.0, 0.0);
        Ok(Self { dims, amps })
    }

    /// Haar-random pure state: i.i.d. complex Gaussian amplitudes, normalized.
    pub fn random(dims: Vec<usize>, seed: u64) -> Result<Self> {
        let d = validate_dims(&dims)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let amps: Vec<Complex64> = (0..d)
            .map(|_| {
                let re: f64 = StandardNormal.sample(&mut rng);
                let im: f64 = StandardNormal.sample(&mut rng);
                Complex64::new(re, im)
            })
            .collect();
        Self::new(dims, amps, true)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn n_parties(&self) -> usize {
        self.dims.len()
    }

    pub fn total_dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amps(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sq(&self) -> f64 {
        self.amps.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Tensor product `self ⊗ other`; parties of `other` follow those of `self`.
    pub fn tensor(&self, other: &StateTensor) -> StateTensor {
        let mut dims = self.dims.clone();
        dims.extend_from_slice(&other.dims);
        let amps = self
            .amps
            .iter()
            .flat_map(|a| other.amps.iter().map(move |b| a * b))
            .collect();
        StateTensor { dims, amps }
    }

    /// Coefficient matrix `a_{I, Ī}` with rows over the parties in `rows`.
    pub fn coefficient_matrix(&self, rows: &PartySet) -> Result<nalgebra::DMatrix<Complex64>> {
        self.check_set(rows)?;
        let (r, c, dr, dc) = split_compact(&self.dims, rows.bits());
        let mut m = nalgebra::DMatrix::zeros(dr, dc);
        for (idx, a) in self.amps.iter().enumerate() {
            m[(r[idx], c[idx])] = *a;
        }
        Ok(m)
    }

    /// Reduced density matrix on the parties in `keep`.
    pub fn partial_trace(&self, keep: &PartySet) -> Result<DensityMatrix> {
        self.check_set(keep)?;
        if keep.is_empty() || keep.is_full() {
            return Err(Error::BadMask);
        }
        let m = self.coefficient_matrix(keep)?;
        let rho = &m * m.adjoint();
        let dims = keep.parties().iter().map(|&p| self.dims[p - 1]).collect();
        Ok(DensityMatrix::from_parts_unchecked(dims, rho))
    }

    /// `tr ρ_keep²`, with the conventions `1` for the empty and full sets.
    pub fn purity(&self, keep: &PartySet) -> Result<f64> {
        self.check_set(keep)?;
        if keep.is_empty() || keep.is_full() {
            return Ok(1.0);
        }
        Ok(self.partial_trace(keep)?.purity())
    }

    pub(crate) fn check_set(&self, set: &PartySet) -> Result<()> {
        if set.n_parties() != self.n_parties() {
            return Err(Error::ArityMismatch(set.n_parties(), self.n_parties()));
        }
        Ok(())
    }
}

/// Components `a_{I₁} a_{I₂}` of `|ψ⟩ ⊗ |ψ⟩`, row-major over `(I₁; I₂)`.
#[derive(Debug, Clone, PartialEq)]
pub struct DoubledVector {
    dims: Vec<usize>,
    comps: Vec<Complex64>,
}

impl DoubledVector {
    pub fn new(state: &StateTensor) -> Result<Self> {
        Self::with_cap(state, tol::DEFAULT_MAX_DIM)
    }

    pub fn with_cap(state: &StateTensor, max_dim: usize) -> Result<Self> {
        let d = state.total_dim();
        if d > max_dim {
            return Err(Error::SizeGuard { dim: d, cap: max_dim });
        }
        let a = state.amps();
        let mut comps = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for j in i..d {
                let z = a[i] * a[j];
                comps[i * d + j] = z;
                comps[j * d + i] = z;
            }
        }
        Ok(Self {
            dims: state.dims().to_vec(),
            comps,
        })
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn comps(&self) -> &[Complex64] {
        &self.comps
    }

    pub fn into_comps(self) -> Vec<Complex64> {
        self.comps
    }

    /// Component at the pair of flat indices `(i1; i2)`.
    pub fn get(&self, i1: usize, i2: usize) -> Complex64 {
        self.comps[i1 * total_dim(&self.dims) + i2]
    }
}

pub fn doubled_vector(state: &StateTensor) -> Result<DoubledVector> {
    DoubledVector::new(state)
}
