//! Density matrices for reduced and mixed states, and purification.

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::index::split_compact;
use crate::mask::PartySet;
use crate::state::{validate_dims, StateTensor};
use crate::tol;

#[derive(Debug, Clone, PartialEq)]
pub struct DensityMatrix {
    dims: Vec<usize>,
    mat: DMatrix<Complex64>,
}

impl DensityMatrix {
    /// Validates Hermiticity, unit trace and positivity.
    pub fn new(dims: Vec<usize>, mat: DMatrix<Complex64>) -> Result<Self> {
        let d = validate_dims(&dims)?;
        if mat.nrows() != d || mat.ncols() != d {
            return Err(Error::InvalidDensity(format!(
                "{}x{} matrix for total dimension {d}",
                mat.nrows(),
                mat.ncols()
            )));
        }
        if mat.iter().any(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::InvalidDensity("non-finite entry".into()));
        }
        let asym = (&mat - mat.adjoint()).iter().map(|z| z.norm()).fold(0.0, f64::max);
        if asym > tol::HERMITIAN {
            return Err(Error::InvalidDensity(format!("not Hermitian (max |m - m†| = {asym:e})")));
        }
        let tr = mat.trace();
        if (tr.re - 1.0).abs() > tol::HERMITIAN || tr.im.abs() > tol::HERMITIAN {
            return Err(Error::InvalidDensity(format!("trace {tr} != 1")));
        }
        let rho = Self { dims, mat };
        let min = rho.eigenvalues().into_iter().fold(f64::INFINITY, f64::min);
        if min < -tol::PSD_FLOOR {
            return Err(Error::NotPsd(min));
        }
        Ok(rho)
    }

    /// `|ψ⟩⟨ψ|` for a pure state.
    pub fn pure(state: &StateTensor) -> Self {
        let v = nalgebra::DVector::from_column_slice(state.amps());
        Self {
            dims: state.dims().to_vec(),
            mat: &v * v.adjoint(),
        }
    }

    /// Diagonal density matrix; the weights are renormalized.
    pub fn diagonal(dims: Vec<usize>, weights: &[f64]) -> Result<Self> {
        let total: f64 = weights.iter().sum();
        if weights.iter().any(|&w| w < 0.0) || total <= 0.0 {
            return Err(Error::InvalidDensity("weights must be non-negative".into()));
        }
        let diag = nalgebra::DVector::from_iterator(
            weights.len(),
            weights.iter().map(|&w| Complex64::new(w / total, 0.0)),
        );
        Self::new(dims, DMatrix::from_diagonal(&diag))
    }

    /// `M M† / tr(M M†)` for a complex Gaussian `D × D` matrix `M`.
    pub fn random(dims: Vec<usize>, seed: u64) -> Result<Self> {
        let d = validate_dims(&dims)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = DMatrix::from_fn(d, d, |_, _| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re, im)
        });
        let mut rho = &m * m.adjoint();
        let tr = rho.trace().re;
        rho /= Complex64::new(tr, 0.0);
        let rho = (&rho + rho.adjoint()) * Complex64::new(0.5, 0.0);
        Self::new(dims, rho)
    }

    pub(crate) fn from_parts_unchecked(dims: Vec<usize>, mat: DMatrix<Complex64>) -> Self {
        Self { dims, mat }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn matrix(&self) -> &DMatrix<Complex64> {
        &self.mat
    }

    pub fn get(&self, r: usize, c: usize) -> Complex64 {
        self.mat[(r, c)]
    }

    /// `tr ρ²` as the squared Frobenius norm.
    pub fn purity(&self) -> f64 {
        self.mat.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn eigenvalues(&self) -> Vec<f64> {
        self.eigen_desc().0
    }

    /// Eigenpairs sorted by descending eigenvalue; ties keep solver order.
    pub fn eigen_desc(&self) -> (Vec<f64>, Vec<nalgebra::DVector<Complex64>>) {
        let herm = (&self.mat + self.mat.adjoint()) * Complex64::new(0.5, 0.0);
        let eig = herm.symmetric_eigen();
        let mut order: Vec<usize> = (0..eig.eigenvalues.len()).collect();
        order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
        let values = order.iter().map(|&k| eig.eigenvalues[k]).collect();
        let vectors = order
            .iter()
            .map(|&k| eig.eigenvectors.column(k).into_owned())
            .collect();
        (values, vectors)
    }

    pub fn partial_trace(&self, keep: &PartySet) -> Result<DensityMatrix> {
        if keep.n_parties() != self.dims.len() {
            return Err(Error::ArityMismatch(keep.n_parties(), self.dims.len()));
        }
        if keep.is_empty() || keep.is_full() {
            return Err(Error::BadMask);
        }
        let (k, r, dk, _) = split_compact(&self.dims, keep.bits());
        let d = self.mat.nrows();
        let mut out = DMatrix::zeros(dk, dk);
        for row in 0..d {
            for col in 0..d {
                if r[row] == r[col] {
                    out[(k[row], k[col])] += self.mat[(row, col)];
                }
            }
        }
        let dims = keep.parties().iter().map(|&p| self.dims[p - 1]).collect();
        Ok(DensityMatrix { dims, mat: out })
    }

    /// Pure state on system ⊗ environment whose system marginal is `self`.
    ///
    /// The environment is one extra party of dimension equal to the numerical
    /// rank, with basis ordered by descending eigenvalue:
    /// `|ψ⟩ = Σ_k √λ_k |v_k⟩|k⟩`.
    pub fn purify(&self) -> Result<StateTensor> {
        let (values, vectors) = self.eigen_desc();
        if let Some(&min) = values.last() {
            if min < -tol::PSD_FLOOR {
                return Err(Error::NotPsd(min));
            }
        }
        let kept: Vec<usize> = (0..values.len())
            .filter(|&k| values[k] > tol::RANK_CUTOFF)
            .collect();
        let rank = kept.len().max(1);
        let d = self.mat.nrows();
        let mut amps = vec![Complex64::new(0.0, 0.0); d * rank];
        for (slot, &k) in kept.iter().enumerate() {
            let w = values[k].sqrt();
            for s in 0..d {
                amps[s * rank + slot] = vectors[k][s] * w;
            }
        }
        let mut dims = self.dims.clone();
        dims.push(rank);
        StateTensor::new(dims, amps, true)
    }
}

pub fn purify(rho: &DensityMatrix) -> Result<StateTensor> {
    rho.purify()
}
