//! Standard named states.

use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::StateTensor;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedState {
    Bell,
    Ghz,
    W,
    Product,
    BellXBell,
}

impl NamedState {
    pub const ALL: [NamedState; 5] = [
        NamedState::Bell,
        NamedState::Ghz,
        NamedState::W,
        NamedState::Product,
        NamedState::BellXBell,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            NamedState::Bell => "bell",
            NamedState::Ghz => "ghz",
            NamedState::W => "w",
            NamedState::Product => "product",
            NamedState::BellXBell => "bell_x_bell",
        }
    }
}

impl FromStr for NamedState {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|n| n.as_str() == s)
            .ok_or_else(|| Error::UnknownName(s.to_string()))
    }
}

/// Optional parameters: party count for GHZ/W/product, explicit local
/// dimensions for GHZ (all equal) and product.
#[derive(Debug, Clone, Default)]
pub struct NamedParams {
    pub n: Option<usize>,
    pub dims: Option<Vec<usize>>,
}

impl NamedParams {
    pub fn parties(n: usize) -> Self {
        Self {
            n: Some(n),
            dims: None,
        }
    }
}

pub fn named_state(name: &str, params: &NamedParams) -> Result<StateTensor> {
    build(name.parse()?, params)
}

pub fn build(name: NamedState, params: &NamedParams) -> Result<StateTensor> {
    match name {
        NamedState::Bell => bell(),
        NamedState::BellXBell => Ok(bell()?.tensor(&bell()?)),
        NamedState::Ghz => {
            let dims = resolve_dims(params, 3)?;
            if dims.len() < 2 {
                return Err(Error::BadParams("GHZ needs at least 2 parties".into()));
            }
            let d = dims[0];
            if dims.iter().any(|&x| x != d) || d < 2 {
                return Err(Error::BadParams("GHZ needs equal local dimensions ≥ 2".into()));
            }
            ghz_with(dims.len(), d)
        }
        NamedState::W => {
            let dims = resolve_dims(params, 3)?;
            if dims.len() < 2 || dims.iter().any(|&d| d != 2) {
                return Err(Error::BadParams("W is defined here for ≥ 2 qubits".into()));
            }
            w(dims.len())
        }
        NamedState::Product => {
            let dims = resolve_dims(params, 2)?;
            let zeros = vec![0; dims.len()];
            StateTensor::basis(dims, &zeros)
        }
    }
}

fn resolve_dims(params: &NamedParams, default_n: usize) -> Result<Vec<usize>> {
    match (&params.dims, params.n) {
        (Some(dims), Some(n)) if dims.len() != n => Err(Error::BadParams(format!(
            "n = {n} disagrees with dims {dims:?}"
        ))),
        (Some(dims), _) => Ok(dims.clone()),
        (None, Some(0)) => Err(Error::BadParams("n must be positive".into())),
        (None, n) => Ok(vec![2; n.unwrap_or(default_n)]),
    }
}

/// `(|00⟩ + |11⟩)/√2`.
pub fn bell() -> Result<StateTensor> {
    StateTensor::from_real(vec![2, 2], &[1.0, 0.0, 0.0, 1.0])
}

/// `(|0…0⟩ + |1…1⟩)/√2` on `n` qubits.
pub fn ghz(n: usize) -> Result<StateTensor> {
    ghz_with(n, 2)
}

fn ghz_with(n: usize, d: usize) -> Result<StateTensor> {
    let total = d.pow(n as u32);
    let step: usize = (0..n).map(|k| d.pow(k as u32)).sum();
    let mut amps = vec![Complex64::new(0.0, 0.0); total];
    for level in 0..d {
        amps[level * step] = Complex64::new(1.0, 0.0);
    }
    StateTensor::new(vec![d; n], amps, true)
}

/// Equal superposition of the `n` single-excitation basis states.
pub fn w(n: usize) -> Result<StateTensor> {
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
    for k in 0..n {
        amps[1 << k] = Complex64::new(1.0, 0.0);
    }
    StateTensor::new(vec![2; n], amps, true)
}
