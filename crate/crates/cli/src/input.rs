//! Where a state comes from: a JSON file, a named fixture, or a seeded
//! random draw.

use std::path::PathBuf;

use clap::Args;
use concvec::{named_state, NamedParams, StateTensor};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

/// On-disk state: amplitudes as `[re, im]` pairs, row-major with party 1
/// slowest.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StateFile {
    pub dims: Vec<usize>,
    pub amps: Vec<[f64; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl StateFile {
    pub fn from_state(state: &StateTensor, name: Option<String>, seed: Option<u64>) -> Self {
        Self {
            dims: state.dims().to_vec(),
            amps: state.amps().iter().map(|z| [z.re, z.im]).collect(),
            name,
            seed,
        }
    }

    pub fn to_state(&self, renormalize: bool) -> CliResult<StateTensor> {
        let amps = self.amps.iter().map(|&[re, im]| Complex64::new(re, im)).collect();
        Ok(StateTensor::new(self.dims.clone(), amps, renormalize)?)
    }
}

/// A comma-separated list of integers such as `2,3,2` or `1,3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<usize>);

pub fn parse_list(s: &str) -> Result<IntList, String> {
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|_| format!("`{t}` is not a positive integer")))
        .collect::<Result<_, _>>()
        .map(IntList)
}

#[derive(Debug, Clone, Args)]
pub struct SourceArgs {
    /// State file (JSON with `dims` and `amps`)
    pub path: Option<PathBuf>,

    /// Built-in state: bell, ghz, w, product, bell_x_bell
    #[arg(long, conflicts_with_all = ["path", "random"])]
    pub named: Option<String>,

    /// Party count for --named
    #[arg(long, requires = "named")]
    pub n: Option<usize>,

    /// Local dimensions, e.g. 2,3,2 (for --random, or --named ghz/product)
    #[arg(long, value_parser = parse_list)]
    pub dims: Option<IntList>,

    /// Draw a random state with --dims and --seed
    #[arg(long, conflicts_with = "path", requires = "dims")]
    pub random: bool,

    /// Seed for --random
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Accept an unnormalized state file and rescale it
    #[arg(long)]
    pub normalize: bool,
}

/// A loaded state and how it was obtained.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub state: StateTensor,
    pub source: String,
    pub name: Option<String>,
    pub seed: Option<u64>,
    /// sha256 of the file bytes, or of the canonical JSON for generated states.
    pub digest: String,
}

fn sha256_hex(bytes: &[u8]) -> String {
    hex::encode(Sha256::digest(bytes))
}

/// Refuses dimension lists whose product exceeds `cap`, before anything of
/// that size is allocated.
fn guard_dims(dims: &[usize], cap: usize) -> CliResult<()> {
    let dim = dims
        .iter()
        .try_fold(1usize, |acc, &d| acc.checked_mul(d))
        .unwrap_or(usize::MAX);
    if dim > cap {
        return Err(CliError::SizeGuard { dim, cap });
    }
    Ok(())
}

impl SourceArgs {
    pub fn load(&self, cap: usize) -> CliResult<Loaded> {
        if let Some(path) = &self.path {
            let bytes = std::fs::read(path)
                .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
            let file: StateFile = serde_json::from_slice(&bytes)?;
            let state = file.to_state(self.normalize)?;
            check_cap(&state, cap)?;
            return Ok(Loaded {
                state,
                source: path.display().to_string(),
                name: file.name,
                seed: file.seed,
                digest: sha256_hex(&bytes),
            });
        }
        let (state, source, name, seed) = if let Some(name) = &self.named {
            let planned = match (&self.dims, self.n) {
                (Some(d), _) => d.0.clone(),
                (None, Some(n)) => vec![2; n],
                (None, None) => vec![],
            };
            guard_dims(&planned, cap)?;
            let params = NamedParams {
                n: self.n,
                dims: self.dims.as_ref().map(|d| d.0.clone()),
            };
            (named_state(name, &params)?, format!("named:{name}"), Some(name.clone()), None)
        } else if self.random {
            let dims = self.dims.as_ref().map(|d| d.0.clone()).unwrap_or_default();
            guard_dims(&dims, cap)?;
            (StateTensor::random(dims, self.seed)?, "random".to_string(), None, Some(self.seed))
        } else {
            return Err(CliError::Input("no state given: pass a file, --named or --random".into()));
        };
        check_cap(&state, cap)?;
        let canonical = serde_json::to_vec(&StateFile::from_state(&state, None, None))?;
        Ok(Loaded {
            state,
            source,
            name,
            seed,
            digest: sha256_hex(&canonical),
        })
    }
}

pub fn check_cap(state: &StateTensor, cap: usize) -> CliResult<()> {
    if state.total_dim() > cap {
        return Err(CliError::SizeGuard {
            dim: state.total_dim(),
            cap,
        });
    }
    Ok(())
}
