//! Sufficient conditions for genuine multipartite entanglement built from
//! products of `(1 ∓ P_k)` factors on the doubled vector, and the exhaustive
//! check over all bipartitions they are validated against.
//!
//! Operation counts refer to permutation applications (one `O(D²)` pass each);
//! `D` itself grows exponentially with the number of parties.

use std::fmt;
use std::time::Instant;

use num_complex::Complex64;

use crate::concurrence::{all_concurrences_with_cap, concurrence_vector_of};
use crate::error::{Error, Result};
use crate::mask::{BipartitionMask, PartySet};
use crate::perm::{apply_factor, norm_sq, Sign};
use crate::state::{DoubledVector, StateTensor};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certification {
    GenuineCertified,
    Inconclusive,
}

impl Certification {
    pub fn as_str(&self) -> &'static str {
        match self {
            Certification::GenuineCertified => "genuine_certified",
            Certification::Inconclusive => "inconclusive",
        }
    }
}

impl fmt::Display for Certification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Which product of projector factors a vector is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorId {
    /// All factors `(1 - P_k)` except the excluded party's.
    V { excluded: usize },
    /// As `V`, with `(1 + P_flipped)`.
    W { flipped: usize, excluded: usize },
}

impl fmt::Display for VectorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VectorId::V { excluded } => write!(f, "V{excluded}"),
            VectorId::W { flipped, excluded } => write!(f, "W{excluded}^({flipped})"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VectorEvidence {
    pub id: VectorId,
    pub norm_sq: f64,
}

impl VectorEvidence {
    pub fn vanishes(&self) -> bool {
        self.norm_sq < tol::ZERO
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GenuineVerdict {
    pub verdict: Certification,
    pub evidence: Vec<VectorEvidence>,
    pub n_vector_ops: usize,
}

fn check_party(n: usize, party: usize) -> Result<()> {
    if party == 0 || party > n {
        return Err(Error::BadParty(party));
    }
    Ok(())
}

/// Applies the factors for every party but `excluded`, in ascending order.
/// Returns the vector and the number of permutation applications.
fn projector_product(
    a: &DoubledVector,
    excluded: usize,
    flipped: Option<usize>,
) -> Result<(Vec<Complex64>, usize)> {
    let n = a.dims().len();
    check_party(n, excluded)?;
    if let Some(k) = flipped {
        check_party(n, k)?;
        if k == excluded {
            return Err(Error::BadParty(k));
        }
    }
    let mut v = a.comps().to_vec();
    let mut ops = 0;
    for party in (1..=n).filter(|&p| p != excluded) {
        let sign = if flipped == Some(party) {
            Sign::Plus
        } else {
            Sign::Minus
        };
        v = apply_factor(&v, a.dims(), &BipartitionMask::from_parties(n, &[party])?, sign)?;
        ops += 1;
    }
    Ok((v, ops))
}

fn require_three(state: &StateTensor) -> Result<()> {
    if state.n_parties() < 3 {
        return Err(Error::WrongArity {
            expected: 3,
            found: state.n_parties(),
        });
    }
    Ok(())
}

/// `∏_{k ≠ excluded} (1 - P_k) A`.
pub fn build_v(state: &StateTensor, excluded: usize) -> Result<Vec<Complex64>> {
    require_three(state)?;
    let a = DoubledVector::new(state)?;
    Ok(projector_product(&a, excluded, None)?.0)
}

/// `build_v` with the sign of `P_flipped` reversed.
pub fn build_w(state: &StateTensor, flipped: usize, excluded: usize) -> Result<Vec<Complex64>> {
    require_three(state)?;
    let a = DoubledVector::new(state)?;
    Ok(projector_product(&a, excluded, Some(flipped))?.0)
}

/// The same vector as `build_v`/`build_w`, summed directly over concurrence
/// vectors: `-Σ_I (-1)^{#I} (-1)^{[I]_k} (1 - P_I) A` with `I` ranging over
/// subsets of the included parties. The leading minus comes from
/// `Σ_I (-1)^{#I} = 0`.
pub fn concurrence_expansion(
    state: &StateTensor,
    excluded: usize,
    flipped: Option<usize>,
) -> Result<Vec<Complex64>> {
    require_three(state)?;
    let n = state.n_parties();
    check_party(n, excluded)?;
    if let Some(k) = flipped {
        check_party(n, k)?;
        if k == excluded {
            return Err(Error::BadParty(k));
        }
    }
    let a = DoubledVector::new(state)?;
    let included = PartySet::single(n, excluded)?.complement();
    let mut sum = vec![Complex64::new(0.0, 0.0); a.comps().len()];
    let mut sub = included.bits();
    // walk all nonempty subsets of the included parties
    while sub != 0 {
        let set = PartySet::from_bits(sub, n)?;
        let mut sign = if set.len() % 2 == 0 { -1.0 } else { 1.0 };
        if flipped.is_some_and(|k| set.contains(k)) {
            sign = -sign;
        }
        let c = concurrence_vector_of(&a, &set.canonical())?;
        for (s, x) in sum.iter_mut().zip(c.comps()) {
            *s += x * sign;
        }
        sub = (sub - 1) & included.bits();
    }
    Ok(sum)
}

/// One family of vectors evaluated together.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyResult {
    pub evidence: Vec<VectorEvidence>,
    pub ops: usize,
}

impl FamilyResult {
    pub fn all_nonzero(&self) -> bool {
        self.evidence.iter().all(|e| !e.vanishes())
    }
}

fn family(a: &DoubledVector, ids: &[VectorId]) -> Result<FamilyResult> {
    let mut evidence = Vec::with_capacity(ids.len());
    let mut ops = 0;
    for &id in ids {
        let (v, k) = match id {
            VectorId::V { excluded } => projector_product(a, excluded, None)?,
            VectorId::W { flipped, excluded } => projector_product(a, excluded, Some(flipped))?,
        };
        ops += k;
        evidence.push(VectorEvidence {
            id,
            norm_sq: norm_sq(&v),
        });
    }
    Ok(FamilyResult { evidence, ops })
}

/// The two vector families checked for `n` parties: `V_N` alone, then the
/// `W^(k)_N` for even `n` or the remaining `V_k` for odd `n`.
pub fn family_ids(n: usize) -> (Vec<VectorId>, Vec<VectorId>) {
    let first = vec![VectorId::V { excluded: n }];
    let second = if n.is_multiple_of(2) {
        (1..n)
            .map(|k| VectorId::W {
                flipped: k,
                excluded: n,
            })
            .collect()
    } else {
        (1..n).map(|k| VectorId::V { excluded: k }).collect()
    };
    (first, second)
}

pub fn certify_genuine(state: &StateTensor) -> Result<GenuineVerdict> {
    certify_genuine_with_cap(state, tol::DEFAULT_MAX_DIM)
}

/// Certifies genuine entanglement when every vector of both families is
/// nonzero. An inconclusive verdict makes no claim.
pub fn certify_genuine_with_cap(state: &StateTensor, max_dim: usize) -> Result<GenuineVerdict> {
    require_three(state)?;
    let a = DoubledVector::with_cap(state, max_dim)?;
    let (first, second) = family_ids(state.n_parties());
    let f1 = family(&a, &first)?;
    let f2 = family(&a, &second)?;
    let verdict = if f1.all_nonzero() && f2.all_nonzero() {
        Certification::GenuineCertified
    } else {
        Certification::Inconclusive
    };
    let mut evidence = f1.evidence;
    evidence.extend(f2.evidence);
    Ok(GenuineVerdict {
        verdict,
        evidence,
        n_vector_ops: f1.ops + f2.ops,
    })
}

#[derive(Debug, Clone, PartialEq)]
pub struct OracleVerdict {
    pub genuine: bool,
    pub cuts: Vec<(BipartitionMask, f64)>,
}

impl OracleVerdict {
    pub fn n_cuts(&self) -> usize {
        self.cuts.len()
    }

    pub fn separable_cuts(&self) -> impl Iterator<Item = &(BipartitionMask, f64)> {
        self.cuts.iter().filter(|(_, c)| *c < tol::ZERO)
    }
}

pub fn exhaustive_oracle(state: &StateTensor) -> Result<OracleVerdict> {
    exhaustive_oracle_with_cap(state, tol::DEFAULT_MAX_DIM)
}

/// Genuine iff every one of the `2^(N-1) - 1` squared concurrences exceeds
/// the vanishing threshold.
pub fn exhaustive_oracle_with_cap(state: &StateTensor, max_dim: usize) -> Result<OracleVerdict> {
    let cuts: Vec<_> = all_concurrences_with_cap(state, max_dim)?.into_iter().collect();
    let genuine = !cuts.is_empty() && cuts.iter().all(|(_, c)| *c >= tol::ZERO);
    Ok(OracleVerdict { genuine, cuts })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BenchMethod {
    /// `V_N` alone.
    CertifyV,
    /// The `W^(k)_N` family (even N).
    CertifyW,
    /// The remaining `V_k` (odd N).
    CertifyVk,
    Oracle,
}

impl BenchMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            BenchMethod::CertifyV => "certify_v",
            BenchMethod::CertifyW => "certify_w",
            BenchMethod::CertifyVk => "certify_vk",
            BenchMethod::Oracle => "oracle",
        }
    }

    /// Closed-form operation count for `n` parties.
    pub fn expected_ops(&self, n: usize) -> usize {
        match self {
            BenchMethod::CertifyV => n - 1,
            BenchMethod::CertifyW | BenchMethod::CertifyVk => (n - 1) * (n - 1),
            BenchMethod::Oracle => (1 << (n - 1)) - 1,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub n: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    pub method: BenchMethod,
    pub vector_ops: usize,
    pub wall_ms: f64,
    pub verdict: &'static str,
}

pub const BENCH_CSV_HEADER: &str = "N,dims,method,vector_ops,wall_ms,verdict";

impl BenchRow {
    pub fn csv_line(&self) -> String {
        let dims: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        format!(
            "{},{},{},{},{:.3},{}",
            self.n,
            dims.join("x"),
            self.method.as_str(),
            self.vector_ops,
            self.wall_ms,
            self.verdict
        )
    }
}

/// Times both certification families and the exhaustive check on one random
/// state per `(dims, seed)`; three rows per case.
pub fn bench_scaling(dims_list: &[Vec<usize>], seeds: &[u64]) -> Result<Vec<BenchRow>> {
    let mut rows = Vec::new();
    for dims in dims_list {
        for &seed in seeds {
            let state = StateTensor::random(dims.clone(), seed)?;
            require_three(&state)?;
            let n = dims.len();
            let (first, second) = family_ids(n);

            let start = Instant::now();
            let a = DoubledVector::new(&state)?;
            let f1 = family(&a, &first)?;
            let t1 = start.elapsed();
            let start = Instant::now();
            let f2 = family(&a, &second)?;
            let t2 = start.elapsed();
            let start = Instant::now();
            let oracle = exhaustive_oracle(&state)?;
            let t3 = start.elapsed();

            let status = |f: &FamilyResult| if f.all_nonzero() { "nonvanishing" } else { "vanishing" };
            let second_method = if n % 2 == 0 {
                BenchMethod::CertifyW
            } else {
                BenchMethod::CertifyVk
            };
            let mk = |method, vector_ops, wall: std::time::Duration, verdict| BenchRow {
                n,
                dims: dims.clone(),
                seed,
                method,
                vector_ops,
                wall_ms: wall.as_secs_f64() * 1e3,
                verdict,
            };
            rows.push(mk(BenchMethod::CertifyV, f1.ops, t1, status(&f1)));
            rows.push(mk(second_method, f2.ops, t2, status(&f2)));
            rows.push(mk(
                BenchMethod::Oracle,
                oracle.n_cuts(),
                t3,
                if oracle.genuine { "genuine" } else { "not_genuine" },
            ));
        }
    }
    Ok(rows)
}
