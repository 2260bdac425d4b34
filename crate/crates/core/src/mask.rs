//! Party subsets and canonical bipartitions.
//!
//! Parties are numbered `1..=N` at the API surface and stored as bit `n - 1`.
//! A [`BipartitionMask`] never contains party `N`: a subset containing it is
//! replaced by its complement, so `I` and `Ī` share one representative and the
//! full and empty sets both map to the trivial bipartition.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_PARTIES: usize = 63;

/// An arbitrary subset of the parties `{1, ..., N}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartySet {
    bits: u64,
    n_parties: usize,
}

impl PartySet {
    pub fn from_bits(bits: u64, n_parties: usize) -> Result<Self> {
        if n_parties == 0 || n_parties > MAX_PARTIES {
            return Err(Error::BadParty(n_parties));
        }
        if bits >> n_parties != 0 {
            return Err(Error::BadMask);
        }
        Ok(Self { bits, n_parties })
    }

    /// Builds a set from 1-indexed party labels.
    pub fn from_parties(n_parties: usize, parties: &[usize]) -> Result<Self> {
        if n_parties == 0 || n_parties > MAX_PARTIES {
            return Err(Error::BadParty(n_parties));
        }
        let mut bits = 0u64;
        for &p in parties {
            if p == 0 || p > n_parties {
                return Err(Error::BadParty(p));
            }
            bits |= 1 << (p - 1);
        }
        Ok(Self { bits, n_parties })
    }

    pub fn single(n_parties: usize, party: usize) -> Result<Self> {
        Self::from_parties(n_parties, &[party])
    }

    pub fn empty(n_parties: usize) -> Self {
        Self { bits: 0, n_parties }
    }

    pub fn full(n_parties: usize) -> Self {
        Self {
            bits: full_bits(n_parties),
            n_parties,
        }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn n_parties(&self) -> usize {
        self.n_parties
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn is_full(&self) -> bool {
        self.bits == full_bits(self.n_parties)
    }

    pub fn contains(&self, party: usize) -> bool {
        party >= 1 && party <= self.n_parties && self.bits >> (party - 1) & 1 == 1
    }

    pub fn complement(&self) -> Self {
        Self {
            bits: !self.bits & full_bits(self.n_parties),
            n_parties: self.n_parties,
        }
    }

    pub fn union(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(Self {
            bits: self.bits | other.bits,
            ..*self
        })
    }

    pub fn intersection(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(Self {
            bits: self.bits & other.bits,
            ..*self
        })
    }

    pub fn symmetric_difference(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(Self {
            bits: self.bits ^ other.bits,
            ..*self
        })
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.bits & other.bits == 0
    }

    /// 1-indexed party labels in ascending order.
    pub fn parties(&self) -> Vec<usize> {
        (1..=self.n_parties).filter(|&p| self.contains(p)).collect()
    }

    pub fn canonical(&self) -> BipartitionMask {
        canonicalize(self.bits, self.n_parties)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.n_parties != other.n_parties {
            return Err(Error::ArityMismatch(self.n_parties, other.n_parties));
        }
        Ok(())
    }
}

impl fmt::Display for PartySet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.parties())
    }
}

/// Canonical representative of a bipartition `I|Ī`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BipartitionMask(PartySet);

impl BipartitionMask {
    pub fn trivial(n_parties: usize) -> Self {
        Self(PartySet::empty(n_parties))
    }

    /// Canonicalizes a list of 1-indexed parties.
    pub fn from_parties(n_parties: usize, parties: &[usize]) -> Result<Self> {
        Ok(PartySet::from_parties(n_parties, parties)?.canonical())
    }

    pub fn is_trivial(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bits(&self) -> u64 {
        self.0.bits
    }

    pub fn n_parties(&self) -> usize {
        self.0.n_parties
    }

    pub fn set(&self) -> PartySet {
        self.0
    }

    /// Number of parties on the canonical side.
    pub fn cardinality(&self) -> usize {
        self.0.len()
    }

    pub fn sym_diff(&self, other: &Self) -> Result<Self> {
        Ok(self.0.symmetric_difference(&other.0)?.canonical())
    }
}

impl From<PartySet> for BipartitionMask {
    fn from(set: PartySet) -> Self {
        set.canonical()
    }
}

impl fmt::Display for BipartitionMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.0.parties())?;
        f.write_str("|")?;
        write_list(f, &self.0.complement().parties())
    }
}

pub fn canonicalize(mask: u64, n_parties: usize) -> BipartitionMask {
    let full = full_bits(n_parties);
    let mask = mask & full;
    let top = 1u64 << (n_parties - 1);
    let bits = if mask & top != 0 { !mask & full } else { mask };
    BipartitionMask(PartySet { bits, n_parties })
}

/// All `2^(N-1) - 1` nontrivial canonical bipartitions, ascending by bits.
pub fn enumerate_bipartitions(n_parties: usize) -> Vec<BipartitionMask> {
    if n_parties < 2 {
        return Vec::new();
    }
    (1..1u64 << (n_parties - 1))
        .map(|bits| BipartitionMask(PartySet { bits, n_parties }))
        .collect()
}

pub fn sym_diff(a: &BipartitionMask, b: &BipartitionMask) -> Result<BipartitionMask> {
    a.sym_diff(b)
}

fn full_bits(n_parties: usize) -> u64 {
    if n_parties >= 64 {
        u64::MAX
    } else {
        (1u64 << n_parties) - 1
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, parties: &[usize]) -> fmt::Result {
    for (k, p) in parties.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}
