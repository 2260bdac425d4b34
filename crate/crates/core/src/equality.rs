//! When the squared triangle relation `C²_{I△J} ≤ C²_I + C²_J` is an equality:
//! exactly when one of the two concurrences vanishes.

use num_complex::Complex64;

use crate::concurrence::{c2_or_zero, concurrence_sq_rho};
use crate::error::{Error, Result};
use crate::mask::{BipartitionMask, PartySet};
use crate::perm::{apply_factor, norm_sq, Sign};
use crate::state::{DoubledVector, StateTensor};
use crate::tol;

/// The three quadratic polynomials in the amplitudes of a three-qubit state
/// whose joint vanishing is equivalent to `(1 - P_1)(1 - P_2) A = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QTriple {
    pub q0: Complex64,
    pub q1: Complex64,
    pub q2: Complex64,
}

impl QTriple {
    pub fn all_zero(&self, tolerance: f64) -> bool {
        [self.q0, self.q1, self.q2].iter().all(|q| q.norm() < tolerance)
    }
}

pub fn q_triple(state: &StateTensor) -> Result<QTriple> {
    if state.dims() != [2, 2, 2] {
        return Err(Error::WrongShape {
            expected: vec![2, 2, 2],
            found: state.dims().to_vec(),
        });
    }
    let amp = state.amps();
    let a = |i: usize, j: usize, k: usize| amp[4 * i + 2 * j + k];
    Ok(QTriple {
        q0: a(0, 1, 0) * a(1, 0, 0) - a(0, 0, 0) * a(1, 1, 0),
        q1: a(0, 1, 1) * a(1, 0, 1) - a(0, 0, 1) * a(1, 1, 1),
        q2: a(0, 1, 1) * a(1, 0, 0) + a(0, 1, 0) * a(1, 0, 1)
            - a(0, 0, 1) * a(1, 1, 0)
            - a(0, 0, 0) * a(1, 1, 1),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EqualityReport {
    pub i: PartySet,
    pub j: PartySet,
    pub combined: BipartitionMask,
    /// `‖(1 - P_I)(1 - P_J) A‖²`
    pub r: f64,
    pub c_i: f64,
    pub c_j: f64,
    pub c_combined: f64,
}

impl EqualityReport {
    /// `C²_I + C²_J - C²_{I△J}`; equals `r / 2`.
    pub fn slack(&self) -> f64 {
        self.c_i + self.c_j - self.c_combined
    }

    pub fn saturated(&self) -> bool {
        self.r < tol::ZERO
    }

    pub fn min_concurrence(&self) -> f64 {
        self.c_i.min(self.c_j)
    }

    /// Either direction of "saturated iff one concurrence vanishes" failing.
    pub fn violation(&self) -> bool {
        let forward = self.saturated() && self.min_concurrence() > tol::NONZERO_FLOOR;
        let backward = self.min_concurrence() < tol::ZERO && self.r > tol::NONZERO_FLOOR;
        forward || backward
    }
}

fn nontrivial(state: &StateTensor, set: &PartySet) -> Result<()> {
    state.check_set(set)?;
    if set.is_empty() || set.is_full() {
        return Err(Error::TrivialBipartition);
    }
    Ok(())
}

fn evaluate(state: &StateTensor, i: &PartySet, j: &PartySet) -> Result<EqualityReport> {
    nontrivial(state, i)?;
    nontrivial(state, j)?;
    let a = DoubledVector::new(state)?;
    let (mi, mj) = (i.canonical(), j.canonical());
    let v = apply_factor(a.comps(), a.dims(), &mj, Sign::Minus)?;
    let v = apply_factor(&v, a.dims(), &mi, Sign::Minus)?;
    let combined = i.symmetric_difference(j)?.canonical();
    Ok(EqualityReport {
        i: *i,
        j: *j,
        combined,
        r: norm_sq(&v),
        c_i: concurrence_sq_rho(state, &mi)?,
        c_j: concurrence_sq_rho(state, &mj)?,
        c_combined: c2_or_zero(state, &combined)?,
    })
}

/// Disjoint party sets `I`, `J`.
pub fn check_equality_criterion(state: &StateTensor, i: &PartySet, j: &PartySet) -> Result<EqualityReport> {
    if i.n_parties() == j.n_parties() && !i.is_disjoint(j) {
        return Err(Error::OverlappingMasks);
    }
    evaluate(state, i, j)
}

/// Overlapping `I`, `J` allowed; the combined cut is `I△J`.
pub fn check_equality_nondisjoint(state: &StateTensor, i: &PartySet, j: &PartySet) -> Result<EqualityReport> {
    evaluate(state, i, j)
}

/// Heron area of the triangle whose sides are the three single-party squared
/// concurrences of a tripartite state.
pub fn triangle_area_measure(state: &StateTensor) -> Result<f64> {
    if state.n_parties() != 3 {
        return Err(Error::WrongArity {
            expected: 3,
            found: state.n_parties(),
        });
    }
    let mut sides = [0.0; 3];
    for (p, side) in sides.iter_mut().enumerate() {
        *side = concurrence_sq_rho(state, &BipartitionMask::from_parties(3, &[p + 1])?)?;
    }
    Ok(heron(sides))
}

/// Stable form: sides sorted so that `a ≥ b ≥ c`.
pub fn heron(mut sides: [f64; 3]) -> f64 {
    sides.sort_by(|x, y| y.total_cmp(x));
    let [a, b, c] = sides;
    let radicand = (a + (b + c)) * (c - (a - b)) * (c + (a - b)) * (a + (b - c));
    0.25 * radicand.max(0.0).sqrt()
}
