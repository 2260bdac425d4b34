//! Triangle, Pythagorean and polygon relations between concurrences.

use std::fmt;

use crate::concurrence::{c2_or_zero, double_projector_norm_sq};
use crate::error::{Error, Result};
use crate::mask::BipartitionMask;
use crate::state::{DoubledVector, StateTensor};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    Holds,
    Saturated,
    Violated,
}

impl Verdict {
    pub fn from_slack(slack: f64, tolerance: f64) -> Self {
        if slack.abs() <= tolerance {
            Verdict::Saturated
        } else if slack < 0.0 {
            Verdict::Violated
        } else {
            Verdict::Holds
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Saturated => "saturated",
            Verdict::Violated => "violated",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// `lhs ≤ rhs` evaluated numerically.
#[derive(Debug, Clone, PartialEq)]
pub struct InequalityReport {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs`
    pub slack: f64,
    pub verdict: Verdict,
    pub tolerance: f64,
    /// The same slack (or a fixed multiple of it, documented per relation)
    /// computed through the permutation algebra, when available.
    pub algebraic: Option<f64>,
}

impl InequalityReport {
    pub fn new(name: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let slack = rhs - lhs;
        Self {
            name: name.into(),
            lhs,
            rhs,
            slack,
            verdict: Verdict::from_slack(slack, tol::SATURATION),
            tolerance: tol::SATURATION,
            algebraic: None,
        }
    }

    pub fn with_algebraic(mut self, value: f64) -> Self {
        self.algebraic = Some(value);
        self
    }
}

/// Linear and squared forms of a triangle relation.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportPair {
    pub linear: InequalityReport,
    pub squared: InequalityReport,
}

fn root(c2: f64) -> f64 {
    if c2 < tol::ROUNDING {
        0.0
    } else {
        c2.sqrt()
    }
}

/// `C_{I△J} ≤ C_I + C_J` and `C²_{I△J} ≤ C²_I + C²_J`.
///
/// The squared report carries `½‖(1 - P_I)(1 - P_J) A‖²` as its algebraic
/// slack.
pub fn check_triangle(state: &StateTensor, i: &BipartitionMask, j: &BipartitionMask) -> Result<ReportPair> {
    for m in [i, j] {
        if m.n_parties() != state.n_parties() {
            return Err(Error::ArityMismatch(m.n_parties(), state.n_parties()));
        }
        if m.is_trivial() {
            return Err(Error::TrivialBipartition);
        }
    }
    let k = i.sym_diff(j)?;
    let (ci, cj, ck) = (c2_or_zero(state, i)?, c2_or_zero(state, j)?, c2_or_zero(state, &k)?);
    let a = DoubledVector::new(state)?;
    let r = double_projector_norm_sq(&a, i, j)?;
    Ok(ReportPair {
        linear: InequalityReport::new("triangle", root(ck), root(ci) + root(cj)),
        squared: InequalityReport::new("pythagorean", ck, ci + cj).with_algebraic(0.5 * r),
    })
}

/// `C_{I△J△⋯△M} ≤ Σ C` and its squared version over the listed masks.
pub fn check_polygon(state: &StateTensor, masks: &[BipartitionMask]) -> Result<ReportPair> {
    let first = masks.first().ok_or(Error::EmptyList)?;
    let mut combined = BipartitionMask::trivial(first.n_parties());
    let (mut sum, mut sum_sq) = (0.0, 0.0);
    for m in masks {
        if m.n_parties() != state.n_parties() {
            return Err(Error::ArityMismatch(m.n_parties(), state.n_parties()));
        }
        let c2 = c2_or_zero(state, m)?;
        sum += root(c2);
        sum_sq += c2;
        combined = combined.sym_diff(m)?;
    }
    let ck = c2_or_zero(state, &combined)?;
    Ok(ReportPair {
        linear: InequalityReport::new("polygon", root(ck), sum),
        squared: InequalityReport::new("polygon_squared", ck, sum_sq),
    })
}

/// Polygon relation for `I` against its elementary parties.
pub fn check_polygon_elementary(state: &StateTensor, mask: &BipartitionMask) -> Result<ReportPair> {
    let n = state.n_parties();
    let singles = mask
        .set()
        .parties()
        .into_iter()
        .map(|p| BipartitionMask::from_parties(n, &[p]))
        .collect::<Result<Vec<_>>>()?;
    check_polygon(state, &singles)
}
