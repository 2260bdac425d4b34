//! Tsallis-2 entropy `S₂(ρ) = 1 - tr ρ²` and the relations it obeys (or
//! fails) across subsystems of a pure state.
//!
//! Every relation is evaluated twice: from reduced density matrices, and as
//! a quadratic form in the doubled vector using `A†P_X A = 1 - S₂(ρ_X)`.

use crate::concurrence::generic_form_of;
use crate::density::DensityMatrix;
use crate::error::{Error, Result};
use crate::inequality::{InequalityReport, Verdict};
use crate::mask::{BipartitionMask, PartySet};
use crate::perm::{apply_factor, apply_perm, inner, Sign};
use crate::state::{DoubledVector, StateTensor};
use crate::tol;

pub fn tsallis2(rho: &DensityMatrix) -> f64 {
    1.0 - rho.purity()
}

/// A pure state with labelled, pairwise disjoint subsystems `A`, `B` and
/// optionally `C`. Whatever is left over acts as the purifying environment.
#[derive(Debug, Clone)]
pub struct EntropyContext {
    state: StateTensor,
    a: PartySet,
    b: PartySet,
    c: Option<PartySet>,
}

impl EntropyContext {
    pub fn new(state: StateTensor, a: PartySet, b: PartySet, c: Option<PartySet>) -> Result<Self> {
        let sets: Vec<PartySet> = [Some(a), Some(b), c].into_iter().flatten().collect();
        for s in &sets {
            if s.n_parties() != state.n_parties() {
                return Err(Error::ArityMismatch(s.n_parties(), state.n_parties()));
            }
            if s.is_empty() {
                return Err(Error::BadMask);
            }
        }
        for (k, x) in sets.iter().enumerate() {
            if sets[k + 1..].iter().any(|y| !x.is_disjoint(y)) {
                return Err(Error::OverlappingMasks);
            }
        }
        Ok(Self { state, a, b, c })
    }

    pub fn state(&self) -> &StateTensor {
        &self.state
    }

    pub fn a(&self) -> PartySet {
        self.a
    }

    pub fn b(&self) -> PartySet {
        self.b
    }

    pub fn c(&self) -> Option<PartySet> {
        self.c
    }

    fn c_required(&self) -> Result<PartySet> {
        self.c.ok_or(Error::MissingSubsystem)
    }

    /// `S₂(ρ_X)`; zero for the empty and the full set.
    pub fn entropy(&self, set: &PartySet) -> Result<f64> {
        Ok(1.0 - self.state.purity(set)?)
    }

    pub fn mutual_info(&self, x: &PartySet, y: &PartySet) -> Result<f64> {
        if !x.is_disjoint(y) {
            return Err(Error::OverlappingMasks);
        }
        Ok(self.entropy(x)? + self.entropy(y)? - self.entropy(&x.union(y)?)?)
    }

    fn doubled(&self) -> Result<DoubledVector> {
        DoubledVector::new(&self.state)
    }

    /// `|S₂(A) - S₂(B)| ≤ S₂(AB) ≤ S₂(A) + S₂(B)`.
    ///
    /// Algebraic slacks: `A†(1 - P_{AB})(1 - P_B)A` style forms giving
    /// `S₂(AB) + S₂(B) - S₂(A)` (and `A ↔ B`) for the lower bound, min of the
    /// two; `A†(1 - P_A)(1 - P_B)A` for the upper bound.
    pub fn check_subadditivity(&self) -> Result<Subadditivity> {
        let (a, b) = (self.a, self.b);
        let ab = a.union(&b)?;
        let (sa, sb, sab) = (self.entropy(&a)?, self.entropy(&b)?, self.entropy(&ab)?);

        let dv = self.doubled()?;
        let (ma, mb, mab) = (a.canonical(), b.canonical(), ab.canonical());
        let lower_a = form(&dv, &mab, &[(mb, Sign::Minus)])?;
        let lower_b = form(&dv, &mab, &[(ma, Sign::Minus)])?;
        let upper_alg = form(&dv, &ma, &[(mb, Sign::Minus)])?;

        let lower = InequalityReport::new("subadditivity_lower", (sa - sb).abs(), sab)
            .with_algebraic(lower_a.min(lower_b));
        let upper = InequalityReport::new("subadditivity_upper", sab, sa + sb).with_algebraic(upper_alg);
        Ok(Subadditivity {
            s_a: sa,
            s_b: sb,
            s_ab: sab,
            lower,
            upper,
        })
    }

    /// `S₂(ABC) + S₂(B) ≤ S₂(AB) + S₂(BC)`, which Tsallis-2 can violate.
    ///
    /// The algebraic value is `-2A†P_B(1 - P_A)(1 - P_C)A`, which equals
    /// `2 (lhs - rhs)`.
    pub fn check_strong_subadditivity(&self) -> Result<InequalityReport> {
        let (a, b, c) = (self.a, self.b, self.c_required()?);
        let abc = a.union(&b)?.union(&c)?;
        let lhs = self.entropy(&abc)? + self.entropy(&b)?;
        let rhs = self.entropy(&a.union(&b)?)? + self.entropy(&b.union(&c)?)?;

        let dv = self.doubled()?;
        let dims = dv.dims();
        let v = apply_factor(dv.comps(), dims, &a.canonical(), Sign::Minus)?;
        let v = apply_factor(&v, dims, &c.canonical(), Sign::Minus)?;
        let v = apply_perm(&v, dims, &b.canonical())?;
        let viol = -2.0 * inner(dv.comps(), &v).re;
        Ok(InequalityReport::new("strong_subadditivity", lhs, rhs).with_algebraic(viol))
    }

    /// Entropy form with the `[S₂(A) + S₂(C) - S₂(AC)]` correction, and the
    /// mutual-information form `|I(A:B) - I(A:C)| ≤ I(A:BC)`.
    ///
    /// The entropy form's algebraic slack is `A†(1 - P_A)(1 + P_B)(1 - P_C)A`.
    pub fn check_softened_ssa(&self) -> Result<SoftenedSsa> {
        let (a, b, c) = (self.a, self.b, self.c_required()?);
        let ab = a.union(&b)?;
        let bc = b.union(&c)?;
        let abc = ab.union(&c)?;
        let lhs = self.entropy(&abc)? + self.entropy(&b)?;
        let correction = self.entropy(&a)? + self.entropy(&c)? - self.entropy(&a.union(&c)?)?;
        let rhs = self.entropy(&ab)? + self.entropy(&bc)? + correction;

        let dv = self.doubled()?;
        let alg = form(
            &dv,
            &a.canonical(),
            &[(b.canonical(), Sign::Plus), (c.canonical(), Sign::Minus)],
        )?;
        let entropy_form = InequalityReport::new("softened_ssa", lhs, rhs).with_algebraic(alg);

        let iab = self.mutual_info(&a, &b)?;
        let iac = self.mutual_info(&a, &c)?;
        let iabc = self.mutual_info(&a, &bc)?;
        let mutual_form = InequalityReport::new("softened_ssa_mutual", (iab - iac).abs(), iabc);
        Ok(SoftenedSsa {
            entropy_form,
            mutual_form,
        })
    }

    /// `S₂(AC) ≤ S₂(AB) + S₂(BC)`; algebraic slack `A†(1 - P_{AB})(1 - P_{BC})A`.
    pub fn check_entropy_triangle(&self) -> Result<EntropyTriangle> {
        let (a, b, c) = (self.a, self.b, self.c_required()?);
        let ab = a.union(&b)?;
        let bc = b.union(&c)?;
        let (sab, sbc) = (self.entropy(&ab)?, self.entropy(&bc)?);
        let sac = self.entropy(&a.union(&c)?)?;
        let dv = self.doubled()?;
        let alg = form(&dv, &ab.canonical(), &[(bc.canonical(), Sign::Minus)])?;
        Ok(EntropyTriangle {
            s_ab: sab,
            s_bc: sbc,
            report: InequalityReport::new("entropy_triangle", sac, sab + sbc).with_algebraic(alg),
        })
    }

    /// `I(A:B:C) = I(A:B) + I(A:C) - I(A:BC)`.
    pub fn tripartite_info(&self) -> Result<f64> {
        let (a, b, c) = (self.a, self.b, self.c_required()?);
        Ok(self.mutual_info(&a, &b)? + self.mutual_info(&a, &c)? - self.mutual_info(&a, &b.union(&c)?)?)
    }

    /// `0 ≤ I(A:B:C)` as a report; algebraic slack `A†(1 - P_A)(1 - P_B)(1 - P_C)A`.
    pub fn check_tripartite_info(&self) -> Result<InequalityReport> {
        let (a, b, c) = (self.a, self.b, self.c_required()?);
        let value = self.tripartite_info()?;
        let dv = self.doubled()?;
        let alg = form(
            &dv,
            &a.canonical(),
            &[(b.canonical(), Sign::Minus), (c.canonical(), Sign::Minus)],
        )?;
        Ok(InequalityReport::new("tripartite_info", 0.0, value).with_algebraic(alg))
    }
}

fn form(dv: &DoubledVector, first: &BipartitionMask, rest: &[(BipartitionMask, Sign)]) -> Result<f64> {
    // a trivial mask is P = 1, so an empty or full subsystem is handled exactly
    Ok(generic_form_of(dv, first, rest)?.value)
}

#[derive(Debug, Clone, PartialEq)]
pub struct Subadditivity {
    pub s_a: f64,
    pub s_b: f64,
    pub s_ab: f64,
    pub lower: InequalityReport,
    pub upper: InequalityReport,
}

impl Subadditivity {
    /// Upper-bound saturation co-occurs with a (numerically) pure marginal.
    pub fn saturation_consistent(&self) -> bool {
        let pure_marginal = self.s_a.min(self.s_b) < tol::SATURATION;
        let saturated = self.upper.verdict == Verdict::Saturated;
        let clearly_mixed = self.s_a.min(self.s_b) > 0.5 * tol::NONZERO_FLOOR;
        !(pure_marginal && !saturated) && !(saturated && clearly_mixed)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SoftenedSsa {
    pub entropy_form: InequalityReport,
    pub mutual_form: InequalityReport,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EntropyTriangle {
    pub s_ab: f64,
    pub s_bc: f64,
    pub report: InequalityReport,
}

impl EntropyTriangle {
    pub fn saturation_consistent(&self) -> bool {
        let pure = self.s_ab.min(self.s_bc) < tol::SATURATION;
        let saturated = self.report.verdict == Verdict::Saturated;
        let clearly_mixed = self.s_ab.min(self.s_bc) > 0.5 * tol::NONZERO_FLOOR;
        !(pure && !saturated) && !(saturated && clearly_mixed)
    }
}

/// Purifies `rho` and labels the given subsystems of it; the environment is
/// appended as the last party.
pub fn mixed_state_entry(
    rho: &DensityMatrix,
    a: &PartySet,
    b: &PartySet,
    c: Option<&PartySet>,
) -> Result<EntropyContext> {
    let psi = rho.purify()?;
    let n = psi.n_parties();
    let lift = |s: &PartySet| -> Result<PartySet> {
        if s.n_parties() != n - 1 {
            return Err(Error::ArityMismatch(s.n_parties(), n - 1));
        }
        PartySet::from_bits(s.bits(), n)
    };
    let c = c.map(lift).transpose()?;
    EntropyContext::new(psi, lift(a)?, lift(b)?, c)
}
