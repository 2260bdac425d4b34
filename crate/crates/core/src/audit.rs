//! Seeded fuzzing of every concurrence and entropy relation over random pure
//! states, with per-relation tallies.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::concurrence::generic_form_of;
use crate::entropy::EntropyContext;
use crate::equality::check_equality_nondisjoint;
use crate::error::{Error, Result};
use crate::fixtures::{build, NamedParams, NamedState};
use crate::inequality::{check_polygon, check_polygon_elementary, check_triangle, InequalityReport, Verdict};
use crate::mask::{BipartitionMask, PartySet};
use crate::perm::Sign;
use crate::state::{DoubledVector, StateTensor};
use crate::tol;

/// Relation names in reporting order. Only the last one may be violated.
pub const RELATIONS: [&str; 17] = [
    "triangle",
    "pythagorean",
    "polygon",
    "polygon_squared",
    "symmetric_difference",
    "subadditivity_lower",
    "subadditivity_upper",
    "saturation_biconditional",
    "softened_ssa",
    "softened_ssa_mutual",
    "entropy_triangle",
    "entropy_triangle_saturation",
    "tripartite_info",
    "generic_form",
    "equality_criterion",
    "algebraic_identity",
    "strong_subadditivity",
];

/// The one relation Tsallis-2 entropy is allowed to violate.
pub const VIOLABLE: &str = "strong_subadditivity";

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Tally {
    pub holds: usize,
    pub saturated: usize,
    pub violated: usize,
}

impl Tally {
    fn add(&mut self, v: Verdict) {
        match v {
            Verdict::Holds => self.holds += 1,
            Verdict::Saturated => self.saturated += 1,
            Verdict::Violated => self.violated += 1,
        }
    }

    fn merge(&mut self, other: &Tally) {
        self.holds += other.holds;
        self.saturated += other.saturated;
        self.violated += other.violated;
    }

    pub fn total(&self) -> usize {
        self.holds + self.saturated + self.violated
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditConfig {
    pub samples: usize,
    pub dims: Vec<usize>,
    pub seed: u64,
    /// Also evaluate strong subadditivity on Bell ⊗ Bell with A=1, B=2, C=3.
    pub include_fixture: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AuditSummary {
    pub config: AuditConfig,
    pub tallies: Vec<(&'static str, Tally)>,
    pub fixture_ssa: Option<InequalityReport>,
}

impl AuditSummary {
    pub fn tally(&self, name: &str) -> Option<Tally> {
        self.tallies.iter().find(|(n, _)| *n == name).map(|(_, t)| *t)
    }

    /// Violations of anything other than plain strong subadditivity.
    pub fn unexpected_violations(&self) -> usize {
        self.tallies
            .iter()
            .filter(|(n, _)| *n != VIOLABLE)
            .map(|(_, t)| t.violated)
            .sum()
    }

    pub fn failed(&self) -> bool {
        self.unexpected_violations() > 0
    }

    /// `lhs - rhs` of strong subadditivity on the fixture.
    pub fn fixture_violation(&self) -> Option<f64> {
        self.fixture_ssa.as_ref().map(|r| -r.slack)
    }
}

struct Tallies([Tally; RELATIONS.len()]);

impl Tallies {
    fn new() -> Self {
        Tallies([Tally::default(); RELATIONS.len()])
    }

    fn add(&mut self, name: &str, v: Verdict) {
        let k = RELATIONS.iter().position(|n| *n == name).expect("known relation");
        self.0[k].add(v);
    }

    fn report(&mut self, r: &InequalityReport) {
        self.add(&r.name, r.verdict);
    }

    fn check(&mut self, name: &str, ok: bool) {
        self.add(name, if ok { Verdict::Holds } else { Verdict::Violated });
    }
}

/// Matches the report's algebraic slack against `factor × slack`.
fn algebraic_ok(r: &InequalityReport, factor: f64) -> bool {
    match r.algebraic {
        Some(alg) => (alg - factor * r.slack).abs() < tol::SATURATION,
        None => true,
    }
}

fn random_set(rng: &mut ChaCha8Rng, n: usize) -> Result<PartySet> {
    let full = (1u64 << n) - 1;
    PartySet::from_bits(rng.random_range(1..full), n)
}

fn random_mask(rng: &mut ChaCha8Rng, n: usize) -> Result<BipartitionMask> {
    Ok(random_set(rng, n)?.canonical())
}

/// Labels each party A, B, C or environment, keeping A, B, C nonempty.
fn random_abc(rng: &mut ChaCha8Rng, n: usize) -> Result<(PartySet, PartySet, PartySet)> {
    let mut parties: Vec<usize> = (1..=n).collect();
    parties.shuffle(rng);
    let mut labels = vec![0usize, 1, 2];
    labels.extend((3..n).map(|_| rng.random_range(0..4)));
    let mut bits = [0u64; 4];
    for (p, l) in parties.iter().zip(&labels) {
        bits[*l] |= 1 << (p - 1);
    }
    Ok((
        PartySet::from_bits(bits[0], n)?,
        PartySet::from_bits(bits[1], n)?,
        PartySet::from_bits(bits[2], n)?,
    ))
}

fn sample_seed(seed: u64, k: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(k as u64)
}

fn audit_one(state: &StateTensor, rng: &mut ChaCha8Rng) -> Result<Tallies> {
    let n = state.n_parties();
    let mut t = Tallies::new();

    let (i, j) = (random_mask(rng, n)?, random_mask(rng, n)?);
    let tri = check_triangle(state, &i, &j)?;
    t.report(&tri.linear);
    t.report(&tri.squared);
    t.check("algebraic_identity", algebraic_ok(&tri.squared, 1.0));

    let k = rng.random_range(1..=4);
    let masks = (0..k).map(|_| random_mask(rng, n)).collect::<Result<Vec<_>>>()?;
    let poly = check_polygon(state, &masks)?;
    t.report(&poly.linear);
    t.report(&poly.squared);
    let elem = check_polygon_elementary(state, &random_mask(rng, n)?)?;
    t.add("symmetric_difference", worst(elem.linear.verdict, elem.squared.verdict));

    let (si, sj) = (random_set(rng, n)?, random_set(rng, n)?);
    let eq = check_equality_nondisjoint(state, &si, &sj)?;
    t.add(
        "equality_criterion",
        if eq.violation() {
            Verdict::Violated
        } else if eq.saturated() {
            Verdict::Saturated
        } else {
            Verdict::Holds
        },
    );

    let dv = DoubledVector::new(state)?;
    let first = random_mask(rng, n)?;
    let rest = (0..rng.random_range(0..=3))
        .map(|_| {
            let sign = if rng.random_bool(0.5) { Sign::Plus } else { Sign::Minus };
            Ok((random_mask(rng, n)?, sign))
        })
        .collect::<Result<Vec<_>>>()?;
    let g = generic_form_of(&dv, &first, &rest)?;
    let gv = Verdict::from_slack(g.value, tol::SATURATION);
    t.add("generic_form", gv);
    t.check("algebraic_identity", g.imag_residue < tol::SATURATION);

    if n == 2 {
        let ctx = EntropyContext::new(
            state.clone(),
            PartySet::single(2, 1)?,
            PartySet::single(2, 2)?,
            None,
        )?;
        subadditivity(&ctx, &mut t)?;
        return Ok(t);
    }

    let (a, b, c) = random_abc(rng, n)?;
    let ctx = EntropyContext::new(state.clone(), a, b, Some(c))?;
    subadditivity(&ctx, &mut t)?;

    let ssa = ctx.check_strong_subadditivity()?;
    t.report(&ssa);
    t.check("algebraic_identity", algebraic_ok(&ssa, -2.0));

    let soft = ctx.check_softened_ssa()?;
    t.report(&soft.entropy_form);
    t.report(&soft.mutual_form);
    t.check("algebraic_identity", algebraic_ok(&soft.entropy_form, 1.0));

    let et = ctx.check_entropy_triangle()?;
    t.report(&et.report);
    t.check("entropy_triangle_saturation", et.saturation_consistent());
    t.check("algebraic_identity", algebraic_ok(&et.report, 1.0));

    let ti = ctx.check_tripartite_info()?;
    t.report(&ti);
    t.check("algebraic_identity", algebraic_ok(&ti, 1.0));
    Ok(t)
}

fn subadditivity(ctx: &EntropyContext, t: &mut Tallies) -> Result<()> {
    let sub = ctx.check_subadditivity()?;
    t.report(&sub.lower);
    t.report(&sub.upper);
    t.check("saturation_biconditional", sub.saturation_consistent());
    t.check("algebraic_identity", algebraic_ok(&sub.lower, 1.0));
    t.check("algebraic_identity", algebraic_ok(&sub.upper, 1.0));
    Ok(())
}

/// Strong subadditivity on Bell ⊗ Bell with A, B, C the first three qubits.
pub fn bell_x_bell_ssa() -> Result<InequalityReport> {
    let s = build(NamedState::BellXBell, &NamedParams::default())?;
    let ctx = EntropyContext::new(
        s,
        PartySet::single(4, 1)?,
        PartySet::single(4, 2)?,
        Some(PartySet::single(4, 3)?),
    )?;
    ctx.check_strong_subadditivity()
}

pub fn run_audit(config: &AuditConfig) -> Result<AuditSummary> {
    if config.samples == 0 {
        return Err(Error::BadParams("at least one sample is required".into()));
    }
    if config.dims.len() < 2 {
        return Err(Error::BadParams("at least two parties are required".into()));
    }
    let per_sample: Vec<Tallies> = (0..config.samples)
        .into_par_iter()
        .map(|k| {
            let s = sample_seed(config.seed, k);
            let state = StateTensor::random(config.dims.clone(), s)?;
            let mut rng = ChaCha8Rng::seed_from_u64(s ^ 0xA5A5_A5A5_A5A5_A5A5);
            audit_one(&state, &mut rng)
        })
        .collect::<Result<_>>()?;

    let mut total = Tallies::new();
    for t in &per_sample {
        for (acc, x) in total.0.iter_mut().zip(&t.0) {
            acc.merge(x);
        }
    }
    let fixture_ssa = if config.include_fixture {
        let r = bell_x_bell_ssa()?;
        total.report(&r);
        Some(r)
    } else {
        None
    };
    Ok(AuditSummary {
        config: config.clone(),
        tallies: RELATIONS.iter().copied().zip(total.0).collect(),
        fixture_ssa,
    })
}

fn worst(a: Verdict, b: Verdict) -> Verdict {
    match (a, b) {
        (Verdict::Violated, _) | (_, Verdict::Violated) => Verdict::Violated,
        (Verdict::Saturated, _) | (_, Verdict::Saturated) => Verdict::Saturated,
        _ => Verdict::Holds,
    }
}
