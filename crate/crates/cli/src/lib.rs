//! Command-line front end: state ingestion, concurrence and entropy reports,
//! inequality audits, genuine-entanglement certification and benchmarks.

pub mod error;
pub mod input;
pub mod report;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use concvec::audit::{run_audit, AuditConfig};
use concvec::concurrence::all_concurrences_with_cap;
use concvec::genuine::{bench_scaling, certify_genuine_with_cap, exhaustive_oracle_with_cap, BENCH_CSV_HEADER};
use concvec::inequality::{check_triangle, InequalityReport};
use concvec::{all_concurrences_checked, Certification, EntropyContext, GenuineVerdict, PartySet, StateTensor};
use serde::Serialize;

use error::{CliError, CliResult};
use input::{parse_list, IntList, Loaded, SourceArgs, StateFile};
use report::*;

pub const TOOL: &str = "concvec";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Parser)]
#[command(name = "concvec", version, about = "Concurrence vectors of multipartite pure states")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Concurrences for every bipartition, entropies and relation verdicts
    Analyze(AnalyzeArgs),
    /// Sufficient test for genuine multipartite entanglement
    Genuine(GenuineArgs),
    /// Fuzz all relations over random states
    Audit(AuditArgs),
    /// Operation counts and timings of the genuine test against the exhaustive check
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Emit JSON instead of a table
    #[arg(long)]
    pub json: bool,

    /// Write the report to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,

    /// Cap on the total Hilbert-space dimension
    #[arg(long, default_value_t = concvec::tol::DEFAULT_MAX_DIM,
          value_parser = parse_cap)]
    pub max_dim: usize,
}

fn parse_cap(s: &str) -> Result<usize, String> {
    let cap: usize = s.parse().map_err(|_| format!("`{s}` is not a positive integer"))?;
    if cap == 0 || cap > concvec::tol::DEFAULT_MAX_DIM {
        return Err(format!("must be between 1 and {}", concvec::tol::DEFAULT_MAX_DIM));
    }
    Ok(cap)
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    #[command(flatten)]
    pub output: OutputArgs,

    /// Also compute every concurrence by the minor and vector routes
    #[arg(long)]
    pub verify: bool,

    /// Subsystem as a 1-indexed party list, e.g. 1,3 (repeatable)
    #[arg(long = "mask", value_parser = parse_list)]
    pub masks: Vec<IntList>,

    /// Write the loaded state as a state file
    #[arg(long)]
    pub dump_state: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenuineArgs {
    #[command(flatten)]
    pub source: SourceArgs,

    #[command(flatten)]
    pub output: OutputArgs,

    /// Compare against the exhaustive check over all bipartitions
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Debug, Args)]
pub struct AuditArgs {
    #[command(flatten)]
    pub output: OutputArgs,

    #[arg(long, default_value_t = 200)]
    pub samples: usize,

    /// Local dimensions of every sampled state
    #[arg(long, value_parser = parse_list, default_value = "2,2,2,2")]
    pub dims: IntList,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct BenchArgs {
    /// Write the CSV to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,

    #[arg(long, default_value_t = concvec::tol::DEFAULT_MAX_DIM,
          value_parser = parse_cap)]
    pub max_dim: usize,

    #[arg(long, default_value_t = 3)]
    pub min_n: usize,

    #[arg(long, default_value_t = 6)]
    pub max_n: usize,

    #[arg(long, default_value_t = 2)]
    pub dims_per_party: usize,

    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Number of consecutive seeds per N
    #[arg(long, default_value_t = 1)]
    pub seeds: u64,
}

/// Text to emit and the process exit status.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub out: Option<PathBuf>,
    pub status: u8,
}

pub fn run(cli: &Cli) -> CliResult<Outcome> {
    match &cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Genuine(g) => genuine(g),
        Command::Audit(a) => audit(a),
        Command::Bench(b) => bench(b),
    }
}

/// Writes the outcome's text and returns its exit status.
pub fn emit(outcome: &Outcome) -> CliResult<u8> {
    match &outcome.out {
        Some(path) => std::fs::write(path, &outcome.output)?,
        None => print!("{}", outcome.output),
    }
    Ok(outcome.status)
}

fn serialize<T: Serialize>(value: &T, json: bool, text: impl FnOnce() -> String) -> CliResult<String> {
    if json {
        let mut s = serde_json::to_string_pretty(value)?;
        s.push('\n');
        Ok(s)
    } else {
        Ok(text())
    }
}

fn input_info(loaded: &Loaded) -> InputInfo {
    InputInfo {
        source: loaded.source.clone(),
        dims: loaded.state.dims().to_vec(),
        name: loaded.name.clone(),
        seed: loaded.seed,
        sha256: loaded.digest.clone(),
    }
}

fn party_set(n: usize, m: &IntList) -> CliResult<PartySet> {
    let set = PartySet::from_parties(n, &m.0).map_err(|e| CliError::Input(format!("--mask {:?}: {e}", m.0)))?;
    if set.is_empty() {
        return Err(CliError::Input("--mask must name at least one party".into()));
    }
    Ok(set)
}

fn relation_row(r: &InequalityReport, subsystems: String) -> RelationRow {
    RelationRow {
        relation: r.name.clone(),
        subsystems,
        lhs: r.lhs,
        rhs: r.rhs,
        slack: r.slack,
        verdict: r.verdict.as_str().to_string(),
    }
}

fn relations(state: &StateTensor, sets: &[PartySet]) -> CliResult<Vec<RelationRow>> {
    let mut rows = Vec::new();
    for (k, x) in sets.iter().enumerate() {
        for y in &sets[k + 1..] {
            let (mx, my) = (x.canonical(), y.canonical());
            if !mx.is_trivial() && !my.is_trivial() {
                let pair = check_triangle(state, &mx, &my)?;
                rows.push(relation_row(&pair.linear, format!("{x} ; {y}")));
                rows.push(relation_row(&pair.squared, format!("{x} ; {y}")));
            }
            if x.is_disjoint(y) {
                let ctx = EntropyContext::new(state.clone(), *x, *y, None)?;
                let sub = ctx.check_subadditivity()?;
                let label = format!("A={x} B={y}");
                rows.push(relation_row(&sub.lower, label.clone()));
                rows.push(relation_row(&sub.upper, label));
            }
        }
    }
    if let [a, b, c, ..] = sets {
        if a.is_disjoint(b) && a.is_disjoint(c) && b.is_disjoint(c) {
            let ctx = EntropyContext::new(state.clone(), *a, *b, Some(*c))?;
            let label = format!("A={a} B={b} C={c}");
            let soft = ctx.check_softened_ssa()?;
            for r in [
                ctx.check_strong_subadditivity()?,
                soft.entropy_form,
                soft.mutual_form,
                ctx.check_entropy_triangle()?.report,
                ctx.check_tripartite_info()?,
            ] {
                rows.push(relation_row(&r, label.clone()));
            }
        }
    }
    Ok(rows)
}

fn genuine_report(v: &GenuineVerdict) -> GenuineReport {
    GenuineReport {
        verdict: v.verdict.as_str().to_string(),
        vectors: v
            .evidence
            .iter()
            .map(|e| VectorRow {
                vector: e.id.to_string(),
                norm_sq: e.norm_sq,
            })
            .collect(),
        vector_ops: v.n_vector_ops,
        oracle: None,
    }
}

fn analyze(args: &AnalyzeArgs) -> CliResult<Outcome> {
    let loaded = args.source.load(args.output.max_dim)?;
    let state = &loaded.state;
    let n = state.n_parties();
    if let Some(path) = &args.dump_state {
        dump_state(path, &loaded)?;
    }

    let (concurrences, max_route_disagreement) = if n < 2 {
        (Vec::new(), None)
    } else if args.verify {
        let routes = all_concurrences_checked(state)?;
        let worst = routes.iter().map(|r| r.max_disagreement()).fold(0.0, f64::max);
        let rows = routes
            .iter()
            .map(|r| CutRow {
                cut: r.mask.to_string(),
                c2: r.rho,
                c2_minor: Some(r.minor),
                c2_vector: Some(r.vector),
            })
            .collect();
        (rows, Some(worst))
    } else {
        let rows = all_concurrences_with_cap(state, args.output.max_dim)?
            .into_iter()
            .map(|(m, c2)| CutRow {
                cut: m.to_string(),
                c2,
                c2_minor: None,
                c2_vector: None,
            })
            .collect();
        (rows, None)
    };

    let sets: Vec<PartySet> = if args.masks.is_empty() {
        (1..=n).map(|p| PartySet::single(n, p)).collect::<Result<_, _>>()?
    } else {
        args.masks.iter().map(|m| party_set(n, m)).collect::<CliResult<_>>()?
    };
    let entropies = sets
        .iter()
        .map(|s| {
            Ok(EntropyRow {
                parties: s.to_string(),
                tsallis2: 1.0 - state.purity(s)?,
            })
        })
        .collect::<CliResult<Vec<_>>>()?;
    let relations = if n >= 2 { relations(state, &sets)? } else { Vec::new() };
    let genuine = if n >= 3 {
        Some(genuine_report(&certify_genuine_with_cap(state, args.output.max_dim)?))
    } else {
        None
    };

    let report = AnalyzeReport {
        tool: TOOL.into(),
        version: VERSION.into(),
        input: input_info(&loaded),
        concurrences,
        max_route_disagreement,
        entropies,
        relations,
        genuine,
    };
    Ok(Outcome {
        output: serialize(&report, args.output.json, || report.render())?,
        out: args.output.out.clone(),
        status: 0,
    })
}

fn dump_state(path: &Path, loaded: &Loaded) -> CliResult<()> {
    let file = StateFile::from_state(&loaded.state, loaded.name.clone(), loaded.seed);
    let mut text = serde_json::to_string_pretty(&file)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

fn genuine(args: &GenuineArgs) -> CliResult<Outcome> {
    let loaded = args.source.load(args.output.max_dim)?;
    let state = &loaded.state;
    let verdict = certify_genuine_with_cap(state, args.output.max_dim)?;
    let mut report = genuine_report(&verdict);
    let mut status = 0;
    if args.oracle {
        let oracle = exhaustive_oracle_with_cap(state, args.output.max_dim)?;
        let certified = verdict.verdict == Certification::GenuineCertified;
        let agreement = match (certified, oracle.genuine) {
            (true, true) | (false, false) => "agree",
            (false, true) => "inconclusive; oracle finds every cut entangled",
            (true, false) => {
                status = 1;
                "contradiction"
            }
        };
        report.oracle = Some(OracleReport {
            genuine: oracle.genuine,
            cuts: oracle.n_cuts(),
            separable_cuts: oracle.separable_cuts().map(|(m, _)| m.to_string()).collect(),
            agreement: agreement.into(),
        });
    }
    let full = GenuineCommandReport {
        tool: TOOL.into(),
        version: VERSION.into(),
        input: input_info(&loaded),
        genuine: report,
    };
    Ok(Outcome {
        output: serialize(&full, args.output.json, || full.render())?,
        out: args.output.out.clone(),
        status,
    })
}

fn audit(args: &AuditArgs) -> CliResult<Outcome> {
    if args.samples == 0 {
        return Err(CliError::Input("--samples must be at least 1".into()));
    }
    let dims = &args.dims.0;
    let dim = dims.iter().try_fold(1usize, |a, &d| a.checked_mul(d)).unwrap_or(usize::MAX);
    if dim > args.output.max_dim {
        return Err(CliError::SizeGuard {
            dim,
            cap: args.output.max_dim,
        });
    }
    let summary = run_audit(&AuditConfig {
        samples: args.samples,
        dims: dims.clone(),
        seed: args.seed,
        include_fixture: true,
    })?;
    let report = AuditReport {
        tool: TOOL.into(),
        version: VERSION.into(),
        samples: args.samples,
        dims: dims.clone(),
        seed: args.seed,
        relations: summary
            .tallies
            .iter()
            .map(|(name, t)| TallyRow {
                relation: name.to_string(),
                holds: t.holds,
                saturated: t.saturated,
                violated: t.violated,
            })
            .collect(),
        fixture_ssa_violation: summary.fixture_violation(),
        unexpected_violations: summary.unexpected_violations(),
        passed: !summary.failed(),
    };
    Ok(Outcome {
        output: serialize(&report, args.output.json, || report.render())?,
        out: args.output.out.clone(),
        status: if summary.failed() { 1 } else { 0 },
    })
}

fn bench(args: &BenchArgs) -> CliResult<Outcome> {
    if args.min_n < 3 || args.max_n < args.min_n {
        return Err(CliError::Input("need 3 <= --min-n <= --max-n".into()));
    }
    if args.dims_per_party < 2 || args.seeds == 0 {
        return Err(CliError::Input("--dims-per-party must be at least 2 and --seeds at least 1".into()));
    }
    let dim = u32::try_from(args.max_n)
        .ok()
        .and_then(|n| args.dims_per_party.checked_pow(n))
        .unwrap_or(usize::MAX);
    if dim > args.max_dim {
        return Err(CliError::SizeGuard { dim, cap: args.max_dim });
    }
    let dims: Vec<Vec<usize>> = (args.min_n..=args.max_n).map(|n| vec![args.dims_per_party; n]).collect();
    let seeds: Vec<u64> = (0..args.seeds).map(|k| args.seed.wrapping_add(k)).collect();
    let rows = bench_scaling(&dims, &seeds)?;
    let mut csv = String::from(BENCH_CSV_HEADER);
    csv.push('\n');
    for r in &rows {
        csv.push_str(&r.csv_line());
        csv.push('\n');
    }
    Ok(Outcome {
        output: csv,
        out: args.out.clone(),
        status: 0,
    })
}
