//! End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use concvec::audit::{run_audit, AuditConfig, VIOLABLE};
use concvec::concurrence::concurrence_vector_of;
use concvec::equality::{check_equality_criterion, check_equality_nondisjoint, q_triple};
use concvec::fixtures::{bell, ghz, w};
use concvec::genuine::{bench_scaling, BenchMethod};
use concvec::mask::PartySet;
use concvec::{
    all_concurrences_checked, certify_genuine, decompose_elementary, doubled_vector, enumerate_bipartitions,
    exhaustive_oracle, BipartitionMask, Certification, EntropyContext, StateTensor, Verdict,
};
use num_complex::Complex64;
use rand::Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn route_equivalence() -> Outcome {
    let start = Instant::now();
    let dims: [&[usize]; 5] = [&[2, 2], &[2, 2, 2], &[2, 3, 2], &[3, 3], &[2, 2, 2, 2]];
    let (mut worst_minor, mut worst_vector, mut cuts) = (0.0f64, 0.0f64, 0);
    for k in 0..200u64 {
        let d = dims[(k % 5) as usize];
        let s = StateTensor::random(d.to_vec(), 10_000 + k).map_err(|e| e.to_string())?;
        for rv in all_concurrences_checked(&s).map_err(|e| e.to_string())? {
            // the ρ route itself is checked against brute-force purity
            let oracle = common::c2(&s, rv.mask.bits());
            ensure((rv.rho - oracle).abs() < 1e-9, || format!("ρ route off on sample {k}"))?;
            worst_minor = worst_minor.max((rv.minor - rv.rho).abs());
            worst_vector = worst_vector.max((rv.vector - rv.rho).abs());
            cuts += 1;
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    ensure(worst_minor < 1e-9 && worst_vector < 1e-9, || {
        format!("max |minor-ρ| {worst_minor:.2e}, |vector-ρ| {worst_vector:.2e}")
    })?;
    ensure(elapsed < 30.0, || format!("took {elapsed:.1} s"))?;
    Ok(format!(
        "200 states, {cuts} cuts, max |minor-ρ| {worst_minor:.1e}, |vector-ρ| {worst_vector:.1e}, {elapsed:.2} s"
    ))
}

fn decomposition() -> Outcome {
    let mut worst = 0.0f64;
    for k in 0..50u64 {
        let n = 2 + (k % 4) as usize;
        let s = StateTensor::random(vec![2; n], 20_000 + k).map_err(|e| e.to_string())?;
        let a = doubled_vector(&s).map_err(|e| e.to_string())?;
        let brute = common::doubled(&s);
        for m in enumerate_bipartitions(n) {
            let direct = concurrence_vector_of(&a, &m).map_err(|e| e.to_string())?;
            let oracle = common::one_minus(&brute, s.dims(), m.bits());
            let built = decompose_elementary(&s, &m).map_err(|e| e.to_string())?;
            worst = worst.max(common::max_diff(built.comps(), &oracle));
            worst = worst.max(common::max_diff(direct.comps(), &oracle));
        }
    }
    ensure(worst < 1e-12, || format!("max componentwise gap {worst:.2e}"))?;
    Ok(format!("50 states, N = 2..5, max componentwise gap {worst:.1e}"))
}

fn inequality_fuzz() -> Outcome {
    let configs = [
        (vec![2, 2], 50),
        (vec![2, 2, 2], 120),
        (vec![2, 3, 2], 100),
        (vec![2, 2, 2, 2], 150),
        (vec![3, 2, 2, 2], 50),
        (vec![2, 2, 2, 2, 2], 50),
    ];
    let (mut total, mut ssa_violations, mut unexpected) = (0, 0, Vec::new());
    let mut fixture = None;
    for (k, (dims, samples)) in configs.iter().enumerate() {
        let summary = run_audit(&AuditConfig {
            samples: *samples,
            dims: dims.clone(),
            seed: 30_000 + k as u64,
            include_fixture: k == 0,
        })
        .map_err(|e| e.to_string())?;
        total += samples;
        ssa_violations += summary.tally(VIOLABLE).map_or(0, |t| t.violated);
        for (name, t) in &summary.tallies {
            if *name != VIOLABLE && t.violated > 0 {
                unexpected.push(format!("{name} x{} on {dims:?}", t.violated));
            }
        }
        if let Some(v) = summary.fixture_violation() {
            fixture = Some(v);
        }
    }
    // the fixture's entropies by brute force: S(ABC) + S(B) - S(AB) - S(BC)
    let bb = bell().unwrap().tensor(&bell().unwrap());
    let e = |bits| common::tsallis(&bb, bits);
    let oracle = e(0b111) + e(0b010) - e(0b011) - e(0b110);
    let fixture = fixture.ok_or("fixture not evaluated")?;
    ensure(unexpected.is_empty(), || unexpected.join(", "))?;
    ensure(total >= 500, || format!("only {total} states"))?;
    ensure(ssa_violations >= 1, || "no strong subadditivity violation".into())?;
    ensure((fixture - 0.25).abs() < 1e-9 && (oracle - 0.25).abs() < 1e-9, || {
        format!("fixture violation {fixture}, brute force {oracle}")
    })?;
    Ok(format!(
        "{total} states, 0 unexpected violations, {ssa_violations} strong subadditivity violations, bell_x_bell magnitude {fixture:.12}"
    ))
}

fn saturation() -> Outcome {
    let mut rng = common::rng(40_000);
    let mut constructed = 0;
    for k in 0..100u64 {
        let dims: Vec<usize> = (0..4).map(|_| if rng.random_bool(0.3) { 3 } else { 2 }).collect();
        let sigma = common::random_nontrivial(&mut rng, 4);
        let s = common::separable_along(&dims, sigma, k);
        // J is any nonempty subset of the other side
        let rest = 15 & !sigma;
        let j = loop {
            let j = rng.random_range(1..16u64) & rest;
            if j != 0 {
                break j;
            }
        };
        let rep = check_equality_criterion(&s, &PartySet::from_bits(sigma, 4).unwrap(), &PartySet::from_bits(j, 4).unwrap())
            .map_err(|e| e.to_string())?;
        ensure(rep.slack().abs() < 1e-9 && rep.r < 1e-9, || format!("constructed sample {k} not saturated: {rep:?}"))?;
        let ctx = EntropyContext::new(s, PartySet::from_bits(sigma, 4).unwrap(), PartySet::from_bits(j, 4).unwrap(), None)
            .map_err(|e| e.to_string())?;
        let sub = ctx.check_subadditivity().map_err(|e| e.to_string())?;
        ensure(sub.upper.verdict == Verdict::Saturated, || format!("subadditivity not saturated on {k}"))?;
        constructed += 1;
    }
    let mut fuzz = 0;
    for (dims, seed0) in [(vec![2, 2, 2], 41_000u64), (vec![3, 3, 3], 42_000), (vec![2, 3, 2, 2], 43_000)] {
        let n = dims.len();
        for k in 0..150u64 {
            let s = StateTensor::random(dims.clone(), seed0 + k).map_err(|e| e.to_string())?;
            let i = common::random_nontrivial(&mut rng, n);
            let j = common::random_nontrivial(&mut rng, n);
            let rep = check_equality_nondisjoint(&s, &PartySet::from_bits(i, n).unwrap(), &PartySet::from_bits(j, n).unwrap())
                .map_err(|e| e.to_string())?;
            let saturated = rep.slack().abs() < 1e-9;
            ensure(!(saturated && rep.min_concurrence() > 1e-6), || {
                format!("fuzz sample saturates with both concurrences nonzero: {rep:?}")
            })?;
            fuzz += 1;
        }
    }
    Ok(format!("{constructed} constructed saturations, {fuzz} fuzz samples without spurious saturation"))
}

fn genuine_soundness() -> Outcome {
    let mut rng = common::rng(50_000);
    let (mut certified, mut inconclusive_genuine, mut genuine_large, mut n3) = (0, 0, 0, 0);
    for k in 0..500u64 {
        let n = 3 + (k % 3) as usize;
        let dims: Vec<usize> = if k % 2 == 0 {
            vec![2; n]
        } else {
            (0..n).map(|p| if p == 0 || rng.random_bool(0.25) { 3 } else { 2 }).collect()
        };
        let s = if k % 5 == 0 {
            common::separable_along(&dims, common::random_nontrivial(&mut rng, n), k)
        } else {
            StateTensor::random(dims, 50_000 + k).map_err(|e| e.to_string())?
        };
        let v = certify_genuine(&s).map_err(|e| e.to_string())?;
        let oracle = exhaustive_oracle(&s).map_err(|e| e.to_string())?;
        let is_certified = v.verdict == Certification::GenuineCertified;
        ensure(!is_certified || oracle.genuine, || format!("unsound certificate on sample {k}"))?;
        if n == 3 {
            ensure(is_certified == oracle.genuine, || format!("N = 3 mismatch on sample {k}"))?;
            n3 += 1;
        } else if oracle.genuine {
            genuine_large += 1;
            if !is_certified {
                inconclusive_genuine += 1;
            }
        }
        certified += is_certified as usize;
    }
    Ok(format!(
        "500 states, {certified} certified, 0 unsound, {n3} N = 3 verdicts equal the oracle; \
         inconclusive on {inconclusive_genuine}/{genuine_large} genuine N >= 4 states"
    ))
}

fn operation_counts() -> Outcome {
    let dims: Vec<Vec<usize>> = (3..=6).map(|n| vec![2; n]).collect();
    let rows = bench_scaling(&dims, &[60_000]).map_err(|e| e.to_string())?;
    ensure(rows.len() == 12, || format!("{} rows", rows.len()))?;
    for r in &rows {
        let n = r.n;
        let expected = match r.method {
            BenchMethod::CertifyV => n - 1,
            BenchMethod::CertifyW | BenchMethod::CertifyVk => (n - 1) * (n - 1),
            BenchMethod::Oracle => (1 << (n - 1)) - 1,
        };
        ensure(r.vector_ops == expected, || format!("{} at N = {n}: {} ops", r.method.as_str(), r.vector_ops))?;
        let line: Vec<String> = r.csv_line().split(',').map(String::from).collect();
        ensure(line[3] == expected.to_string(), || format!("csv column mismatch: {}", r.csv_line()))?;
    }
    for n in 3..=6 {
        let s = StateTensor::random(vec![2; n], n as u64).map_err(|e| e.to_string())?;
        let v = certify_genuine(&s).map_err(|e| e.to_string())?;
        let (vectors, ops) = (v.evidence.len(), v.n_vector_ops);
        if n % 2 == 0 {
            // one V plus N-1 W vectors, N-1 factors each
            ensure(vectors == n && ops == (n - 1) + (n - 1) * (n - 1), || format!("even N = {n}: {vectors} vectors, {ops} ops"))?;
        } else {
            // N vectors V_k, N-1 factors each: N(N-1) <= N²
            ensure(vectors == n && ops == n * (n - 1) && ops <= n * n, || format!("odd N = {n}: {vectors} vectors, {ops} ops"))?;
        }
    }
    Ok("N = 3..6: V uses N-1, W family (N-1)², odd branch N(N-1) <= N², oracle 2^(N-1)-1 cuts".into())
}

fn equality_conditions() -> Outcome {
    let mut worst = 0.0f64;
    for k in 0..100u64 {
        let s = StateTensor::random(vec![2; 3], 70_000 + k).map_err(|e| e.to_string())?;
        let a = common::doubled(&s);
        let v = common::one_minus(&common::one_minus(&a, &[2, 2, 2], 0b010), &[2, 2, 2], 0b001);
        let q = q_triple(&s).map_err(|e| e.to_string())?;
        let mut expected = Vec::new();
        for (val, count) in [(q.q0 * 2.0, 2), (q.q1 * 2.0, 2), (q.q2, 4)] {
            for _ in 0..count {
                expected.extend([val, -val]);
            }
        }
        let key = |z: &Complex64| (z.re, z.im);
        let mut got: Vec<Complex64> = v.into_iter().filter(|z| z.norm() > 1e-14).collect();
        got.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
        expected.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
        ensure(got.len() == expected.len(), || format!("sample {k}: {} nonzero components", got.len()))?;
        for (x, y) in got.iter().zip(&expected) {
            worst = worst.max((x - y).norm());
        }
    }
    ensure(worst < 1e-12, || format!("multiset gap {worst:.2e}"))?;

    let mut rng = common::rng(71_000);
    let mut checked = 0;
    for dims in [vec![2, 2, 2], vec![3, 3, 3]] {
        for k in 0..150u64 {
            let s = if k % 3 == 0 {
                common::separable_along(&dims, common::random_nontrivial(&mut rng, 3), k)
            } else {
                StateTensor::random(dims.clone(), 72_000 + k).map_err(|e| e.to_string())?
            };
            let i = 1u64 << rng.random_range(0..3);
            let j = loop {
                let j = rng.random_range(1..8u64) & 7 & !i;
                if j != 0 {
                    break j;
                }
            };
            let rep = check_equality_criterion(&s, &PartySet::from_bits(i, 3).unwrap(), &PartySet::from_bits(j, 3).unwrap())
                .map_err(|e| e.to_string())?;
            ensure(!rep.violation(), || format!("equality criterion violated: {rep:?}"))?;
            checked += 1;
        }
    }
    for k in 0..300u64 {
        let s = if k % 3 == 0 {
            common::separable_along(&[2; 4], common::random_nontrivial(&mut rng, 4), k)
        } else {
            StateTensor::random(vec![2; 4], 73_000 + k).map_err(|e| e.to_string())?
        };
        // overlapping pairs such as {1,3}, {2,3}
        let shared = 1u64 << rng.random_range(0..4);
        let i = shared | common::random_nontrivial(&mut rng, 4) & !shared;
        let j = shared | common::random_nontrivial(&mut rng, 4) & !shared & !i;
        if i == 15 || j == 15 {
            continue;
        }
        let rep = check_equality_nondisjoint(&s, &PartySet::from_bits(i, 4).unwrap(), &PartySet::from_bits(j, 4).unwrap())
            .map_err(|e| e.to_string())?;
        ensure(!rep.violation(), || format!("non-disjoint criterion violated: {rep:?}"))?;
        checked += 1;
    }

    let g = q_triple(&ghz(3).unwrap()).map_err(|e| e.to_string())?;
    let target = [Complex64::new(0.0, 0.0), Complex64::new(0.0, 0.0), Complex64::new(-0.5, 0.0)];
    let gap = [g.q0, g.q1, g.q2].iter().zip(&target).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max);
    ensure(gap < 1e-12, || format!("GHZ3 q-triple {g:?}"))?;
    Ok(format!(
        "multiset gap {worst:.1e} on 100 states, {checked} criterion checks without violation, GHZ3 q = (0, 0, -1/2)"
    ))
}

fn named_table() -> Outcome {
    let mask = |n, p: &[usize]| BipartitionMask::from_parties(n, p).unwrap();
    let check = |label: &str, s: &StateTensor, m: BipartitionMask, want: f64| -> Result<(), String> {
        let lib = concvec::concurrence_sq_rho(s, &m).map_err(|e| e.to_string())?;
        let brute = common::c2(s, m.bits());
        ensure((lib - want).abs() < 1e-10 && (brute - want).abs() < 1e-10, || {
            format!("{label} {m}: {lib} (brute force {brute}), expected {want}")
        })
    };
    let g = ghz(3).unwrap();
    let w3 = w(3).unwrap();
    for m in enumerate_bipartitions(3) {
        check("ghz3", &g, m, 1.0)?;
        check("w3", &w3, m, 8.0 / 9.0)?;
    }
    check("bell", &bell().unwrap(), mask(2, &[1]), 1.0)?;
    let bb = bell().unwrap().tensor(&bell().unwrap());
    check("bell_x_bell", &bb, mask(4, &[1, 2]), 0.0)?;
    Ok("GHZ3 = 1, W3 = 8/9 on every cut; Bell = 1; Bell x Bell AB|CD = 0".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("route equivalence", route_equivalence),
        ("decomposition identity", decomposition),
        ("inequality fuzz", inequality_fuzz),
        ("saturation biconditional", saturation),
        ("genuine soundness", genuine_soundness),
        ("operation counts", operation_counts),
        ("equality conditions", equality_conditions),
        ("named states", named_table),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {} {name}: PASS ({detail})", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} {name}: FAIL ({why})", k + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
