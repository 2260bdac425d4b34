mod common;

use concvec::equality::{check_equality_criterion, check_equality_nondisjoint, q_triple, triangle_area_measure};
use concvec::mask::PartySet;
use concvec::StateTensor;
use num_complex::Complex64;
use rand::Rng;

/// Sorted nonzero components of `(1 - P_1)(1 - P_2) A` by brute force,
/// against the multiset `{±2q₀ ×2, ±2q₁ ×2, ±q₂ ×4}`.
fn multiset_gap(s: &StateTensor) -> f64 {
    let a = common::doubled(s);
    let v = common::one_minus(&common::one_minus(&a, &[2, 2, 2], 0b010), &[2, 2, 2], 0b001);
    let q = q_triple(s).unwrap();
    let mut expected = Vec::new();
    for (val, count) in [(q.q0 * 2.0, 2), (q.q1 * 2.0, 2), (q.q2, 4)] {
        for _ in 0..count {
            expected.push(val);
            expected.push(-val);
        }
    }
    let key = |z: &Complex64| (z.re, z.im);
    let mut got: Vec<Complex64> = v.into_iter().filter(|z| z.norm() > 1e-14).collect();
    got.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
    expected.sort_by(|x, y| key(x).partial_cmp(&key(y)).unwrap());
    if got.len() != expected.len() {
        return f64::INFINITY;
    }
    got.iter().zip(&expected).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[test]
fn q_polynomials_are_the_nonzero_components() {
    for seed in 0..100 {
        let s = StateTensor::random(vec![2; 3], seed).unwrap();
        assert!(multiset_gap(&s) < 1e-12, "seed {seed}");
    }
}

#[test]
fn q_triple_vanishes_exactly_when_a_qubit_factors() {
    let zero = StateTensor::basis(vec![2], &[0]).unwrap();
    let s = zero.tensor(&StateTensor::random(vec![2, 2], 1).unwrap());
    assert!(q_triple(&s).unwrap().all_zero(1e-14));
    let s = common::reorder(&s, &[1, 0, 2]);
    assert!(q_triple(&s).unwrap().all_zero(1e-14));
    let s = StateTensor::random(vec![2; 3], 2).unwrap();
    assert!(!q_triple(&s).unwrap().all_zero(1e-6));
}

fn set(n: usize, bits: u64) -> PartySet {
    PartySet::from_bits(bits, n).unwrap()
}

#[test]
fn disjoint_criterion_fuzz() {
    let mut rng = common::rng(5);
    for dims in [vec![2, 2, 2], vec![3, 3, 3], vec![2, 3, 2], vec![2, 2, 3, 2]] {
        let n = dims.len();
        for k in 0..60u64 {
            let s = if k % 3 == 0 {
                common::separable_along(&dims, common::random_nontrivial(&mut rng, n), k)
            } else {
                StateTensor::random(dims.clone(), k).unwrap()
            };
            let i = common::random_nontrivial(&mut rng, n);
            let rest = ((1u64 << n) - 1) & !i;
            let j = loop {
                let j = rng.random_range(1..=rest.max(1)) & rest;
                if j != 0 || rest == 0 {
                    break j;
                }
            };
            let rep = check_equality_criterion(&s, &set(n, i), &set(n, j)).unwrap();
            assert!(!rep.violation(), "{dims:?} sample {k}: {rep:?}");
            assert!((rep.c_i - common::c2(&s, i)).abs() < 1e-12);
            assert!((rep.slack() - rep.r / 2.0).abs() < 1e-12);
        }
    }
}

#[test]
fn nondisjoint_criterion_fuzz() {
    let mut rng = common::rng(6);
    for k in 0..150u64 {
        let s = if k % 3 == 0 {
            common::separable_along(&[2; 4], common::random_nontrivial(&mut rng, 4), k)
        } else {
            StateTensor::random(vec![2; 4], k).unwrap()
        };
        let (i, j) = (common::random_nontrivial(&mut rng, 4), common::random_nontrivial(&mut rng, 4));
        let rep = check_equality_nondisjoint(&s, &set(4, i), &set(4, j)).unwrap();
        assert!(!rep.violation(), "sample {k}: {rep:?}");
    }
}

#[test]
fn area_is_zero_exactly_on_biseparable_states() {
    let mut rng = common::rng(8);
    for k in 0..40u64 {
        let dims = vec![2 + (k % 2) as usize, 2, 3];
        let s = common::separable_along(&dims, common::random_nontrivial(&mut rng, 3), k);
        assert!(triangle_area_measure(&s).unwrap().abs() < 1e-9);
        let g = StateTensor::random(dims, k).unwrap();
        let area = triangle_area_measure(&g).unwrap();
        assert!(area > 1e-9);
        // Heron by hand on brute-force sides
        let [a, b, c] = [common::c2(&g, 1), common::c2(&g, 2), common::c2(&g, 4)];
        let p = (a + b + c) / 2.0;
        let hand = (p * (p - a) * (p - b) * (p - c)).max(0.0).sqrt();
        assert!((area - hand).abs() < 1e-9);
    }
}
