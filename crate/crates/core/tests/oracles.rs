mod common;

use common::*;
use gridwalk::coverage::{expected_coverage_multi, first_arrival_cdf};
use gridwalk::prelude::*;

fn planar(w: usize, d: usize, b: Borders, start: StartKind) -> ChainModel {
    ChainModel::new(GridSpec::planar(w, d, b).unwrap(), start).unwrap()
}

#[test]
fn builder_matches_reference_loop_in_3d() {
    for w in 2..=4 {
        for d in 2..=4 {
            for h in 2..=4 {
                let ours = build_chain(&GridSpec::new(w, d, h, Borders::Bordered).unwrap()).to_dense();
                let reference = reference_bordered_matrix(w, d, h);
                assert!(same_pattern(&ours, &reference), "{w}x{d}x{h}");
                assert!(max_entry_diff(&ours, &reference) <= 1e-15, "{w}x{d}x{h}");
            }
        }
    }
}

#[test]
fn builder_matches_reference_in_2d() {
    for w in 2..=6 {
        for d in 2..=6 {
            let ours = build_chain(&GridSpec::planar(w, d, Borders::Bordered).unwrap()).to_dense();
            assert!(max_entry_diff(&ours, &reference_bordered_matrix(w, d, 1)) <= 1e-15);
            let torus = build_chain(&GridSpec::planar(w, d, Borders::Boundless).unwrap()).to_dense();
            assert!(max_entry_diff(&torus, &reference_torus_matrix(w, d)) <= 1e-15);
        }
    }
}

#[test]
fn two_step_distribution_from_centre_matches_enumeration() {
    let p = printed_3x3();
    let mut e5 = vec![0.0; 9];
    e5[4] = 1.0;
    let m = planar(3, 3, Borders::Bordered, StartKind::Deterministic(5));
    let pi2 = m.propagate(2);
    for s in 1..=9 {
        let brute = enumerate_occupancy(&p, &e5, 2, s);
        assert!((pi2.prob(s) - brute).abs() < 1e-15, "state {s}");
    }
    assert!((pi2.prob(1) - 1.0 / 6.0).abs() < 1e-15);
    assert!((pi2.prob(5) - 1.0 / 3.0).abs() < 1e-15);
}

#[test]
fn exact_coverage_matches_set_based_enumeration() {
    for (w, d) in [(2, 2), (2, 3), (3, 3)] {
        for b in [Borders::Bordered, Borders::Boundless] {
            let m = planar(w, d, b, StartKind::Uniform);
            let dense = m.transition().to_dense();
            let brute = enumerate_coverage(&dense, m.start().as_slice(), 6);
            let exact = expected_coverage_exact(&m, 6);
            for (a, e) in exact.values.iter().zip(&brute) {
                assert!((a - e).abs() <= 1e-12, "{w}x{d} {b:?}");
            }
        }
    }
}

#[test]
fn small_step_values_match_enumeration() {
    let m = planar(3, 3, Borders::Bordered, StartKind::Deterministic(5));
    let brute = enumerate_coverage(&printed_3x3(), m.start().as_slice(), 1);
    assert!((brute[1] - 2.0 / 9.0).abs() < 1e-15);
    assert!((expected_coverage_exact(&m, 1).value(1) - brute[1]).abs() < 1e-15);

    let m22 = planar(2, 2, Borders::Bordered, StartKind::Deterministic(1));
    let dense = m22.transition().to_dense();
    let brute = enumerate_coverage(&dense, m22.start().as_slice(), 1);
    assert!((brute[1] - 0.5).abs() < 1e-15);
    let p = coverage_probability_exact(&m22, 2, 1).unwrap();
    assert!((p - enumerate_occupancy(&dense, m22.start().as_slice(), 1, 2)).abs() < 1e-15);
}

#[test]
fn two_agents_one_step_matches_joint_enumeration() {
    // Both agents leave the centre of the 3x3 grid; enumerate the 16 joint moves.
    let neighbours = [2usize, 4, 6, 8];
    let mut expected = 0.0f64;
    for a in neighbours {
        for b in neighbours {
            let covered = if a == b { 2.0 } else { 3.0 };
            expected += covered / 16.0;
        }
    }
    expected /= 9.0;
    assert!((expected - 11.0 / 36.0).abs() < 1e-15);
    let m = planar(3, 3, Borders::Bordered, StartKind::Deterministic(5));
    let multi = expected_coverage_multi(&m, 1, 2).unwrap();
    assert!((multi.value(1) - expected).abs() < 1e-15);
}

#[test]
fn literal_exponent_variant_is_available() {
    // The multi-agent formula with exponent |E| is the k = |E| case.
    let m = planar(3, 3, Borders::Bordered, StartKind::Uniform);
    let literal = expected_coverage_multi(&m, 10, 9).unwrap();
    let cdf: Vec<Vec<f64>> = (1..=9).map(|r| first_arrival_cdf(&m, r, 10).unwrap()).collect();
    for n in 0..=10 {
        let by_hand: f64 = cdf.iter().map(|c| 1.0 - (1.0 - c[n]).powi(9)).sum::<f64>() / 9.0;
        assert!((literal.value(n) - by_hand).abs() < 1e-12);
    }
}

#[test]
fn first_arrivals_match_absorbing_chain() {
    let m = planar(3, 4, Borders::Boundless, StartKind::Deterministic(1));
    let reps = 50_000;
    let sim = simulate_coverage(&SimConfig::new(&m, 20, reps, 11).with_first_arrivals()).unwrap();
    for r in 1..=12 {
        let exact = first_arrival_cdf(&m, r, 20).unwrap();
        let empirical = sim.empirical_arrival_cdf(r).unwrap();
        for (n, (&p, &q)) in exact.iter().zip(&empirical).enumerate() {
            let se = (p * (1.0 - p) / reps as f64).sqrt();
            assert!((p - q).abs() <= 3.0 * se + 1e-12, "state {r} step {n}: {p} vs {q}");
        }
    }
}
