//! Cross-module sweeps: the full check suite at a moderate weight cap, plus
//! oracles that live outside the crate's own fast paths (truncated direct
//! series, Euler–Maclaurin evaluation of shifted sums).

use num::complex::Complex64;
use tangentzeta::index::indices_up_to_weight;
use tangentzeta::{
    eval_combination, eval_multitangent_direct, eval_mzv, eval_mzv_direct,
    reduce_to_monotangents, run_suite, zeta_shifted, Index, PrecisionConfig,
};

#[test]
fn full_suite_passes_and_is_deterministic() {
    let cfg = PrecisionConfig::default();
    let first = run_suite(5, &cfg);
    assert!(first.len() > 100, "suite unexpectedly small: {}", first.len());
    for r in &first {
        assert!(r.passed, "{r}");
    }
    let second = run_suite(5, &cfg);
    assert_eq!(first.len(), second.len());
    for (a, b) in first.iter().zip(&second) {
        assert_eq!(a.check, b.check);
        assert_eq!(a.instance, b.instance);
        assert_eq!(
            a.residual.to_bits(),
            b.residual.to_bits(),
            "nondeterministic residual in {} {}",
            a.check,
            a.instance
        );
        assert_eq!(a.tolerance.to_bits(), b.tolerance.to_bits());
    }
}

#[test]
fn mzv_fast_path_brackets_direct_series() {
    let cfg = PrecisionConfig {
        oracle_cutoff: 10_000,
        ..PrecisionConfig::default()
    };
    for k in indices_up_to_weight(8, Index::is_tail_admissible) {
        let fast = eval_mzv(&k, &cfg).unwrap();
        let direct = eval_mzv_direct(&k, &cfg).unwrap();
        assert!(direct.tail_bound.is_finite() && direct.tail_bound > 0.0);
        assert!(
            (fast - direct.value).abs() <= direct.tail_bound,
            "k=({k}): fast {fast} vs direct {} ± {}",
            direct.value,
            direct.tail_bound
        );
        // truncating a positive series can only undershoot
        assert!(direct.value <= fast + 1e-12, "k=({k})");
    }
}

/// `Σ_{m≥1} (m+z)^{-s}` by Euler–Maclaurin, exact to well below 1e-12 for
/// the arguments used here.
fn shifted_depth_one_sum(s: u32, z: f64) -> f64 {
    let s = f64::from(s);
    let cutoff = 50usize;
    let mut total = 0.0;
    for m in 1..=cutoff {
        total += (m as f64 + z).powf(-s);
    }
    let x = cutoff as f64 + 1.0 + z;
    total += x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);
    // Bernoulli corrections B_{2j}/(2j)! · s(s+1)⋯(s+2j-2) · x^{1-s-2j}
    let bernoulli: [(u32, f64); 6] = [
        (2, 1.0 / 6.0),
        (4, -1.0 / 30.0),
        (6, 1.0 / 42.0),
        (8, -1.0 / 30.0),
        (10, 5.0 / 66.0),
        (12, -691.0 / 2730.0),
    ];
    for (two_j, b) in bernoulli {
        let mut pochhammer = 1.0;
        for t in 0..(two_j - 1) {
            pochhammer *= s + f64::from(t);
        }
        let mut factorial = 1.0;
        for t in 1..=two_j {
            factorial *= f64::from(t);
        }
        total += b / factorial * pochhammer * x.powf(1.0 - s - f64::from(two_j));
    }
    total
}

#[test]
fn shifted_zeta_matches_taylor_expansion_of_shifted_sums() {
    // ζ_a(k) are the Taylor coefficients of z ↦ Σ (m+z)^{-s} at z = 0; the
    // exact combinatorial values, flattened through the zeta engine, must
    // reproduce an Euler–Maclaurin evaluation of the shifted sum itself.
    let cfg = PrecisionConfig::default();
    for s in [2u32, 3, 4] {
        let k = Index::new(vec![s]).unwrap();
        let coeffs: Vec<f64> = (0..=16u32)
            .map(|a| eval_combination(&zeta_shifted(a, &k).unwrap(), &cfg).unwrap())
            .collect();
        for z in [0.125f64, -0.125] {
            let direct = shifted_depth_one_sum(s, z);
            let mut series = 0.0;
            let mut zp = 1.0;
            for c in &coeffs {
                series += c * zp;
                zp *= z;
            }
            assert!(
                (direct - series).abs() < 1e-10,
                "s={s} z={z}: {direct} vs {series}"
            );
        }
    }
}

#[test]
fn deeper_multitangents_match_direct_series() {
    let cfg = PrecisionConfig {
        oracle_cutoff: 20_000,
        ..PrecisionConfig::default()
    };
    let z = Complex64::new(0.3, 0.2);
    for k in [
        Index::new(vec![3, 2, 3]).unwrap(),
        Index::new(vec![2, 2, 2, 2]).unwrap(),
        Index::new(vec![2, 1, 1, 1, 3]).unwrap(),
    ] {
        let direct = eval_multitangent_direct(&k, z, &cfg).unwrap();
        let fast = reduce_to_monotangents(&k)
            .unwrap()
            .eval_at(z, &cfg)
            .unwrap();
        let tol = (3.0 * direct.tail_bound).max(1e-5);
        assert!(
            (direct.value - fast).norm() < tol,
            "k=({k}): |{} - {fast}| ≥ {tol}",
            direct.value
        );
    }
}
