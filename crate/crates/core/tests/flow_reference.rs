//! Oracle tests for the flow on the reference pair p = k,
//! r = ½(1 + i + j + k).
//!
//! The `EXPECTED` table below was computed with an independent
//! implementation of the closed-form solution (half-angle tangent form,
//! evaluated in double precision, results frozen to full precision). The
//! integrator is held to the closed form, and the closed form to the frozen
//! table, so a regression in either shows up as a disagreement between
//! routes rather than a silently shifted baseline.

use kli::{closed_form_solution, kli_interpolate, KliConfig, Quaternion, UnitQuaternion};

fn reference_pair() -> (UnitQuaternion<f64>, UnitQuaternion<f64>) {
    (
        UnitQuaternion::from_components(0.0, 0.0, 0.0, 1.0).unwrap(),
        UnitQuaternion::from_components(0.5, 0.5, 0.5, 0.5).unwrap(),
    )
}

/// Frozen closed-form samples (t, w = x = y, z); the trajectory keeps
/// w = x = y by symmetry of the endpoints.
const EXPECTED: [(f64, f64, f64); 7] = [
    (0.01, 0.0049873966670518355, 0.9999626881156399),
    (0.2, 0.094299466957394, 0.9865712501358705),
    (0.4, 0.1754009194830711, 0.9527347754404054),
    (0.55, 0.22701587573286838, 0.9194516716476817),
    (0.85, 0.30830690472655603, 0.8454824406773869),
    (1.2, 0.3731970464064806, 0.7630018962364625),
    (1.8, 0.43637198121872384, 0.6547812474572993),
];

fn max_component_diff(a: &Quaternion<f64>, b: &Quaternion<f64>) -> f64 {
    (a.w - b.w)
        .abs()
        .max((a.x - b.x).abs())
        .max((a.y - b.y).abs())
        .max((a.z - b.z).abs())
}

#[test]
fn closed_form_matches_frozen_table() {
    let (p, r) = reference_pair();
    for &(t, a, b) in &EXPECTED {
        let q = closed_form_solution(p, r, t).unwrap();
        let expected = Quaternion::new(a, a, a, b);
        let diff = max_component_diff(&q, &expected);
        assert!(diff <= 1e-13, "t = {t}: diff {diff}");
    }
}

#[test]
fn integrator_matches_frozen_table() {
    let (p, r) = reference_pair();
    let curve = kli_interpolate(p, r, &KliConfig::default()).unwrap();
    for &(t, a, b) in &EXPECTED {
        let q = curve.sample_at(t).unwrap();
        let expected = Quaternion::new(a, a, a, b);
        let diff = max_component_diff(&q, &expected);
        assert!(diff <= 1e-9, "t = {t}: diff {diff}");
    }
}

#[test]
fn integrator_tracks_closed_form_everywhere() {
    let (p, r) = reference_pair();
    let curve = kli_interpolate(p, r, &KliConfig::default()).unwrap();
    let mut worst = 0.0f64;
    for &(t, q) in curve.samples() {
        let exact = closed_form_solution(p, r, t).unwrap();
        worst = worst.max(max_component_diff(&q, &exact));
    }
    // Fourth-order accuracy at h = 0.01 leaves ~4e-11; hold the line at 1e-9.
    assert!(worst <= 1e-9, "worst trajectory error {worst}");
}

#[test]
fn convergence_time_and_sampling_grid() {
    let (p, r) = reference_pair();
    let curve = kli_interpolate(p, r, &KliConfig::default()).unwrap();

    assert_eq!(curve.len(), 1167); // 1166 steps of 0.01 plus the start
    assert!((curve.converged_time() - 11.66).abs() <= 1e-12);
    assert_eq!(curve.last().0, curve.converged_time());
    assert_eq!(curve.first().1, p);
    assert_eq!(curve.target(), r);

    for (i, &(t, _)) in curve.samples().iter().enumerate() {
        assert_eq!(t, i as f64 * 0.01, "grid time at index {i}");
    }
}

#[test]
fn stopping_rule_brackets_the_threshold() {
    // The residual crosses ε = 1e-5 between t = 11.65 and t = 11.66; both
    // closed-form values are frozen from the independent implementation.
    let (p, r) = reference_pair();
    let residual_at = |t: f64| {
        let q = closed_form_solution(p, r, t).unwrap();
        (r.into_inner() - q.into_inner()).norm()
    };
    let before = residual_at(11.65);
    let after = residual_at(11.66);
    assert!((before - 1.0067894456807112e-5).abs() <= 1e-12);
    assert!((after - 9.967717233136777e-6).abs() <= 1e-12);
    assert!(before > 1e-5 && after < 1e-5);

    // The integrator sees the same bracket, so it must stop at 11.66 and not
    // a checkpoint earlier.
    let curve = kli_interpolate(p, r, &KliConfig::default()).unwrap();
    let rk4_residual = |t: f64| {
        let q = curve.sample_at(t).unwrap();
        (r.into_inner() - q.into_inner()).norm()
    };
    assert!(rk4_residual(11.65) > 1e-5);
    assert!(rk4_residual(11.66) < 1e-5);
}

#[test]
fn residual_decreases_monotonically() {
    let (p, r) = reference_pair();
    let curve = kli_interpolate(p, r, &KliConfig::default()).unwrap();
    let mut previous = f64::INFINITY;
    for &(t, q) in curve.samples() {
        let residual = (r.into_inner() - q.into_inner()).norm();
        assert!(residual < previous, "residual rose at t = {t}");
        previous = residual;
    }
}

#[test]
fn every_sample_stays_on_the_sphere() {
    let (p, r) = reference_pair();
    let curve = kli_interpolate(p, r, &KliConfig::default()).unwrap();
    for &(t, q) in curve.samples() {
        assert!((q.norm() - 1.0).abs() <= 1e-9, "norm drift at t = {t}");
    }
}

#[test]
fn coarser_checkpoints_still_converge() {
    // δ = 0.05 checks every fifth step; convergence moves to the next
    // checkpoint at or after 11.66, i.e. 11.70.
    let (p, r) = reference_pair();
    let cfg = KliConfig::new(1e-5, 0.05, 0.01, 100.0).unwrap();
    let curve = kli_interpolate(p, r, &cfg).unwrap();
    assert!((curve.converged_time() - 11.70).abs() <= 1e-12);
    assert_eq!(curve.len(), 1171);
}

#[test]
fn single_precision_run_behaves() {
    let p = UnitQuaternion::<f32>::from_components(0.0, 0.0, 0.0, 1.0).unwrap();
    let r = UnitQuaternion::<f32>::from_components(0.5, 0.5, 0.5, 0.5).unwrap();
    // ε = 1e-4 keeps the target comfortably above f32 rounding noise; the
    // analytic stopping time is ln(2·tan(π/6)/ε) ≈ 9.35.
    let cfg = KliConfig::<f32>::new(1e-4, 0.01, 0.01, 100.0).unwrap();
    let curve = kli_interpolate(p, r, &cfg).unwrap();
    assert!(curve.converged_time() > 9.0 && curve.converged_time() < 10.0);
    let mut worst = 0.0f32;
    for &(t, q) in curve.samples() {
        let exact = closed_form_solution(p, r, t).unwrap();
        let d = (q.into_inner() - exact.into_inner()).norm();
        worst = worst.max(d);
    }
    assert!(worst <= 1e-4, "single-precision drift {worst}");
}
