//! Float-layer oracles: analytic tail bounds for the pushed
//! approximations, end-to-end error of an assembled series against the
//! closed-form sum of its parts, and contour extraction of principal
//! parts in several domain shapes.

use cechml_core::plane::{
    assemble, exhaust, group_poles, push_pole, verify_principal_part, Complex64, DomainSpec,
    FloatPrincipalPart, PoleTarget,
};
use std::f64::consts::PI;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn circle_samples(center: Complex64, radius: f64, n: usize) -> Vec<Complex64> {
    (0..n)
        .map(|q| {
            let th = 2.0 * PI * q as f64 / n as f64;
            center + c(radius * th.cos(), radius * th.sin())
        })
        .collect()
}

/// 1/(z−5) on the closed unit disc: the degree-d Taylor truncation has
/// sup error exactly bounded by (1/5)^(d+2)·(5/4). The certified bound
/// must dominate the sampled error and respect the budget.
#[test]
fn taylor_push_matches_geometric_tail() {
    let part = FloatPrincipalPart::simple(c(5.0, 0.0), c(1.0, 0.0));
    let k = exhaust(&DomainSpec::Plane, 1);
    let eps = 1e-6;
    let pushed = push_pole(&part, &k, PoleTarget::Infinity, eps).unwrap();
    assert!(pushed.rational.parts.is_empty(), "pole must end at infinity");
    let d = pushed.rational.poly.len() as i32 - 1;
    assert!(d >= 0);
    let analytic_tail = 1.25 * 0.2_f64.powi(d + 2);
    let sampled = circle_samples(c(0.0, 0.0), 1.0, 720)
        .into_iter()
        .map(|z| (pushed.rational.eval(z) - part.eval(z)).norm())
        .fold(0.0, f64::max);
    assert!(
        sampled <= analytic_tail * (1.0 + 1e-9) + 1e-15,
        "sampled {sampled:e} exceeds analytic tail {analytic_tail:e}"
    );
    assert!(pushed.certified_bound + 1e-15 >= sampled);
    assert!(pushed.certified_bound <= eps);
}

/// Each stage's correction R_n must track that stage's principal parts
/// within its certified bound everywhere on K_{n−1} — checked by
/// sampled sup on the boundary curves, an oracle independent of the
/// geometric-tail bookkeeping inside the pusher.
#[test]
fn stage_corrections_track_their_parts_on_certified_compacts() {
    let domain = DomainSpec::unit_disc();
    let parts = vec![
        FloatPrincipalPart::simple(c(0.7, 0.0), c(1.0, 0.0)),
        FloatPrincipalPart {
            pole: c(0.0, 0.72),
            coeffs: vec![c(0.0, 0.0), c(2.0, -1.0)],
        },
        FloatPrincipalPart::simple(c(-0.45, -0.45), c(0.0, 1.0)),
    ];
    let grouping = group_poles(parts, &domain, 64).unwrap();
    let series = assemble(&grouping, *grouping.stage_of.iter().max().unwrap()).unwrap();
    let mut checked = 0;
    for stage in &series.stages {
        let Some(correction) = &stage.correction else {
            continue;
        };
        assert!(stage.certified_bound <= 0.5_f64.powi(stage.n as i32));
        let prev = exhaust(&domain, stage.n - 1);
        let mut samples = prev.boundary_samples(200);
        // an interior circle as well, not just the extremes
        samples.extend(circle_samples(c(0.0, 0.0), 0.2, 100));
        assert!(samples.len() > 200);
        for z in samples {
            let f_n: Complex64 = stage.parts.iter().map(|p| p.eval(z)).sum();
            let err = (f_n - correction.eval(z)).norm();
            assert!(
                err <= stage.certified_bound + 1e-12,
                "stage {} error {err:e} exceeds certificate {:e} at {z}",
                stage.n,
                stage.certified_bound
            );
        }
        checked += 1;
    }
    assert!(checked >= 2, "expected corrections at two stages");
}

fn verify_all(
    domain: DomainSpec,
    parts: Vec<FloatPrincipalPart>,
    rho: f64,
) {
    let grouping = group_poles(parts, &domain, 64).unwrap();
    let n_trunc = *grouping.stage_of.iter().max().unwrap();
    let series = assemble(&grouping, n_trunc).unwrap();
    for part in &grouping.parts {
        let worst = verify_principal_part(&series, part, rho, 256).unwrap();
        assert!(
            worst <= 1e-6,
            "principal part at {} off by {worst:e}",
            part.pole
        );
    }
}

#[test]
fn contour_extraction_recovers_parts_on_the_plane() {
    verify_all(
        DomainSpec::Plane,
        vec![
            FloatPrincipalPart::simple(c(0.0, 0.0), c(1.0, 0.0)),
            FloatPrincipalPart {
                pole: c(3.0, 1.0),
                coeffs: vec![c(0.5, 0.0), c(0.0, -2.0), c(1.0, 1.0)],
            },
        ],
        0.1,
    );
    // a second configuration with all poles in one outer stage: the
    // single correction stays tame near each of its own poles
    verify_all(
        DomainSpec::Plane,
        vec![
            FloatPrincipalPart::simple(c(-4.5, 0.0), c(0.0, 3.0)),
            FloatPrincipalPart::simple(c(0.0, 4.5), c(1.0, 0.0)),
            FloatPrincipalPart {
                pole: c(-3.0, -3.0),
                coeffs: vec![c(1.0, 0.0), c(0.0, 0.5)],
            },
        ],
        0.1,
    );
}

#[test]
fn contour_extraction_recovers_parts_in_the_disc() {
    verify_all(
        DomainSpec::unit_disc(),
        vec![
            FloatPrincipalPart::simple(c(0.5, 0.0), c(2.0, 0.0)),
            FloatPrincipalPart {
                pole: c(-0.2, 0.712),
                coeffs: vec![c(0.0, 1.0), c(1.0, 0.0)],
            },
        ],
        0.03,
    );
}

#[test]
fn contour_extraction_recovers_parts_in_an_annulus() {
    verify_all(
        DomainSpec::Annulus {
            center: c(0.0, 0.0),
            r_inner: 1.0,
            r_outer: 4.0,
        },
        vec![
            FloatPrincipalPart::simple(c(1.3, 0.0), c(1.0, -1.0)),
            FloatPrincipalPart::simple(c(0.0, 2.5), c(0.0, 2.0)),
            FloatPrincipalPart {
                pole: c(-3.0, 0.0),
                coeffs: vec![c(1.0, 0.0), c(0.5, 0.5)],
            },
        ],
        0.02,
    );
}
