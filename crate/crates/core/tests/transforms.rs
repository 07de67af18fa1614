mod common;

use std::f64::consts::{PI, SQRT_2};

use proptest::prelude::*;

use lsilab::functionals::{l2_mass, lsi_deficit_general, lsi_deficit_interval};
use lsilab::transforms::{affine_normalize, reflect_to_circle, sqrt_lift};
use lsilab::{sample_family, Domain, Family, GridFunction, LabError};

fn sharp_on(domain: Domain, eps: f64, n: usize, scale: f64) -> GridFunction {
    let (f, _) = common::sharp(eps);
    let (a, len) = (domain.origin(), domain.length());
    GridFunction::from_fn(domain, n, |x| scale * f((x - a) / len)).unwrap()
}

#[test]
fn reflection_of_sharpness_family() {
    let f = sample_family(
        &Family::Sharpness { epsilon: 0.4 },
        &Domain::unit_interval(),
        1025,
    )
    .unwrap();
    let (g, cert) = reflect_to_circle(&f).unwrap();
    assert_eq!(g.len(), 2048);
    assert!(g.domain().is_unit_circle());
    for name in ["mass", "entropy", "energy", "deficit"] {
        let r = cert.residual(name).unwrap();
        assert!(r <= 1e-6, "{name}: {r}");
    }
}

#[test]
fn reflection_with_a_kink_converges_at_first_order() {
    let energy_residual = |n: usize| {
        let f = GridFunction::from_fn(Domain::unit_interval(), n, |x| {
            SQRT_2 * (PI * x / 2.0).sin()
        })
        .unwrap();
        let (_, cert) = reflect_to_circle(&f).unwrap();
        assert!(cert.residual("mass").unwrap() <= 1e-12);
        assert!(cert.residual("entropy").unwrap() <= 1e-12);
        let oracle = common::q(|x| common::sq_log(SQRT_2 * (PI * x / 2.0).sin()), 0.0, 1.0);
        assert!((cert.output_report.entropy - oracle).abs() <= 1e-6);
        cert.residual("energy").unwrap()
    };
    let coarse = energy_residual(1025);
    let fine = energy_residual(4097);
    assert!(coarse <= 1e-2, "{coarse}");
    assert!(coarse / fine > 3.0, "{coarse} -> {fine}");
}

#[test]
fn affine_normalization_of_stretched_profile() {
    let f = sharp_on(Domain::interval(2.0, 5.0).unwrap(), 0.3, 3001, 2.0);
    let (g, m, cert) = affine_normalize(&f).unwrap();
    assert!(g.domain().is_unit_interval());
    assert!(m > 0.0);
    assert!(cert.max_residual() <= 1e-7, "{:?}", cert.residuals);
    assert!((l2_mass(&g) - 1.0).abs() <= 1e-12);
    // The normalized profile is the unit-interval family member.
    let reference = sample_family(
        &Family::Sharpness { epsilon: 0.3 },
        &Domain::unit_interval(),
        3001,
    )
    .unwrap();
    let diff = g.zip_with(&reference, |x, y| x - y).unwrap();
    assert!(diff.max_abs() <= 1e-12);
    let unit = lsi_deficit_interval(&g).unwrap();
    let general = lsi_deficit_general(&f).unwrap();
    assert!((general.deficit - m * m / 3.0 * unit.deficit).abs() <= 1e-8);
    assert!((unit.deficit - common::MP_DEFICIT_SHARP_0_3).abs() <= 1e-8);
}

#[test]
fn affine_normalization_rejects_zero() {
    let z = GridFunction::constant(Domain::interval(0.0, 2.0).unwrap(), 65, 0.0).unwrap();
    assert!(matches!(affine_normalize(&z), Err(LabError::ZeroMass(_))));
}

#[test]
fn sqrt_lift_examples() {
    let g = sample_family(
        &Family::Sharpness { epsilon: 0.3 },
        &Domain::unit_interval(),
        4097,
    )
    .unwrap();
    let (h, cert) = sqrt_lift(&g.map(|v| v * v).unwrap()).unwrap();
    assert!(cert.max_residual() <= 1e-7, "{:?}", cert.residuals);
    let back = h.zip_with(&g, |a, b| a - b).unwrap();
    assert!(back.max_abs() <= 1e-14);

    let f = GridFunction::from_fn(Domain::unit_interval(), 4097, |x| {
        (-0.1 * (PI * x).cos()).exp()
    })
    .unwrap();
    let (_, cert) = sqrt_lift(&f).unwrap();
    assert!(cert.max_residual() <= 1e-7, "{:?}", cert.residuals);

    let c = GridFunction::from_fn(Domain::circle(3.0).unwrap(), 1024, |x| {
        1.5 + (2.0 * PI * x / 3.0).sin()
    })
    .unwrap();
    let (_, cert) = sqrt_lift(&c).unwrap();
    assert!(cert.residual("deficit").is_none());
    assert!(cert.max_residual() <= 1e-10, "{:?}", cert.residuals);
}

#[test]
fn sqrt_lift_needs_positive_input() {
    let f = GridFunction::from_fn(Domain::unit_interval(), 65, |x| x).unwrap();
    assert!(matches!(
        sqrt_lift(&f),
        Err(LabError::NonPositiveFunction { index: 0, .. })
    ));
}

#[test]
fn displayed_density_identity_breaks_off_unit_length() {
    let d = Domain::interval(0.0, 3.0).unwrap();
    let f = GridFunction::from_fn(d, 3001, |x| 2.0 + (x * 0.7).cos()).unwrap();
    let (_, cert) = sqrt_lift(&f).unwrap();
    assert!(cert.residual("energy").unwrap() <= 1e-9);
    assert!(cert.residual("entropy").unwrap() <= 1e-9);
    let m = cert.input_report.m.unwrap();
    let predicted = 2.0 * PI * PI / 9.0 * (m * m.ln()).abs() * 2.0;
    let gap = cert.residual("deficit").unwrap();
    assert!(
        (gap - predicted).abs() <= 1e-8 * predicted,
        "{gap} vs {predicted}"
    );
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn reflection_conserves_mass(seed in any::<u64>(), modes in 1u32..=16) {
        let f = sample_family(
            &Family::RandomTrig { seed, modes },
            &Domain::unit_interval(),
            513,
        ).unwrap();
        let (_, cert) = reflect_to_circle(&f).unwrap();
        prop_assert!(cert.residual("mass").unwrap() <= 1e-12 * (1.0 + l2_mass(&f)));
    }

    #[test]
    fn affine_round_trip(
        seed in any::<u64>(),
        modes in 1u32..=8,
        a in -3.0..3.0f64,
        len in 0.25..4.0f64,
    ) {
        let d = Domain::interval(a, a + len).unwrap();
        let f = sample_family(&Family::RandomTrig { seed, modes }, &d, 1025).unwrap();
        let (g, m, cert) = affine_normalize(&f).unwrap();
        let back = g.map(|v| v * m).unwrap().with_domain(d).unwrap();
        let diff = back.zip_with(&f, |x, y| x - y).unwrap();
        prop_assert!(diff.max_abs() <= 1e-12 * f.max_abs());
        let scale = 1.0 + lsi_deficit_general(&f).unwrap().energy.abs();
        prop_assert!(cert.residual("deficit").unwrap() <= 1e-9 * scale);
    }

    #[test]
    fn sqrt_of_square_is_identity(seed in any::<u64>(), modes in 1u32..=16) {
        let f = sample_family(
            &Family::RandomTrig { seed, modes },
            &Domain::unit_interval(),
            1025,
        ).unwrap();
        let (g, _) = sqrt_lift(&f.map(|v| v * v).unwrap()).unwrap();
        let diff = g.zip_with(&f, |x, y| x - y).unwrap();
        prop_assert!(diff.max_abs() <= 1e-14 * f.max_abs());
    }
}
