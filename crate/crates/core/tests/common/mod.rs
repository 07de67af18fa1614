//! Independent reference values for the integration tests.
//!
//! The quadrature here never touches the crate's grids, stencils or FFTs:
//! closed-form integrands (with closed-form derivatives) are integrated by
//! composite Gauss-Legendre rules. Values marked `MP_` were computed once
//! with 30-digit mpmath quadrature and frozen.

#![allow(dead_code)]

use std::f64::consts::{PI, SQRT_2};

/// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on P_n.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    for i in 0..n.div_ceil(2) {
        let mut z = (PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, z);
            for k in 2..=n {
                let k = k as f64;
                let p2 = ((2.0 * k - 1.0) * z * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (z * p1 - p0) / (z * z - 1.0);
            let dz = p1 / dp;
            z -= dz;
            if dz.abs() < 1e-16 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
        w[n - 1 - i] = w[i];
    }
    (x, w)
}

/// Composite 20-point Gauss-Legendre over `panels` equal panels of [a, b].
pub fn quad(f: impl Fn(f64) -> f64, a: f64, b: f64, panels: usize) -> f64 {
    let (x, w) = gauss_legendre(20);
    let h = (b - a) / panels as f64;
    (0..panels)
        .map(|p| {
            let lo = a + p as f64 * h;
            x.iter()
                .zip(&w)
                .map(|(xi, wi)| wi * f(lo + 0.5 * h * (xi + 1.0)))
                .sum::<f64>()
                * 0.5
                * h
        })
        .sum()
}

pub fn q(f: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    quad(f, a, b, 64)
}

pub fn sq_log(t: f64) -> f64 {
    if t == 0.0 {
        0.0
    } else {
        t * t * t.ln()
    }
}

/// Sharpness family and its derivative.
pub fn sharp(eps: f64) -> (impl Fn(f64) -> f64, impl Fn(f64) -> f64) {
    let base = (1.0 - eps * eps).sqrt();
    (
        move |x: f64| base + SQRT_2 * eps * (PI * x).cos(),
        move |x: f64| -SQRT_2 * eps * PI * (PI * x).sin(),
    )
}

/// `∫ f'² - C ∫ f² log f` on [a, b] by oracle quadrature.
pub fn l2_deficit(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    constant: f64,
) -> f64 {
    q(|x| df(x).powi(2), a, b) - constant * q(|x| sq_log(f(x)), a, b)
}

pub const MP_ENTROPY_SHARP_0_1: f64 = 0.009_962_163_027_265_683;
pub const MP_DEFICIT_SHARP_0_5: f64 = 0.303_597_669_411_601_170_317_107_714_636;
pub const MP_ENTROPY_SQRT2_SIN: f64 = 0.153_426_409_720_027_345_291_383_939_271;
pub const MP_CIRCLE_DEFICIT_SIN_0_1: f64 = 0.000_368_065_889_111_382_280_747_451_313_401;
pub const MP_GENERAL_DEFICIT_HALF_SIN_0_2: f64 = 4.177_673_216_236_618_790_920_492_538_46;
pub const MP_DENSITY_DEFICIT_WANG_0_1: f64 = 0.000_030_851_090_482_340_441_983_697_943_268_9;
pub const MP_DIAZ_Q2_SHARP_0_3: f64 = 0.001_726_509_735_215_250_974_171_686_686_78;
pub const MP_DIAZ_Q1_5_SHARP_0_3: f64 = 0.000_696_331_817_555_095_893_020_715_913_895;
pub const MP_WEISSLER_ENTROPY: f64 = 0.029_949_662_428_567_784_940_081_328_973_4;
pub const MP_DEFICIT_SHARP_0_3: f64 = 0.032_640_105_531_879_506_105_153_495_564_6;
