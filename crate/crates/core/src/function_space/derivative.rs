use rustfft::num_complex::Complex64;
use rustfft::FftPlanner;

use super::{Domain, GridFunction};

/// Derivative of a sampled function.
///
/// Circle: spectral (transform, multiply by `2πin/L`, invert; the Nyquist
/// mode of even grids is dropped). Interval: fourth-order central
/// differences inside, fourth-order one-sided stencils on the two outermost
/// points at each end.
pub fn differentiate(f: &GridFunction) -> GridFunction {
    let v = f.values();
    if v.iter().all(|&x| x == v[0]) {
        return GridFunction::new(*f.domain(), vec![0.0; v.len()])
            .expect("zero function on a valid grid");
    }
    let values = match *f.domain() {
        Domain::Circle { circumference } => spectral_derivative(f.values(), circumference),
        Domain::Interval { .. } => fd_derivative(f.values(), f.spacing()),
    };
    // Derivatives of finite samples are finite.
    GridFunction::new(*f.domain(), values).expect("derivative of a valid grid function")
}

/// Fourth-order finite-difference derivative of samples with spacing `h`.
/// Needs at least five samples.
pub fn fd_derivative(v: &[f64], h: f64) -> Vec<f64> {
    let n = v.len();
    assert!(n >= 5, "fourth-order stencils need five samples");
    let s = 1.0 / (12.0 * h);
    let mut d = vec![0.0; n];
    for i in 2..n - 2 {
        d[i] = (v[i - 2] - 8.0 * v[i - 1] + 8.0 * v[i + 1] - v[i + 2]) * s;
    }
    d[0] = (-25.0 * v[0] + 48.0 * v[1] - 36.0 * v[2] + 16.0 * v[3] - 3.0 * v[4]) * s;
    d[1] = (-3.0 * v[0] - 10.0 * v[1] + 18.0 * v[2] - 6.0 * v[3] + v[4]) * s;
    d[n - 1] = (25.0 * v[n - 1] - 48.0 * v[n - 2] + 36.0 * v[n - 3] - 16.0 * v[n - 4]
        + 3.0 * v[n - 5])
        * s;
    d[n - 2] = (3.0 * v[n - 1] + 10.0 * v[n - 2] - 18.0 * v[n - 3] + 6.0 * v[n - 4] - v[n - 5]) * s;
    d
}

/// Applies the transpose of the [`fd_derivative`] stencil matrix to `y`.
pub(crate) fn fd_derivative_transpose(y: &[f64], h: f64) -> Vec<f64> {
    let n = y.len();
    assert!(n >= 5, "fourth-order stencils need five samples");
    let s = 1.0 / (12.0 * h);
    let mut z = vec![0.0; n];
    for i in 2..n - 2 {
        let yi = y[i] * s;
        z[i - 2] += yi;
        z[i - 1] -= 8.0 * yi;
        z[i + 1] += 8.0 * yi;
        z[i + 2] -= yi;
    }
    let rows: [(usize, [f64; 5]); 2] = [
        (0, [-25.0, 48.0, -36.0, 16.0, -3.0]),
        (1, [-3.0, -10.0, 18.0, -6.0, 1.0]),
    ];
    for (row, c) in rows {
        for (j, cj) in c.iter().enumerate() {
            z[j] += cj * y[row] * s;
            z[n - 1 - j] -= cj * y[n - 1 - row] * s;
        }
    }
    z
}

/// Spectral derivative of periodic samples on a circle of the given length.
pub(crate) fn spectral_derivative(v: &[f64], circumference: f64) -> Vec<f64> {
    let n = v.len();
    let mut planner = FftPlanner::<f64>::new();
    let mut buf: Vec<Complex64> = v.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    planner.plan_fft_forward(n).process(&mut buf);
    let base = 2.0 * std::f64::consts::PI / circumference;
    for (k, c) in buf.iter_mut().enumerate() {
        let wave = if 2 * k < n {
            k as f64
        } else if 2 * k == n {
            0.0
        } else {
            k as f64 - n as f64
        };
        *c *= Complex64::new(0.0, base * wave);
    }
    planner.plan_fft_inverse(n).process(&mut buf);
    let scale = 1.0 / n as f64;
    buf.iter().map(|c| c.re * scale).collect()
}
