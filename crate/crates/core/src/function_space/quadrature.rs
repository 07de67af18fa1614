use super::{Domain, GridFunction};

/// Quadrature weights for `n` samples on `domain`.
///
/// Circle: periodic trapezoid, every weight `L / n`. Interval: composite
/// Simpson over an even number of panels; when `n - 1` is odd the last panel
/// is closed with the trapezoid rule.
pub fn quadrature_weights(domain: &Domain, n: usize) -> Vec<f64> {
    let h = domain.spacing(n);
    if domain.is_circle() {
        return vec![h; n];
    }
    let mut w = vec![0.0; n];
    let simpson_end = if (n - 1).is_multiple_of(2) {
        n - 1
    } else {
        n - 2
    };
    for panel in (0..simpson_end).step_by(2) {
        w[panel] += h / 3.0;
        w[panel + 1] += 4.0 * h / 3.0;
        w[panel + 2] += h / 3.0;
    }
    if simpson_end < n - 1 {
        w[n - 2] += h / 2.0;
        w[n - 1] += h / 2.0;
    }
    w
}

/// Integral of raw samples laid out on the `values.len()`-point grid.
pub fn integrate_values(domain: &Domain, values: &[f64]) -> f64 {
    let n = values.len();
    if domain.is_circle() {
        return domain.spacing(n) * values.iter().sum::<f64>();
    }
    quadrature_weights(domain, n)
        .iter()
        .zip(values)
        .map(|(w, v)| w * v)
        .sum()
}

/// `∫ f` over the function's domain.
pub fn integrate(f: &GridFunction) -> f64 {
    integrate_values(f.domain(), f.values())
}
