use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, Result};
use crate::function_space::{
    fd_derivative, fd_derivative_transpose, quadrature_weights, spectral_derivative, Domain,
    GridFunction,
};
use crate::functionals::{lsi_deficit_circle, lsi_deficit_interval, FunctionalReport};
use crate::tolerances::RATIO_ENTROPY_FLOOR;

/// Trial functions are `|Σ c_k φ_k|` renormalized to unit mass.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Basis {
    /// `1, cos πx, …, cos((n_modes-1)πx)` on `[0, 1]`.
    Cosine,
    /// `1, cos 2πx, sin 2πx, …` up to harmonic `n_modes - 1` on the unit
    /// circle.
    Fourier,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Init {
    /// Constant term 1 plus uniform `[-1, 1)/(2k)` weights on mode `k`.
    Random {
        seed: u64,
    },
    Constant,
    /// The sharpness family `√(1-ε²) + √2 ε cos(πx)` (first cosine on the
    /// circle).
    Sharpness {
        epsilon: f64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OptimizerConfig {
    /// Grid size used for all quadratures.
    pub n: usize,
    pub max_iters: usize,
    pub init: Init,
    /// Stop once the preconditioned gradient norm falls below this.
    pub grad_tol: f64,
}

impl OptimizerConfig {
    pub fn new(domain: &Domain, seed: u64, max_iters: usize) -> Self {
        Self {
            n: if domain.is_circle() { 1024 } else { 1025 },
            max_iters,
            init: Init::Random { seed },
            grad_tol: 1e-13,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OptimizerResult {
    /// Smallest deficit over all iterates.
    pub best_deficit: f64,
    /// Smallest energy/entropy ratio over iterates with entropy above
    /// [`RATIO_ENTROPY_FLOOR`].
    pub best_ratio: Option<f64>,
    pub basis: Basis,
    /// Coefficients of the iterate attaining `best_deficit`.
    pub coefficients: Vec<f64>,
    pub iterations: usize,
    /// False when the iteration budget ran out first.
    pub converged: bool,
    /// Report of the best iterate recomputed through the functionals module.
    pub best_report: FunctionalReport,
    #[serde(skip)]
    pub best_function: Option<GridFunction>,
}

/// Projected gradient descent on the sharp deficit with the default grid and
/// a random start.
pub fn minimize_deficit(
    domain: &Domain,
    n_modes: usize,
    seed: u64,
    max_iters: usize,
) -> Result<OptimizerResult> {
    minimize_deficit_with(
        domain,
        n_modes,
        &OptimizerConfig::new(domain, seed, max_iters),
    )
}

/// Minimizes `∫f'² - C ∫f² log f` over `f = |Σ c_k φ_k| / ‖·‖₂`, with
/// `C = π²` on `[0,1]` and `4π²` on the unit circle.
///
/// Each step moves along the gradient preconditioned by `1/(1 + λ_k)`
/// (`λ_k` the Laplacian eigenvalue of `φ_k`), backtracks until the Armijo
/// condition holds, then rescales the coefficients to unit mass. The
/// subgradient of `|·|` is `sign(s)`.
pub fn minimize_deficit_with(
    domain: &Domain,
    n_modes: usize,
    cfg: &OptimizerConfig,
) -> Result<OptimizerResult> {
    if n_modes < 2 {
        return Err(LabError::ParamOutOfRange(format!(
            "optimizer needs n_modes >= 2, got {n_modes}"
        )));
    }
    let problem = Problem::new(domain, n_modes, cfg.n)?;
    let mut c = problem.initial(&cfg.init)?;
    problem.project(&mut c);

    let mut current = problem.evaluate(&c);
    let mut best = Best::new(&c, &current);
    let mut step: f64 = 1.0;
    let mut iterations = 0;
    let mut converged = false;

    while iterations < cfg.max_iters {
        let grad = problem.gradient(&c, &current);
        let pg: Vec<f64> = grad
            .iter()
            .zip(&problem.precond)
            .map(|(g, p)| g * p)
            .collect();
        let slope: f64 = grad.iter().zip(&pg).map(|(g, p)| g * p).sum();
        if slope.sqrt() < cfg.grad_tol {
            converged = true;
            break;
        }
        iterations += 1;

        let mut t = (2.0 * step).min(1e8);
        let mut accepted = None;
        for _ in 0..60 {
            let mut trial: Vec<f64> = c.iter().zip(&pg).map(|(ci, d)| ci - t * d).collect();
            problem.project(&mut trial);
            let eval = problem.evaluate(&trial);
            if eval.deficit <= current.deficit - 1e-4 * t * slope {
                accepted = Some((trial, eval));
                break;
            }
            t *= 0.5;
        }
        let Some((next, eval)) = accepted else {
            // No decrease representable in floating point: stationary.
            converged = true;
            break;
        };
        step = t;
        c = next;
        current = eval;
        best.observe(&c, &current);
    }

    let best_function = problem.function(&best.coefficients)?;
    let best_report = if domain.is_circle() {
        lsi_deficit_circle(&best_function)?
    } else {
        lsi_deficit_interval(&best_function)?
    };
    Ok(OptimizerResult {
        best_deficit: best.deficit.min(best_report.deficit),
        best_ratio: best.ratio,
        basis: problem.basis,
        coefficients: best.coefficients,
        iterations,
        converged,
        best_report,
        best_function: Some(best_function),
    })
}

struct Best {
    deficit: f64,
    ratio: Option<f64>,
    coefficients: Vec<f64>,
}

impl Best {
    fn new(c: &[f64], e: &Eval) -> Self {
        Self {
            deficit: e.deficit,
            ratio: e.ratio(),
            coefficients: c.to_vec(),
        }
    }

    fn observe(&mut self, c: &[f64], e: &Eval) {
        if e.deficit < self.deficit {
            self.deficit = e.deficit;
            self.coefficients = c.to_vec();
        }
        if let Some(r) = e.ratio() {
            self.ratio = Some(self.ratio.map_or(r, |b| b.min(r)));
        }
    }
}

struct Problem {
    domain: Domain,
    basis: Basis,
    constant: f64,
    /// `modes × n` basis samples.
    phi: Vec<Vec<f64>>,
    precond: Vec<f64>,
    weights: Vec<f64>,
    h: f64,
}

/// Objective pieces at one coefficient vector. `u = |s|`, integrals are of
/// the unnormalized `u`.
struct Eval {
    s: Vec<f64>,
    u: Vec<f64>,
    du: Vec<f64>,
    mass: f64,
    energy: f64,
    entropy: f64,
    deficit: f64,
}

impl Eval {
    /// Energy over entropy of the normalized function.
    fn ratio(&self) -> Option<f64> {
        let ent = self.entropy / self.mass - 0.5 * self.mass.ln();
        (ent > RATIO_ENTROPY_FLOOR).then(|| self.energy / self.mass / ent)
    }
}

impl Problem {
    fn new(domain: &Domain, n_modes: usize, n: usize) -> Result<Self> {
        let (basis, constant) = if domain.is_unit_interval() {
            (Basis::Cosine, PI * PI)
        } else if domain.is_unit_circle() {
            (Basis::Fourier, 4.0 * PI * PI)
        } else {
            return Err(LabError::DomainMismatch(format!(
                "optimizer runs on [0, 1] or the unit circle, got {}",
                domain.describe()
            )));
        };
        let x = domain.nodes(n);
        let mut phi = vec![vec![1.0; n]];
        let mut precond = vec![1.0];
        for k in 1..n_modes {
            let k = k as f64;
            match basis {
                Basis::Cosine => {
                    phi.push(x.iter().map(|&t| (k * PI * t).cos()).collect());
                    precond.push(1.0 / (1.0 + (k * PI).powi(2)));
                }
                Basis::Fourier => {
                    let w = 2.0 * PI * k;
                    phi.push(x.iter().map(|&t| (w * t).cos()).collect());
                    phi.push(x.iter().map(|&t| (w * t).sin()).collect());
                    precond.extend([1.0 / (1.0 + w * w); 2]);
                }
            }
        }
        if 2 * n_modes + 1 > n {
            return Err(LabError::ParamOutOfRange(format!(
                "{n_modes} modes do not resolve on {n} samples"
            )));
        }
        // Rejects grids below the minimum size.
        GridFunction::constant(*domain, n, 1.0)?;
        Ok(Self {
            domain: *domain,
            basis,
            constant,
            phi,
            precond,
            weights: quadrature_weights(domain, n),
            h: domain.spacing(n),
        })
    }

    fn initial(&self, init: &Init) -> Result<Vec<f64>> {
        let mut c = vec![0.0; self.phi.len()];
        match *init {
            Init::Constant => c[0] = 1.0,
            Init::Sharpness { epsilon } => {
                if !(epsilon > 0.0 && epsilon < 1.0) {
                    return Err(LabError::ParamOutOfRange(format!(
                        "epsilon must lie in (0, 1), got {epsilon}"
                    )));
                }
                c[0] = (1.0 - epsilon * epsilon).sqrt();
                c[1] = std::f64::consts::SQRT_2 * epsilon;
            }
            Init::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                c[0] = 1.0;
                for (j, cj) in c.iter_mut().enumerate().skip(1) {
                    let k = match self.basis {
                        Basis::Cosine => j,
                        Basis::Fourier => j.div_ceil(2),
                    };
                    *cj = rng.gen_range(-1.0..1.0) / (2.0 * k as f64);
                }
            }
        }
        Ok(c)
    }

    fn synthesize(&self, c: &[f64]) -> Vec<f64> {
        let mut s = vec![0.0; self.weights.len()];
        for (ck, phi) in c.iter().zip(&self.phi) {
            if *ck != 0.0 {
                for (si, p) in s.iter_mut().zip(phi) {
                    *si += ck * p;
                }
            }
        }
        s
    }

    fn derivative(&self, v: &[f64]) -> Vec<f64> {
        match self.domain {
            Domain::Circle { circumference } => spectral_derivative(v, circumference),
            Domain::Interval { .. } => fd_derivative(v, self.h),
        }
    }

    fn derivative_transpose(&self, v: &[f64]) -> Vec<f64> {
        match self.domain {
            // The spectral derivative matrix is antisymmetric.
            Domain::Circle { circumference } => spectral_derivative(v, circumference)
                .iter()
                .map(|x| -x)
                .collect(),
            Domain::Interval { .. } => fd_derivative_transpose(v, self.h),
        }
    }

    fn dot_w(&self, a: &[f64], b: &[f64]) -> f64 {
        self.weights
            .iter()
            .zip(a)
            .zip(b)
            .map(|((w, x), y)| w * x * y)
            .sum()
    }

    fn evaluate(&self, c: &[f64]) -> Eval {
        let s = self.synthesize(c);
        let u: Vec<f64> = s.iter().map(|v| v.abs()).collect();
        let du = if u.iter().all(|&v| v == u[0]) {
            vec![0.0; u.len()]
        } else {
            self.derivative(&u)
        };
        let mass = self.dot_w(&u, &u);
        let energy = self.dot_w(&du, &du);
        let ent: Vec<f64> = u
            .iter()
            .map(|&v| if v > 0.0 { v * v.ln() } else { 0.0 })
            .collect();
        let entropy = self.dot_w(&u, &ent);
        let deficit = energy / mass - self.constant * (entropy / mass - 0.5 * mass.ln());
        Eval {
            s,
            u,
            du,
            mass,
            energy,
            entropy,
            deficit,
        }
    }

    fn gradient(&self, _c: &[f64], e: &Eval) -> Vec<f64> {
        let wdu: Vec<f64> = self.weights.iter().zip(&e.du).map(|(w, d)| w * d).collect();
        let z = if e.du.iter().all(|&d| d == 0.0) {
            vec![0.0; wdu.len()]
        } else {
            self.derivative_transpose(&wdu)
        };
        let m = e.mass;
        // Per-sample multipliers of σ φ_k in each partial derivative.
        let sigma: Vec<f64> =
            e.s.iter()
                .map(|&v| if v == 0.0 { 0.0 } else { v.signum() })
                .collect();
        let d_energy: Vec<f64> = z.iter().zip(&sigma).map(|(zi, si)| 2.0 * zi * si).collect();
        let d_entropy: Vec<f64> =
            e.u.iter()
                .zip(&sigma)
                .zip(&self.weights)
                .map(|((&u, s), w)| {
                    let core = if u > 0.0 { 2.0 * u * u.ln() + u } else { 0.0 };
                    w * core * s
                })
                .collect();
        self.phi
            .iter()
            .map(|phi| {
                let de: f64 = d_energy.iter().zip(phi).map(|(a, p)| a * p).sum();
                let ds: f64 = d_entropy.iter().zip(phi).map(|(a, p)| a * p).sum();
                let dm = 2.0 * self.dot_w(&e.s, phi);
                let d_ratio = de / m - e.energy * dm / (m * m);
                let d_ent = ds / m - e.entropy * dm / (m * m) - 0.5 * dm / m;
                d_ratio - self.constant * d_ent
            })
            .collect()
    }

    /// Rescales `c` so that `∫|Σ c_k φ_k|² = 1` on the grid.
    fn project(&self, c: &mut [f64]) {
        let s = self.synthesize(c);
        let mass = self.dot_w(&s, &s);
        if mass > 0.0 {
            let scale = mass.sqrt().recip();
            c.iter_mut().for_each(|v| *v *= scale);
        }
    }

    fn function(&self, c: &[f64]) -> Result<GridFunction> {
        let u: Vec<f64> = self.synthesize(c).iter().map(|v| v.abs()).collect();
        GridFunction::new(self.domain, u)
    }
}
