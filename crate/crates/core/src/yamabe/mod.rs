//! Yamabe quotient on constant-curvature backgrounds and periodic grids.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum YamabeError {
    #[error("the Yamabe quotient needs dimension m >= 3, got {0}")]
    InvalidDimension(u32),
    #[error("volume must be positive, got {0}")]
    InvalidVolume(f64),
    #[error("trial field vanishes identically")]
    ZeroField,
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

/// Quotient of a constant function on a metric of constant scalar curvature:
/// `S·Vol^{2/m}`.
pub fn quotient_constant(scalar: f64, volume: f64, dim: u32) -> Result<f64, YamabeError> {
    if dim < 3 {
        return Err(YamabeError::InvalidDimension(dim));
    }
    if !(volume > 0.0) || !volume.is_finite() {
        return Err(YamabeError::InvalidVolume(volume));
    }
    Ok(scalar * volume.powf(2.0 / f64::from(dim)))
}

fn exponents(dim: u32) -> Result<(f64, f64), YamabeError> {
    if dim < 3 {
        return Err(YamabeError::InvalidDimension(dim));
    }
    let m = f64::from(dim);
    // gradient weight 4(m−1)/(m−2) and critical exponent 2m/(m−2)
    Ok((4.0 * (m - 1.0) / (m - 2.0), 2.0 * m / (m - 2.0)))
}

/// Trial function on a periodic `N₁×N₂×N₃` grid over a background with
/// constant scalar curvature.
#[derive(Clone, Debug, PartialEq)]
pub struct GridField {
    dims: [usize; 3],
    spacing: [f64; 3],
    values: Vec<f64>,
    metric_scalar: f64,
    cell_weight: f64,
}

impl GridField {
    /// Cell weight defaults to the product of the spacings.
    pub fn new(dims: [usize; 3], spacing: [f64; 3], values: Vec<f64>, metric_scalar: f64) -> Result<Self, YamabeError> {
        let weight = spacing.iter().product();
        Self::with_weight(dims, spacing, values, metric_scalar, weight)
    }

    pub fn with_weight(
        dims: [usize; 3],
        spacing: [f64; 3],
        values: Vec<f64>,
        metric_scalar: f64,
        cell_weight: f64,
    ) -> Result<Self, YamabeError> {
        if dims.iter().any(|&n| n == 0) {
            return Err(YamabeError::InvalidGrid(format!("dimensions {dims:?} must be positive")));
        }
        if spacing.iter().any(|&h| !(h > 0.0 && h.is_finite())) {
            return Err(YamabeError::InvalidGrid(format!("spacing {spacing:?} must be positive")));
        }
        if !(cell_weight > 0.0 && cell_weight.is_finite()) {
            return Err(YamabeError::InvalidGrid(format!("cell weight {cell_weight} must be positive")));
        }
        let len = dims.iter().product::<usize>();
        if values.len() != len {
            return Err(YamabeError::InvalidGrid(format!("{} values for a grid of {len} cells", values.len())));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(YamabeError::InvalidGrid("field has non-finite values".into()));
        }
        if !metric_scalar.is_finite() {
            return Err(YamabeError::InvalidGrid("background scalar curvature must be finite".into()));
        }
        Ok(GridField { dims, spacing, values, metric_scalar, cell_weight })
    }

    /// Cube `[0, side)³` with `n` points per axis, filled by `f(x, y, z)`.
    pub fn cube(n: usize, side: f64, metric_scalar: f64, f: impl Fn(f64, f64, f64) -> f64) -> Result<Self, YamabeError> {
        if n == 0 {
            return Err(YamabeError::InvalidGrid("grid needs at least one point per axis".into()));
        }
        let h = side / n as f64;
        let mut values = Vec::with_capacity(n * n * n);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    values.push(f(i as f64 * h, j as f64 * h, k as f64 * h));
                }
            }
        }
        Self::new([n; 3], [h; 3], values, metric_scalar)
    }

    /// Cube filled with independent uniform values in `[lo, hi)`.
    pub fn random_cube(n: usize, side: f64, metric_scalar: f64, lo: f64, hi: f64, seed: u64) -> Result<Self, YamabeError> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut field = Self::cube(n, side, metric_scalar, |_, _, _| 0.0)?;
        for v in &mut field.values {
            *v = rng.gen_range(lo..hi);
        }
        Ok(field)
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    pub fn spacing(&self) -> [f64; 3] {
        self.spacing
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn metric_scalar(&self) -> f64 {
        self.metric_scalar
    }

    pub fn cell_weight(&self) -> f64 {
        self.cell_weight
    }

    pub fn total_volume(&self) -> f64 {
        self.cell_weight * self.values.len() as f64
    }

    pub fn scaled(&self, c: f64) -> GridField {
        GridField { values: self.values.iter().map(|v| v * c).collect(), ..self.clone() }
    }

    fn index(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    /// Central differences with periodic wrap, one vector per axis.
    fn central_gradient(&self) -> [Vec<f64>; 3] {
        let [n1, n2, n3] = self.dims;
        let mut grads = [vec![0.0; self.values.len()], vec![0.0; self.values.len()], vec![0.0; self.values.len()]];
        let f = &self.values;
        for i in 0..n1 {
            let (ip, im) = ((i + 1) % n1, (i + n1 - 1) % n1);
            for j in 0..n2 {
                let (jp, jm) = ((j + 1) % n2, (j + n2 - 1) % n2);
                for k in 0..n3 {
                    let (kp, km) = ((k + 1) % n3, (k + n3 - 1) % n3);
                    let c = self.index(i, j, k);
                    grads[0][c] = (f[self.index(ip, j, k)] - f[self.index(im, j, k)]) / (2.0 * self.spacing[0]);
                    grads[1][c] = (f[self.index(i, jp, k)] - f[self.index(i, jm, k)]) / (2.0 * self.spacing[1]);
                    grads[2][c] = (f[self.index(i, j, kp)] - f[self.index(i, j, km)]) / (2.0 * self.spacing[2]);
                }
            }
        }
        grads
    }

    /// Adjoint of [`Self::central_gradient`] applied to the gradient itself:
    /// `∂/∂fⱼ Σᵢ |Dfᵢ|² = 2·(adjoint)ⱼ`.
    fn dirichlet_gradient(&self, grads: &[Vec<f64>; 3]) -> Vec<f64> {
        let [n1, n2, n3] = self.dims;
        let mut out = vec![0.0; self.values.len()];
        for i in 0..n1 {
            let (ip, im) = ((i + 1) % n1, (i + n1 - 1) % n1);
            for j in 0..n2 {
                let (jp, jm) = ((j + 1) % n2, (j + n2 - 1) % n2);
                for k in 0..n3 {
                    let (kp, km) = ((k + 1) % n3, (k + n3 - 1) % n3);
                    let c = self.index(i, j, k);
                    let gx = (grads[0][self.index(im, j, k)] - grads[0][self.index(ip, j, k)]) / (2.0 * self.spacing[0]);
                    let gy = (grads[1][self.index(i, jm, k)] - grads[1][self.index(i, jp, k)]) / (2.0 * self.spacing[1]);
                    let gz = (grads[2][self.index(i, j, km)] - grads[2][self.index(i, j, kp)]) / (2.0 * self.spacing[2]);
                    out[c] = 2.0 * (gx + gy + gz);
                }
            }
        }
        out
    }
}

struct Parts {
    numerator: f64,
    power_sum: f64,
    quotient: f64,
}

fn parts(g: &GridField, grads: &[Vec<f64>; 3], dim: u32) -> Result<Parts, YamabeError> {
    let (a, p) = exponents(dim)?;
    let w = g.cell_weight;
    let mut dirichlet = 0.0;
    let mut mass = 0.0;
    let mut power_sum = 0.0;
    for (c, &f) in g.values.iter().enumerate() {
        dirichlet += grads[0][c] * grads[0][c] + grads[1][c] * grads[1][c] + grads[2][c] * grads[2][c];
        mass += f * f;
        power_sum += f.abs().powf(p);
    }
    if power_sum == 0.0 {
        return Err(YamabeError::ZeroField);
    }
    let numerator = w * (a * dirichlet + g.metric_scalar * mass);
    let power_sum = w * power_sum;
    Ok(Parts { numerator, power_sum, quotient: numerator / power_sum.powf(2.0 / p) })
}

/// Discrete Yamabe quotient of the field.
pub fn quotient_of_field(g: &GridField, dim: u32) -> Result<f64, YamabeError> {
    Ok(parts(g, &g.central_gradient(), dim)?.quotient)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MinimizeOptions {
    pub max_iters: usize,
    /// Initial step; `None` uses `10⁻²·h²` for the smallest spacing `h`.
    pub step: Option<f64>,
    /// Stop once an accepted step lowers the quotient by less than this
    /// (relative to `max(1, |Q|)`).
    pub tol: f64,
}

impl Default for MinimizeOptions {
    fn default() -> Self {
        MinimizeOptions { max_iters: 50_000, step: None, tol: 1e-15 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimizeStatus {
    Converged,
    /// Iteration cap reached while the quotient was still moving.
    NonConvergence,
}

#[derive(Clone, Debug)]
pub struct MinimizeResult {
    pub q_est: f64,
    pub field: GridField,
    pub iterations: usize,
    pub status: MinimizeStatus,
    /// Quotient after every accepted step, starting with the initial value.
    pub history: Vec<f64>,
}

fn normalize(g: &mut GridField, p: f64) {
    let sum: f64 = g.cell_weight * g.values.iter().map(|v| v.abs().powf(p)).sum::<f64>();
    let scale = sum.powf(-1.0 / p);
    for v in &mut g.values {
        *v *= scale;
    }
}

fn clamp(g: &mut GridField) {
    let floor = 1e-8 * g.values.iter().copied().fold(f64::MIN, f64::max);
    for v in &mut g.values {
        *v = v.max(floor);
    }
}

/// Projected gradient descent on the discrete quotient with backtracking,
/// positivity clamp and `Σw f^p = 1` normalization after each step.
pub fn minimize_quotient(start: &GridField, dim: u32, options: &MinimizeOptions) -> Result<MinimizeResult, YamabeError> {
    let (a, p) = exponents(dim)?;
    if start.values.iter().any(|&v| v <= 0.0) {
        return Err(YamabeError::InvalidGrid("initial field must be positive".into()));
    }
    let h = start.spacing.iter().copied().fold(f64::INFINITY, f64::min);
    let base_step = options.step.unwrap_or(1e-2 * h * h);
    let mut field = start.clone();
    normalize(&mut field, p);
    let mut grads = field.central_gradient();
    let mut current = parts(&field, &grads, dim)?;
    let mut history = vec![current.quotient];
    let mut step = base_step;
    let mut status = MinimizeStatus::NonConvergence;
    let mut iterations = 0;
    while iterations < options.max_iters {
        iterations += 1;
        // L² gradient of N/P^{2/p}, per unit volume
        let dirichlet = field.dirichlet_gradient(&grads);
        let pw = current.power_sum.powf(2.0 / p);
        let dp_factor = 2.0 * current.power_sum.powf(2.0 / p - 1.0);
        let direction: Vec<f64> = field
            .values
            .iter()
            .zip(&dirichlet)
            .map(|(&f, &d)| {
                let dn = a * d + 2.0 * field.metric_scalar * f;
                let dpow = dp_factor * f.abs().powf(p - 1.0);
                (dn * pw - current.numerator * dpow) / (pw * pw)
            })
            .collect();
        let mut accepted = None;
        for _ in 0..40 {
            let mut trial = field.clone();
            for (v, d) in trial.values.iter_mut().zip(&direction) {
                *v -= step * d;
            }
            clamp(&mut trial);
            normalize(&mut trial, p);
            let trial_grads = trial.central_gradient();
            let trial_parts = parts(&trial, &trial_grads, dim)?;
            if trial_parts.quotient <= current.quotient {
                accepted = Some((trial, trial_grads, trial_parts));
                break;
            }
            step *= 0.5;
        }
        let Some((next, next_grads, next_parts)) = accepted else {
            status = MinimizeStatus::Converged;
            break;
        };
        let decrease = current.quotient - next_parts.quotient;
        field = next;
        grads = next_grads;
        current = next_parts;
        history.push(current.quotient);
        step = (step * 1.5).min(base_step);
        if decrease <= options.tol * current.quotient.abs().max(1.0) {
            status = MinimizeStatus::Converged;
            break;
        }
    }
    Ok(MinimizeResult { q_est: current.quotient, field, iterations, status, history })
}
