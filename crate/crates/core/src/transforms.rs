//! Spherical Fourier transform of finitely supported radial functions, exact
//! torus quadrature for trigonometric polynomials in `q^{is}`, Abel
//! coefficients, and the seminorms on both sides of the transform.
//!
//! For a radial `f` supported in `B_R`, `f̂(z) = Σ_n f(n)|S_n|φ_z(n)` is a
//! trigonometric polynomial of degree `R` in `q^{iz}`. Its torus Fourier
//! coefficients are the Abel coefficients: `f̂(z) = Σ_{|n|≤R} 𝒜f(n) q^{inz}`.
//! Sampling `2R + 2` equispaced points recovers them exactly, with one spare
//! frequency that must come out zero.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::{phi_profile, SpectralPoint, Strip};
use crate::tree::{BallFunction, RadialProfile, TreeParams};

/// Samples of a `τ`-periodic function at `s_j = -τ/2 + jτ/N`, `j = 0..N`.
#[derive(Debug, Clone, PartialEq)]
pub struct TorusSamples {
    params: TreeParams,
    values: Vec<Complex64>,
}

impl TorusSamples {
    pub fn new(params: TreeParams, values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("torus sampling needs at least one sample".into()));
        }
        Ok(Self { params, values })
    }

    /// Sample `g` on the `count`-point half-open grid starting at `-τ/2`.
    pub fn sample(params: TreeParams, count: usize, g: impl Fn(f64) -> Complex64) -> Result<Self> {
        let values = torus_grid(&params, count).map(g).collect();
        Self::new(params, values)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }
}

/// The grid `-τ/2 + jτ/N`, `j = 0..N`.
pub fn torus_grid(params: &TreeParams, count: usize) -> impl Iterator<Item = f64> {
    let tau = params.tau();
    (0..count).map(move |j| -tau / 2.0 + tau * j as f64 / count as f64)
}

/// Coefficients `F(n)` for `|n| <= n_max`.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSequence {
    n_max: usize,
    coeffs: Vec<Complex64>,
}

impl CoefficientSequence {
    /// From values listed for `n = -n_max..=n_max`.
    pub fn new(coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len().is_multiple_of(2) {
            return Err(Error::InvalidParameter("coefficient list must have odd length".into()));
        }
        Ok(Self { n_max: coeffs.len() / 2, coeffs })
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// `F(n)`, zero outside the stored range.
    pub fn get(&self, n: i64) -> Complex64 {
        if n.unsigned_abs() as usize > self.n_max {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(n + self.n_max as i64) as usize]
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        let n_max = self.n_max as i64;
        self.coeffs.iter().enumerate().map(move |(i, &c)| (i as i64 - n_max, c))
    }

    /// `max_n |F(n) - F(-n)|`.
    pub fn evenness_defect(&self) -> f64 {
        (1..=self.n_max as i64)
            .map(|n| (self.get(n) - self.get(-n)).norm())
            .fold(0.0, f64::max)
    }

    /// `Σ F(n) q^{inz}`.
    pub fn evaluate(&self, params: &TreeParams, z: Complex64) -> Complex64 {
        let w = Complex64::i() * z * params.log_q();
        self.iter().map(|(n, c)| c * (w * n as f64).exp()).sum()
    }
}

/// Spherical transform `f̂(z) = Σ_n f(n)|S_n|φ_z(n)`.
pub fn spherical_ft(f: &RadialProfile, z: &SpectralPoint) -> Complex64 {
    let params = f.params();
    let phi = phi_profile(params, z, f.radius());
    f.values()
        .iter()
        .enumerate()
        .map(|(n, &v)| v * params.sphere_size_f64(n) * phi.at(n))
        .sum()
}

/// `F(n) = (1/N) Σ_j g(s_j) q^{-ins_j}` for `|n| <= n_max`.
///
/// Exact for trigonometric polynomials of degree `<= n_max` once `N >= 2n_max + 1`.
pub fn fourier_coefficients(g: &TorusSamples, n_max: usize) -> Result<CoefficientSequence> {
    let count = g.len();
    if count < 2 * n_max + 1 {
        return Err(Error::Undersampled { samples: count, n_max });
    }
    let coeffs = (-(n_max as i64)..=n_max as i64)
        .map(|n| coefficient(g, n))
        .collect();
    CoefficientSequence::new(coeffs)
}

fn coefficient(g: &TorusSamples, n: i64) -> Complex64 {
    let count = g.values.len();
    // s_j log q = -π + 2πj/N
    let sum: Complex64 = g
        .values
        .iter()
        .enumerate()
        .map(|(j, &v)| {
            let angle = -(n as f64) * (-PI + 2.0 * PI * j as f64 / count as f64);
            v * Complex64::from_polar(1.0, angle)
        })
        .sum();
    sum / count as f64
}

/// Abel coefficients of a radial function, with the spare-frequency check.
#[derive(Debug, Clone, PartialEq)]
pub struct AbelCoefficients {
    pub coefficients: CoefficientSequence,
    /// Coefficient at frequency `R + 1` from the same samples; zero when the support bound holds.
    pub slack: Complex64,
}

/// `𝒜f` for `f` supported in `B_R`, from `2R + 2` samples of `f̂` on the torus.
pub fn abel_coefficients(f: &RadialProfile, support: usize) -> Result<AbelCoefficients> {
    if f.values().iter().skip(support + 1).any(|v| *v != Complex64::new(0.0, 0.0)) {
        return Err(Error::InvalidParameter(format!(
            "profile has nonzero values beyond the declared support radius {support}"
        )));
    }
    let params = *f.params();
    let f = f.truncate(support);
    let samples = TorusSamples::sample(params, 2 * support + 2, |s| {
        spherical_ft(&f, &SpectralPoint::real(&params, s))
    })?;
    let coefficients = fourier_coefficients(&samples, support)?;
    let slack = coefficient(&samples, support as i64 + 1);
    Ok(AbelCoefficients { coefficients, slack })
}

/// `ν_m(f) = max_n (1+n)^m q^{n/p} |f(n)|` for a radial profile.
pub fn schwartz_seminorm(f: &RadialProfile, m: u32, p: f64) -> f64 {
    let q = f.params().q_f64();
    f.values()
        .iter()
        .enumerate()
        .map(|(n, v)| (1.0 + n as f64).powi(m as i32) * q.powf(n as f64 / p) * v.norm())
        .fold(0.0, f64::max)
}

/// [`schwartz_seminorm`] over the vertices of a ball.
pub fn schwartz_seminorm_ball(f: &BallFunction, m: u32, p: f64) -> f64 {
    let q = f.params().q_f64();
    (0..=f.radius())
        .map(|n| {
            let peak = f.sphere(n).iter().map(|v| v.norm()).fold(0.0, f64::max);
            (1.0 + n as f64).powi(m as i32) * q.powf(n as f64 / p) * peak
        })
        .fold(0.0, f64::max)
}

/// `λ_m(q^{δ_p|·|} F) = max_n (1+|n|)^m q^{δ_p |n|} |F(n)|`.
pub fn lambda_seminorm(params: &TreeParams, coeffs: &CoefficientSequence, m: u32, p: f64) -> Result<f64> {
    let delta = Strip::new(p)?.delta();
    let q = params.q_f64();
    Ok(coeffs
        .iter()
        .map(|(n, c)| {
            let k = n.unsigned_abs() as f64;
            (1.0 + k).powi(m as i32) * q.powf(delta * k) * c.norm()
        })
        .fold(0.0, f64::max))
}

/// Nodes of the trapezoidal rule on the Cauchy circle.
pub const CAUCHY_NODES: usize = 64;

/// Estimate of `μ_m(g) = sup_{S_p} |g^{(m)}|` for an even, `τ`-periodic `g`
/// holomorphic on the strip.
///
/// The supremum is taken over `grid` equispaced points on each boundary line
/// `Im z = ±δ_p` (the real line when `p = 2`). Derivatives come from the
/// Cauchy integral on circles of radius `min(|δ_p|/2, τ/grid)`, or `τ/grid`
/// when `δ_p = 0`. This is an estimate, not a certified bound.
pub fn strip_seminorm(
    params: &TreeParams,
    g: impl Fn(Complex64) -> Complex64,
    m: u32,
    p: f64,
    grid: usize,
) -> Result<f64> {
    if grid < 64 {
        return Err(Error::InvalidParameter(format!("strip grid must have at least 64 points, got {grid}")));
    }
    let delta = Strip::new(p)?.half_width();
    let step = params.tau() / grid as f64;
    let radius = if delta == 0.0 { step } else { (delta / 2.0).min(step) };
    let lines: &[f64] = if delta == 0.0 { &[0.0] } else { &[delta, -delta] };
    let factorial: f64 = (1..=m).map(f64::from).product();

    let derivative = |z0: Complex64| -> Complex64 {
        if m == 0 {
            return g(z0);
        }
        let sum: Complex64 = (0..CAUCHY_NODES)
            .map(|k| {
                let theta = 2.0 * PI * k as f64 / CAUCHY_NODES as f64;
                g(z0 + Complex64::from_polar(radius, theta)) * Complex64::from_polar(1.0, -(m as f64) * theta)
            })
            .sum();
        sum * factorial / (CAUCHY_NODES as f64 * radius.powi(m as i32))
    };

    let mut sup: f64 = 0.0;
    for &im in lines {
        for s in torus_grid(params, grid) {
            sup = sup.max(derivative(Complex64::new(s, im)).norm());
        }
    }
    Ok(sup)
}
