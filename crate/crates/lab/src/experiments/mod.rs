//! The experiments behind each subcommand, plus shared helpers.

mod eigencheck;
mod isomorphism;
mod roe;
mod sharpness;
mod spectrum;
mod theorems;
mod zcase;

use std::time::Instant;

use hometree::norms::{weak_quasinorm, Distribution};
use hometree::operators::{laplacian, laplacian_iter, BoundaryData};
use hometree::spectral::{SpectralPoint, EPS_BRANCH};
use hometree::tree::{BallFunction, TreeParams};
use hometree::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, UnitDisc};

use crate::config::{ExperimentConfig, ExperimentKind};
use crate::error::{LabError, LabResult};
use crate::report::ExperimentReport;

pub use eigencheck::{eigencheck, z_grid};
pub use isomorphism::{isomorphism, random_corpus};
pub use roe::roe_counterexample;
pub use sharpness::sharpness;
pub use spectrum::spectrum_map;
pub use theorems::{theorem_a, theorem_b};
pub use zcase::zcase;

/// Runs the configured experiment and stamps the wall time.
pub fn run(config: &ExperimentConfig) -> LabResult<ExperimentReport> {
    let start = Instant::now();
    let mut report = match config.experiment {
        ExperimentKind::Eigencheck => eigencheck(config),
        ExperimentKind::SpectrumMap => spectrum_map(config),
        ExperimentKind::RoeCounterexample => roe_counterexample(config),
        ExperimentKind::TheoremA => theorem_a(config),
        ExperimentKind::TheoremB => theorem_b(config),
        ExperimentKind::Sharpness => sharpness(config),
        ExperimentKind::Zcase => zcase(config),
        ExperimentKind::Isomorphism => isomorphism(config),
    }?;
    report.wall_time_s = start.elapsed().as_secs_f64();
    Ok(report)
}

pub(crate) fn params(config: &ExperimentConfig) -> LabResult<TreeParams> {
    Ok(TreeParams::new(config.q)?)
}

pub(crate) fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Boundary data at `depth` with values uniform on the closed unit disk.
pub fn random_boundary(params: &TreeParams, depth: usize, seed: u64) -> LabResult<BoundaryData> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let count = params.sphere_size(depth) as usize;
    let values = (0..count)
        .map(|_| {
            let [x, y]: [f64; 2] = UnitDisc.sample(&mut rng);
            c(x, y)
        })
        .collect();
    Ok(BoundaryData::new(*params, depth, values)?)
}

/// Least-squares eigenvalue fit on the interior ball `B_{R-1}`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenFit {
    /// `λ* = ⟨ℒf, f⟩ / ⟨f, f⟩`
    pub lambda: Complex64,
    /// `‖ℒf - λ*f‖₂ / ‖f‖₂`
    pub residual: f64,
}

pub fn eigen_fit(f: &BallFunction) -> LabResult<EigenFit> {
    let lf = laplacian(f)?;
    let inner = f.restrict(lf.radius())?;
    let ff: f64 = inner.values().iter().map(|v| v.norm_sqr()).sum();
    if ff == 0.0 {
        return Err(LabError::Config("eigenvalue fit of a function vanishing on the interior".into()));
    }
    let lff: Complex64 = lf.values().iter().zip(inner.values()).map(|(a, b)| a * b.conj()).sum();
    let lambda = lff / ff;
    let rr: f64 = lf.values().iter().zip(inner.values()).map(|(a, b)| (a - lambda * b).norm_sqr()).sum();
    Ok(EigenFit { lambda, residual: (rr / ff).sqrt() })
}

/// `r_k = ‖ℒ^k f‖_{L^{p,∞}(B_{R-k})} / |λ|^k` for `k = 0..=k_max`.
pub fn weak_ratios(f: &BallFunction, lambda: Complex64, p: f64, k_max: usize) -> LabResult<Vec<f64>> {
    let mut out = Vec::with_capacity(k_max + 1);
    for k in 0..=k_max {
        let g = laplacian_iter(f, k)?;
        let w = weak_quasinorm(&Distribution::from_ball(&g), p)?;
        out.push(w / lambda.norm().powi(k as i32));
    }
    Ok(out)
}

/// Rejects `z` within [`EPS_BRANCH`] of `(τ/2)ℤ`.
pub(crate) fn require_nondegenerate(params: &TreeParams, z: &SpectralPoint) -> LabResult<()> {
    if z.distance_to_half_lattice(params) <= EPS_BRANCH {
        let z0 = z.z();
        return Err(LabError::DegenerateZ { re: z0.re, im: z0.im, eps: EPS_BRANCH });
    }
    Ok(())
}

/// `φ_z` on a ball, from the closed-form profile.
pub(crate) fn phi_ball(params: &TreeParams, z: &SpectralPoint, radius: usize) -> BallFunction {
    hometree::spectral::phi_profile(params, z, radius).embed()
}
