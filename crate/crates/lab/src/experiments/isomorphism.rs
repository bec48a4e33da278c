use hometree::spectral::SpectralPoint;
use hometree::transforms::{abel_coefficients, lambda_seminorm, schwartz_seminorm, spherical_ft};
use hometree::tree::{RadialProfile, TreeParams};
use hometree::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, UnitDisc};

use super::{c, params};
use crate::config::ExperimentConfig;
use crate::error::{LabError, LabResult};
use crate::report::{Check, ExperimentReport, Table};
use crate::thresholds::{COEFFICIENT_SUPPORT, RECONSTRUCTION};

const MAX_SUPPORT: usize = 14;
const SEMINORM_ORDERS: [u32; 3] = [2, 3, 4];
const SEMINORM_EXPONENTS: [f64; 3] = [1.25, 1.5, 2.0];
/// Heights of the test lines: the real axis and the boundary of `S_{1.25}`.
const TEST_LINES: [f64; 3] = [0.0, 0.3, -0.3];
const TEST_POINTS_PER_LINE: usize = 16;

/// `δ_o` followed by `size - 1` profiles with values uniform on the unit disk.
pub fn random_corpus(params: &TreeParams, support: usize, size: usize, seed: u64) -> Vec<RadialProfile> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut corpus = vec![RadialProfile::sphere_indicator(*params, support, 0)];
    while corpus.len() < size {
        let values: Vec<Complex64> = (0..=support)
            .map(|_| {
                let [x, y]: [f64; 2] = UnitDisc.sample(&mut rng);
                c(x, y)
            })
            .collect();
        corpus.push(RadialProfile::new(*params, values).expect("non-empty profile"));
    }
    corpus
}

fn test_points(params: &TreeParams) -> Vec<SpectralPoint> {
    let tau = params.tau();
    let mut out = Vec::new();
    for &im in &TEST_LINES {
        for j in 0..TEST_POINTS_PER_LINE {
            // offset keeps the points off the sampling grid
            let s = -tau / 2.0 + tau * (j as f64 + 0.37) / TEST_POINTS_PER_LINE as f64;
            out.push(SpectralPoint::new(params, c(s, im)));
        }
    }
    out
}

pub fn isomorphism(config: &ExperimentConfig) -> LabResult<ExperimentReport> {
    let params = params(config)?;
    let support = config.radius;
    if support > MAX_SUPPORT {
        return Err(LabError::Config(format!("support radius must be at most {MAX_SUPPORT}, got {support}")));
    }
    let corpus = random_corpus(&params, support, config.corpus_size, config.seed);
    let points = test_points(&params);

    let mut rows = Table::new(
        "corpus",
        &["index", "reconstruction_residual", "slack", "evenness_defect", "n_max"],
    );
    let (mut recon, mut slack, mut even) = (0.0f64, 0.0f64, 0.0f64);
    let mut support_ok = true;
    let mut coeffs = Vec::with_capacity(corpus.len());
    for (i, f) in corpus.iter().enumerate() {
        let abel = abel_coefficients(f, support)?;
        let seq = &abel.coefficients;
        let scale = seq.iter().map(|(_, v)| v.norm()).fold(1.0, f64::max);
        let r = points
            .iter()
            .map(|z| {
                let direct = spherical_ft(f, z);
                (direct - seq.evaluate(&params, z.z())).norm() / direct.norm().max(1.0)
            })
            .fold(0.0, f64::max);
        let s = abel.slack.norm() / scale;
        let e = seq.evenness_defect() / scale;
        recon = recon.max(r);
        slack = slack.max(s);
        even = even.max(e);
        support_ok &= seq.n_max() == support;
        rows.push(vec![i.into(), r.into(), s.into(), e.into(), seq.n_max().into()]);
        coeffs.push(abel.coefficients);
    }
    let delta_error = coeffs[0]
        .iter()
        .map(|(n, v)| (v - if n == 0 { c(1.0, 0.0) } else { c(0.0, 0.0) }).norm())
        .fold(0.0, f64::max);

    let mut checks = vec![
        Check::below("max_reconstruction_residual", recon, RECONSTRUCTION),
        Check::below("max_support_slack", slack, COEFFICIENT_SUPPORT),
        Check::below("max_evenness_defect", even, COEFFICIENT_SUPPORT),
        Check::holds("coefficient_range_matches_support", support_ok),
        Check::below("delta_coefficient_error", delta_error, COEFFICIENT_SUPPORT),
    ];

    let mut ratios = Table::new(
        "seminorm_ratios",
        &["m", "p", "upper_min", "upper_max", "lower_min", "lower_max", "finite_positive"],
    );
    let mut all_finite = true;
    for &m in &SEMINORM_ORDERS {
        for &p in &SEMINORM_EXPONENTS {
            let (mut umin, mut umax, mut lmin, mut lmax) = (f64::INFINITY, 0.0f64, f64::INFINITY, 0.0f64);
            let mut ok = true;
            for (f, a) in corpus.iter().zip(&coeffs) {
                let nu = schwartz_seminorm(f, m, p);
                let upper = nu / lambda_seminorm(&params, a, m, p)?;
                let lower = lambda_seminorm(&params, a, m - 2, p)? / nu;
                ok &= [upper, lower].iter().all(|v| v.is_finite() && *v > 0.0);
                umin = umin.min(upper);
                umax = umax.max(upper);
                lmin = lmin.min(lower);
                lmax = lmax.max(lower);
            }
            all_finite &= ok;
            ratios.push(vec![
                (m as usize).into(),
                p.into(),
                umin.into(),
                umax.into(),
                lmin.into(),
                lmax.into(),
                ok.into(),
            ]);
        }
    }
    checks.push(Check::info("seminorm_ratios_finite_positive", if all_finite { 1.0 } else { 0.0 }));

    let notes = vec![
        format!(
            "{} profiles supported in B_{support}, the first being the indicator of the root",
            corpus.len()
        ),
        format!(
            "reconstruction compared at {} points on Im z in {:?}, relative to max(1, |f^(z)|)",
            points.len(),
            TEST_LINES
        ),
        "seminorm ratios: upper = nu_m / lambda_m, lower = lambda_(m-2) / nu_m; informational".into(),
    ];
    Ok(ExperimentReport::new(config, checks, vec![rows, ratios], notes))
}
