use hometree::norms::{radial_growth_curve, Growth, GrowthNorm, LINEAR_EXPONENT_BAND};
use hometree::operators::laplacian_iter;
use hometree::spectral::{find_unimodular_pair, gamma, phi_profile, SpectralPoint, Strip};
use hometree::tree::{BallFunction, TreeParams};

use super::roe::{pair_term, weak_dual_growth};
use super::{eigen_fit, params, phi_ball, require_nondegenerate, weak_ratios};
use crate::config::ExperimentConfig;
use crate::error::{LabError, LabResult};
use crate::report::{Check, ExperimentReport, Table};
use crate::thresholds::{NON_EIGEN_RESIDUAL, RATIO_ENVELOPE, REPAIRED_BOUND};

/// Ball radius for the items that apply the Laplacian.
const BALL_RADIUS: usize = 10;

fn curve_radii(radius: usize) -> Vec<usize> {
    (radius / 2..=radius).collect()
}

fn item1(params: &TreeParams, config: &ExperimentConfig, checks: &mut Vec<Check>) -> LabResult<Table> {
    let radii = curve_radii(config.radius);
    let z0 = SpectralPoint::real(params, 0.0);
    let profile = phi_profile(params, &z0, config.radius);
    let curve = radial_growth_curve(params, |n| profile.at(n), 2.0, &radii, GrowthNorm::Weak)?;
    let mut table = Table::new("item1_phi0_weak", &["radius", "weak_l2"]);
    for (r, v) in curve.radii.iter().zip(&curve.values) {
        table.push(vec![(*r).into(), (*v).into()]);
    }
    let from = config.radius / 2;
    let (lo, hi) = LINEAR_EXPONENT_BAND;
    let exponent = curve.log_slope(from);
    checks.push(Check::holds("item1_divergent", curve.classify() == Growth::Divergent));
    checks.push(Check::at_least("item1_growth_exponent_lo", exponent, lo));
    checks.push(Check::at_most("item1_growth_exponent_hi", exponent, hi));
    checks.push(Check::info("item1_linear_slope", curve.linear_slope(from)));

    // repaired bound: sup |φ_0^{-1} ℒ^k φ_0| / |γ(0)|^k
    let phi0 = phi_ball(params, &z0, BALL_RADIUS);
    let g0 = gamma(params, &z0);
    let (mut worst, mut raw) = (0.0f64, 0.0f64);
    for k in 0..=config.k_max().min(BALL_RADIUS - 1) {
        let lk = laplacian_iter(&phi0, k)?;
        let inner = phi0.restrict(lk.radius())?;
        let sup = lk
            .values()
            .iter()
            .zip(inner.values())
            .map(|(a, b)| (a / b).norm())
            .fold(0.0, f64::max);
        let deviation = (sup / g0.norm().powi(k as i32) - 1.0).abs();
        raw = raw.max(deviation);
        // k steps amplify roundoff by up to (2/|γ(0)|)^k
        worst = worst.max(deviation * (g0.norm() / 2.0).powi(k as i32));
    }
    checks.push(Check::below("item1_repaired_bound_scaled_deviation", worst, REPAIRED_BOUND));
    checks.push(Check::info("item1_repaired_bound_deviation", raw));
    Ok(table)
}

fn item2(params: &TreeParams, config: &ExperimentConfig, checks: &mut Vec<Check>) -> LabResult<Table> {
    if config.z[1] != 0.0 {
        return Err(LabError::Config(format!("sharpness needs real z, got Im z = {}", config.z[1])));
    }
    let z = SpectralPoint::real(params, config.z[0]);
    require_nondegenerate(params, &z)?;
    let radii = curve_radii(config.radius);
    let profile = phi_profile(params, &z, config.radius);
    let weak = radial_growth_curve(params, |n| profile.at(n), 2.0, &radii, GrowthNorm::Weak)?;
    let l22 = radial_growth_curve(params, |n| profile.at(n), 2.0, &radii, GrowthNorm::Lorentz(2.0))?.powered(2.0);
    let mut table = Table::new("item2_phi_z_curves", &["radius", "weak_l2", "l22_squared"]);
    for ((r, w), l) in radii.iter().zip(&weak.values).zip(&l22.values) {
        table.push(vec![(*r).into(), (*w).into(), (*l).into()]);
    }
    checks.push(Check::below(
        "item2_weak_doubling_ratio",
        weak.doubling_ratio().unwrap_or(f64::INFINITY),
        hometree::norms::BOUNDED_RATIO,
    ));
    checks.push(Check::holds("item2_l22_divergent", l22.classify() == Growth::Divergent));
    Ok(table)
}

fn item3(params: &TreeParams, config: &ExperimentConfig, checks: &mut Vec<Check>) -> LabResult<Table> {
    let tau = params.tau();
    let s1 = SpectralPoint::real(params, tau / 8.0);
    let s2 = SpectralPoint::real(params, tau / 6.0);
    let z = SpectralPoint::real(params, tau / 4.0);
    let gz = gamma(params, &z);
    let f: BallFunction = phi_ball(params, &s1, BALL_RADIUS)
        .axpby(1.0.into(), &phi_ball(params, &s2, BALL_RADIUS), 1.0.into())?;
    let hypothesis = [&s1, &s2].iter().all(|s| gamma(params, s).re <= gz.re);
    checks.push(Check::holds("item3_gamma_ordering", hypothesis));
    let ratios = weak_ratios(&f, gz, 2.0, config.k_max().min(BALL_RADIUS - 1))?;
    let mut table = Table::new("item3_ratios", &["k", "r_k", "r_k_over_r_0"]);
    for (k, r) in ratios.iter().enumerate() {
        table.push(vec![k.into(), (*r).into(), (r / ratios[0]).into()]);
    }
    let max = ratios.iter().map(|r| r / ratios[0]).fold(0.0, f64::max);
    checks.push(Check::at_most("item3_max_ratio", max, RATIO_ENVELOPE));
    checks.push(Check::above("item3_non_eigen_residual", eigen_fit(&f)?.residual, NON_EIGEN_RESIDUAL));
    Ok(table)
}

fn items45(params: &TreeParams, config: &ExperimentConfig, checks: &mut Vec<Check>) -> LabResult<Table> {
    let p = config.p;
    let width = Strip::new(p)?.half_width();
    let b = params.b();
    let upper = 1.0 + b * (width * params.log_q()).cosh();
    let moduli = [config.modulus, 0.5 * ((1.0 + b) + upper)];
    let mut table = Table::new(
        "items45_pairs",
        &["modulus", "z1_re", "z1_im", "z2_re", "z2_im", "non_eigen_residual"],
    );
    for (i, m) in moduli.iter().enumerate() {
        let (z1, z2) = find_unimodular_pair(params, *m, p)?;
        let f = pair_term(params, &z1, &z2, 0, BALL_RADIUS);
        let residual = eigen_fit(&f)?.residual;
        checks.push(Check::above(format!("item45_pair{i}_non_eigen_residual"), residual, NON_EIGEN_RESIDUAL));
        let bounded = weak_dual_growth(params, &z1, p)? == Growth::Bounded
            && weak_dual_growth(params, &z2, p)? == Growth::Bounded;
        checks.push(Check::holds(format!("item45_pair{i}_weak_bounded"), bounded));
        let gap = (gamma(params, &z1) - gamma(params, &z2)).norm();
        checks.push(Check::info(format!("item45_pair{i}_eigenvalue_gap"), gap));
        let (a, c) = (z1.z(), z2.z());
        table.push(vec![(*m).into(), a.re.into(), a.im.into(), c.re.into(), c.im.into(), residual.into()]);
    }
    Ok(table)
}

pub fn sharpness(config: &ExperimentConfig) -> LabResult<ExperimentReport> {
    let params = params(config)?;
    if config.radius < 8 {
        return Err(LabError::Config(format!("sharpness needs R >= 8, got {}", config.radius)));
    }
    let p = config.p;
    if !(p > 1.0 && p < 2.0) {
        return Err(LabError::Config(format!("sharpness needs 1 < p < 2 for items 4-5, got {p}")));
    }
    let mut checks = Vec::new();
    let tables = vec![
        item1(&params, config, &mut checks)?,
        item2(&params, config, &mut checks)?,
        item3(&params, config, &mut checks)?,
        items45(&params, config, &mut checks)?,
    ];
    let notes = vec![
        format!(
            "item 1: growth exponent is the log-log slope over R in [{}, {}]; the linear slope \
             is reported for reference",
            config.radius / 2,
            config.radius
        ),
        "item 2: the L^{2,2} curve is squared before classification".into(),
        "item 3: s1 = tau/8, s2 = tau/6, z = tau/4".into(),
        format!("items 4-5: unimodular pairs in S_p for p = {p} on two moduli inside the annulus"),
    ];
    Ok(ExperimentReport::new(config, checks, tables, notes))
}
