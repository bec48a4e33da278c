use hometree::norms::{radial_growth_curve, Growth, GrowthNorm};
use hometree::operators::laplacian;
use hometree::spectral::{find_unimodular_pair, gamma, phi_profile, SpectralPoint, Strip};
use hometree::tree::{BallFunction, TreeParams};

use super::{eigen_fit, params};
use crate::config::ExperimentConfig;
use crate::error::LabResult;
use crate::report::{Check, ExperimentReport, Table};
use crate::thresholds::{EIGEN_RESIDUAL, NON_EIGEN_EXPECTED, NON_EIGEN_RESIDUAL, UNIMODULAR_SLACK};

/// Radii of the truncation curves used to test weak-`L^{p'}` membership.
pub(crate) const CURVE_RADII: [usize; 10] = [20, 40, 60, 80, 100, 120, 140, 160, 180, 200];

/// `γ(z1)^k φ_{z1} + γ(z2)^k φ_{z2}` on `B_R`.
pub(crate) fn pair_term(params: &TreeParams, z1: &SpectralPoint, z2: &SpectralPoint, k: i64, radius: usize) -> BallFunction {
    let a = gamma(params, z1).powi(k as i32);
    let b = gamma(params, z2).powi(k as i32);
    let p1 = phi_profile(params, z1, radius);
    let p2 = phi_profile(params, z2, radius);
    let values: Vec<_> = p1.values().iter().zip(p2.values()).map(|(x, y)| a * x + b * y).collect();
    hometree::tree::RadialProfile::new(*params, values).expect("non-empty profile").embed()
}

/// Whether the weak-`L^{p'}` truncation curve of `φ_z` stays bounded.
pub(crate) fn weak_dual_growth(params: &TreeParams, z: &SpectralPoint, p: f64) -> LabResult<Growth> {
    let dual = Strip::new(p)?.conjugate_exponent();
    let profile = phi_profile(params, z, *CURVE_RADII.last().unwrap_or(&0));
    let curve = radial_growth_curve(params, |n| profile.at(n), dual, &CURVE_RADII, GrowthNorm::Weak)?;
    Ok(curve.classify())
}

pub fn roe_counterexample(config: &ExperimentConfig) -> LabResult<ExperimentReport> {
    let params = params(config)?;
    let radius = config.radius.max(2);
    let (z1, z2) = find_unimodular_pair(&params, config.modulus, config.p)?;
    let (g1, g2) = (gamma(&params, &z1), gamma(&params, &z2));
    let mut checks = Vec::new();
    let mut notes = Vec::new();

    let mut pair = Table::new("pair", &["z_re", "z_im", "gamma_re", "gamma_im", "gamma_abs"]);
    for (z, g) in [(&z1, g1), (&z2, g2)] {
        pair.push(vec![z.z().re.into(), z.z().im.into(), g.re.into(), g.im.into(), g.norm().into()]);
    }

    let mut sequence = Table::new("sequence", &["k", "sup_abs", "sup_abs_scaled"]);
    let mut sup_scaled = 0.0f64;
    for k in config.k_range[0]..=config.k_range[1] {
        let fk = pair_term(&params, &z1, &z2, k, radius);
        let sup = fk.max_abs();
        let scaled = sup / config.modulus.powi(k as i32);
        sup_scaled = sup_scaled.max(scaled);
        sequence.push(vec![k.into(), sup.into(), scaled.into()]);
    }
    let in_s1 = [&z1, &z2].iter().all(|z| z.z().im.abs() <= 0.5);
    if (config.modulus - 1.0).abs() < 1e-12 && in_s1 {
        checks.push(Check::at_most("sup_abs_fk", sup_scaled, 2.0 + UNIMODULAR_SLACK));
    } else {
        checks.push(Check::info("sup_abs_fk_over_modulus_pow_k", sup_scaled));
        notes.push("the bound by 2 applies only to unit modulus with both points in S_1".into());
    }

    let f0 = pair_term(&params, &z1, &z2, 0, radius);
    let f1 = pair_term(&params, &z1, &z2, 1, radius);
    let lf0 = laplacian(&f0)?;
    let chain = lf0
        .values()
        .iter()
        .zip(f1.restrict(radius - 1)?.values())
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    checks.push(Check::below("chain_residual", chain, EIGEN_RESIDUAL));

    let fit = eigen_fit(&f0)?;
    checks.push(Check::above("non_eigen_residual", fit.residual, NON_EIGEN_RESIDUAL));
    checks.push(Check::reference("non_eigen_residual_vs_expected", fit.residual, NON_EIGEN_EXPECTED));
    checks.push(Check::info("eigenvalue_gap", (g1 - g2).norm()));
    checks.push(Check::info("lambda_star_re", fit.lambda.re));
    checks.push(Check::info("lambda_star_im", fit.lambda.im));

    let dual = Strip::new(config.p)?.conjugate_exponent();
    if dual.is_finite() {
        for (name, z) in [("phi_z1_weak_bounded", &z1), ("phi_z2_weak_bounded", &z2)] {
            checks.push(Check::holds(name, weak_dual_growth(&params, z, config.p)? == Growth::Bounded));
        }
    } else {
        notes.push("p = 1: the dual space is L^∞ and the sup bound above is the size condition".into());
    }

    Ok(ExperimentReport::new(config, checks, vec![pair, sequence], notes))
}
