use hometree::operators::{laplacian, laplacian_radial};
use hometree::spectral::{gamma, phi_profile, phi_recur, SpectralPoint, Strip};
use hometree::tree::TreeParams;

use super::{c, params};
use crate::config::ExperimentConfig;
use crate::error::{LabError, LabResult};
use crate::report::{Check, ExperimentReport, Table};
use crate::thresholds::{CLOSED_VS_RECURRENCE, EIGEN_RESIDUAL};

/// `per_axis²` points of `S_p` with real part in `[0, τ/2]`, corners included.
///
/// For `p = 2` the strip is the real line and the grid is `per_axis²` points on it.
pub fn z_grid(params: &TreeParams, p: f64, per_axis: usize) -> LabResult<Vec<SpectralPoint>> {
    let width = Strip::new(p)?.half_width();
    let half = params.tau() / 2.0;
    let frac = |i: usize, n: usize| i as f64 / (n - 1) as f64;
    let points = if width == 0.0 {
        let n = per_axis * per_axis;
        (0..n).map(|i| c(half * frac(i, n), 0.0)).collect::<Vec<_>>()
    } else {
        let mut v = Vec::with_capacity(per_axis * per_axis);
        for i in 0..per_axis {
            for j in 0..per_axis {
                v.push(c(half * frac(j, per_axis), -width + 2.0 * width * frac(i, per_axis)));
            }
        }
        v
    };
    Ok(points.into_iter().map(|z| SpectralPoint::new(params, z)).collect())
}

pub fn eigencheck(config: &ExperimentConfig) -> LabResult<ExperimentReport> {
    let params = params(config)?;
    let radius = config.radius;
    if radius < 2 {
        return Err(LabError::Config(format!("eigencheck needs R >= 2, got {radius}")));
    }
    let grid = z_grid(&params, config.p, 5)?;

    let mut table = Table::new(
        "residuals",
        &["z_re", "z_im", "gamma_re", "gamma_im", "ball_residual", "radial_residual", "recurrence_gap"],
    );
    let (mut ball_max, mut radial_max, mut gap_max) = (0.0f64, 0.0f64, 0.0f64);
    for z in &grid {
        let g = gamma(&params, z);
        let profile = phi_profile(&params, z, radius);
        let ball = profile.embed();

        let lball = laplacian(&ball)?;
        let inner = ball.restrict(radius - 1)?;
        let ball_res = lball
            .values()
            .iter()
            .zip(inner.values())
            .map(|(l, f)| (l - g * f).norm())
            .fold(0.0, f64::max);

        let lrad = laplacian_radial(&profile)?;
        let radial_res = lrad
            .values()
            .iter()
            .zip(profile.values())
            .map(|(l, f)| (l - g * f).norm())
            .fold(0.0, f64::max);

        let oracle = phi_recur(&params, z, radius);
        let gap = profile
            .values()
            .iter()
            .zip(oracle.values())
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max);

        ball_max = ball_max.max(ball_res);
        radial_max = radial_max.max(radial_res);
        gap_max = gap_max.max(gap);
        let zv = z.z();
        table.push(vec![
            zv.re.into(),
            zv.im.into(),
            g.re.into(),
            g.im.into(),
            ball_res.into(),
            radial_res.into(),
            gap.into(),
        ]);
    }

    let checks = vec![
        Check::below("max_ball_residual", ball_max, EIGEN_RESIDUAL),
        Check::below("max_radial_residual", radial_max, EIGEN_RESIDUAL),
        Check::below("max_recurrence_gap", gap_max, CLOSED_VS_RECURRENCE),
        Check::info("grid_points", grid.len() as f64),
    ];
    let notes = vec![format!(
        "residuals are sup norms on B_{} for the ball Laplacian and on radii 0..{} for the radial one",
        radius - 1,
        radius - 1
    )];
    Ok(ExperimentReport::new(config, checks, vec![table], notes))
}
