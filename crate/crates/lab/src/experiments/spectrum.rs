use hometree::spectral::{ellipse_value, gamma, spectrum_membership, SpectralPoint, Strip};

use super::{c, params};
use crate::config::ExperimentConfig;
use crate::error::LabResult;
use crate::report::{Check, ExperimentReport, Table};
use crate::thresholds::{ELLIPSE_RESIDUAL, SEGMENT_ENDPOINT};

const BOUNDARY_SAMPLES: usize = 200;
const GRID_SIDE: usize = 41;

pub fn spectrum_map(config: &ExperimentConfig) -> LabResult<ExperimentReport> {
    let params = params(config)?;
    let p = config.p;
    let strip = Strip::new(p)?;
    let width = strip.half_width();
    let tau = params.tau();
    let b = params.b();
    let l = width * params.log_q();
    let mut checks = Vec::new();

    let mut boundary = Table::new("boundary", &["line_im", "s", "w_re", "w_im", "residual"]);
    let lines: Vec<f64> = if width == 0.0 { vec![0.0] } else { vec![width, -width] };
    let mut worst = 0.0f64;
    // on the segment the residual is a signed distance, negative inside
    let mut excess = f64::NEG_INFINITY;
    for &im in &lines {
        for j in 0..BOUNDARY_SAMPLES {
            let s = -tau / 2.0 + tau * j as f64 / BOUNDARY_SAMPLES as f64;
            let w = gamma(&params, &SpectralPoint::new(&params, c(s, im)));
            let residual = if width == 0.0 {
                spectrum_membership(&params, w, p)?.residual
            } else {
                ellipse_value(&params, w, p)? - 1.0
            };
            worst = worst.max(residual.abs());
            excess = excess.max(residual);
            boundary.push(vec![im.into(), s.into(), w.re.into(), w.im.into(), residual.into()]);
        }
    }

    if width == 0.0 {
        checks.push(Check::at_most("max_segment_excess", excess, SEGMENT_ENDPOINT));
        let lo = gamma(&params, &SpectralPoint::real(&params, 0.0));
        let hi = gamma(&params, &SpectralPoint::real(&params, tau / 2.0));
        checks.push(Check::below("lower_endpoint_error", (lo - c(1.0 - b, 0.0)).norm(), SEGMENT_ENDPOINT));
        checks.push(Check::below("upper_endpoint_error", (hi - c(1.0 + b, 0.0)).norm(), SEGMENT_ENDPOINT));
    } else {
        checks.push(Check::below("max_ellipse_residual", worst, ELLIPSE_RESIDUAL));
        let vertex = gamma(&params, &SpectralPoint::new(&params, c(0.0, width)));
        checks.push(Check::below(
            "left_vertex_error",
            (vertex - c(1.0 - b * l.cosh(), 0.0)).norm(),
            ELLIPSE_RESIDUAL,
        ));
        if strip.delta().abs() == 0.5 {
            // the ellipse of S_1 passes through the origin
            let e0 = ellipse_value(&params, c(0.0, 0.0), p)?;
            checks.push(Check::below("origin_residual", (e0 - 1.0).abs(), ELLIPSE_RESIDUAL));
        }
    }

    let half_re = b * l.cosh() + 0.1;
    let half_im = b * l.sinh() + 0.1;
    let mut grid = Table::new("membership", &["w_re", "w_im", "member", "residual"]);
    let mut members = 0usize;
    for i in 0..GRID_SIDE {
        for j in 0..GRID_SIDE {
            let t = |k: usize| -1.0 + 2.0 * k as f64 / (GRID_SIDE - 1) as f64;
            let w = c(1.0 + half_re * t(j), half_im * t(i));
            let m = spectrum_membership(&params, w, p)?;
            members += m.member as usize;
            grid.push(vec![w.re.into(), w.im.into(), m.member.into(), m.residual.into()]);
        }
    }
    checks.push(Check::info("grid_members", members as f64));

    let notes = vec![format!(
        "boundary lines Im z = ±{width}; b = {b}; {} grid points on a {GRID_SIDE}x{GRID_SIDE} lattice",
        GRID_SIDE * GRID_SIDE
    )];
    Ok(ExperimentReport::new(config, checks, vec![boundary, grid], notes))
}
