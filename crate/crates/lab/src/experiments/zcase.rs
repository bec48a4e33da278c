use std::f64::consts::PI;

use hometree::operators::{laplacian_lattice, LatticeFunction};
use hometree::Complex64;
use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution as _, UnitDisc};

use super::c;
use crate::config::ExperimentConfig;
use crate::error::{LabError, LabResult};
use crate::report::{Check, ExperimentReport, Table};
use crate::thresholds::{LATTICE_EIGEN, PROJECTION};

const PLANE_HALF_WIDTH: i64 = 10;

fn wave(m: i64, alpha: f64) -> Complex64 {
    Complex64::from_polar(1.0, m as f64 * alpha)
}

/// Sup of `|ℒu - λu|` over the shrunken window.
fn eigen_defect(u: &LatticeFunction, lambda: f64) -> LabResult<f64> {
    let lu = laplacian_lattice(u)?;
    Ok(lu
        .iter()
        .map(|(m, v)| (v - lambda * u.get(&m).expect("inner point")).norm())
        .fold(0.0, f64::max))
}

/// Relative least-squares residual of `f` against
/// `{e^{imα}, m e^{imα}, e^{-imα}, m e^{-imα}}`.
fn projection_residual(f: &LatticeFunction, alpha: f64) -> LabResult<f64> {
    let points: Vec<(i64, Complex64)> = f.iter().map(|(m, v)| (m[0], v)).collect();
    let basis = |m: i64, j: usize| -> Complex64 {
        let mf = m as f64;
        match j {
            0 => wave(m, alpha),
            1 => mf * wave(m, alpha),
            2 => wave(m, -alpha),
            _ => mf * wave(m, -alpha),
        }
    };
    let a = DMatrix::from_fn(points.len(), 4, |i, j| basis(points[i].0, j));
    let b = DVector::from_iterator(points.len(), points.iter().map(|p| p.1));
    let x = a
        .clone()
        .svd(true, true)
        .solve(&b, 1e-12)
        .map_err(|e| LabError::Config(format!("projection failed: {e}")))?;
    Ok((a * x - &b).norm() / b.norm())
}

pub fn zcase(config: &ExperimentConfig) -> LabResult<ExperimentReport> {
    let alpha = config.alpha;
    if !(alpha > 0.0 && alpha <= PI) {
        return Err(LabError::Config(format!("zcase needs alpha in (0, π], got {alpha}")));
    }
    let k_max = config.k_max();
    let w = config.radius as i64;
    if w < k_max as i64 + 4 {
        return Err(LabError::Config(format!("window half-width {w} too small for k up to {k_max}")));
    }
    let lambda = 1.0 - alpha.cos();
    let mut checks = Vec::new();

    // (a) plane wave on ℤ
    let u = LatticeFunction::from_fn(vec![-w], vec![w], |m| wave(m[0], alpha))?;
    checks.push(Check::below("z1_eigen_defect", eigen_defect(&u, lambda)?, LATTICE_EIGEN));
    let lu = laplacian_lattice(&u)?;
    let measured = lu.get(&[0]).expect("origin is inner") / u.get(&[0]).expect("origin");
    checks.push(Check::below("z1_eigenvalue_error", (measured - lambda).norm(), LATTICE_EIGEN));
    checks.push(Check::info("z1_eigenvalue", measured.re));

    // (b) chain ℒf_k = (1 - cos α) f_{k+1} from a degree-one seed
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut coeff = || {
        let [x, y]: [f64; 2] = UnitDisc.sample(&mut rng);
        c(x, y)
    };
    let (p0, p1, q0, q1) = (coeff(), coeff(), coeff(), coeff());
    let mut f = LatticeFunction::from_fn(vec![-w], vec![w], |m| {
        let mf = m[0] as f64;
        (p1 * mf + p0) * wave(m[0], alpha) + (q1 * mf + q0) * wave(m[0], -alpha)
    })?;
    let mut chain = Table::new("chain", &["k", "window_half_width", "sup_abs", "projection_residual"]);
    let mut worst = 0.0f64;
    for k in 0..=k_max {
        if k > 0 {
            let lf = laplacian_lattice(&f)?;
            let vals = lf.values().iter().map(|v| v / lambda).collect();
            f = LatticeFunction::new(lf.lo().to_vec(), lf.hi().to_vec(), vals)?;
        }
        let r = projection_residual(&f, alpha)?;
        worst = worst.max(r);
        let sup = f.values().iter().map(|v| v.norm()).fold(0.0, f64::max);
        chain.push(vec![k.into(), (f.hi()[0]).into(), sup.into(), r.into()]);
    }
    checks.push(Check::below("max_projection_residual", worst, PROJECTION));

    // (c) plane wave on ℤ²
    let h = PLANE_HALF_WIDTH;
    let v = LatticeFunction::from_fn(vec![-h, -h], vec![h, h], |m| wave(m[0], alpha) * wave(m[1], alpha))?;
    checks.push(Check::below("z2_eigen_defect", eigen_defect(&v, lambda)?, LATTICE_EIGEN));

    let notes = vec![
        format!("alpha = {alpha}, eigenvalue 1 - cos(alpha) = {lambda}"),
        "the chain runs forward only; f_{k+1} = L f_k / (1 - cos alpha) on a window shrinking by one per step".into(),
        format!("the Z^2 plane wave uses frequency (alpha, alpha) on [-{h}, {h}]^2"),
    ];
    Ok(ExperimentReport::new(config, checks, vec![chain], notes))
}
