//! L^p norms and Lorentz quasinorms on counting measure, and growth curves of
//! truncated norms of radial functions.
//!
//! Every finitely supported function is reduced to its distribution: pairs
//! `(|value|, multiplicity)`. Radial functions contribute one pair per sphere
//! with multiplicity `|S_n|` held as a float, so radii of several hundred are
//! handled without materializing vertices.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tree::{BallFunction, RadialProfile, TreeParams};

/// A finitely supported function seen through its level sets.
#[derive(Debug, Clone, PartialEq)]
pub struct Distribution {
    /// `(magnitude, multiplicity)`, magnitudes positive, sorted decreasing, distinct.
    levels: Vec<(f64, f64)>,
}

impl Distribution {
    pub fn from_weighted(pairs: impl IntoIterator<Item = (f64, f64)>) -> Self {
        let mut raw: Vec<(f64, f64)> = pairs.into_iter().filter(|&(v, m)| v > 0.0 && m > 0.0).collect();
        raw.sort_by(|a, b| b.0.total_cmp(&a.0));
        let mut levels: Vec<(f64, f64)> = Vec::with_capacity(raw.len());
        for (v, m) in raw {
            match levels.last_mut() {
                Some(last) if last.0 == v => last.1 += m,
                _ => levels.push((v, m)),
            }
        }
        Self { levels }
    }

    pub fn from_values(values: &[Complex64]) -> Self {
        Self::from_weighted(values.iter().map(|v| (v.norm(), 1.0)))
    }

    pub fn from_ball(f: &BallFunction) -> Self {
        Self::from_values(f.values())
    }

    pub fn from_radial(f: &RadialProfile) -> Self {
        let params = f.params();
        Self::from_weighted(f.values().iter().enumerate().map(|(n, v)| (v.norm(), params.sphere_size_f64(n))))
    }

    pub fn levels(&self) -> &[(f64, f64)] {
        &self.levels
    }

    /// Size of the support.
    pub fn support_size(&self) -> f64 {
        self.levels.iter().map(|l| l.1).sum()
    }

    pub fn sup(&self) -> f64 {
        self.levels.first().map_or(0.0, |l| l.0)
    }
}

fn check_exponent(p: f64, what: &str) -> Result<()> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidParameter(format!("{what} must be at least 1, got {p}")));
    }
    Ok(())
}

/// `(Σ_x |f(x)|^p)^{1/p}`; `p = ∞` gives the maximum.
pub fn lp_norm(f: &Distribution, p: f64) -> Result<f64> {
    check_exponent(p, "exponent p")?;
    if p.is_infinite() {
        return Ok(f.sup());
    }
    let sum: f64 = f.levels.iter().map(|&(v, m)| (m.ln() + p * v.ln()).exp()).sum();
    Ok(sum.powf(1.0 / p))
}

/// `‖f‖_{p,∞} = max_k k^{1/p} a_k` over the decreasing rearrangement `a_k`.
pub fn weak_quasinorm(f: &Distribution, p: f64) -> Result<f64> {
    if p.is_nan() || p <= 1.0 {
        return Err(Error::InvalidParameter(format!("weak quasinorm needs p > 1, got {p}")));
    }
    let mut count = 0.0;
    let mut best: f64 = 0.0;
    for &(v, m) in &f.levels {
        count += m;
        best = best.max(v * count.powf(1.0 / p));
    }
    Ok(best)
}

/// `ln Σ_{k=a}^{b} k^e` for integers `1 <= a <= b`, possibly far beyond 2^53.
fn ln_power_sum(a: f64, b: f64, e: f64) -> f64 {
    const EXACT: f64 = 10_000.0;
    if e == 0.0 {
        return (b - a + 1.0).ln();
    }
    if b - a < 2.0 * EXACT {
        let mut s = 0.0;
        let mut k = a;
        while k <= b {
            s += k.powf(e);
            k += 1.0;
        }
        return s.ln();
    }
    // exact head, Euler–Maclaurin tail on [a + EXACT, b] scaled by b^{e+1}
    let head: f64 = (0..EXACT as usize).map(|i| (a + i as f64).powf(e)).sum();
    let lo = a + EXACT;
    let ratio = lo / b;
    let tail_scaled = if (e + 1.0).abs() < 1e-15 {
        (b / lo).ln() * b.powf(-(e + 1.0))
    } else {
        (1.0 - ratio.powf(e + 1.0)) / (e + 1.0)
    } + (ratio.powf(e) / b + 1.0 / b) / 2.0
        + e * (1.0 - ratio.powf(e - 1.0)) / (12.0 * b * b);
    let ln_tail = (e + 1.0) * b.ln() + tail_scaled.ln();
    let m = ln_tail.max(head.ln());
    m + ((head.ln() - m).exp() + (ln_tail - m).exp()).ln()
}

/// `‖f‖_{p,r} = (Σ_k k^{r/p - 1} a_k^r)^{1/r}`; `r = ∞` is [`weak_quasinorm`].
pub fn lorentz_norm(f: &Distribution, p: f64, r: f64) -> Result<f64> {
    if p.is_nan() || p <= 1.0 {
        return Err(Error::InvalidParameter(format!("Lorentz norm needs p > 1, got {p}")));
    }
    check_exponent(r, "Lorentz exponent r")?;
    if r.is_infinite() {
        return weak_quasinorm(f, p);
    }
    let e = r / p - 1.0;
    let mut start = 1.0;
    let mut sum = 0.0;
    for &(v, m) in &f.levels {
        let end = start + m - 1.0;
        sum += (ln_power_sum(start, end, e) + r * v.ln()).exp();
        start = end + 1.0;
    }
    Ok(sum.powf(1.0 / r))
}

/// Which truncated norm a growth curve tracks.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GrowthNorm {
    /// `L^{p,∞}`
    Weak,
    /// `L^{p,r}`
    Lorentz(f64),
    /// `L^p`
    Strong,
}

/// Doubling ratio below which a curve counts as bounded.
pub const BOUNDED_RATIO: f64 = 1.1;
/// Log-log slope above which a curve counts as divergent.
pub const DIVERGENT_LOG_SLOPE: f64 = 0.5;
/// Band for the log-log slope of a linearly growing curve.
pub const LINEAR_EXPONENT_BAND: (f64, f64) = (0.8, 1.2);

/// Norms of the truncations `f·1_{B_R}` for increasing `R`.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthCurve {
    pub radii: Vec<usize>,
    pub values: Vec<f64>,
}

/// Growth diagnosis of a curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    Bounded,
    Divergent,
    Inconclusive,
}

fn least_squares_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

impl GrowthCurve {
    pub fn value_at(&self, radius: usize) -> Option<f64> {
        self.radii.iter().position(|&r| r == radius).map(|i| self.values[i])
    }

    /// Curve of `value^k`, e.g. the `p`-th power sums of an `L^p` curve.
    pub fn powered(&self, k: f64) -> Self {
        Self { radii: self.radii.clone(), values: self.values.iter().map(|v| v.powf(k)).collect() }
    }

    fn tail(&self, from: usize) -> (Vec<f64>, Vec<f64>) {
        self.radii
            .iter()
            .zip(&self.values)
            .filter(|(&r, _)| r >= from)
            .map(|(&r, &v)| (r as f64, v))
            .unzip()
    }

    /// Least-squares slope of value against `R` over radii `>= from`.
    pub fn linear_slope(&self, from: usize) -> f64 {
        let (x, y) = self.tail(from);
        least_squares_slope(&x, &y)
    }

    /// Least-squares slope of `ln value` against `ln R` over radii `>= from`.
    pub fn log_slope(&self, from: usize) -> f64 {
        let (x, y) = self.tail(from);
        let lx: Vec<f64> = x.iter().map(|v| v.ln()).collect();
        let ly: Vec<f64> = y.iter().map(|v| v.ln()).collect();
        least_squares_slope(&lx, &ly)
    }

    /// Value at the last radius over the value at half that radius.
    pub fn doubling_ratio(&self) -> Option<f64> {
        let last = *self.radii.last()?;
        Some(self.values.last()? / self.value_at(last / 2)?)
    }

    /// Bounded if the doubling ratio is below [`BOUNDED_RATIO`], divergent if
    /// the log-log slope over the upper half exceeds [`DIVERGENT_LOG_SLOPE`].
    pub fn classify(&self) -> Growth {
        let Some(ratio) = self.doubling_ratio() else { return Growth::Inconclusive };
        let last = *self.radii.last().unwrap_or(&0);
        if ratio < BOUNDED_RATIO {
            Growth::Bounded
        } else if self.log_slope(last / 2) > DIVERGENT_LOG_SLOPE {
            Growth::Divergent
        } else {
            Growth::Inconclusive
        }
    }

    pub fn is_nondecreasing(&self) -> bool {
        self.values.windows(2).all(|w| w[1] >= w[0] * (1.0 - 1e-12))
    }
}

/// Truncated norms of the radial function `n ↦ f(n)` on `B_R` for each `R` in `radii`.
pub fn radial_growth_curve(
    params: &TreeParams,
    f: impl Fn(usize) -> Complex64,
    p: f64,
    radii: &[usize],
    norm: GrowthNorm,
) -> Result<GrowthCurve> {
    if radii.windows(2).any(|w| w[1] <= w[0]) {
        return Err(Error::InvalidParameter("growth curve radii must be increasing".into()));
    }
    let max_r = radii.last().copied().unwrap_or(0);
    let values: Vec<Complex64> = (0..=max_r).map(&f).collect();
    let curve = radii
        .iter()
        .map(|&r| {
            let dist = Distribution::from_weighted(
                values[..=r].iter().enumerate().map(|(n, v)| (v.norm(), params.sphere_size_f64(n))),
            );
            match norm {
                GrowthNorm::Weak => weak_quasinorm(&dist, p),
                GrowthNorm::Lorentz(r) => lorentz_norm(&dist, p, r),
                GrowthNorm::Strong => lp_norm(&dist, p),
            }
        })
        .collect::<Result<Vec<f64>>>()?;
    Ok(GrowthCurve { radii: radii.to_vec(), values: curve })
}
