//! Spectral parameter calculus: the eigenvalue map `γ`, the c-function, the
//! spherical functions `φ_z` and the strips `S_p` whose images under `γ` are
//! the L^p spectra of the Laplacian.
//!
//! All quantities here are `τ`-periodic in `z` and, except for `c`, even.
//! [`SpectralPoint`] carries both the reduction of `z` to `[-τ/2, τ/2)` and a
//! canonical representative with real part in `[0, τ/2]`.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::tree::{RadialProfile, TreeParams};

/// Distance (in `z`) below which `z` is treated as lying on `(τ/2)ℤ`.
pub const EPS_BRANCH: f64 = 1e-9;

/// Inside this distance from `(τ/2)ℤ`, but beyond [`EPS_BRANCH`], the closed
/// form of `φ_z` loses digits to the pole of `c`; the recurrence is used.
pub const RECURRENCE_WINDOW: f64 = 1e-4;

/// Bracket width at which root bisection stops.
pub const BISECTION_WIDTH: f64 = 1e-13;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// A complex spectral parameter together with its reductions modulo `τ`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralPoint {
    z: Complex64,
    reduced: Complex64,
    canonical: Complex64,
}

impl SpectralPoint {
    pub fn new(params: &TreeParams, z: Complex64) -> Self {
        let tau = params.tau();
        let mut re = z.re;
        if !(-tau / 2.0..tau / 2.0).contains(&re) {
            re = (re + tau / 2.0).rem_euclid(tau) - tau / 2.0;
            if re >= tau / 2.0 {
                re -= tau;
            }
        }
        let reduced = Complex64::new(re, z.im);
        let canonical = if reduced.re < 0.0 { -reduced } else { reduced };
        Self { z, reduced, canonical }
    }

    pub fn real(params: &TreeParams, s: f64) -> Self {
        Self::new(params, Complex64::new(s, 0.0))
    }

    /// The parameter as given.
    pub fn z(&self) -> Complex64 {
        self.z
    }

    /// Representative with real part in `[-τ/2, τ/2)`.
    pub fn reduced(&self) -> Complex64 {
        self.reduced
    }

    /// Representative of `±z` with real part in `[0, τ/2]`.
    pub fn canonical(&self) -> Complex64 {
        self.canonical
    }

    pub fn neg(&self, params: &TreeParams) -> Self {
        Self::new(params, -self.z)
    }

    /// Distance from `z` to the lattice `(τ/2)ℤ`.
    pub fn distance_to_half_lattice(&self, params: &TreeParams) -> f64 {
        let c = self.canonical;
        c.norm().min((c - params.tau() / 2.0).norm())
    }
}

/// A strip `S_p = {|Im z| ≤ |δ_p|}` with `δ_p = 1/p - 1/2`, for `p ∈ [1, ∞]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Strip {
    p: f64,
    delta: f64,
}

impl Strip {
    pub fn new(p: f64) -> Result<Self> {
        if p.is_nan() || p < 1.0 {
            return Err(Error::InvalidParameter(format!("exponent p must lie in [1, ∞], got {p}")));
        }
        Ok(Self { p, delta: 1.0 / p - 0.5 })
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Hölder conjugate `p' = p/(p-1)`.
    pub fn conjugate_exponent(&self) -> f64 {
        if self.p == 1.0 {
            f64::INFINITY
        } else if self.p.is_infinite() {
            1.0
        } else {
            self.p / (self.p - 1.0)
        }
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// `δ_{p'} = -δ_p`.
    pub fn conjugate_delta(&self) -> f64 {
        -self.delta
    }

    pub fn half_width(&self) -> f64 {
        self.delta.abs()
    }

    /// Membership with a relative slack of `1e-12` on the boundary lines.
    pub fn contains(&self, z: Complex64) -> bool {
        z.im.abs() <= self.half_width() * (1.0 + 1e-12) + 1e-15
    }
}

fn q_pow(params: &TreeParams, w: Complex64) -> Complex64 {
    (w * params.log_q()).exp()
}

/// Eigenvalue map `γ(z) = 1 - b·cos(z log q)`.
pub fn gamma(params: &TreeParams, z: &SpectralPoint) -> Complex64 {
    1.0 - params.b() * (z.reduced() * params.log_q()).cos()
}

/// The c-function `c(z) = √q/(q+1) · (q^{1/2+iz} - q^{-1/2-iz}) / (q^{iz} - q^{-iz})`.
pub fn c_func(params: &TreeParams, z: &SpectralPoint) -> Result<Complex64> {
    if z.distance_to_half_lattice(params) < EPS_BRANCH {
        return Err(Error::NearPole { re: z.z().re, im: z.z().im, eps: EPS_BRANCH });
    }
    Ok(c_unchecked(params, z.reduced()))
}

fn c_unchecked(params: &TreeParams, z: Complex64) -> Complex64 {
    let q = params.q_f64();
    let num = q_pow(params, 0.5 + I * z) - q_pow(params, -0.5 - I * z);
    let den = q_pow(params, I * z) - q_pow(params, -I * z);
    q.sqrt() / (q + 1.0) * num / den
}

/// Spherical function `φ_z` at radius `n`, from its closed form.
///
/// Points within [`EPS_BRANCH`] of `τℤ` or `τ/2 + τℤ` use the degenerate
/// branches; points within [`RECURRENCE_WINDOW`] of them use [`phi_recur`].
pub fn phi_closed(params: &TreeParams, z: &SpectralPoint, n: usize) -> Complex64 {
    if n == 0 {
        return Complex64::new(1.0, 0.0);
    }
    let zc = z.canonical();
    let q = params.q_f64();
    let half = params.tau() / 2.0;
    let degenerate = |sign: f64| {
        let nf = n as f64;
        let v = ((q - 1.0) / (q + 1.0) * nf + 1.0) * q.powf(-nf / 2.0);
        Complex64::new(sign * v, 0.0)
    };
    if zc.norm() <= EPS_BRANCH {
        return degenerate(1.0);
    }
    if (zc - half).norm() <= EPS_BRANCH {
        return degenerate(if n.is_multiple_of(2) { 1.0 } else { -1.0 });
    }
    if z.distance_to_half_lattice(params) < RECURRENCE_WINDOW {
        return phi_recur(params, z, n).at(n);
    }
    let nf = n as f64;
    c_unchecked(params, zc) * q_pow(params, (I * zc - 0.5) * nf)
        + c_unchecked(params, -zc) * q_pow(params, (-I * zc - 0.5) * nf)
}

/// `φ_z` on radii `0..=n_max` from the closed form.
pub fn phi_profile(params: &TreeParams, z: &SpectralPoint, n_max: usize) -> RadialProfile {
    if z.distance_to_half_lattice(params) < RECURRENCE_WINDOW
        && z.distance_to_half_lattice(params) > EPS_BRANCH
    {
        return phi_recur(params, z, n_max);
    }
    RadialProfile::from_fn(*params, n_max, |n| phi_closed(params, z, n))
}

/// `φ_z` on radii `0..=n_max` from the radial eigen-recurrence
/// `φ(n+1) = ((q+1)(1-γ)φ(n) - φ(n-1)) / q`, `φ(0) = 1`, `φ(1) = 1 - γ`.
pub fn phi_recur(params: &TreeParams, z: &SpectralPoint, n_max: usize) -> RadialProfile {
    let q = params.q_f64();
    let one_minus_gamma = 1.0 - gamma(params, z);
    let mut values = Vec::with_capacity(n_max + 1);
    values.push(Complex64::new(1.0, 0.0));
    if n_max >= 1 {
        values.push(one_minus_gamma);
    }
    for n in 1..n_max {
        let next = ((q + 1.0) * one_minus_gamma * values[n] - values[n - 1]) / q;
        values.push(next);
    }
    RadialProfile::from_fn(*params, n_max, |n| values[n])
}

/// Outcome of a spectrum membership test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Membership {
    pub member: bool,
    /// `E(w) - 1` for the ellipse; signed distance outside the segment for `p = 2`.
    pub residual: f64,
}

/// Absolute slack allowed when testing membership in the degenerate segment.
pub const SEGMENT_TOL: f64 = 1e-12;

/// `E(w) = ((1 - Re w)/(b cosh(δ_p log q)))² + (Im w/(b sinh(δ_p log q)))²`.
///
/// `p = 2` has no ellipse and returns [`Error::DegenerateAxis`].
pub fn ellipse_value(params: &TreeParams, w: Complex64, p: f64) -> Result<f64> {
    let strip = Strip::new(p)?;
    let delta = strip.delta();
    if delta == 0.0 {
        return Err(Error::DegenerateAxis);
    }
    let l = delta * params.log_q();
    let a = (1.0 - w.re) / (params.b() * l.cosh());
    let c = w.im / (params.b() * l.sinh());
    Ok(a * a + c * c)
}

/// Whether `w` lies in the L^p spectrum `γ(S_p)`.
pub fn spectrum_membership(params: &TreeParams, w: Complex64, p: f64) -> Result<Membership> {
    let strip = Strip::new(p)?;
    if strip.delta() == 0.0 {
        let b = params.b();
        let residual = w.im.abs().max((1.0 - b) - w.re).max(w.re - (1.0 + b));
        return Ok(Membership { member: residual <= SEGMENT_TOL, residual });
    }
    let e = ellipse_value(params, w, p)?;
    Ok(Membership { member: e <= 1.0, residual: e - 1.0 })
}

/// Bisection for `|γ(s + i t)| = modulus` on `s ∈ [0, τ/2]`, where `|γ|` is increasing.
fn solve_on_line(params: &TreeParams, t: f64, modulus: f64) -> SpectralPoint {
    let f = |s: f64| gamma(params, &SpectralPoint::new(params, Complex64::new(s, t))).norm() - modulus;
    let (mut lo, mut hi) = (0.0, params.tau() / 2.0);
    while hi - lo > BISECTION_WIDTH {
        let mid = 0.5 * (lo + hi);
        if f(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = if f(lo).abs() <= f(hi).abs() { lo } else { hi };
    SpectralPoint::new(params, Complex64::new(s, t))
}

/// Two points of `S_p` with `|γ(z1)| = |γ(z2)| = modulus` and `γ(z1) ≠ γ(z2)`.
///
/// `modulus` must lie strictly between `γ(iδ_{p'})` and `γ(τ/2 + iδ_{p'})`.
/// Roots are searched on the horizontal lines `Im z = 0` and `Im z = |δ_{p'}|/2`
/// when `modulus ∈ (1-b, 1+b)`; otherwise on two lines inside the part of the
/// strip where `|γ|` attains `modulus`.
pub fn find_unimodular_pair(
    params: &TreeParams,
    modulus: f64,
    p: f64,
) -> Result<(SpectralPoint, SpectralPoint)> {
    let strip = Strip::new(p)?;
    let width = strip.half_width();
    let l = params.log_q();
    let b = params.b();
    let lo = 1.0 - b * (width * l).cosh();
    let hi = 1.0 + b * (width * l).cosh();
    if !(modulus > lo && modulus < hi) || width == 0.0 {
        return Err(Error::NoSolution(format!(
            "modulus {modulus} outside the open annulus ({lo}, {hi}) for p = {p}"
        )));
    }
    // smallest line height on which |γ| sweeps through `modulus`
    let threshold = |x: f64| if x > 1.0 { x.acosh() / l } else { 0.0 };
    let t_min = threshold((1.0 - modulus) / b).max(threshold((modulus - 1.0) / b));
    let lines = if t_min == 0.0 {
        [0.0, width / 2.0]
    } else {
        let span = width - t_min;
        [t_min + span / 3.0, t_min + 2.0 * span / 3.0]
    };
    let z1 = solve_on_line(params, lines[0], modulus);
    let z2 = solve_on_line(params, lines[1], modulus);
    for z in [&z1, &z2] {
        let r = (gamma(params, z).norm() - modulus).abs();
        if r > 1e-12 {
            return Err(Error::NoSolution(format!("root residual {r:e} too large at {:?}", z.z())));
        }
    }
    if (gamma(params, &z1) - gamma(params, &z2)).norm() < 1e-9 {
        return Err(Error::NoSolution("the two roots share an eigenvalue".into()));
    }
    Ok((z1, z2))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(q: u32) -> TreeParams {
        TreeParams::new(q).unwrap()
    }

    fn pt(p: &TreeParams, re: f64, im: f64) -> SpectralPoint {
        SpectralPoint::new(p, Complex64::new(re, im))
    }

    /// The eigenvalue map in its exponential form, independent of the cosine form.
    fn gamma_printed(p: &TreeParams, z: Complex64) -> Complex64 {
        let q = p.q_f64();
        1.0 - (q_pow(p, 0.5 + I * z) + q_pow(p, 0.5 - I * z)) / (q + 1.0)
    }

    #[test]
    fn reduction() {
        let p = params(2);
        let tau = p.tau();
        let z = pt(&p, 2.3 * tau + 0.1, 0.2);
        assert!((z.reduced() - Complex64::new(0.3 * tau + 0.1, 0.2)).norm() < 1e-12);
        let z = pt(&p, tau / 2.0, 0.0);
        assert!((z.reduced().re + tau / 2.0).abs() < 1e-15);
        assert!((z.canonical().re - tau / 2.0).abs() < 1e-15);
        let z = pt(&p, -0.4, 0.3);
        assert_eq!(z.canonical(), Complex64::new(0.4, -0.3));
    }

    #[test]
    fn gamma_examples() {
        let p = params(2);
        let tau = p.tau();
        let b = 2.0 * 2f64.sqrt() / 3.0;
        assert!((gamma(&p, &pt(&p, 0.0, 0.0)) - (1.0 - b)).norm() < 1e-15);
        assert!((gamma(&p, &pt(&p, 0.0, 0.0)).re - 0.0571910).abs() < 1e-7);
        assert!((gamma(&p, &pt(&p, tau / 2.0, 0.0)).re - 1.9428090).abs() < 1e-7);
        assert!((gamma(&p, &pt(&p, tau / 4.0, 0.0)) - 1.0).norm() < 1e-15);
        assert!((gamma_printed(&p, Complex64::new(tau / 4.0, 0.0)) - 1.0).norm() < 1e-15);
    }

    #[test]
    fn gamma_forms_agree() {
        for q in [2, 3, 7] {
            let p = params(q);
            for i in 0..40 {
                for j in 0..9 {
                    let z = Complex64::new(-7.0 + 0.37 * i as f64, -1.0 + 0.25 * j as f64);
                    let diff = gamma(&p, &SpectralPoint::new(&p, z)) - gamma_printed(&p, z);
                    assert!(diff.norm() < 1e-12, "q={q} z={z}");
                }
            }
        }
    }

    #[test]
    fn gamma_real_range_is_segment() {
        let p = params(3);
        let (mut lo, mut hi) = (f64::MAX, f64::MIN);
        for k in 0..=20000 {
            let s = -p.tau() / 2.0 + p.tau() * k as f64 / 20000.0;
            let g = gamma(&p, &pt(&p, s, 0.0));
            assert_eq!(g.im, 0.0);
            lo = lo.min(g.re);
            hi = hi.max(g.re);
        }
        assert!((lo - (1.0 - p.b())).abs() < 1e-12);
        assert!((hi - (1.0 + p.b())).abs() < 1e-12);
    }

    #[test]
    fn c_function() {
        let p = params(2);
        let tau = p.tau();
        let c = c_func(&p, &pt(&p, tau / 4.0, 0.0)).unwrap();
        assert!((c - 0.5).norm() < 1e-14);

        let z = pt(&p, tau / 8.0, 0.0);
        let (a, b) = (c_func(&p, &z).unwrap(), c_func(&p, &z.neg(&p)).unwrap());
        assert!((b - a.conj()).norm() < 1e-14);

        for i in 0..30 {
            for j in 0..7 {
                let z = pt(&p, -4.0 + 0.29 * i as f64, -0.5 + j as f64 / 6.0);
                if z.distance_to_half_lattice(&p) < 1e-3 {
                    continue;
                }
                let s = c_func(&p, &z).unwrap() + c_func(&p, &z.neg(&p)).unwrap();
                assert!((s - 1.0).norm() < 1e-12, "z={:?}", z.z());
            }
        }
        assert!(matches!(c_func(&p, &pt(&p, 0.0, 0.0)), Err(Error::NearPole { .. })));
        assert!(matches!(c_func(&p, &pt(&p, tau / 2.0 + 1e-10, 0.0)), Err(Error::NearPole { .. })));
    }

    #[test]
    fn phi_examples() {
        let p = params(2);
        let tau = p.tau();
        for z in [pt(&p, 0.3, 0.1), pt(&p, 0.0, 0.0), pt(&p, tau / 2.0, 0.0)] {
            assert_eq!(phi_closed(&p, &z, 0), Complex64::new(1.0, 0.0));
        }
        let v = phi_closed(&p, &pt(&p, 0.0, 0.0), 1);
        assert!((v.re - (1.0 / 3.0 + 1.0) / 2f64.sqrt()).abs() < 1e-15);
        assert!((v.re - 0.9428090).abs() < 1e-7);
        let v = phi_closed(&p, &pt(&p, tau / 2.0, 0.0), 2);
        assert!((v - 5.0 / 6.0).norm() < 1e-15);
        let rec = phi_recur(&p, &pt(&p, tau / 2.0, 0.0), 2);
        assert!((rec.at(1) + p.b()).norm() < 1e-15);
        assert!((rec.at(2) - 5.0 / 6.0).norm() < 1e-14);

        assert!((phi_recur(&p, &pt(&p, 0.0, 0.0), 1).at(1) - p.b()).norm() < 1e-15);
    }

    #[test]
    fn phi_near_degenerate_points_is_continuous() {
        let p = params(2);
        let half = p.tau() / 2.0;
        for base in [0.0, half] {
            let exact = phi_profile(&p, &pt(&p, base, 0.0), 30);
            for offset in [1e-11, 1e-7, 3e-5, 2e-4] {
                let near = phi_profile(&p, &pt(&p, base + offset, offset / 2.0), 30);
                for n in 0..=30 {
                    assert!((near.at(n) - exact.at(n)).norm() < 50.0 * offset, "base={base} off={offset} n={n}");
                }
            }
        }
    }

    #[test]
    fn closed_form_matches_recurrence() {
        for q in [2, 3] {
            let p = params(q);
            for i in 0..10 {
                for j in 0..10 {
                    let z = pt(&p, -p.tau() / 2.0 + p.tau() * i as f64 / 10.0, -0.5 + j as f64 / 9.0);
                    let rec = phi_recur(&p, &z, 30);
                    for n in 0..=30 {
                        let d = (phi_closed(&p, &z, n) - rec.at(n)).norm();
                        assert!(d < 1e-10, "q={q} z={:?} n={n} d={d:e}", z.z());
                    }
                }
            }
        }
    }

    #[test]
    fn phi_symmetries() {
        let p = params(3);
        for i in 0..12 {
            for j in 0..5 {
                let z = Complex64::new(-2.0 + 0.41 * i as f64, -0.5 + 0.25 * j as f64);
                let a = phi_profile(&p, &SpectralPoint::new(&p, z), 20);
                let b = phi_profile(&p, &SpectralPoint::new(&p, -z), 20);
                let c = phi_profile(&p, &SpectralPoint::new(&p, z + p.tau()), 20);
                for n in 0..=20 {
                    assert!((a.at(n) - b.at(n)).norm() < 1e-12);
                    assert!((a.at(n) - c.at(n)).norm() < 1e-12);
                }
                let g = |w| gamma(&p, &SpectralPoint::new(&p, w));
                assert!((g(z) - g(-z)).norm() < 1e-12 && (g(z) - g(z + p.tau())).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn phi_bounded_on_s1() {
        for q in [2, 3] {
            let p = params(q);
            for i in 0..25 {
                for im in [-0.5, -0.3, 0.0, 0.2, 0.5] {
                    let z = pt(&p, -p.tau() / 2.0 + p.tau() * i as f64 / 25.0, im);
                    let prof = phi_profile(&p, &z, 30);
                    assert!(prof.values().iter().all(|v| v.norm() <= 1.0 + 1e-10));
                }
            }
        }
    }

    #[test]
    fn strips() {
        let s = Strip::new(1.5).unwrap();
        assert!((s.delta() - (1.0 / 1.5 - 0.5)).abs() < 1e-15);
        let conj = Strip::new(s.conjugate_exponent()).unwrap();
        assert!((conj.delta() + s.delta()).abs() < 1e-15);
        assert_eq!(Strip::new(2.0).unwrap().delta(), 0.0);
        assert_eq!(Strip::new(1.0).unwrap().delta(), 0.5);
        assert_eq!(Strip::new(f64::INFINITY).unwrap().delta(), -0.5);
        assert!(Strip::new(0.5).is_err());
        assert!(s.contains(Complex64::new(10.0, 1.0 / 6.0)));
        assert!(!s.contains(Complex64::new(0.0, 0.2)));
    }

    #[test]
    fn ellipse_boundary_is_image_of_strip_edge() {
        let p = params(2);
        for pe in [1.0, 1.25, 1.5, 3.0] {
            let delta = Strip::new(pe).unwrap().delta();
            for k in 0..200 {
                let s = -p.tau() / 2.0 + p.tau() * k as f64 / 200.0;
                for sign in [1.0, -1.0] {
                    let w = gamma(&p, &pt(&p, s, sign * delta));
                    let m = spectrum_membership(&p, w, pe).unwrap();
                    assert!(m.residual.abs() < 1e-10, "p={pe} s={s}");
                }
            }
        }
    }

    #[test]
    fn membership_examples() {
        let p = params(2);
        let b = p.b();
        assert!(spectrum_membership(&p, Complex64::new(1.0 - b, 0.0), 2.0).unwrap().member);
        assert!(spectrum_membership(&p, Complex64::new(1.0 + b, 0.0), 2.0).unwrap().member);
        assert!(!spectrum_membership(&p, Complex64::new(0.0, 0.0), 2.0).unwrap().member);
        assert!(!spectrum_membership(&p, Complex64::new(1.0, 1e-6), 2.0).unwrap().member);
        assert_eq!(ellipse_value(&p, Complex64::new(1.0, 0.0), 2.0), Err(Error::DegenerateAxis));
        // p = 1: the ellipse passes through 0 = γ(i/2)
        let m = spectrum_membership(&p, Complex64::new(0.0, 0.0), 1.0).unwrap();
        assert!(m.residual.abs() < 1e-12);
        // interior of the strip maps inside
        let w = gamma(&p, &pt(&p, 1.3, 0.05));
        assert!(spectrum_membership(&p, w, 1.5).unwrap().residual < 0.0);
        let w = gamma(&p, &pt(&p, 1.3, 0.3));
        assert!(!spectrum_membership(&p, w, 1.5).unwrap().member);
    }

    #[test]
    fn unimodular_pair_on_s1() {
        let p = params(2);
        let (z1, z2) = find_unimodular_pair(&p, 1.0, 1.0).unwrap();
        assert!((z1.z() - Complex64::new(p.tau() / 4.0, 0.0)).norm() < 1e-12);
        assert!((gamma(&p, &z1) - 1.0).norm() < 1e-12);
        assert_eq!(z2.z().im, 0.25);
        assert!((gamma(&p, &z2).norm() - 1.0).abs() < 1e-12);
        assert!((gamma(&p, &z2) - 1.0).norm() > 1e-3);
    }

    #[test]
    fn unimodular_pair_annulus() {
        let p = params(2);
        let strip = Strip::new(1.5).unwrap();
        let inner = gamma(&p, &pt(&p, 0.0, strip.conjugate_delta())).re;
        let outer = gamma(&p, &pt(&p, p.tau() / 2.0, strip.conjugate_delta())).re;
        assert!(matches!(find_unimodular_pair(&p, inner, 1.5), Err(Error::NoSolution(_))));
        assert!(matches!(find_unimodular_pair(&p, outer, 1.5), Err(Error::NoSolution(_))));
        assert!(find_unimodular_pair(&p, 1.0, 2.0).is_err());
        // moduli inside the annulus, including ones outside the real segment [1-b, 1+b]
        for t in [0.001, 0.05, 0.3, 0.5, 0.9, 0.999] {
            let m = inner + t * (outer - inner);
            let (z1, z2) = find_unimodular_pair(&p, m, 1.5).unwrap();
            for z in [z1, z2] {
                assert!(strip.contains(z.z()));
                assert!((gamma(&p, &z).norm() - m).abs() < 1e-12);
            }
            assert!((gamma(&p, &z1) - gamma(&p, &z2)).norm() > 1e-9);
        }
    }
}
