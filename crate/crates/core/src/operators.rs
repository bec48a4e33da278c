//! The Laplacian `ℒf(x) = f(x) - (1/(q+1)) Σ_{y~x} f(y)` on finite balls, on
//! radial profiles and on integer lattices, and the Poisson transform of
//! piecewise-constant boundary data.
//!
//! Applying `ℒ` to a function on `B_R` yields a function on `B_{R-1}`: the
//! outermost sphere lacks neighbours outside the ball. Lattice windows shrink
//! by one in each direction for the same reason. Nothing is padded.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::spectral::SpectralPoint;
use crate::tree::{BallFunction, RadialProfile, RayPrefix, TreeParams, Vertex};

/// Something the tree Laplacian acts on, losing one layer of support per step.
pub trait Laplace: Sized {
    fn apply_laplacian(&self) -> Result<Self>;
}

impl Laplace for BallFunction {
    fn apply_laplacian(&self) -> Result<Self> {
        laplacian(self)
    }
}

impl Laplace for RadialProfile {
    fn apply_laplacian(&self) -> Result<Self> {
        laplacian_radial(self)
    }
}

/// Laplacian on a ball; the result lives on `B_{R-1}`.
pub fn laplacian(f: &BallFunction) -> Result<BallFunction> {
    let radius = f.radius();
    if radius == 0 {
        return Err(Error::EmptyInterior { radius, needed: 1 });
    }
    let params = *f.params();
    let q = params.q() as usize;
    let scale = 1.0 / (params.q_f64() + 1.0);
    let vals = f.values();
    let mut out = Vec::with_capacity(params.ball_size(radius - 1) as usize);

    out.push(vals[0] - scale * vals[1..=q + 1].iter().sum::<Complex64>());
    for n in 1..radius {
        let here = params.sphere_offset(n);
        let up = params.sphere_offset(n - 1);
        let down = params.sphere_offset(n + 1);
        for rank in 0..params.sphere_size(n) as usize {
            let parent = if n == 1 { vals[0] } else { vals[up + rank / q] };
            let first_child = down + rank * q;
            let children: Complex64 = vals[first_child..first_child + q].iter().sum();
            out.push(vals[here + rank] - scale * (parent + children));
        }
    }
    BallFunction::new(params, radius - 1, out)
}

/// Laplacian of a radial function, via one parent and `q` children per sphere.
pub fn laplacian_radial(f: &RadialProfile) -> Result<RadialProfile> {
    let v = f.values();
    if v.len() < 2 {
        return Err(Error::EmptyInterior { radius: f.radius(), needed: 1 });
    }
    let q = f.params().q_f64();
    let mut out = Vec::with_capacity(v.len() - 1);
    out.push(v[0] - v[1]);
    for n in 1..v.len() - 1 {
        out.push(v[n] - (v[n - 1] + q * v[n + 1]) / (q + 1.0));
    }
    RadialProfile::new(*f.params(), out)
}

/// `k`-fold Laplacian; support shrinks by `k`.
pub fn laplacian_iter<F: Laplace + Clone>(f: &F, k: usize) -> Result<F> {
    let mut g = f.clone();
    for _ in 0..k {
        g = g.apply_laplacian()?;
    }
    Ok(g)
}

/// Boundary data constant on each cylinder of a fixed depth.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundaryData {
    params: TreeParams,
    depth: usize,
    values: Vec<Complex64>,
}

impl BoundaryData {
    pub fn new(params: TreeParams, depth: usize, values: Vec<Complex64>) -> Result<Self> {
        if depth == 0 {
            return Err(Error::InvalidParameter("boundary data depth must be at least 1".into()));
        }
        let expected = params.sphere_size(depth) as usize;
        if values.len() != expected {
            return Err(Error::LengthMismatch { expected, got: values.len() });
        }
        Ok(Self { params, depth, values })
    }

    pub fn constant(params: TreeParams, depth: usize, value: Complex64) -> Result<Self> {
        Self::new(params, depth.max(1), vec![value; params.sphere_size(depth.max(1)) as usize])
    }

    /// Indicator of a cylinder, resolved on depth-`depth` cylinders.
    pub fn indicator(params: TreeParams, depth: usize, cylinder: &RayPrefix) -> Result<Self> {
        if cylinder.depth() > depth {
            return Err(Error::DepthTooShallow { depth, needed: cylinder.depth() });
        }
        let values = RayPrefix::all_at_depth(&params, depth)
            .map(|c| {
                let inside = c.word()[..cylinder.depth()] == *cylinder.word();
                Complex64::new(if inside { 1.0 } else { 0.0 }, 0.0)
            })
            .collect();
        Self::new(params, depth, values)
    }

    pub fn params(&self) -> &TreeParams {
        &self.params
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Same function resolved on deeper cylinders: each value copied to its descendants.
    pub fn refine(&self, depth: usize) -> Self {
        if depth <= self.depth {
            return self.clone();
        }
        let copies = self.params.q().pow((depth - self.depth) as u32) as usize;
        let values = self
            .values
            .iter()
            .flat_map(|&v| std::iter::repeat_n(v, copies))
            .collect();
        Self { params: self.params, depth, values }
    }

    /// Linear combination `a·self + b·other` at the finer of the two depths.
    pub fn axpby(&self, a: Complex64, other: &Self, b: Complex64) -> Self {
        let depth = self.depth.max(other.depth);
        let (x, y) = (self.refine(depth), other.refine(depth));
        let values = x.values.iter().zip(&y.values).map(|(&u, &v)| a * u + b * v).collect();
        Self { params: self.params, depth, values }
    }
}

fn kernel_table(params: &TreeParams, z: &SpectralPoint, n: usize) -> Vec<Complex64> {
    // entry h + n holds q^{(1/2 + iz) h}
    let w = (0.5 + Complex64::i() * z.reduced()) * params.log_q();
    (0..=2 * n).map(|j| (w * (j as f64 - n as f64)).exp()).collect()
}

/// Poisson transform at one vertex, as an exact sum over the depth-`D` cylinders.
///
/// Requires `eta.depth() >= |x|`, where `h_ω(x)` is constant on each cylinder.
pub fn poisson(params: &TreeParams, z: &SpectralPoint, eta: &BoundaryData, x: &Vertex) -> Result<Complex64> {
    let n = x.len();
    if eta.depth < n {
        return Err(Error::DepthTooShallow { depth: eta.depth, needed: n });
    }
    let kernel = kernel_table(params, z, n);
    let mut sum = Complex64::new(0.0, 0.0);
    for (cyl, &value) in RayPrefix::all_at_depth(params, eta.depth).zip(&eta.values) {
        let h = crate::tree::height(x, &cyl)?;
        sum += kernel[(h + n as i64) as usize] * value;
    }
    Ok(sum / params.sphere_size(eta.depth) as f64)
}

/// Poisson transform on every vertex of `B_R`.
///
/// Boundary data shallower than `R` is refined first. Each vertex value is
/// accumulated by confluence depth from cylinder masses of its ancestors,
/// which regroups the per-cylinder sum of [`poisson`] in `O(|x|)` terms.
pub fn poisson_field(params: &TreeParams, z: &SpectralPoint, eta: &BoundaryData, radius: usize) -> BallFunction {
    let eta = eta.refine(radius);
    let depth = eta.depth;
    let q = params.q() as usize;
    let cell = 1.0 / params.sphere_size(depth) as f64;

    // masses[n][rank]: ν-weighted integral of η over the cylinder through that vertex
    let mut masses: Vec<Vec<Complex64>> = vec![Vec::new(); depth + 1];
    masses[depth] = eta.values.iter().map(|&v| v * cell).collect();
    for n in (0..depth).rev() {
        let fan = if n == 0 { q + 1 } else { q };
        masses[n] = masses[n + 1].chunks(fan).map(|c| c.iter().sum()).collect();
    }

    let kernel = kernel_table(params, z, radius);
    let k = |h: i64| kernel[(h + radius as i64) as usize];
    let mut values = Vec::with_capacity(params.ball_size(radius) as usize);
    values.push(masses[0][0]);
    for n in 1..=radius {
        for rank in 0..params.sphere_size(n) as usize {
            // ranks of the ancestors x_c, c = n, n-1, ..., 1
            let mut sum = Complex64::new(0.0, 0.0);
            let mut r = rank;
            let mut inner = Complex64::new(0.0, 0.0);
            for c in (1..=n).rev() {
                let m = masses[c][r];
                sum += k(2 * c as i64 - n as i64) * (m - inner);
                inner = m;
                r = if c == 1 { 0 } else { r / q };
            }
            sum += k(-(n as i64)) * (masses[0][0] - inner);
            values.push(sum);
        }
    }
    BallFunction::new(*params, radius, values).expect("ball size matches by construction")
}

/// A function on an axis-aligned box of `ℤ^d`, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeFunction {
    lo: Vec<i64>,
    hi: Vec<i64>,
    values: Vec<Complex64>,
}

impl LatticeFunction {
    /// Window `[lo, hi]` (inclusive) with values in row-major order.
    pub fn new(lo: Vec<i64>, hi: Vec<i64>, values: Vec<Complex64>) -> Result<Self> {
        if lo.is_empty() || lo.len() != hi.len() || lo.iter().zip(&hi).any(|(a, b)| a > b) {
            return Err(Error::InvalidParameter(format!("empty lattice window {lo:?}..={hi:?}")));
        }
        let expected = lo.iter().zip(&hi).map(|(a, b)| (b - a + 1) as usize).product();
        if values.len() != expected {
            return Err(Error::LengthMismatch { expected, got: values.len() });
        }
        Ok(Self { lo, hi, values })
    }

    pub fn from_fn(lo: Vec<i64>, hi: Vec<i64>, f: impl Fn(&[i64]) -> Complex64) -> Result<Self> {
        let mut values = Vec::new();
        let mut point = lo.clone();
        if !lo.is_empty() && lo.iter().zip(&hi).all(|(a, b)| a <= b) {
            loop {
                values.push(f(&point));
                let mut axis = point.len();
                loop {
                    if axis == 0 {
                        return Self::new(lo, hi, values);
                    }
                    axis -= 1;
                    if point[axis] < hi[axis] {
                        point[axis] += 1;
                        break;
                    }
                    point[axis] = lo[axis];
                }
            }
        }
        Self::new(lo, hi, values)
    }

    pub fn dim(&self) -> usize {
        self.lo.len()
    }

    pub fn lo(&self) -> &[i64] {
        &self.lo
    }

    pub fn hi(&self) -> &[i64] {
        &self.hi
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    fn strides(&self) -> Vec<usize> {
        let mut strides = vec![1usize; self.dim()];
        for axis in (0..self.dim().saturating_sub(1)).rev() {
            strides[axis] = strides[axis + 1] * (self.hi[axis + 1] - self.lo[axis + 1] + 1) as usize;
        }
        strides
    }

    pub fn get(&self, point: &[i64]) -> Option<Complex64> {
        if point.len() != self.dim() {
            return None;
        }
        let mut idx = 0;
        for ((&x, (&a, &b)), s) in point.iter().zip(self.lo.iter().zip(&self.hi)).zip(self.strides()) {
            if x < a || x > b {
                return None;
            }
            idx += (x - a) as usize * s;
        }
        Some(self.values[idx])
    }

    /// Iterator over `(point, value)` in storage order.
    pub fn iter(&self) -> impl Iterator<Item = (Vec<i64>, Complex64)> + '_ {
        let strides = self.strides();
        self.values.iter().enumerate().map(move |(i, &v)| {
            let point = strides
                .iter()
                .zip(&self.lo)
                .zip(&self.hi)
                .map(|((&s, &a), &b)| a + ((i / s) % (b - a + 1) as usize) as i64)
                .collect();
            (point, v)
        })
    }
}

/// `ℒf(m) = f(m) - (1/2d) Σ_{|m-k|=1} f(k)` on `ℤ^d`; the window shrinks by one per side.
pub fn laplacian_lattice(f: &LatticeFunction) -> Result<LatticeFunction> {
    let d = f.dim();
    if f.lo.iter().zip(&f.hi).any(|(a, b)| b - a < 2) {
        let extent = f.lo.iter().zip(&f.hi).map(|(a, b)| (b - a + 1) as usize).min().unwrap_or(0);
        return Err(Error::EmptyInterior { radius: extent, needed: 3 });
    }
    let lo: Vec<i64> = f.lo.iter().map(|a| a + 1).collect();
    let hi: Vec<i64> = f.hi.iter().map(|b| b - 1).collect();
    let strides = f.strides();
    let scale = 1.0 / (2 * d) as f64;
    LatticeFunction::from_fn(lo, hi, |m| {
        let idx: usize = m.iter().zip(&f.lo).zip(&strides).map(|((x, a), s)| (x - a) as usize * s).sum();
        let mut nb = Complex64::new(0.0, 0.0);
        for &s in &strides {
            nb += f.values[idx - s] + f.values[idx + s];
        }
        f.values[idx] - scale * nb
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::{gamma, phi_profile, phi_recur};
    use crate::tree::{radialize, vertices};
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn params(q: u32) -> TreeParams {
        TreeParams::new(q).unwrap()
    }

    /// Neighbour-list Laplacian built from words; oracle for the indexed version.
    fn laplacian_by_words(f: &BallFunction) -> BallFunction {
        let p = *f.params();
        BallFunction::from_fn(p, f.radius() - 1, |x| {
            let nb: Complex64 = x.neighbours(&p).iter().map(|y| f.get(y).unwrap()).sum();
            f.get(x).unwrap() - nb / (p.q_f64() + 1.0)
        })
    }

    fn ball_strategy(q: u32, radius: usize) -> impl Strategy<Value = BallFunction> {
        let p = params(q);
        let len = p.ball_size(radius) as usize;
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), len)
            .prop_map(move |v| BallFunction::new(p, radius, v.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap())
    }

    #[test]
    fn delta_at_root() {
        let p = params(2);
        let f = BallFunction::indicator(p, 2, &Vertex::root()).unwrap();
        let lf = laplacian(&f).unwrap();
        assert_eq!(lf.values()[0], c(1.0, 0.0));
        for v in lf.sphere(1) {
            assert!((v - c(-1.0 / 3.0, 0.0)).norm() < 1e-15);
        }
        let r = laplacian_radial(&RadialProfile::sphere_indicator(p, 2, 0)).unwrap();
        assert_eq!(r.at(0), c(1.0, 0.0));
        assert!((r.at(1) - c(-1.0 / 3.0, 0.0)).norm() < 1e-15);
    }

    #[test]
    fn constants_are_harmonic() {
        let p = params(3);
        let f = BallFunction::from_fn(p, 4, |_| c(1.0, 0.0));
        assert!(laplacian(&f).unwrap().max_abs() < 1e-15);
    }

    #[test]
    fn empty_interior() {
        let p = params(2);
        let f = BallFunction::zeros(p, 0);
        assert_eq!(laplacian(&f), Err(Error::EmptyInterior { radius: 0, needed: 1 }));
        let r = RadialProfile::new(p, vec![c(1.0, 0.0)]).unwrap();
        assert!(laplacian_radial(&r).is_err());
        assert!(laplacian_iter(&BallFunction::zeros(p, 2), 3).is_err());
    }

    #[test]
    fn indexed_laplacian_matches_neighbour_lists() {
        let p = params(3);
        let f = BallFunction::from_fn(p, 4, |x| c(x.index(&p) as f64 * 0.1, (x.len() as f64).sin()));
        let a = laplacian(&f).unwrap();
        let b = laplacian_by_words(&f);
        for (u, v) in a.values().iter().zip(b.values()) {
            assert!((u - v).norm() < 1e-13);
        }
    }

    #[test]
    fn spherical_functions_are_eigenfunctions() {
        for q in [2, 3] {
            let p = params(q);
            for z in [c(0.3, 0.1), c(0.0, 0.0), c(p.tau() / 2.0, 0.0), c(1.1, -0.5)] {
                let z = SpectralPoint::new(&p, z);
                let g = gamma(&p, &z);
                let phi = phi_profile(&p, &z, 6);
                let lf = laplacian(&phi.embed()).unwrap();
                let expected = phi.truncate(5).embed();
                for (u, v) in lf.values().iter().zip(expected.values()) {
                    assert!((u - g * v).norm() < 1e-10);
                }
                let lr = laplacian_radial(&phi).unwrap();
                for n in 0..=5 {
                    assert!((lr.at(n) - g * phi.at(n)).norm() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn iterated_laplacian_scales_eigenfunction() {
        let p = params(2);
        let z = SpectralPoint::new(&p, c(0.7, 0.2));
        let g = gamma(&p, &z);
        let phi = phi_recur(&p, &z, 12);
        assert_eq!(laplacian_iter(&phi, 0).unwrap(), phi);
        let l5 = laplacian_iter(&phi, 5).unwrap();
        assert_eq!(l5.radius(), 7);
        for n in 0..=7 {
            assert!((l5.at(n) - g.powi(5) * phi.at(n)).norm() < 1e-9);
        }
        let ball = laplacian_iter(&phi.embed(), 5).unwrap();
        for (u, v) in ball.values().iter().zip(l5.embed().values()) {
            assert!((u - v).norm() < 1e-9);
        }
    }

    #[test]
    fn poisson_examples() {
        let p = params(2);
        let one = BoundaryData::constant(p, 8, c(1.0, 0.0)).unwrap();
        for z in [c(0.3, 0.0), c(0.0, 0.0), c(1.7, 0.4), c(p.tau() / 2.0, -0.3)] {
            let z = SpectralPoint::new(&p, z);
            let phi = phi_profile(&p, &z, 8);
            for x in vertices(&p, 8).step_by(11) {
                let v = poisson(&p, &z, &one, &x).unwrap();
                assert!((v - phi.at(x.len())).norm() < 1e-12);
            }
        }

        let cyl = RayPrefix::new(&p, vec![1]).unwrap();
        let eta = BoundaryData::indicator(p, 1, &cyl).unwrap();
        let z0 = SpectralPoint::new(&p, c(0.0, 0.0));
        let at_root = poisson(&p, &z0, &eta, &Vertex::root()).unwrap();
        assert!((at_root - c(1.0 / 3.0, 0.0)).norm() < 1e-15);

        let x = Vertex::new(&p, vec![1]).unwrap();
        let v = poisson(&p, &z0, &eta, &x).unwrap();
        assert!((v - c(2f64.sqrt() / 3.0, 0.0)).norm() < 1e-15);
        assert!((v.re - 0.4714045).abs() < 1e-7);
        let refined = poisson(&p, &z0, &eta.refine(4), &x).unwrap();
        assert!((refined - v).norm() < 1e-15);

        let deep = Vertex::new(&p, vec![1, 0]).unwrap();
        assert_eq!(
            poisson(&p, &z0, &eta, &deep),
            Err(Error::DepthTooShallow { depth: 1, needed: 2 })
        );
    }

    #[test]
    fn poisson_field_matches_pointwise_sum() {
        let p = params(3);
        let values: Vec<_> = (0..p.sphere_size(4)).map(|i| c((i as f64 * 0.7).sin(), (i as f64 * 0.3).cos())).collect();
        let eta = BoundaryData::new(p, 4, values).unwrap();
        let z = SpectralPoint::new(&p, c(0.45, 0.2));
        let field = poisson_field(&p, &z, &eta, 4);
        for x in vertices(&p, 4) {
            let v = poisson(&p, &z, &eta, &x).unwrap();
            assert!((field.get(&x).unwrap() - v).norm() < 1e-13);
        }
        // R beyond the data depth: automatic refinement
        let wide = poisson_field(&p, &z, &eta, 5);
        let lf = laplacian(&wide).unwrap();
        let g = gamma(&p, &z);
        for (u, v) in lf.values().iter().zip(wide.values()) {
            assert!((u - g * v).norm() < 1e-9);
        }
    }

    #[test]
    fn lattice_plane_waves() {
        let alpha = 0.9;
        let f = LatticeFunction::from_fn(vec![-10], vec![10], |m| Complex64::from_polar(1.0, m[0] as f64 * alpha)).unwrap();
        let lf = laplacian_lattice(&f).unwrap();
        assert_eq!(lf.lo(), &[-9]);
        for (m, v) in lf.iter() {
            assert!((v - (1.0 - alpha.cos()) * f.get(&m).unwrap()).norm() < 1e-12);
        }
        let ones = LatticeFunction::from_fn(vec![0], vec![5], |_| c(1.0, 0.0)).unwrap();
        assert!(laplacian_lattice(&ones).unwrap().values().iter().all(|v| v.norm() < 1e-15));

        let (a, b) = (0.4, 1.3);
        let f2 = LatticeFunction::from_fn(vec![0, 0], vec![19, 19], |m| {
            Complex64::from_polar(1.0, m[0] as f64 * a + m[1] as f64 * b)
        })
        .unwrap();
        let lf2 = laplacian_lattice(&f2).unwrap();
        assert_eq!(lf2.values().len(), 18 * 18);
        let eig = 1.0 - (a.cos() + b.cos()) / 2.0;
        for (m, v) in lf2.iter() {
            assert!((v - eig * f2.get(&m).unwrap()).norm() < 1e-12);
        }
        let thin = LatticeFunction::from_fn(vec![0, 0], vec![1, 5], |_| c(1.0, 0.0)).unwrap();
        assert!(matches!(laplacian_lattice(&thin), Err(Error::EmptyInterior { .. })));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn radial_laplacian_agrees_with_ball(vals in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 11), q in 2u32..4) {
            let p = params(q);
            let prof = RadialProfile::new(p, vals.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap();
            let a = laplacian_radial(&prof).unwrap().embed();
            let b = laplacian(&prof.embed()).unwrap();
            for (u, v) in a.values().iter().zip(b.values()) {
                prop_assert!((u - v).norm() < 1e-14);
            }
        }

        #[test]
        fn radialization_commutes(f in ball_strategy(2, 5)) {
            let a = radialize(&laplacian(&f).unwrap());
            let b = laplacian_radial(&radialize(&f)).unwrap();
            for n in 0..=4 {
                prop_assert!((a.at(n) - b.at(n)).norm() < 1e-12);
            }
            // projection, contraction
            let r = radialize(&f);
            let rr = radialize(&r.embed());
            for n in 0..=5 {
                prop_assert!((rr.at(n) - r.at(n)).norm() < 1e-15);
            }
            prop_assert!(r.embed().max_abs() <= f.max_abs() + 1e-15);
        }

        #[test]
        fn laplacian_is_symmetric(f in ball_strategy(2, 4), g in ball_strategy(2, 4)) {
            // supports pulled inside B_3 so that every neighbour is in the ball
            let p = params(2);
            let cut = |h: &BallFunction| BallFunction::from_fn(p, 4, |x| if x.len() <= 3 { h.get(x).unwrap() } else { c(0.0, 0.0) });
            let (f, g) = (cut(&f), cut(&g));
            let inner = |a: &BallFunction, b: &BallFunction| -> Complex64 {
                a.values().iter().zip(b.values()).map(|(u, v)| u * v.conj()).sum()
            };
            let lf = laplacian(&f).unwrap();
            let lg = laplacian(&g).unwrap();
            let lhs = inner(&lf, &g.restrict(3).unwrap());
            let rhs = inner(&f.restrict(3).unwrap(), &lg);
            prop_assert!((lhs - rhs).norm() < 1e-12);
        }

        #[test]
        fn laplacian_sup_bound(f in ball_strategy(3, 3)) {
            prop_assert!(laplacian(&f).unwrap().max_abs() <= 2.0 * f.max_abs() + 1e-14);
        }

        #[test]
        fn laplacian_iter_is_linear(f in ball_strategy(2, 5), g in ball_strategy(2, 5), a in -2.0f64..2.0, b in -2.0f64..2.0) {
            let (a, b) = (c(a, 0.3), c(b, -0.1));
            let lhs = laplacian_iter(&f.axpby(a, &g, b).unwrap(), 3).unwrap();
            let rhs = laplacian_iter(&f, 3).unwrap().axpby(a, &laplacian_iter(&g, 3).unwrap(), b).unwrap();
            for (u, v) in lhs.values().iter().zip(rhs.values()) {
                prop_assert!((u - v).norm() < 1e-12);
            }
        }

        #[test]
        fn poisson_fields_are_eigenfunctions(vals in prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 96), re in -4.0f64..4.0, im in -0.5f64..0.5) {
            let p = params(2);
            let eta = BoundaryData::new(p, 6, vals.into_iter().map(|(a, b)| c(a, b)).collect()).unwrap();
            let z = SpectralPoint::new(&p, c(re, im));
            let field = poisson_field(&p, &z, &eta, 6);
            let g = gamma(&p, &z);
            let lf = laplacian(&field).unwrap();
            for (u, v) in lf.values().iter().zip(field.values()) {
                prop_assert!((u - g * v).norm() < 1e-9);
            }
        }

        #[test]
        fn poisson_field_is_linear(a in prop::collection::vec(-1.0f64..1.0, 24), b in prop::collection::vec(-1.0f64..1.0, 24)) {
            let p = params(2);
            let ea = BoundaryData::new(p, 4, a.iter().map(|&v| c(v, 0.0)).collect()).unwrap();
            let eb = BoundaryData::new(p, 4, b.iter().map(|&v| c(0.0, v)).collect()).unwrap();
            let z = SpectralPoint::new(&p, c(0.3, 0.0));
            let (s, t) = (c(0.5, 1.0), c(-2.0, 0.25));
            let lhs = poisson_field(&p, &z, &ea.axpby(s, &eb, t), 4);
            let rhs = poisson_field(&p, &z, &ea, 4).axpby(s, &poisson_field(&p, &z, &eb, 4), t).unwrap();
            for (u, v) in lhs.values().iter().zip(rhs.values()) {
                prop_assert!((u - v).norm() < 1e-12);
            }
        }
    }
}
