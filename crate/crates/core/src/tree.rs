//! Combinatorial geometry of the homogeneous tree of degree `q + 1`.
//!
//! Vertices are addressed by non-backtracking words relative to a fixed root
//! `o`: the first letter takes one of `q + 1` values and every later letter
//! one of `q` values, so a word of length `n` names a vertex at distance `n`
//! from the root. The same words, read as prefixes, name the cylinder sets
//! that partition the boundary. Nothing here stores an adjacency structure.
//!
//! Finite truncations of functions on the tree live on balls `B_R` in a fixed
//! canonical order: the root, then each sphere in increasing radius, each
//! sphere in lexicographic word order. Under that order the rank of a word
//! within its sphere is its mixed-radix value, which gives parent and child
//! indices by arithmetic alone.

use std::f64::consts::PI;

use num_complex::Complex64;
use num_rational::Ratio;

use crate::error::{Error, Result};

/// Branching parameter `q` and the constants derived from it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TreeParams {
    q: u32,
    log_q: f64,
    tau: f64,
    b: f64,
}

impl TreeParams {
    /// Tree in which every vertex has `q + 1` neighbours. Requires `q >= 2`.
    pub fn new(q: u32) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidParameter(format!(
                "branching number q must be at least 2, got {q}"
            )));
        }
        let qf = f64::from(q);
        let log_q = qf.ln();
        Ok(Self {
            q,
            log_q,
            tau: 2.0 * PI / log_q,
            b: 2.0 * qf.sqrt() / (qf + 1.0),
        })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn q_f64(&self) -> f64 {
        f64::from(self.q)
    }

    pub fn log_q(&self) -> f64 {
        self.log_q
    }

    /// Spectral period `2π / log q`.
    pub fn tau(&self) -> f64 {
        self.tau
    }

    /// `2√q / (q + 1)`, the half-length of the L² spectrum.
    pub fn b(&self) -> f64 {
        self.b
    }

    /// Number of vertices at distance `n` from the root.
    ///
    /// # Panics
    ///
    /// Panics if the count does not fit in a `u64`; use
    /// [`sphere_size_f64`](Self::sphere_size_f64) for large radii.
    pub fn sphere_size(&self, n: usize) -> u64 {
        if n == 0 {
            return 1;
        }
        let q = u64::from(self.q);
        u32::try_from(n - 1)
            .ok()
            .and_then(|e| q.checked_pow(e))
            .and_then(|p| p.checked_mul(q + 1))
            .unwrap_or_else(|| panic!("sphere size overflows u64 at radius {n}"))
    }

    /// Sphere cardinality as a float, usable far beyond the `u64` range.
    pub fn sphere_size_f64(&self, n: usize) -> f64 {
        if n == 0 {
            1.0
        } else {
            (self.q_f64() + 1.0) * self.q_f64().powi((n - 1) as i32)
        }
    }

    /// Number of vertices in the ball `B_R`: `1 + (q+1)(q^R - 1)/(q - 1)`.
    pub fn ball_size(&self, radius: usize) -> u64 {
        if radius == 0 {
            return 1;
        }
        let q = u64::from(self.q);
        let q_pow = u32::try_from(radius)
            .ok()
            .and_then(|e| q.checked_pow(e))
            .unwrap_or_else(|| panic!("ball size overflows u64 at radius {radius}"));
        1 + (q + 1) * ((q_pow - 1) / (q - 1))
    }

    /// Index in canonical ball order of the first vertex of sphere `n`.
    pub fn sphere_offset(&self, n: usize) -> usize {
        if n == 0 {
            0
        } else {
            self.ball_size(n - 1) as usize
        }
    }
}

/// A vertex named by its non-backtracking word from the root.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Vertex {
    word: Vec<u32>,
}

fn check_word(params: &TreeParams, word: &[u32]) -> Result<()> {
    for (i, &letter) in word.iter().enumerate() {
        let bound = if i == 0 { params.q + 1 } else { params.q };
        if letter >= bound {
            return Err(Error::InvalidParameter(format!(
                "letter {letter} at position {i} must be below {bound}"
            )));
        }
    }
    Ok(())
}

fn common_prefix_len(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

/// Mixed-radix rank of a word within its sphere.
fn word_rank(params: &TreeParams, word: &[u32]) -> usize {
    let q = params.q as usize;
    word.iter().skip(1).fold(word.first().copied().unwrap_or(0) as usize, |acc, &l| {
        acc * q + l as usize
    })
}

fn word_from_rank(params: &TreeParams, n: usize, mut rank: usize) -> Vec<u32> {
    let q = params.q as usize;
    let mut word = vec![0u32; n];
    for slot in word.iter_mut().skip(1).rev() {
        *slot = (rank % q) as u32;
        rank /= q;
    }
    if n > 0 {
        word[0] = rank as u32;
    }
    word
}

#[allow(clippy::len_without_is_empty)]
impl Vertex {
    pub fn root() -> Self {
        Self { word: Vec::new() }
    }

    pub fn new(params: &TreeParams, word: Vec<u32>) -> Result<Self> {
        check_word(params, &word)?;
        Ok(Self { word })
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    /// Distance to the root.
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_root(&self) -> bool {
        self.word.is_empty()
    }

    pub fn parent(&self) -> Option<Self> {
        if self.is_root() {
            return None;
        }
        let mut word = self.word.clone();
        word.pop();
        Some(Self { word })
    }

    /// Neighbours farther from the root, in lexicographic order.
    pub fn children(&self, params: &TreeParams) -> Vec<Self> {
        let count = if self.is_root() { params.q + 1 } else { params.q };
        (0..count)
            .map(|l| {
                let mut word = self.word.clone();
                word.push(l);
                Self { word }
            })
            .collect()
    }

    /// All `q + 1` neighbours: parent first (if any), then children.
    pub fn neighbours(&self, params: &TreeParams) -> Vec<Self> {
        let mut out: Vec<Self> = self.parent().into_iter().collect();
        out.extend(self.children(params));
        out
    }

    /// Graph distance `|x| + |y| - 2·(common prefix length)`.
    pub fn distance(&self, other: &Vertex) -> usize {
        self.len() + other.len() - 2 * common_prefix_len(&self.word, &other.word)
    }

    /// Position of this vertex in canonical ball order.
    pub fn index(&self, params: &TreeParams) -> usize {
        params.sphere_offset(self.len()) + word_rank(params, &self.word)
    }

    /// Inverse of [`index`](Self::index).
    pub fn from_index(params: &TreeParams, index: usize) -> Self {
        let mut n = 0;
        while params.sphere_offset(n + 1) <= index {
            n += 1;
        }
        let rank = index - params.sphere_offset(n);
        Self { word: word_from_rank(params, n, rank) }
    }
}

/// Graph distance between two vertices.
pub fn distance(x: &Vertex, y: &Vertex) -> usize {
    x.distance(y)
}

/// A depth-`n` cylinder: all boundary rays through the vertex with this word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RayPrefix {
    word: Vec<u32>,
}

impl RayPrefix {
    /// The whole boundary.
    pub fn whole() -> Self {
        Self { word: Vec::new() }
    }

    pub fn new(params: &TreeParams, word: Vec<u32>) -> Result<Self> {
        check_word(params, &word)?;
        Ok(Self { word })
    }

    /// The cylinder of rays passing through `x`.
    pub fn through(x: &Vertex) -> Self {
        Self { word: x.word.clone() }
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn depth(&self) -> usize {
        self.word.len()
    }

    /// The `n`-th vertex of the ray, for `n <= depth`.
    pub fn vertex_at(&self, n: usize) -> Option<Vertex> {
        (n <= self.depth()).then(|| Vertex { word: self.word[..n].to_vec() })
    }

    /// The sub-cylinders one level deeper, in canonical order.
    pub fn extensions(&self, params: &TreeParams) -> Vec<Self> {
        Vertex { word: self.word.clone() }
            .children(params)
            .into_iter()
            .map(|v| Self { word: v.word })
            .collect()
    }

    /// All cylinders of a fixed depth, in canonical order.
    pub fn all_at_depth(params: &TreeParams, depth: usize) -> impl Iterator<Item = RayPrefix> + '_ {
        let count = params.sphere_size(depth) as usize;
        (0..count).map(move |rank| Self { word: word_from_rank(params, depth, rank) })
    }
}

/// Horocycle height `h_ω(x) = 2c - |x|`, `c` the confluence depth of `x` with `ω`.
pub fn height(x: &Vertex, omega: &RayPrefix) -> Result<i64> {
    if omega.depth() < x.len() {
        return Err(Error::PrefixTooShort { depth: omega.depth(), needed: x.len() });
    }
    let c = common_prefix_len(&x.word, &omega.word);
    Ok(2 * c as i64 - x.len() as i64)
}

/// Exact boundary measure of a cylinder: `1/((q+1) q^(n-1))` at depth `n ≥ 1`.
pub fn cylinder_measure_exact(params: &TreeParams, omega: &RayPrefix) -> Ratio<u64> {
    Ratio::new(1, params.sphere_size(omega.depth()))
}

pub fn cylinder_measure(params: &TreeParams, omega: &RayPrefix) -> f64 {
    let r = cylinder_measure_exact(params, omega);
    *r.numer() as f64 / *r.denom() as f64
}

/// A complex-valued function on a ball, stored in canonical vertex order.
#[derive(Debug, Clone, PartialEq)]
pub struct BallFunction {
    params: TreeParams,
    radius: usize,
    values: Vec<Complex64>,
}

impl BallFunction {
    pub fn new(params: TreeParams, radius: usize, values: Vec<Complex64>) -> Result<Self> {
        let expected = params.ball_size(radius) as usize;
        if values.len() != expected {
            return Err(Error::LengthMismatch { expected, got: values.len() });
        }
        Ok(Self { params, radius, values })
    }

    pub fn zeros(params: TreeParams, radius: usize) -> Self {
        let len = params.ball_size(radius) as usize;
        Self { params, radius, values: vec![Complex64::new(0.0, 0.0); len] }
    }

    pub fn from_fn(params: TreeParams, radius: usize, mut f: impl FnMut(&Vertex) -> Complex64) -> Self {
        let values = vertices(&params, radius).map(|v| f(&v)).collect();
        Self { params, radius, values }
    }

    /// Single-vertex indicator.
    pub fn indicator(params: TreeParams, radius: usize, x: &Vertex) -> Result<Self> {
        if x.len() > radius {
            return Err(Error::InvalidParameter(format!(
                "vertex at distance {} lies outside B_{radius}",
                x.len()
            )));
        }
        let mut f = Self::zeros(params, radius);
        f.values[x.index(&params)] = Complex64::new(1.0, 0.0);
        Ok(f)
    }

    pub fn params(&self) -> &TreeParams {
        &self.params
    }

    pub fn radius(&self) -> usize {
        self.radius
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn values_mut(&mut self) -> &mut [Complex64] {
        &mut self.values
    }

    pub fn into_values(self) -> Vec<Complex64> {
        self.values
    }

    pub fn get(&self, x: &Vertex) -> Option<Complex64> {
        (x.len() <= self.radius).then(|| self.values[x.index(&self.params)])
    }

    /// Values on sphere `n`, in lexicographic order.
    pub fn sphere(&self, n: usize) -> &[Complex64] {
        let lo = self.params.sphere_offset(n);
        let hi = self.params.sphere_offset(n + 1);
        &self.values[lo..hi]
    }

    /// Restriction to a smaller concentric ball.
    pub fn restrict(&self, radius: usize) -> Result<Self> {
        if radius > self.radius {
            return Err(Error::InvalidParameter(format!(
                "cannot restrict B_{} to the larger ball B_{radius}",
                self.radius
            )));
        }
        let len = self.params.ball_size(radius) as usize;
        Ok(Self { params: self.params, radius, values: self.values[..len].to_vec() })
    }

    pub fn max_abs(&self) -> f64 {
        self.values.iter().map(|v| v.norm()).fold(0.0, f64::max)
    }

    /// Pointwise map, keeping the domain.
    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self { params: self.params, radius: self.radius, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    /// `a·self + b·other` on a common ball.
    pub fn axpby(&self, a: Complex64, other: &Self, b: Complex64) -> Result<Self> {
        if other.radius != self.radius || other.params != self.params {
            return Err(Error::LengthMismatch { expected: self.values.len(), got: other.values.len() });
        }
        let values = self.values.iter().zip(&other.values).map(|(&x, &y)| a * x + b * y).collect();
        Ok(Self { params: self.params, radius: self.radius, values })
    }
}

/// Vertices of `B_R` in canonical order.
pub fn vertices(params: &TreeParams, radius: usize) -> impl Iterator<Item = Vertex> + '_ {
    (0..=radius).flat_map(move |n| {
        (0..params.sphere_size(n) as usize).map(move |rank| Vertex { word: word_from_rank(params, n, rank) })
    })
}

/// A radial function, one value per radius `0..=R`.
#[derive(Debug, Clone, PartialEq)]
pub struct RadialProfile {
    params: TreeParams,
    values: Vec<Complex64>,
}

impl RadialProfile {
    pub fn new(params: TreeParams, values: Vec<Complex64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidParameter("radial profile needs at least one value".into()));
        }
        Ok(Self { params, values })
    }

    pub fn from_fn(params: TreeParams, radius: usize, f: impl Fn(usize) -> Complex64) -> Self {
        Self { params, values: (0..=radius).map(f).collect() }
    }

    /// Dirac mass on sphere `n` (value 1 at every vertex at distance `n`).
    pub fn sphere_indicator(params: TreeParams, radius: usize, n: usize) -> Self {
        Self::from_fn(params, radius, |m| Complex64::new(if m == n { 1.0 } else { 0.0 }, 0.0))
    }

    pub fn params(&self) -> &TreeParams {
        &self.params
    }

    /// Largest radius represented.
    pub fn radius(&self) -> usize {
        self.values.len() - 1
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    pub fn at(&self, n: usize) -> Complex64 {
        self.values[n]
    }

    pub fn truncate(&self, radius: usize) -> Self {
        Self { params: self.params, values: self.values[..=radius.min(self.radius())].to_vec() }
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Self {
        Self { params: self.params, values: self.values.iter().map(|&v| f(v)).collect() }
    }

    /// The radial function `x ↦ values[|x|]` on `B_R`, `R` = this profile's radius.
    pub fn embed(&self) -> BallFunction {
        let mut values = Vec::with_capacity(self.params.ball_size(self.radius()) as usize);
        for (n, &v) in self.values.iter().enumerate() {
            values.extend(std::iter::repeat_n(v, self.params.sphere_size(n) as usize));
        }
        BallFunction { params: self.params, radius: self.radius(), values }
    }
}

/// Sphere averages of a ball function.
pub fn radialize(f: &BallFunction) -> RadialProfile {
    let values = (0..=f.radius)
        .map(|n| {
            let sphere = f.sphere(n);
            sphere.iter().sum::<Complex64>() / sphere.len() as f64
        })
        .collect();
    RadialProfile { params: f.params, values }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{HashMap, VecDeque};

    fn c(re: f64) -> Complex64 {
        Complex64::new(re, 0.0)
    }

    /// Explicit adjacency of B_R built from words; BFS oracle for distances and counts.
    fn explicit_ball(params: &TreeParams, radius: usize) -> (Vec<Vertex>, HashMap<Vertex, Vec<Vertex>>) {
        let mut all = vec![Vertex::root()];
        let mut frontier = vec![Vertex::root()];
        let mut adj: HashMap<Vertex, Vec<Vertex>> = HashMap::new();
        for _ in 0..radius {
            let mut next = Vec::new();
            for v in &frontier {
                for child in v.children(params) {
                    adj.entry(v.clone()).or_default().push(child.clone());
                    adj.entry(child.clone()).or_default().push(v.clone());
                    next.push(child);
                }
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        (all, adj)
    }

    fn bfs(adj: &HashMap<Vertex, Vec<Vertex>>, from: &Vertex) -> HashMap<Vertex, usize> {
        let mut dist = HashMap::from([(from.clone(), 0usize)]);
        let mut queue = VecDeque::from([from.clone()]);
        while let Some(v) = queue.pop_front() {
            let d = dist[&v];
            for w in adj.get(&v).into_iter().flatten() {
                if !dist.contains_key(w) {
                    dist.insert(w.clone(), d + 1);
                    queue.push_back(w.clone());
                }
            }
        }
        dist
    }

    #[test]
    fn rejects_small_q() {
        assert!(TreeParams::new(1).is_err());
        let p = TreeParams::new(2).unwrap();
        assert!(p.b() > 0.0 && p.b() < 1.0);
        assert!(p.tau() > 0.0);
    }

    #[test]
    fn sphere_sizes_match_enumeration() {
        for (q, radius) in [(2, 4), (3, 3)] {
            let params = TreeParams::new(q).unwrap();
            let (all, adj) = explicit_ball(&params, radius);
            let dist = bfs(&adj, &Vertex::root());
            for n in 0..=radius {
                let count = all.iter().filter(|v| dist[*v] == n).count() as u64;
                assert_eq!(params.sphere_size(n), count, "q={q} n={n}");
            }
        }
        let q2 = TreeParams::new(2).unwrap();
        assert_eq!(q2.sphere_size(0), 1);
        assert_eq!(q2.sphere_size(3), 12);
        assert_eq!(TreeParams::new(3).unwrap().sphere_size(2), 12);
    }

    #[test]
    fn ball_sizes() {
        let q2 = TreeParams::new(2).unwrap();
        assert_eq!(q2.ball_size(0), 1);
        let (all, _) = explicit_ball(&q2, 2);
        assert_eq!(q2.ball_size(2), all.len() as u64);
        assert_eq!(q2.ball_size(2), 10);
        let cumulative: u64 = (0..=14).map(|n| q2.sphere_size(n)).sum();
        assert_eq!(q2.ball_size(14), cumulative);
        assert_eq!(q2.ball_size(14), 49150);
    }

    #[test]
    fn distances_match_bfs() {
        let params = TreeParams::new(2).unwrap();
        let (all, adj) = explicit_ball(&params, 4);
        for x in all.iter().step_by(3) {
            let dist = bfs(&adj, x);
            for y in &all {
                assert_eq!(distance(x, y), dist[y]);
            }
        }
        let x = Vertex::new(&params, vec![0, 1]).unwrap();
        let y = Vertex::new(&params, vec![0, 0, 1]).unwrap();
        assert_eq!(distance(&x, &y), 3);
        assert_eq!(distance(&x, &Vertex::root()), 2);
        assert_eq!(distance(&Vertex::root(), &Vertex::root()), 0);
    }

    #[test]
    fn word_validation() {
        let params = TreeParams::new(2).unwrap();
        assert!(Vertex::new(&params, vec![2]).is_ok());
        assert!(Vertex::new(&params, vec![3]).is_err());
        assert!(Vertex::new(&params, vec![2, 2]).is_err());
    }

    #[test]
    fn index_round_trip_and_order() {
        let params = TreeParams::new(3).unwrap();
        for (i, v) in vertices(&params, 4).enumerate() {
            assert_eq!(v.index(&params), i);
            assert_eq!(Vertex::from_index(&params, i), v);
        }
        let words: Vec<_> = vertices(&params, 2).collect();
        let mut sorted = words.clone();
        sorted.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.word().cmp(b.word())));
        assert_eq!(words, sorted);
    }

    #[test]
    fn height_examples() {
        let params = TreeParams::new(2).unwrap();
        let omega = RayPrefix::new(&params, vec![1, 0, 1, 1, 0, 0, 1, 0, 1, 1]).unwrap();
        assert_eq!(height(&Vertex::root(), &omega).unwrap(), 0);

        // limit oracle: n - d(x, ω_n) at n = 10
        let limit = |x: &Vertex| 10 - distance(x, &omega.vertex_at(10).unwrap()) as i64;
        let on_ray = omega.vertex_at(3).unwrap();
        assert_eq!(height(&on_ray, &omega).unwrap(), 3);
        assert_eq!(limit(&on_ray), 3);

        let off = Vertex::new(&params, vec![1, 1, 0]).unwrap();
        assert_eq!(height(&off, &omega).unwrap(), -1);
        assert_eq!(limit(&off), -1);

        let short = RayPrefix::new(&params, vec![1]).unwrap();
        assert_eq!(
            height(&off, &short),
            Err(Error::PrefixTooShort { depth: 1, needed: 3 })
        );
    }

    #[test]
    fn height_telescopes_along_edges() {
        let params = TreeParams::new(2).unwrap();
        for omega in RayPrefix::all_at_depth(&params, 8).step_by(37) {
            for x in vertices(&params, 6) {
                let hx = height(&x, &omega).unwrap();
                let on_ray = omega.word()[..x.len()] == *x.word();
                let toward = if on_ray { omega.vertex_at(x.len() + 1).unwrap() } else { x.parent().unwrap() };
                for y in x.neighbours(&params) {
                    let expected = if y == toward { hx + 1 } else { hx - 1 };
                    assert_eq!(height(&y, &omega).unwrap(), expected, "x={x:?} y={y:?}");
                }
            }
        }
    }

    #[test]
    fn height_increases_only_toward_the_ray() {
        // Exactly one neighbour of every vertex lies closer to ω.
        let params = TreeParams::new(3).unwrap();
        for omega in RayPrefix::all_at_depth(&params, 6).step_by(29) {
            for x in vertices(&params, 5) {
                let hx = height(&x, &omega).unwrap();
                let ups = x
                    .neighbours(&params)
                    .iter()
                    .map(|y| height(y, &omega).unwrap() - hx)
                    .inspect(|d| assert!(*d == 1 || *d == -1))
                    .filter(|d| *d == 1)
                    .count();
                assert_eq!(ups, 1);
            }
        }
    }

    #[test]
    fn cylinder_measure_values_and_additivity() {
        let params = TreeParams::new(2).unwrap();
        assert_eq!(cylinder_measure_exact(&params, &RayPrefix::whole()), Ratio::new(1, 1));
        let first = RayPrefix::new(&params, vec![0]).unwrap();
        assert_eq!(cylinder_measure_exact(&params, &first), Ratio::new(1, 3));
        let children: Ratio<u64> =
            first.extensions(&params).iter().map(|c| cylinder_measure_exact(&params, c)).sum();
        assert_eq!(children, Ratio::new(1, 3));
        let second = RayPrefix::new(&params, vec![0, 1]).unwrap();
        assert_eq!(cylinder_measure(&params, &second), 1.0 / 6.0);

        for q in [2, 3, 5] {
            let params = TreeParams::new(q).unwrap();
            for depth in 0..6 {
                let total: Ratio<u64> = RayPrefix::all_at_depth(&params, depth)
                    .map(|c| cylinder_measure_exact(&params, &c))
                    .sum();
                assert_eq!(total, Ratio::new(1, 1));
            }
        }
    }

    #[test]
    fn radialize_examples() {
        let params = TreeParams::new(2).unwrap();
        let radial = RadialProfile::from_fn(params, 4, |n| c(n as f64 * 0.5 - 1.0));
        assert_eq!(radialize(&radial.embed()), radial);

        let x = Vertex::new(&params, vec![1, 0]).unwrap();
        let f = BallFunction::indicator(params, 3, &x).unwrap();
        let prof = radialize(&f);
        for n in 0..=3 {
            let expected = if n == 2 { 1.0 / 6.0 } else { 0.0 };
            assert!((prof.at(n) - c(expected)).norm() < 1e-15);
        }
    }

    #[test]
    fn ball_function_length_checked() {
        let params = TreeParams::new(2).unwrap();
        assert!(BallFunction::new(params, 1, vec![c(0.0); 3]).is_err());
        assert!(BallFunction::new(params, 1, vec![c(0.0); 4]).is_ok());
    }
}
