//! Harmonic analysis on homogeneous trees.
//!
//! The tree of degree `q + 1` is handled combinatorially: vertices are
//! non-backtracking words, boundary points are finite ray prefixes, and
//! functions are stored on finite balls. On top of that this crate provides
//!
//! | Module | Contents |
//! |--------|----------|
//! | [`tree`] | distances, horocycle heights, cylinder measure, radialization |
//! | [`spectral`] | `γ`, the c-function, spherical functions `φ_z`, strips and spectra |
//! | [`operators`] | the Laplacian on balls, radial profiles and lattices; Poisson transform |
//! | [`transforms`] | spherical Fourier transform, torus quadrature, Abel coefficients, seminorms |
//! | [`norms`] | L^p and Lorentz quasinorms, radial growth diagnostics |

pub mod error;
pub mod tree;
pub mod spectral;
pub mod operators;
pub mod transforms;
pub mod norms;

pub use error::{Error, Result};
pub use num_complex::Complex64;
