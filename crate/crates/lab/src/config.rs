//! Experiment configuration.
//!
//! A config file is JSON with any subset of the keys below; unknown keys are
//! rejected. Missing keys take the per-experiment defaults listed in
//! [`ExperimentConfig::defaults`], and CLI flags override both.
//!
//! | key              | type          | meaning                                       |
//! |------------------|---------------|-----------------------------------------------|
//! | `experiment`     | string        | must match the subcommand when present        |
//! | `q`              | integer ≥ 2   | tree has degree `q + 1`                       |
//! | `p`              | real ≥ 1      | Lebesgue exponent                             |
//! | `z`              | `[re, im]`    | spectral parameter                            |
//! | `radius`         | integer       | ball radius `R` (window half-width for zcase) |
//! | `boundary_depth` | integer ≥ 1   | depth of random boundary data                 |
//! | `k_range`        | `[lo, hi]`    | inclusive range of Laplacian powers           |
//! | `seed`           | integer       | seed for all random data                      |
//! | `output_path`    | string        | output directory                              |
//! | `alpha`          | real          | frequency for the integer-lattice case        |
//! | `modulus`        | real          | common `|γ|` for unimodular pairs             |
//! | `corpus_size`    | integer ≥ 1   | number of radial functions in the corpus      |

use std::f64::consts::PI;
use std::path::Path;

use clap::Subcommand;
use serde::{Deserialize, Serialize};

use crate::error::{LabError, LabResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Subcommand)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    /// Eigen-identity of spherical functions on a z-grid
    Eigencheck,
    /// Image of the strip boundary and spectrum membership grid
    SpectrumMap,
    /// Bounded two-eigenvalue sequence that is not an eigenfunction
    RoeCounterexample,
    /// Forward check on Poisson fields at real z
    TheoremA,
    /// Forward check at the boundary of the strip
    TheoremB,
    /// Failure modes when hypotheses are weakened
    Sharpness,
    /// Integer lattice analogue
    Zcase,
    /// Abel coefficient reconstruction and seminorm ratios
    Isomorphism,
}

impl ExperimentKind {
    pub fn name(&self) -> &'static str {
        match self {
            ExperimentKind::Eigencheck => "eigencheck",
            ExperimentKind::SpectrumMap => "spectrum-map",
            ExperimentKind::RoeCounterexample => "roe-counterexample",
            ExperimentKind::TheoremA => "theorem-a",
            ExperimentKind::TheoremB => "theorem-b",
            ExperimentKind::Sharpness => "sharpness",
            ExperimentKind::Zcase => "zcase",
            ExperimentKind::Isomorphism => "isomorphism",
        }
    }
}

/// Contents of a config file; every key optional.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub experiment: Option<ExperimentKind>,
    pub q: Option<u32>,
    pub p: Option<f64>,
    pub z: Option<[f64; 2]>,
    pub radius: Option<usize>,
    pub boundary_depth: Option<usize>,
    pub k_range: Option<[i64; 2]>,
    pub seed: Option<u64>,
    pub output_path: Option<String>,
    pub alpha: Option<f64>,
    pub modulus: Option<f64>,
    pub corpus_size: Option<usize>,
}

impl ConfigFile {
    pub fn from_json(text: &str) -> LabResult<Self> {
        serde_json::from_str(text).map_err(|e| LabError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> LabResult<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| LabError::Config(format!("{}: {e}", path.display())))?;
        Self::from_json(&text)
    }
}

/// Fully resolved configuration, echoed into every report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub q: u32,
    pub p: f64,
    pub z: [f64; 2],
    pub radius: usize,
    pub boundary_depth: usize,
    pub k_range: [i64; 2],
    pub seed: u64,
    pub output_path: String,
    pub alpha: f64,
    pub modulus: f64,
    pub corpus_size: usize,
}

impl ExperimentConfig {
    /// Defaults for `kind`:
    ///
    /// | experiment         | q | p   | z        | R   | D | k_range   | other            |
    /// |--------------------|---|-----|----------|-----|---|-----------|------------------|
    /// | eigencheck         | 2 | 1   | –        | 12  | – | –         |                  |
    /// | spectrum-map       | 2 | 1.5 | –        | –   | – | –         |                  |
    /// | roe-counterexample | 2 | 1   | –        | 10  | – | [-50, 50] | modulus 1        |
    /// | theorem-a          | 2 | 2   | [0.3, 0] | 12  | 6 | [0, 5]    |                  |
    /// | theorem-b          | 2 | 1.5 | –        | 12  | 6 | [0, 5]    |                  |
    /// | sharpness          | 2 | 1.5 | [τ/8, 0] | 200 | – | [0, 5]    | modulus 1        |
    /// | zcase              | – | –   | –        | 40  | – | [0, 5]    | alpha π/3        |
    /// | isomorphism        | 2 | –   | –        | 10  | – | –         | corpus size 50   |
    ///
    /// Seeds default to 7 and output goes to `out/<experiment>`. A `z`
    /// default of `[τ/8, 0]` is resolved against the configured `q`.
    pub fn defaults(kind: ExperimentKind) -> Self {
        use ExperimentKind::*;
        let (p, radius, k_range) = match kind {
            Eigencheck => (1.0, 12, [0, 1]),
            SpectrumMap => (1.5, 12, [0, 0]),
            RoeCounterexample => (1.0, 10, [-50, 50]),
            TheoremA => (2.0, 12, [0, 5]),
            TheoremB => (1.5, 12, [0, 5]),
            Sharpness => (1.5, 200, [0, 5]),
            Zcase => (2.0, 40, [0, 5]),
            Isomorphism => (1.5, 10, [0, 0]),
        };
        Self {
            experiment: kind,
            q: 2,
            p,
            z: [0.3, 0.0],
            radius,
            boundary_depth: 6,
            k_range,
            seed: 7,
            output_path: format!("out/{}", kind.name()),
            alpha: PI / 3.0,
            modulus: 1.0,
            corpus_size: 50,
        }
    }

    /// Defaults for `kind` overlaid with the keys present in `file`.
    pub fn resolve(kind: ExperimentKind, file: &ConfigFile) -> LabResult<Self> {
        if let Some(declared) = file.experiment {
            if declared != kind {
                return Err(LabError::Config(format!(
                    "config declares experiment {} but {} was requested",
                    declared.name(),
                    kind.name()
                )));
            }
        }
        let mut c = Self::defaults(kind);
        if let Some(q) = file.q {
            c.q = q;
        }
        match file.z {
            Some(z) => c.z = z,
            None if kind == ExperimentKind::Sharpness => {
                c.z = [2.0 * PI / (c.q as f64).ln() / 8.0, 0.0];
            }
            None => {}
        }
        macro_rules! take {
            ($($field:ident),*) => { $( if let Some(v) = file.$field.clone() { c.$field = v; } )* };
        }
        take!(p, radius, boundary_depth, k_range, seed, output_path, alpha, modulus, corpus_size);
        c.validate()?;
        Ok(c)
    }

    fn validate(&self) -> LabResult<()> {
        let bad = |msg: String| Err(LabError::Config(msg));
        if self.q < 2 {
            return bad(format!("q must be at least 2, got {}", self.q));
        }
        if self.p.is_nan() || self.p < 1.0 {
            return bad(format!("p must be at least 1, got {}", self.p));
        }
        if self.z.iter().any(|v| !v.is_finite()) {
            return bad("z must be finite".into());
        }
        if self.k_range[0] > self.k_range[1] {
            return bad(format!("k_range {:?} is empty", self.k_range));
        }
        if self.boundary_depth == 0 {
            return bad("boundary_depth must be at least 1".into());
        }
        if self.corpus_size == 0 {
            return bad("corpus_size must be at least 1".into());
        }
        if !self.modulus.is_finite() || !self.alpha.is_finite() {
            return bad("alpha and modulus must be finite".into());
        }
        Ok(())
    }

    /// Largest non-negative power in `k_range`.
    pub fn k_max(&self) -> usize {
        self.k_range[1].max(0) as usize
    }
}
