//! Random graph models: Erdős–Rényi G(n, p) and random geometric graphs on
//! the unit square.
//!
//! Reproducibility contract: a realization is fully determined by
//! `(master_seed, realization_index)`. Each realization gets its own
//! ChaCha8 stream — the key comes from the master seed, the stream counter
//! from the realization index — so realizations can be generated in any
//! order or split across threads without sharing RNG state.

use crate::graph::Graph;
use alloc::vec::Vec;
use core::fmt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Erdős–Rényi G(n, p): every vertex pair is an edge independently with
/// probability `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErSpec {
    pub n: usize,
    pub p: f64,
}

/// Random geometric graph: `n` points uniform on the unit square, an edge
/// whenever the Euclidean distance is at most `ell`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RgSpec {
    pub n: usize,
    pub ell: f64,
}

/// Model selector paired with a raw connection parameter (`p` or `ell`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Model {
    Er,
    Rg,
}

impl Model {
    pub fn name(&self) -> &'static str {
        match self {
            Model::Er => "er",
            Model::Rg => "rg",
        }
    }

    pub fn from_name(name: &str) -> Option<Model> {
        if name.eq_ignore_ascii_case("er") {
            Some(Model::Er)
        } else if name.eq_ignore_ascii_case("rg") {
            Some(Model::Rg)
        } else {
            None
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Identifies one realization within a reproducible ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SeedSpec {
    pub master_seed: u64,
    pub realization_index: u64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ModelError {
    ZeroVertices,
    /// `p` must be finite and in `[0, 1]`.
    ProbabilityRange { p: f64 },
    /// `ell` must be finite and in `[0, √2]` (the unit-square diameter).
    RadiusRange { ell: f64 },
}

impl fmt::Display for ModelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModelError::ZeroVertices => write!(f, "graph must have at least one vertex"),
            ModelError::ProbabilityRange { p } => {
                write!(f, "edge probability {p} is outside [0, 1]")
            }
            ModelError::RadiusRange { ell } => {
                write!(f, "connection radius {ell} is outside [0, sqrt(2)]")
            }
        }
    }
}

impl core::error::Error for ModelError {}

/// The dedicated RNG for one realization.
pub fn realization_rng(seed: SeedSpec) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed.master_seed);
    rng.set_stream(seed.realization_index);
    rng
}

fn validate_n(n: usize) -> Result<(), ModelError> {
    if n == 0 {
        return Err(ModelError::ZeroVertices);
    }
    Ok(())
}

/// Check `(model, n, param)` without generating anything.
pub fn validate(model: Model, n: usize, param: f64) -> Result<(), ModelError> {
    validate_n(n)?;
    match model {
        Model::Er => {
            if !(0.0..=1.0).contains(&param) {
                return Err(ModelError::ProbabilityRange { p: param });
            }
        }
        Model::Rg => {
            if !(0.0..=core::f64::consts::SQRT_2).contains(&param) {
                return Err(ModelError::RadiusRange { ell: param });
            }
        }
    }
    Ok(())
}

fn graph_from_sorted(n: usize, edges: Vec<(u32, u32)>) -> Graph {
    match Graph::from_edges(n, edges) {
        Ok(g) => g,
        // Generators emit strictly sorted pairs with u < v < n.
        Err(e) => unreachable!("generator produced an invalid edge list: {e:?}"),
    }
}

/// One G(n, p) realization. Pairs are examined in lexicographic order, one
/// uniform draw each, so the result is a pure function of the seed.
pub fn generate_er(spec: &ErSpec, seed: SeedSpec) -> Result<Graph, ModelError> {
    validate(Model::Er, spec.n, spec.p)?;
    let mut rng = realization_rng(seed);
    let mut edges = Vec::new();
    for u in 0..spec.n as u32 {
        for v in (u + 1)..spec.n as u32 {
            // random::<f64>() is uniform on [0, 1), so p = 1 always connects.
            if rng.random::<f64>() < spec.p {
                edges.push((u, v));
            }
        }
    }
    Ok(graph_from_sorted(spec.n, edges))
}

/// The point cloud a geometric realization is built on: `n` iid uniform
/// points on the unit square, drawn x-then-y per point.
pub fn unit_square_points(n: usize, seed: SeedSpec) -> Vec<(f64, f64)> {
    let mut rng = realization_rng(seed);
    (0..n)
        .map(|_| (rng.random::<f64>(), rng.random::<f64>()))
        .collect()
}

/// One random geometric realization. An edge is present when the squared
/// distance is at most `ell²` (boundary inclusive).
pub fn generate_rg(spec: &RgSpec, seed: SeedSpec) -> Result<Graph, ModelError> {
    validate(Model::Rg, spec.n, spec.ell)?;
    let points = unit_square_points(spec.n, seed);
    let threshold = spec.ell * spec.ell;
    let mut edges = Vec::new();
    for u in 0..spec.n {
        let (xu, yu) = points[u];
        for (v, &(xv, yv)) in points.iter().enumerate().skip(u + 1) {
            let (dx, dy) = (xu - xv, yu - yv);
            if dx * dx + dy * dy <= threshold {
                edges.push((u as u32, v as u32));
            }
        }
    }
    Ok(graph_from_sorted(spec.n, edges))
}

/// Dispatch on the model selector, interpreting `param` as `p` or `ell`.
pub fn generate(model: Model, n: usize, param: f64, seed: SeedSpec) -> Result<Graph, ModelError> {
    match model {
        Model::Er => generate_er(&ErSpec { n, p: param }, seed),
        Model::Rg => generate_rg(&RgSpec { n, ell: param }, seed),
    }
}
