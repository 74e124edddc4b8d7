//! Revan-degree and degree-based topological indices on random graphs.
//!
//! The crate computes the sum and multiplicative families of edge-functional
//! graph invariants (first/second Zagreb, forgotten, Sombor, and their Revan
//! counterparts) on arbitrary simple graphs, generates Erdős–Rényi and random
//! geometric graph ensembles from reproducible per-realization seeds, folds
//! realizations into streaming mean/SEM accumulators, and evaluates the
//! dense-limit predictions and scaling-collapse metrics of those invariants.
//!
//! The crate is `no_std`-compatible (`default-features = false,
//! features = ["libm"]`); everything here is pure computation over `alloc`
//! collections. File formats, the CLI, and the multi-threaded ensemble
//! driver live in the companion `revan-cli` crate.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

#[cfg(all(not(feature = "std"), not(feature = "libm")))]
compile_error!("revan-core needs either the `std` or the `libm` feature");

extern crate alloc;

pub mod dense_limit;
pub mod ensemble;
pub mod graph;
pub mod indices;
pub mod models;
pub mod stats;

pub use dense_limit::{DenseLimitError, Prediction, ScalingCurve};
pub use ensemble::{EnsembleError, EnsembleSpec, EnsembleStats};
pub use graph::{DegreeProfile, Graph, GraphError};
pub use indices::{Family, Form, IndexKind, IndexReport, Variant};
pub use models::{ErSpec, Model, ModelError, RgSpec, SeedSpec};

/// Float math shims: `std` methods when available, `libm` otherwise.
pub(crate) mod float {
    #[cfg(feature = "std")]
    #[inline]
    pub fn ln(x: f64) -> f64 {
        x.ln()
    }

    #[cfg(feature = "std")]
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        x.sqrt()
    }

    #[cfg(feature = "std")]
    #[inline]
    pub fn exp(x: f64) -> f64 {
        x.exp()
    }

    #[cfg(not(feature = "std"))]
    #[inline]
    pub fn ln(x: f64) -> f64 {
        libm::log(x)
    }

    #[cfg(not(feature = "std"))]
    #[inline]
    pub fn sqrt(x: f64) -> f64 {
        libm::sqrt(x)
    }

    #[cfg(not(feature = "std"))]
    #[inline]
    pub fn exp(x: f64) -> f64 {
        libm::exp(x)
    }

    #[inline]
    pub fn abs(x: f64) -> f64 {
        if x < 0.0 {
            -x
        } else {
            x
        }
    }
}
