//! Streaming Monte Carlo statistics over graph ensembles.
//!
//! Realization `i` of an ensemble is keyed by `(master_seed, i)`, so an
//! ensemble can be accumulated in one sweep, in slices, or in any partition
//! and recombined with [`EnsembleStats::merge`] — the same realizations are
//! visited either way.
//!
//! Per-realization observables are pushed into Welford accumulators:
//! edge count, mean/max/min degree, mean Revan degree, the eight edge sums,
//! and the eight log-products. A degenerate log-product (zero factor, value
//! `-inf`) is excluded from its accumulator and counted separately, so
//! reported means are conditional on non-degeneracy.

use crate::graph::Graph;
use crate::indices::{full_report_with_profile, Form, IndexKind};
use crate::models::{self, Model, SeedSpec};
use crate::stats::Welford;
use core::fmt;
use core::ops::Range;

/// Everything needed to regenerate an ensemble exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnsembleSpec {
    pub model: Model,
    pub n: usize,
    /// Connection parameter: `p` for Erdős–Rényi, `ell` for geometric.
    pub param: f64,
    pub realizations: u64,
    pub master_seed: u64,
}

impl EnsembleSpec {
    pub fn validate(&self) -> Result<(), EnsembleError> {
        models::validate(self.model, self.n, self.param)?;
        if self.realizations == 0 {
            return Err(EnsembleError::ZeroRealizations);
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EnsembleError {
    Model(models::ModelError),
    ZeroRealizations,
    /// `accumulate_range` was given a slice outside `0..realizations`.
    RangeOutOfBounds {
        start: u64,
        end: u64,
        realizations: u64,
    },
    /// Merge attempted between stats of different ensembles.
    SpecMismatch,
}

impl From<models::ModelError> for EnsembleError {
    fn from(e: models::ModelError) -> Self {
        EnsembleError::Model(e)
    }
}

impl fmt::Display for EnsembleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnsembleError::Model(e) => write!(f, "{e}"),
            EnsembleError::ZeroRealizations => write!(f, "ensemble needs at least 1 realization"),
            EnsembleError::RangeOutOfBounds {
                start,
                end,
                realizations,
            } => write!(
                f,
                "realization range {start}..{end} exceeds 0..{realizations}"
            ),
            EnsembleError::SpecMismatch => {
                write!(f, "cannot merge statistics from different ensemble specs")
            }
        }
    }
}

impl core::error::Error for EnsembleError {}

/// Accumulated ensemble statistics. All accumulators advance in lockstep
/// except the log-products, whose counts fall short of the realization
/// count by the matching degeneracy counter.
#[derive(Debug, Clone, PartialEq)]
pub struct EnsembleStats {
    spec: EnsembleSpec,
    edges: Welford,
    mean_degree: Welford,
    max_degree: Welford,
    min_degree: Welford,
    mean_revan: Welford,
    sums: [Welford; 8],
    log_products: [Welford; 8],
    degenerate: [u64; 8],
}

impl EnsembleStats {
    pub fn new(spec: EnsembleSpec) -> Self {
        Self {
            spec,
            edges: Welford::new(),
            mean_degree: Welford::new(),
            max_degree: Welford::new(),
            min_degree: Welford::new(),
            mean_revan: Welford::new(),
            sums: [Welford::new(); 8],
            log_products: [Welford::new(); 8],
            degenerate: [0; 8],
        }
    }

    pub fn spec(&self) -> &EnsembleSpec {
        &self.spec
    }

    /// Realizations accumulated so far (≤ `spec.realizations`).
    pub fn count(&self) -> u64 {
        self.edges.count()
    }

    pub fn edges(&self) -> &Welford {
        &self.edges
    }

    pub fn mean_degree(&self) -> &Welford {
        &self.mean_degree
    }

    pub fn max_degree(&self) -> &Welford {
        &self.max_degree
    }

    pub fn min_degree(&self) -> &Welford {
        &self.min_degree
    }

    pub fn mean_revan(&self) -> &Welford {
        &self.mean_revan
    }

    /// Accumulator for one index (per-realization sum, or log-product
    /// conditional on non-degeneracy).
    pub fn index_stats(&self, kind: IndexKind) -> &Welford {
        match kind.form {
            Form::Sum => &self.sums[kind.slot()],
            Form::Product => &self.log_products[kind.slot()],
        }
    }

    /// Realizations whose product was degenerate; always 0 for sums.
    pub fn degenerate_count(&self, kind: IndexKind) -> u64 {
        match kind.form {
            Form::Sum => 0,
            Form::Product => self.degenerate[kind.slot()],
        }
    }

    fn push(&mut self, g: &Graph) {
        let profile = g.degree_profile();
        let report =
            full_report_with_profile(g, &profile).expect("profile derived from the same graph");
        self.edges.push(g.edge_count() as f64);
        self.mean_degree.push(profile.mean_degree());
        self.max_degree.push(profile.delta_max() as f64);
        self.min_degree.push(profile.delta_min() as f64);
        self.mean_revan.push(profile.mean_revan());
        for i in 0..8 {
            self.sums[i].push(report.sums[i]);
            if report.degenerate[i] {
                self.degenerate[i] += 1;
            } else {
                self.log_products[i].push(report.log_products[i]);
            }
        }
    }

    /// Combine statistics accumulated over disjoint realization ranges of
    /// the same spec. Disjointness is the caller's responsibility; the spec
    /// itself is checked.
    pub fn merge(&mut self, other: &EnsembleStats) -> Result<(), EnsembleError> {
        if self.spec != other.spec {
            return Err(EnsembleError::SpecMismatch);
        }
        self.edges.merge(&other.edges);
        self.mean_degree.merge(&other.mean_degree);
        self.max_degree.merge(&other.max_degree);
        self.min_degree.merge(&other.min_degree);
        self.mean_revan.merge(&other.mean_revan);
        for i in 0..8 {
            self.sums[i].merge(&other.sums[i]);
            self.log_products[i].merge(&other.log_products[i]);
            self.degenerate[i] += other.degenerate[i];
        }
        Ok(())
    }
}

/// Accumulate the realizations `range` (a sub-slice of `0..realizations`).
pub fn accumulate_range(
    spec: &EnsembleSpec,
    range: Range<u64>,
) -> Result<EnsembleStats, EnsembleError> {
    spec.validate()?;
    if range.start > range.end || range.end > spec.realizations {
        return Err(EnsembleError::RangeOutOfBounds {
            start: range.start,
            end: range.end,
            realizations: spec.realizations,
        });
    }
    let mut stats = EnsembleStats::new(*spec);
    for index in range {
        let g = models::generate(
            spec.model,
            spec.n,
            spec.param,
            SeedSpec {
                master_seed: spec.master_seed,
                realization_index: index,
            },
        )?;
        stats.push(&g);
    }
    Ok(stats)
}

/// Accumulate the whole ensemble in realization order.
pub fn run_ensemble(spec: &EnsembleSpec) -> Result<EnsembleStats, EnsembleError> {
    accumulate_range(spec, 0..spec.realizations)
}
