//! Simple undirected graphs with cached degrees, and the Revan degree
//! transform `r_u = Δ + δ − d_u`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// A simple undirected graph: vertex count plus a canonical edge list.
///
/// Edges are stored as `(u, v)` pairs with `u < v`, sorted lexicographically;
/// degrees are computed once at construction. Instances are immutable, so
/// they can be shared or sent across workers freely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(u32, u32)>,
    degrees: Vec<u32>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphError {
    /// Graphs must have at least one vertex.
    ZeroVertices,
    /// An edge endpoint is `>= n`.
    EndpointOutOfRange { endpoint: u32, n: usize },
    /// An edge connects a vertex to itself.
    SelfLoop { vertex: u32 },
    /// The same unordered pair appears more than once.
    DuplicateEdge { u: u32, v: u32 },
}

impl fmt::Display for GraphError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphError::ZeroVertices => write!(f, "graph must have at least one vertex"),
            GraphError::EndpointOutOfRange { endpoint, n } => {
                write!(f, "edge endpoint {endpoint} out of range for {n} vertices")
            }
            GraphError::SelfLoop { vertex } => write!(f, "self-loop at vertex {vertex}"),
            GraphError::DuplicateEdge { u, v } => write!(f, "duplicate edge ({u}, {v})"),
        }
    }
}

impl core::error::Error for GraphError {}

impl Graph {
    /// Builds a graph from an edge list, validating simplicity.
    ///
    /// Edge order and endpoint order are irrelevant; the stored form is
    /// canonical (`u < v`, lexicographically sorted).
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (u32, u32)>) -> Result<Self, GraphError> {
        if n == 0 {
            return Err(GraphError::ZeroVertices);
        }
        let mut normalized: Vec<(u32, u32)> = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(GraphError::SelfLoop { vertex: a });
            }
            for endpoint in [a, b] {
                if endpoint as usize >= n {
                    return Err(GraphError::EndpointOutOfRange { endpoint, n });
                }
            }
            normalized.push(if a < b { (a, b) } else { (b, a) });
        }
        // Generators emit pairs in lexicographic order already; sorting a
        // sorted list is a cheap scan.
        if !normalized.windows(2).all(|w| w[0] < w[1]) {
            normalized.sort_unstable();
            if let Some(w) = normalized.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge { u: w[0].0, v: w[0].1 });
            }
        }
        let mut degrees = vec![0u32; n];
        for &(u, v) in &normalized {
            degrees[u as usize] += 1;
            degrees[v as usize] += 1;
        }
        Ok(Graph {
            n,
            edges: normalized,
            degrees,
        })
    }

    /// The complete graph `K_n`.
    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n as u32 {
            for v in (u + 1)..n as u32 {
                edges.push((u, v));
            }
        }
        Self::from_edges(n, edges)
    }

    /// The cycle graph `C_n` (requires `n >= 3`).
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let edges = (0..n as u32).map(|u| (u, ((u + 1) as usize % n) as u32));
        Self::from_edges(n, edges)
    }

    /// The path graph `P_n`: vertices `0..n` joined in a line.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges = (1..n as u32).map(|v| (v - 1, v));
        Self::from_edges(n, edges)
    }

    /// The star `K_{1,k}`: vertex 0 joined to `k` leaves.
    pub fn star(leaves: usize) -> Result<Self, GraphError> {
        let edges = (1..=leaves as u32).map(|v| (0, v));
        Self::from_edges(leaves + 1, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn degree(&self, vertex: usize) -> u32 {
        self.degrees[vertex]
    }

    /// Whether every vertex is reachable from every other (union-find).
    ///
    /// Ensembles never filter on this; it is exposed so downstream consumers
    /// can partition results by connectivity if they choose to.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut parent: Vec<u32> = (0..self.n as u32).collect();
        fn find(parent: &mut [u32], mut x: u32) -> u32 {
            while parent[x as usize] != x {
                parent[x as usize] = parent[parent[x as usize] as usize];
                x = parent[x as usize];
            }
            x
        }
        let mut components = self.n;
        for &(u, v) in &self.edges {
            let ru = find(&mut parent, u);
            let rv = find(&mut parent, v);
            if ru != rv {
                parent[ru as usize] = rv;
                components -= 1;
            }
        }
        components == 1
    }

    /// Degrees, degree extremes, and the Revan degrees of every vertex.
    pub fn degree_profile(&self) -> DegreeProfile {
        let delta_max = self.degrees.iter().copied().max().unwrap_or(0);
        let delta_min = self.degrees.iter().copied().min().unwrap_or(0);
        let revan = self
            .degrees
            .iter()
            .map(|&d| delta_max + delta_min - d)
            .collect();
        DegreeProfile {
            degrees: self.degrees.clone(),
            delta_max,
            delta_min,
            revan,
        }
    }
}

/// Per-vertex degrees `d_u`, the extremes `Δ`/`δ`, and the Revan degrees
/// `r_u = Δ + δ − d_u`.
///
/// The transform reflects each degree about the midpoint of the degree
/// range, so `δ ≤ r_u ≤ Δ` and the Revan array attains the same extremes in
/// reversed roles.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    degrees: Vec<u32>,
    delta_max: u32,
    delta_min: u32,
    revan: Vec<u32>,
}

impl DegreeProfile {
    pub fn vertex_count(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    /// Maximum degree Δ.
    pub fn delta_max(&self) -> u32 {
        self.delta_max
    }

    /// Minimum degree δ.
    pub fn delta_min(&self) -> u32 {
        self.delta_min
    }

    pub fn revan(&self) -> &[u32] {
        &self.revan
    }

    /// Graph mean of the ordinary degrees.
    pub fn mean_degree(&self) -> f64 {
        let total: u64 = self.degrees.iter().map(|&d| d as u64).sum();
        total as f64 / self.degrees.len() as f64
    }

    /// Graph mean of the Revan degrees.
    pub fn mean_revan(&self) -> f64 {
        let total: u64 = self.revan.iter().map(|&r| r as u64).sum();
        total as f64 / self.revan.len() as f64
    }

    /// True iff re-applying `d ↦ Δ + δ − d` to the Revan array recovers the
    /// original degrees. Holds for every valid profile; exposed as a
    /// self-check on the transform.
    pub fn revan_involution_holds(&self) -> bool {
        let s = self.delta_max + self.delta_min;
        self.revan
            .iter()
            .zip(&self.degrees)
            .all(|(&r, &d)| s - r == d)
    }
}
