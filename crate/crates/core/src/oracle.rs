//! Exhaustive reference enumeration and a seeded random network generator.
//!
//! [`brute_force_maximal`] tries every vertex subset against every grid
//! interval inside the lifetime and keeps what the definitions accept. It is
//! exponential and refuses instances above its bounds.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::clique::{is_delta_gamma_clique, is_maximal_def, Clique, Parameters};
use crate::graph::{Lifetime, TemporalEdge, TemporalNetwork, Time, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("{found} vertices exceeds the oracle bound of {bound}")]
    TooManyVertices { found: usize, bound: usize },
    #[error("{found} grid instants exceeds the oracle bound of {bound}")]
    GridTooLong { found: usize, bound: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleBounds {
    pub max_vertices: usize,
    pub max_grid: usize,
}

impl Default for OracleBounds {
    fn default() -> Self {
        Self {
            max_vertices: 6,
            max_grid: 24,
        }
    }
}

impl OracleBounds {
    pub fn check(&self, net: &TemporalNetwork) -> Result<(), OracleError> {
        let vertices = net.vertices().len();
        if vertices > self.max_vertices {
            return Err(OracleError::TooManyVertices {
                found: vertices,
                bound: self.max_vertices,
            });
        }
        let grid = net.grid_len();
        if grid > self.max_grid {
            return Err(OracleError::GridTooLong {
                found: grid,
                bound: self.max_grid,
            });
        }
        Ok(())
    }
}

/// All maximal cliques by exhaustive search, in canonical order.
pub fn brute_force_maximal(
    net: &TemporalNetwork,
    params: &Parameters,
    bounds: OracleBounds,
) -> Result<Vec<Clique>, OracleError> {
    bounds.check(net)?;
    let dict = net.dictionary();
    let vertices: Vec<VertexId> = net.vertices().iter().copied().collect();
    let lifetime = net.lifetime();
    let dt = params.dt();
    let grid: Vec<Time> = (0..net.grid_len() as Time)
        .map(|k| lifetime.start + k * dt)
        .collect();

    let mut found = Vec::new();
    for mask in 0u64..(1u64 << vertices.len()) {
        if mask.count_ones() < 2 {
            continue;
        }
        let members: Vec<VertexId> = vertices
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, &v)| v)
            .collect();
        for (i, &t_a) in grid.iter().enumerate() {
            for &t_b in &grid[i..] {
                let holds = is_delta_gamma_clique(&members, t_a, t_b, &dict, params)
                    .expect("subsets have at least two members");
                if !holds {
                    continue;
                }
                let clique = Clique::new(members.iter().copied(), t_a, t_b)
                    .expect("valid members and interval");
                if is_maximal_def(&clique, net, &dict, params).expect("checked above") {
                    found.push(clique);
                }
            }
        }
    }
    found.sort();
    Ok(found)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneratorConfig {
    pub vertex_count: usize,
    /// Number of grid instants; the lifetime is `[0, grid_length − 1]` with dt = 1.
    pub grid_length: usize,
    pub edge_probability: f64,
    pub seed: u64,
}

/// Bernoulli contact stream: every pair at every grid instant is present
/// with the configured probability. Reproducible from the seed.
pub fn random_temporal_network(config: &GeneratorConfig) -> TemporalNetwork {
    assert!(config.grid_length >= 1, "grid needs at least one instant");
    assert!(
        (0.0..=1.0).contains(&config.edge_probability),
        "edge probability must lie in [0, 1]"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let n = config.vertex_count as VertexId;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            for t in 0..config.grid_length as Time {
                if rng.random_bool(config.edge_probability) {
                    edges.push(TemporalEdge { u, v, t });
                }
            }
        }
    }
    let lifetime = Lifetime::new(0, config.grid_length as Time - 1).expect("non-empty grid");
    TemporalNetwork::with_lifetime(0..n, edges, 1, lifetime)
        .expect("generated edges lie on the grid")
}
