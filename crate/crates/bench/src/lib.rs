//! Synthetic workloads shared by the benchmarks.

use tempclique::{random_temporal_network, GeneratorConfig, TemporalNetwork};

/// Contact stream over `vertices` nodes and `grid` instants with the given density.
pub fn contact_stream(vertices: usize, grid: usize, density: f64, seed: u64) -> TemporalNetwork {
    random_temporal_network(&GeneratorConfig {
        vertex_count: vertices,
        grid_length: grid,
        edge_probability: density,
        seed,
    })
}
