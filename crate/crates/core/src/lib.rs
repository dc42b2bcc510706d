//! Maximal (Δ,γ)-clique enumeration in temporal networks.
//!
//! A (Δ,γ)-clique is a vertex set together with a time interval such that
//! every pair of vertices interacts at least γ times within every Δ-long
//! window of the interval. [`enumerate`] lists all maximal ones; the
//! [`oracle`] module holds an exhaustive reference used to check it.

pub mod clique;
pub mod enumerator;
pub mod graph;
pub mod initializer;
pub mod oracle;

pub use clique::{
    count_in_window, first_gamma_occurrence, is_delta_gamma_clique, is_maximal_def,
    last_gamma_occurrence, Clique, CliqueError, Parameters,
};
pub use enumerator::{
    enumerate, left_expansion, right_expansion, vertex_expansions, Enumeration, Enumerator,
    Observer, QueueOrder, RunStats,
};
pub use graph::{
    infer_resolution, parse_edge_stream, EdgeDictionary, EdgeFormat, GraphError, Lifetime,
    ParseOptions, ParseReport, TemporalEdge, TemporalNetwork, Time, VertexId,
};
pub use initializer::{seed_cliques, SeedSet};
pub use oracle::{
    brute_force_maximal, random_temporal_network, GeneratorConfig, OracleBounds, OracleError,
};

/// Maximum selection among maximal cliques.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MaximumMode {
    /// Longest interval.
    Temporal,
    /// Most vertices.
    Cardinal,
}

/// All cliques attaining the maximum duration or cardinality, in canonical order.
pub fn select_maximum(cliques: &[Clique], mode: MaximumMode) -> Vec<Clique> {
    let measure = |c: &Clique| match mode {
        MaximumMode::Temporal => c.duration(),
        MaximumMode::Cardinal => c.cardinality() as Time,
    };
    let Some(best) = cliques.iter().map(measure).max() else {
        return Vec::new();
    };
    let mut out: Vec<Clique> = cliques
        .iter()
        .filter(|c| measure(c) == best)
        .cloned()
        .collect();
    out.sort();
    out
}
