//! Temporal networks: ingestion, normalization, and the static-edge dictionary.
//!
//! A temporal network is a multiset of `(u, v, t)` contacts observed on a
//! uniform grid of spacing `dt`. Contacts are stored undirected, with the
//! smaller vertex id first, and duplicate triples collapse to one entry.

use std::collections::{BTreeMap, BTreeSet};
use std::io::BufRead;

use thiserror::Error;

/// Vertex identifier as it appears in the input.
pub type VertexId = u64;

/// Integer time in raw input units.
pub type Time = i64;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("no edges")]
    NoEdges,
    #[error("self-loop on vertex {0}")]
    SelfLoop(VertexId),
    #[error("line {line}: pair ({u}, {v}) appears in both orientations")]
    Directed {
        line: usize,
        u: VertexId,
        v: VertexId,
    },
    #[error("resolution must be positive, got {0}")]
    BadResolution(Time),
    #[error("timestamp {t} is not on the grid of spacing {dt} starting at {start}")]
    OffGrid { t: Time, start: Time, dt: Time },
    #[error("timestamp {t} lies outside the lifetime [{start}, {end}]")]
    OutsideLifetime { t: Time, start: Time, end: Time },
    #[error("invalid lifetime [{start}, {end}]")]
    BadLifetime { start: Time, end: Time },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// An undirected contact, stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TemporalEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub t: Time,
}

impl TemporalEdge {
    pub fn new(a: VertexId, b: VertexId, t: Time) -> Result<Self, GraphError> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Self { u: a, v: b, t }),
            std::cmp::Ordering::Greater => Ok(Self { u: b, v: a, t }),
            std::cmp::Ordering::Equal => Err(GraphError::SelfLoop(a)),
        }
    }

    pub fn pair(&self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }
}

/// Closed observation span `[start, end]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Lifetime {
    pub start: Time,
    pub end: Time,
}

impl Lifetime {
    pub fn new(start: Time, end: Time) -> Result<Self, GraphError> {
        if start > end {
            return Err(GraphError::BadLifetime { start, end });
        }
        Ok(Self { start, end })
    }

    pub fn contains(&self, t: Time) -> bool {
        self.start <= t && t <= self.end
    }

    pub fn span(&self) -> Time {
        self.end - self.start
    }
}

#[derive(Debug, Clone)]
pub struct TemporalNetwork {
    vertices: BTreeSet<VertexId>,
    edges: Vec<TemporalEdge>,
    dt: Time,
    lifetime: Lifetime,
}

impl TemporalNetwork {
    /// Builds a network from raw contacts. Duplicates collapse; the lifetime
    /// is the span of observed timestamps and `dt` is inferred unless given.
    pub fn from_edges<I>(edges: I, dt: Option<Time>) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = TemporalEdge>,
    {
        let mut edges: Vec<TemporalEdge> = edges.into_iter().collect();
        edges.sort_unstable_by_key(|e| (e.t, e.u, e.v));
        edges.dedup();
        let (start, end) = match (edges.first(), edges.last()) {
            (Some(first), Some(last)) => (first.t, last.t),
            _ => return Err(GraphError::NoEdges),
        };
        let lifetime = Lifetime::new(start, end)?;
        let dt = match dt {
            Some(dt) => dt,
            None => infer_resolution(edges.iter().map(|e| e.t), start),
        };
        Self::assemble(BTreeSet::new(), edges, dt, lifetime)
    }

    /// Builds a network over an explicit vertex set and lifetime. Isolated
    /// vertices are kept and an empty edge set is allowed.
    pub fn with_lifetime<I>(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: I,
        dt: Time,
        lifetime: Lifetime,
    ) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = TemporalEdge>,
    {
        let mut edges: Vec<TemporalEdge> = edges.into_iter().collect();
        edges.sort_unstable_by_key(|e| (e.t, e.u, e.v));
        edges.dedup();
        Self::assemble(vertices.into_iter().collect(), edges, dt, lifetime)
    }

    fn assemble(
        mut vertices: BTreeSet<VertexId>,
        edges: Vec<TemporalEdge>,
        dt: Time,
        lifetime: Lifetime,
    ) -> Result<Self, GraphError> {
        if dt <= 0 {
            return Err(GraphError::BadResolution(dt));
        }
        for e in &edges {
            if !lifetime.contains(e.t) {
                return Err(GraphError::OutsideLifetime {
                    t: e.t,
                    start: lifetime.start,
                    end: lifetime.end,
                });
            }
            if (e.t - lifetime.start) % dt != 0 {
                return Err(GraphError::OffGrid {
                    t: e.t,
                    start: lifetime.start,
                    dt,
                });
            }
            vertices.insert(e.u);
            vertices.insert(e.v);
        }
        Ok(Self {
            vertices,
            edges,
            dt,
            lifetime,
        })
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    /// Deduplicated contacts ordered by `(t, u, v)`.
    pub fn edges(&self) -> &[TemporalEdge] {
        &self.edges
    }

    pub fn dt(&self) -> Time {
        self.dt
    }

    pub fn lifetime(&self) -> Lifetime {
        self.lifetime
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of grid instants in the lifetime.
    pub fn grid_len(&self) -> usize {
        (self.lifetime.span() / self.dt) as usize + 1
    }

    pub fn dictionary(&self) -> EdgeDictionary {
        EdgeDictionary::build(self)
    }
}

/// Greatest common divisor of all offsets `t - start`; 1 when every offset is 0.
pub fn infer_resolution(times: impl IntoIterator<Item = Time>, start: Time) -> Time {
    let g = times
        .into_iter()
        .fold(0, |acc, t| gcd(acc, (t - start).abs()));
    if g == 0 {
        1
    } else {
        g
    }
}

fn gcd(mut a: Time, mut b: Time) -> Time {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Static edge → strictly ascending occurrence times.
#[derive(Debug, Clone, Default)]
pub struct EdgeDictionary {
    times: BTreeMap<(VertexId, VertexId), Vec<Time>>,
    neighbors: BTreeMap<VertexId, Vec<VertexId>>,
}

impl EdgeDictionary {
    pub fn build(net: &TemporalNetwork) -> Self {
        Self::from_edges(net.edges().iter().copied())
    }

    pub fn from_edges(edges: impl IntoIterator<Item = TemporalEdge>) -> Self {
        let mut times: BTreeMap<(VertexId, VertexId), Vec<Time>> = BTreeMap::new();
        for e in edges {
            times.entry(e.pair()).or_default().push(e.t);
        }
        let mut neighbors: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for (&(u, v), ts) in times.iter_mut() {
            ts.sort_unstable();
            ts.dedup();
            neighbors.entry(u).or_default().push(v);
            neighbors.entry(v).or_default().push(u);
        }
        for list in neighbors.values_mut() {
            list.sort_unstable();
        }
        Self { times, neighbors }
    }

    /// Occurrence times of the pair, empty when the pair never occurs.
    pub fn times(&self, a: VertexId, b: VertexId) -> &[Time] {
        let key = if a < b { (a, b) } else { (b, a) };
        self.times.get(&key).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn frequency(&self, a: VertexId, b: VertexId) -> usize {
        self.times(a, b).len()
    }

    pub fn len(&self) -> usize {
        self.times.len()
    }

    pub fn is_empty(&self) -> bool {
        self.times.is_empty()
    }

    /// Static edges in ascending key order.
    pub fn iter(&self) -> impl Iterator<Item = ((VertexId, VertexId), &[Time])> {
        self.times.iter().map(|(&k, v)| (k, v.as_slice()))
    }

    pub fn total_occurrences(&self) -> usize {
        self.times.values().map(Vec::len).sum()
    }

    /// Static neighbors of `v` over the whole lifetime, ascending.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        self.neighbors.get(&v).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Vertices outside `members` whose pair with every member occurs at
    /// least `gamma` times within `[t_a, t_b]`. A necessary condition for
    /// extending `members` by that vertex over the same interval.
    pub fn candidate_vertices(
        &self,
        members: &[VertexId],
        t_a: Time,
        t_b: Time,
        gamma: usize,
    ) -> Vec<VertexId> {
        let Some(pivot) = members
            .iter()
            .copied()
            .min_by_key(|&m| self.neighbors(m).len())
        else {
            return Vec::new();
        };
        self.neighbors(pivot)
            .iter()
            .copied()
            .filter(|v| !members.contains(v))
            .filter(|&v| {
                members
                    .iter()
                    .all(|&m| crate::clique::count_in_window(self.times(m, v), t_a, t_b) >= gamma)
            })
            .collect()
    }
}

/// Column layout of an edge file.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeFormat {
    /// `u v t`
    ThreeColumn,
    /// `u v w t`, weight ignored
    FourColumn,
}

#[derive(Debug, Clone)]
pub struct ParseOptions {
    pub format: EdgeFormat,
    pub comment_prefixes: Vec<String>,
    /// Fold `(v, u)` onto `(u, v)`. When false, seeing both orientations of
    /// a pair is an error.
    pub directed_as_undirected: bool,
    /// Shift all timestamps so the earliest one lands here.
    pub origin: Option<Time>,
    /// Grid spacing; inferred when absent.
    pub dt: Option<Time>,
    /// Observation span; the span of observed timestamps when absent.
    /// Applied after the origin shift.
    pub lifetime: Option<Lifetime>,
}

impl Default for ParseOptions {
    fn default() -> Self {
        Self {
            format: EdgeFormat::ThreeColumn,
            comment_prefixes: vec!["%".to_string(), "#".to_string()],
            directed_as_undirected: true,
            origin: None,
            dt: None,
            lifetime: None,
        }
    }
}

/// Counts gathered while parsing.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ParseReport {
    pub lines: usize,
    pub comments: usize,
    /// Data lines kept before deduplication (self-loops excluded).
    pub raw_edges: usize,
    pub self_loops: usize,
    pub duplicates: usize,
    pub edges: usize,
    pub vertices: usize,
    pub static_edges: usize,
}

impl ParseReport {
    /// `key=value` lines, one per counter.
    pub fn to_kv_lines(&self) -> String {
        format!(
            "lines={}\ncomments={}\nraw_edges={}\nself_loops={}\nduplicates={}\nedges={}\nvertices={}\nstatic_edges={}\n",
            self.lines,
            self.comments,
            self.raw_edges,
            self.self_loops,
            self.duplicates,
            self.edges,
            self.vertices,
            self.static_edges
        )
    }
}

pub fn parse_edge_stream<R: BufRead>(
    reader: R,
    options: &ParseOptions,
) -> Result<(TemporalNetwork, ParseReport), GraphError> {
    let mut report = ParseReport::default();
    let mut edges = Vec::new();
    let mut orientation: BTreeMap<(VertexId, VertexId), (VertexId, usize)> = BTreeMap::new();

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let lineno = idx + 1;
        report.lines += 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if options
            .comment_prefixes
            .iter()
            .any(|p| trimmed.starts_with(p.as_str()))
        {
            report.comments += 1;
            continue;
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        let needed = match options.format {
            EdgeFormat::ThreeColumn => 3,
            EdgeFormat::FourColumn => 4,
        };
        if fields.len() < needed {
            return Err(GraphError::Parse {
                line: lineno,
                reason: format!("expected {needed} fields, found {}", fields.len()),
            });
        }
        let a = parse_field::<VertexId>(fields[0], lineno)?;
        let b = parse_field::<VertexId>(fields[1], lineno)?;
        let t = match options.format {
            EdgeFormat::ThreeColumn => parse_field::<Time>(fields[2], lineno)?,
            EdgeFormat::FourColumn => {
                // weight must still be numeric
                fields[2].parse::<f64>().map_err(|_| GraphError::Parse {
                    line: lineno,
                    reason: format!("weight {:?} is not a number", fields[2]),
                })?;
                parse_field::<Time>(fields[3], lineno)?
            }
        };
        let edge = match TemporalEdge::new(a, b, t) {
            Ok(edge) => edge,
            Err(GraphError::SelfLoop(_)) => {
                report.self_loops += 1;
                continue;
            }
            Err(e) => return Err(e),
        };
        if !options.directed_as_undirected {
            let first = orientation.entry(edge.pair()).or_insert((a, lineno));
            if first.0 != a {
                return Err(GraphError::Directed {
                    line: lineno,
                    u: a,
                    v: b,
                });
            }
        }
        report.raw_edges += 1;
        edges.push(edge);
    }

    if edges.is_empty() {
        return Err(GraphError::NoEdges);
    }
    if let Some(origin) = options.origin {
        let min = edges.iter().map(|e| e.t).min().unwrap_or(origin);
        let shift = origin - min;
        for e in &mut edges {
            e.t += shift;
        }
    }

    let net = match options.lifetime {
        Some(lifetime) => {
            let dt = options
                .dt
                .unwrap_or_else(|| infer_resolution(edges.iter().map(|e| e.t), lifetime.start));
            TemporalNetwork::with_lifetime([], edges, dt, lifetime)?
        }
        None => TemporalNetwork::from_edges(edges, options.dt)?,
    };
    report.edges = net.edges().len();
    report.duplicates = report.raw_edges - report.edges;
    report.vertices = net.vertices().len();
    report.static_edges = net.dictionary().len();
    Ok((net, report))
}

fn parse_field<T: std::str::FromStr>(field: &str, line: usize) -> Result<T, GraphError> {
    field.parse::<T>().map_err(|_| GraphError::Parse {
        line,
        reason: format!("{field:?} is not an integer"),
    })
}
