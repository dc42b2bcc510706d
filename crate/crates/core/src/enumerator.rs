//! Growth of seed cliques into the maximal (Δ,γ)-cliques.
//!
//! Each dequeued clique is offered three kinds of growth: one more vertex,
//! an earlier start, and a later end. Growth results not seen before are
//! queued. A clique that admits none of the three is maximal.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::time::{Duration, Instant};

use crate::clique::{
    clique_holds, first_gamma_occurrence, is_delta_gamma_clique, last_gamma_occurrence, Clique,
    Parameters,
};
use crate::graph::{EdgeDictionary, Lifetime, TemporalNetwork, Time};
use crate::initializer::seed_cliques;

/// Order in which pending cliques are taken.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum QueueOrder {
    #[default]
    Fifo,
    Lifo,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RunStats {
    /// Cliques removed from the pending queue.
    pub iterations: u64,
    pub seeds: u64,
    pub vertex_expansions: u64,
    pub left_expansions: u64,
    pub right_expansions: u64,
    /// Size of the seen set at the end of the run.
    pub seen_size: u64,
    /// γ exceeded the window capacity and the run was skipped.
    pub infeasible: bool,
    pub wall_time: Duration,
}

#[derive(Debug, Clone)]
pub struct Enumeration {
    /// Maximal cliques in canonical order.
    pub cliques: Vec<Clique>,
    pub stats: RunStats,
}

/// Hooks into the work loop, for tests and tracing.
pub trait Observer {
    fn seeded(&mut self, _clique: &Clique) {}
    fn enqueued(&mut self, _clique: &Clique) {}
    fn emitted(&mut self, _clique: &Clique) {}
}

impl Observer for () {}

/// Pending queue, seen set, and results of one run.
#[derive(Debug, Default)]
pub struct WorkSets {
    pending: VecDeque<Clique>,
    seen: HashSet<Clique>,
    results: BTreeSet<Clique>,
}

impl WorkSets {
    /// Queues `clique` unless it was seen before. Returns whether it was new.
    fn offer(&mut self, clique: Clique) -> bool {
        if self.seen.contains(&clique) {
            return false;
        }
        self.seen.insert(clique.clone());
        self.pending.push_back(clique);
        true
    }

    fn take(&mut self, order: QueueOrder) -> Option<Clique> {
        match order {
            QueueOrder::Fifo => self.pending.pop_front(),
            QueueOrder::Lifo => self.pending.pop_back(),
        }
    }
}

/// Every one-vertex extension of `clique` over the same interval, by vertex id.
pub fn vertex_expansions(
    clique: &Clique,
    dict: &EdgeDictionary,
    params: &Parameters,
) -> Vec<Clique> {
    dict.candidate_vertices(clique.members(), clique.t_a(), clique.t_b(), params.gamma())
        .into_iter()
        .map(|v| clique.with_member(v))
        .filter(|grown| clique_holds(grown, dict, params))
        .collect()
}

/// Earlier start: the latest per-pair left anchor minus Δ, not before the
/// lifetime. `None` when that does not move the start.
pub fn left_expansion(
    clique: &Clique,
    dict: &EdgeDictionary,
    params: &Parameters,
    lifetime: Lifetime,
) -> Option<Clique> {
    let mut latest = None;
    for (u, v) in clique.pairs() {
        let anchor =
            first_gamma_occurrence(dict.times(u, v), clique.t_a(), clique.t_b(), params).ok()?;
        latest = latest.max(Some(anchor));
    }
    let start = (latest? - params.delta()).max(lifetime.start);
    (start < clique.t_a()).then(|| clique.with_interval(start, clique.t_b()))
}

/// Later end: the earliest per-pair right anchor plus Δ, not past the
/// lifetime. `None` when that does not move the end.
pub fn right_expansion(
    clique: &Clique,
    dict: &EdgeDictionary,
    params: &Parameters,
    lifetime: Lifetime,
) -> Option<Clique> {
    let mut earliest: Option<_> = None;
    for (u, v) in clique.pairs() {
        let anchor =
            last_gamma_occurrence(dict.times(u, v), clique.t_a(), clique.t_b(), params).ok()?;
        earliest = Some(earliest.map_or(anchor, |e: Time| e.min(anchor)));
    }
    let end = (earliest? + params.delta()).min(lifetime.end);
    (end > clique.t_b()).then(|| clique.with_interval(clique.t_a(), end))
}

/// Configured enumeration over one network.
pub struct Enumerator<'a> {
    net: &'a TemporalNetwork,
    dict: &'a EdgeDictionary,
    params: Parameters,
    order: QueueOrder,
}

impl<'a> Enumerator<'a> {
    pub fn new(net: &'a TemporalNetwork, dict: &'a EdgeDictionary, params: Parameters) -> Self {
        Self {
            net,
            dict,
            params,
            order: QueueOrder::Fifo,
        }
    }

    pub fn order(mut self, order: QueueOrder) -> Self {
        self.order = order;
        self
    }

    pub fn run(&self) -> Enumeration {
        self.run_observed(&mut ())
    }

    pub fn run_observed<O: Observer + ?Sized>(&self, observer: &mut O) -> Enumeration {
        let started = Instant::now();
        let mut stats = RunStats::default();
        if self.params.is_infeasible() {
            log::info!(
                "gamma {} exceeds the {} grid instants of a delta window; no cliques",
                self.params.gamma(),
                self.params.window_capacity()
            );
            stats.infeasible = true;
            stats.wall_time = started.elapsed();
            return Enumeration {
                cliques: Vec::new(),
                stats,
            };
        }

        let lifetime = self.net.lifetime();
        let dict = self.dict;
        let params = &self.params;
        let mut work = WorkSets::default();

        for seed in seed_cliques(dict, params, lifetime) {
            observer.seeded(&seed);
            observer.enqueued(&seed);
            if work.offer(seed) {
                stats.seeds += 1;
            }
        }

        while let Some(clique) = work.take(self.order) {
            stats.iterations += 1;
            let mut maximal = true;

            for grown in vertex_expansions(&clique, dict, params) {
                maximal = false;
                if self.enqueue(&mut work, grown, observer) {
                    stats.vertex_expansions += 1;
                }
            }
            if let Some(grown) = left_expansion(&clique, dict, params, lifetime) {
                maximal = false;
                if self.enqueue(&mut work, grown, observer) {
                    stats.left_expansions += 1;
                }
            }
            if let Some(grown) = right_expansion(&clique, dict, params, lifetime) {
                maximal = false;
                if self.enqueue(&mut work, grown, observer) {
                    stats.right_expansions += 1;
                }
            }

            if maximal {
                observer.emitted(&clique);
                work.results.insert(clique);
            }
        }

        stats.seen_size = work.seen.len() as u64;
        stats.wall_time = started.elapsed();
        Enumeration {
            cliques: work.results.into_iter().collect(),
            stats,
        }
    }

    fn enqueue<O: Observer + ?Sized>(
        &self,
        work: &mut WorkSets,
        clique: Clique,
        observer: &mut O,
    ) -> bool {
        debug_assert!(
            is_delta_gamma_clique(
                clique.members(),
                clique.t_a(),
                clique.t_b(),
                self.dict,
                &self.params
            )
            .unwrap_or(false),
            "enqueued {clique} is not a clique"
        );
        if work.seen.contains(&clique) {
            return false;
        }
        observer.enqueued(&clique);
        work.offer(clique)
    }
}

/// Enumerates all maximal (Δ,γ)-cliques of `net`.
pub fn enumerate(net: &TemporalNetwork, params: Parameters) -> Enumeration {
    let dict = net.dictionary();
    Enumerator::new(net, &dict, params).run()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{TemporalEdge, VertexId};

    fn network(edges: &[(VertexId, VertexId, Time)], start: Time, end: Time) -> TemporalNetwork {
        let vertices: Vec<VertexId> = edges.iter().flat_map(|&(u, v, _)| [u, v]).collect();
        TemporalNetwork::with_lifetime(
            vertices,
            edges
                .iter()
                .map(|&(u, v, t)| TemporalEdge::new(u, v, t).unwrap()),
            1,
            Lifetime::new(start, end).unwrap(),
        )
        .unwrap()
    }

    fn s1(end: Time) -> TemporalNetwork {
        let edges: Vec<_> = [1, 2, 3, 5, 6, 7].iter().map(|&t| (0, 1, t)).collect();
        network(&edges, 0, end)
    }

    fn s2(bc: &[Time]) -> TemporalNetwork {
        let mut edges = vec![(0, 1, 1), (0, 1, 3), (0, 2, 2), (0, 2, 4)];
        edges.extend(bc.iter().map(|&t| (1, 2, t)));
        network(&edges, 0, 5)
    }

    fn p(delta: Time, gamma: usize) -> Parameters {
        Parameters::new(delta, gamma, 1).unwrap()
    }

    fn c(members: &[VertexId], t_a: Time, t_b: Time) -> Clique {
        Clique::new(members.iter().copied(), t_a, t_b).unwrap()
    }

    #[test]
    fn vertex_growth() {
        let net = s2(&[2, 3]);
        let dict = net.dictionary();
        assert_eq!(
            vertex_expansions(&c(&[0, 1], 0, 4), &dict, &p(4, 2)),
            vec![c(&[0, 1, 2], 0, 4)]
        );
        let net = s1(10);
        assert!(vertex_expansions(&c(&[0, 1], 0, 3), &net.dictionary(), &p(3, 2)).is_empty());
        let net = s2(&[2]);
        assert!(vertex_expansions(&c(&[0, 1], 0, 4), &net.dictionary(), &p(4, 2)).is_empty());
    }

    #[test]
    fn left_growth() {
        let net = s1(10);
        let dict = net.dictionary();
        let life = net.lifetime();
        assert_eq!(
            left_expansion(&c(&[0, 1], 6, 9), &dict, &p(3, 2), life),
            Some(c(&[0, 1], 3, 9))
        );
        assert_eq!(
            left_expansion(&c(&[0, 1], 0, 9), &dict, &p(3, 2), life),
            None
        );

        let net = s2(&[2, 3]);
        assert_eq!(
            left_expansion(
                &c(&[0, 1, 2], 0, 5),
                &net.dictionary(),
                &p(4, 2),
                net.lifetime()
            ),
            None
        );
    }

    #[test]
    fn right_growth() {
        let net = s1(10);
        let dict = net.dictionary();
        assert_eq!(
            right_expansion(&c(&[0, 1], 0, 3), &dict, &p(3, 2), net.lifetime()),
            Some(c(&[0, 1], 0, 6))
        );
        let short = s1(8);
        assert_eq!(
            right_expansion(
                &c(&[0, 1], 0, 6),
                &short.dictionary(),
                &p(3, 2),
                short.lifetime()
            ),
            Some(c(&[0, 1], 0, 8))
        );
        let lookahead = network(&[(0, 1, 7), (0, 1, 8), (0, 1, 11)], 0, 12);
        assert_eq!(
            right_expansion(
                &c(&[0, 1], 7, 10),
                &lookahead.dictionary(),
                &p(3, 2),
                lookahead.lifetime()
            ),
            Some(c(&[0, 1], 7, 11))
        );
    }

    #[test]
    fn fixtures_enumerate_to_single_clique() {
        let run = enumerate(&s1(10), p(3, 2));
        assert_eq!(run.cliques, vec![c(&[0, 1], 0, 9)]);
        let run = enumerate(&s2(&[2, 3]), p(4, 2));
        assert_eq!(run.cliques, vec![c(&[0, 1, 2], 0, 5)]);
    }

    #[test]
    fn infeasible_gamma_short_circuits() {
        let run = enumerate(&s1(10), p(3, 5));
        assert!(run.cliques.is_empty());
        assert!(run.stats.infeasible);
        assert_eq!(run.stats.iterations, 0);
    }

    #[test]
    fn iteration_accounting() {
        let net = s2(&[2, 3]);
        let run = enumerate(&net, p(4, 2));
        let s = &run.stats;
        assert_eq!(
            s.iterations,
            s.seeds + s.vertex_expansions + s.left_expansions + s.right_expansions
        );
        assert_eq!(s.seen_size, s.iterations);
        assert!(s.iterations >= s.seeds);
    }

    #[test]
    fn lifo_matches_fifo() {
        let net = s2(&[2, 3]);
        let dict = net.dictionary();
        let fifo = Enumerator::new(&net, &dict, p(4, 2)).run();
        let lifo = Enumerator::new(&net, &dict, p(4, 2))
            .order(QueueOrder::Lifo)
            .run();
        assert_eq!(fifo.cliques, lifo.cliques);
    }
}
