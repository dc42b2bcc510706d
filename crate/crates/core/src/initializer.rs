//! Seed cliques: one or two 2-vertex, Δ-long cliques per run of γ
//! consecutive occurrences of a static edge.

use std::collections::BTreeSet;

use crate::clique::{Clique, Parameters};
use crate::graph::{EdgeDictionary, Lifetime, Time};

/// Deduplicated seeds in canonical order.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SeedSet {
    seeds: Vec<Clique>,
}

impl SeedSet {
    pub fn len(&self) -> usize {
        self.seeds.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seeds.is_empty()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Clique> {
        self.seeds.iter()
    }

    pub fn as_slice(&self) -> &[Clique] {
        &self.seeds
    }
}

impl IntoIterator for SeedSet {
    type Item = Clique;
    type IntoIter = std::vec::IntoIter<Clique>;

    fn into_iter(self) -> Self::IntoIter {
        self.seeds.into_iter()
    }
}

impl<'a> IntoIterator for &'a SeedSet {
    type Item = &'a Clique;
    type IntoIter = std::slice::Iter<'a, Clique>;

    fn into_iter(self) -> Self::IntoIter {
        self.seeds.iter()
    }
}

/// Generates the initial clique set.
///
/// For every run `e = T[i] .. l = T[i+γ−1]` of an edge with at least γ
/// occurrences: a run spanning exactly Δ yields `[e, l]`; a shorter run yields
/// `[e, e+Δ]` and `[l−Δ, l]`; a longer run yields nothing. Intervals that
/// overhang the lifetime are shifted back inside, which keeps both the Δ
/// length and the generating run.
///
/// A lifetime shorter than Δ cannot hold a Δ-long interval; there every edge
/// with γ occurrences seeds the whole lifetime instead.
pub fn seed_cliques(dict: &EdgeDictionary, params: &Parameters, lifetime: Lifetime) -> SeedSet {
    let delta = params.delta();
    let gamma = params.gamma();
    let mut seeds = BTreeSet::new();

    if lifetime.span() < delta {
        log::warn!(
            "lifetime {} is shorter than delta {delta}; seeding whole-lifetime intervals",
            lifetime.span()
        );
        for ((u, v), times) in dict.iter() {
            if times.len() >= gamma {
                seeds.insert(Clique::pair(u, v, lifetime.start, lifetime.end));
            }
        }
        return SeedSet {
            seeds: seeds.into_iter().collect(),
        };
    }

    let fit = |start: Time| -> (Time, Time) {
        let start = start.clamp(lifetime.start, lifetime.end - delta);
        (start, start + delta)
    };

    for ((u, v), times) in dict.iter() {
        if times.len() < gamma {
            continue;
        }
        for run in times.windows(gamma) {
            let (e, l) = (run[0], run[gamma - 1]);
            let span = l - e;
            if span == delta {
                seeds.insert(Clique::pair(u, v, e, l));
            } else if span < delta {
                let (a, b) = fit(e);
                seeds.insert(Clique::pair(u, v, a, b));
                let (a, b) = fit(l - delta);
                seeds.insert(Clique::pair(u, v, a, b));
            }
        }
    }

    SeedSet {
        seeds: seeds.into_iter().collect(),
    }
}
