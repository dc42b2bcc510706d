//! The (Δ,γ)-clique model and the predicates every other module builds on.
//!
//! A vertex set `X` over a closed interval `[t_a, t_b]` is a (Δ,γ)-clique when
//! every pair in `X` occurs at least γ times inside every window
//! `[τ, min(τ+Δ, t_b)]` for grid instants `τ ∈ [t_a, max(t_b−Δ, t_a)]`.

use std::fmt;

use thiserror::Error;

use crate::graph::{EdgeDictionary, TemporalNetwork, Time, VertexId};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CliqueError {
    #[error("a clique needs at least 2 distinct vertices, got {0}")]
    TooFewMembers(usize),
    #[error("interval [{t_a}, {t_b}] is reversed")]
    ReversedInterval { t_a: Time, t_b: Time },
    #[error("pair has {found} occurrences in [{t_a}, {t_b}], needs {needed}")]
    InsufficientOccurrences {
        t_a: Time,
        t_b: Time,
        found: usize,
        needed: usize,
    },
    #[error("{0} is not a (delta, gamma)-clique")]
    NotAClique(Clique),
    #[error("invalid parameters: {0}")]
    Parameters(String),
}

/// Window length Δ, occurrence threshold γ, and grid spacing dt.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Parameters {
    delta: Time,
    gamma: usize,
    dt: Time,
}

impl Parameters {
    pub fn new(delta: Time, gamma: usize, dt: Time) -> Result<Self, CliqueError> {
        if dt <= 0 {
            return Err(CliqueError::Parameters(format!(
                "dt must be positive, got {dt}"
            )));
        }
        if gamma == 0 {
            return Err(CliqueError::Parameters("gamma must be at least 1".into()));
        }
        if delta < dt || delta % dt != 0 {
            return Err(CliqueError::Parameters(format!(
                "delta {delta} must be a positive multiple of dt {dt}"
            )));
        }
        Ok(Self { delta, gamma, dt })
    }

    pub fn delta(&self) -> Time {
        self.delta
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn dt(&self) -> Time {
        self.dt
    }

    /// Grid instants that fit in one closed Δ window.
    pub fn window_capacity(&self) -> usize {
        (self.delta / self.dt) as usize + 1
    }

    /// No pair can occur γ times in any window.
    pub fn is_infeasible(&self) -> bool {
        self.gamma > self.window_capacity()
    }
}

/// A vertex set paired with a closed interval.
///
/// The derived ordering compares `(t_a, t_b, members)` and doubles as the
/// canonical key: two cliques are equal exactly when they have the same
/// members and interval.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Clique {
    t_a: Time,
    t_b: Time,
    members: Vec<VertexId>,
}

impl Clique {
    pub fn new(
        members: impl IntoIterator<Item = VertexId>,
        t_a: Time,
        t_b: Time,
    ) -> Result<Self, CliqueError> {
        let mut members: Vec<VertexId> = members.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        if members.len() < 2 {
            return Err(CliqueError::TooFewMembers(members.len()));
        }
        if t_a > t_b {
            return Err(CliqueError::ReversedInterval { t_a, t_b });
        }
        Ok(Self { t_a, t_b, members })
    }

    pub(crate) fn pair(u: VertexId, v: VertexId, t_a: Time, t_b: Time) -> Self {
        debug_assert!(u < v && t_a <= t_b);
        Self {
            t_a,
            t_b,
            members: vec![u, v],
        }
    }

    pub fn members(&self) -> &[VertexId] {
        &self.members
    }

    pub fn t_a(&self) -> Time {
        self.t_a
    }

    pub fn t_b(&self) -> Time {
        self.t_b
    }

    pub fn duration(&self) -> Time {
        self.t_b - self.t_a
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    /// Same interval, one more member.
    pub fn with_member(&self, v: VertexId) -> Self {
        let mut members = self.members.clone();
        if let Err(pos) = members.binary_search(&v) {
            members.insert(pos, v);
        }
        Self {
            t_a: self.t_a,
            t_b: self.t_b,
            members,
        }
    }

    /// Same members over another interval.
    pub fn with_interval(&self, t_a: Time, t_b: Time) -> Self {
        debug_assert!(t_a <= t_b);
        Self {
            t_a,
            t_b,
            members: self.members.clone(),
        }
    }

    /// Unordered member pairs in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
        pairs_of(&self.members)
    }
}

impl fmt::Display for Clique {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}, [{}, {}])", self.t_a, self.t_b)
    }
}

pub(crate) fn pairs_of(members: &[VertexId]) -> impl Iterator<Item = (VertexId, VertexId)> + '_ {
    members
        .iter()
        .enumerate()
        .flat_map(move |(i, &u)| members[i + 1..].iter().map(move |&v| (u, v)))
}

/// Number of entries of the ascending list `times` in `[lo, hi]`.
pub fn count_in_window(times: &[Time], lo: Time, hi: Time) -> usize {
    if lo > hi {
        return 0;
    }
    let start = times.partition_point(|&t| t < lo);
    let end = times.partition_point(|&t| t <= hi);
    end - start
}

/// Whether one pair's occurrence list satisfies every window of `[t_a, t_b]`.
///
/// The per-window count only drops when τ steps past an occurrence, so it is
/// enough to test τ = t_a and τ = x + dt for every occurrence x.
pub fn pair_satisfies(times: &[Time], t_a: Time, t_b: Time, params: &Parameters) -> bool {
    let gamma = params.gamma;
    let delta = params.delta;
    let lo = times.partition_point(|&t| t < t_a);
    let first_hi = (t_a + delta).min(t_b);
    match times.get(lo + gamma - 1) {
        Some(&t) if t <= first_hi => {}
        _ => return false,
    }
    let last_tau = t_b - delta;
    for i in lo..times.len() {
        let tau = times[i] + params.dt;
        if tau > last_tau {
            break;
        }
        match times.get(i + gamma) {
            Some(&t) if t <= tau + delta => {}
            _ => return false,
        }
    }
    true
}

/// Membership test for a vertex set over `[t_a, t_b]`. Pairs are checked in
/// lexicographic order and the scan stops at the first failing pair; a pair
/// missing from the dictionary has no occurrences.
pub fn is_delta_gamma_clique(
    members: &[VertexId],
    t_a: Time,
    t_b: Time,
    dict: &EdgeDictionary,
    params: &Parameters,
) -> Result<bool, CliqueError> {
    if members.len() < 2 {
        return Err(CliqueError::TooFewMembers(members.len()));
    }
    if t_a > t_b {
        return Err(CliqueError::ReversedInterval { t_a, t_b });
    }
    Ok(pairs_of(members).all(|(u, v)| pair_satisfies(dict.times(u, v), t_a, t_b, params)))
}

pub fn clique_holds(clique: &Clique, dict: &EdgeDictionary, params: &Parameters) -> bool {
    clique
        .pairs()
        .all(|(u, v)| pair_satisfies(dict.times(u, v), clique.t_a, clique.t_b, params))
}

/// Latest admissible left anchor for one pair: the γth occurrence counted
/// forward from `t_a`, moved one grid step earlier when the window ending
/// there still holds γ occurrences.
pub fn first_gamma_occurrence(
    times: &[Time],
    t_a: Time,
    t_b: Time,
    params: &Parameters,
) -> Result<Time, CliqueError> {
    let lo = times.partition_point(|&t| t < t_a);
    let found = count_in_window(times, t_a, t_b);
    if found < params.gamma {
        return Err(CliqueError::InsufficientOccurrences {
            t_a,
            t_b,
            found,
            needed: params.gamma,
        });
    }
    let f = times[lo + params.gamma - 1];
    let stepped = f - params.dt;
    if count_in_window(times, stepped - params.delta, stepped) >= params.gamma {
        Ok(stepped)
    } else {
        Ok(f)
    }
}

/// Mirror of [`first_gamma_occurrence`]: the γth occurrence counted backward
/// from `t_b`, moved one grid step later when the window starting there
/// still holds γ occurrences.
pub fn last_gamma_occurrence(
    times: &[Time],
    t_a: Time,
    t_b: Time,
    params: &Parameters,
) -> Result<Time, CliqueError> {
    let hi = times.partition_point(|&t| t <= t_b);
    let found = count_in_window(times, t_a, t_b);
    if found < params.gamma {
        return Err(CliqueError::InsufficientOccurrences {
            t_a,
            t_b,
            found,
            needed: params.gamma,
        });
    }
    let l = times[hi - params.gamma];
    let stepped = l + params.dt;
    if count_in_window(times, stepped, stepped + params.delta) >= params.gamma {
        Ok(stepped)
    } else {
        Ok(l)
    }
}

/// Maximality straight from the definition: no single vertex can join, and
/// the interval cannot grow by one grid step on either side within the
/// lifetime. Tries every vertex of the network, so meant for checking, not
/// for the enumeration hot path.
pub fn is_maximal_def(
    clique: &Clique,
    net: &TemporalNetwork,
    dict: &EdgeDictionary,
    params: &Parameters,
) -> Result<bool, CliqueError> {
    if !clique_holds(clique, dict, params) {
        return Err(CliqueError::NotAClique(clique.clone()));
    }
    let lifetime = net.lifetime();
    let dt = params.dt;
    for &v in net.vertices() {
        if !clique.contains(v) && clique_holds(&clique.with_member(v), dict, params) {
            return Ok(false);
        }
    }
    if clique.t_a - dt >= lifetime.start
        && clique_holds(
            &clique.with_interval(clique.t_a - dt, clique.t_b),
            dict,
            params,
        )
    {
        return Ok(false);
    }
    if clique.t_b + dt <= lifetime.end
        && clique_holds(
            &clique.with_interval(clique.t_a, clique.t_b + dt),
            dict,
            params,
        )
    {
        return Ok(false);
    }
    Ok(true)
}
