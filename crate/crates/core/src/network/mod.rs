//! Rotor-router networks on finite digraphs.
//!
//! A particle starts at the source and, at each non-target vertex `v`, leaves
//! along the out-edge named by the next unfired term of `v`'s rotor pattern.
//! Reaching a target ends the walk; the particle is then returned to the
//! source. Self-loops and parallel edges are allowed.

mod construct;
mod dag;
mod hitting;
mod io;

use std::collections::{BTreeSet, VecDeque};

use thiserror::Error;

use crate::rotor::{canonicalize, RotorError, RotorType, State};

pub use construct::{binary_tree, build_model_from_12};
pub use dag::{check_dag_bound, DagBound};
pub use hitting::{HittingSequence, RecurrenceProof};
pub use io::NetworkFile;

pub type VertexId = usize;

/// Default cap on vertex firings per simulation call.
pub const DEFAULT_STEP_BUDGET: u64 = 1_000_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum NetworkError {
    #[error("vertex {0} is out of range")]
    VertexOutOfRange(VertexId),
    #[error("the source {0} is a target")]
    SourceIsTarget(VertexId),
    #[error("target {0} has outgoing edges")]
    TargetHasEdges(VertexId),
    #[error("target {0} has a rotor pattern")]
    PatternOnTarget(VertexId),
    #[error("non-target vertex {0} has no rotor pattern")]
    MissingPattern(VertexId),
    #[error("vertex {vertex} fires state {state} but has only {outdegree} out-edges")]
    StateOutOfRange {
        vertex: VertexId,
        state: State,
        outdegree: usize,
    },
    #[error("vertex {0} cannot reach any target")]
    Unreachable(VertexId),
    #[error("network has no targets")]
    NoTargets,
    #[error("step budget of {0} vertex firings exceeded")]
    StepBudgetExceeded(u64),
    #[error("malformed target partition: {0}")]
    MalformedPartition(String),
    #[error("hiding would leave no reachable target")]
    AllTargetsHidden,
    #[error("network is not homogeneous")]
    NotHomogeneous,
    #[error("a directed cycle avoids the source")]
    CycleAvoidsSource,
    #[error("hitting sequence is not periodic from the start")]
    NotPeriodicFromStart,
    #[error("malformed network file: {0}")]
    File(String),
    #[error(transparent)]
    Rotor(#[from] RotorError),
}

/// A validated rotor-router network plus the live rotor positions.
///
/// Patterns are stored as raw label sequences: state `s` at vertex `v`
/// fires `out_edges[v][s - 1]`. Positions count the terms fired so far.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Network {
    out_edges: Vec<Vec<VertexId>>,
    patterns: Vec<Option<Vec<State>>>,
    source: VertexId,
    targets: BTreeSet<VertexId>,
    is_target: Vec<bool>,
    positions: Vec<u64>,
    step_budget: u64,
}

impl Network {
    /// Builds and validates a network. `out_edges[v]` and `patterns[v]` must
    /// be empty / `None` for targets and populated for every other vertex.
    pub fn new(
        out_edges: Vec<Vec<VertexId>>,
        patterns: Vec<Option<Vec<State>>>,
        source: VertexId,
        targets: impl IntoIterator<Item = VertexId>,
    ) -> Result<Self, NetworkError> {
        let n = out_edges.len();
        let targets: BTreeSet<VertexId> = targets.into_iter().collect();
        let mut is_target = vec![false; n];
        for &t in &targets {
            *is_target
                .get_mut(t)
                .ok_or(NetworkError::VertexOutOfRange(t))? = true;
        }
        let net = Network {
            positions: vec![0; n],
            out_edges,
            patterns,
            source,
            targets,
            is_target,
            step_budget: DEFAULT_STEP_BUDGET,
        };
        net.validate()?;
        Ok(net)
    }

    fn validate(&self) -> Result<(), NetworkError> {
        let n = self.out_edges.len();
        if self.patterns.len() != n {
            return Err(NetworkError::File(format!(
                "{} vertices but {} pattern slots",
                n,
                self.patterns.len()
            )));
        }
        if self.source >= n {
            return Err(NetworkError::VertexOutOfRange(self.source));
        }
        if self.targets.is_empty() {
            return Err(NetworkError::NoTargets);
        }
        if self.is_target[self.source] {
            return Err(NetworkError::SourceIsTarget(self.source));
        }
        for v in 0..n {
            if let Some(&w) = self.out_edges[v].iter().find(|&&w| w >= n) {
                return Err(NetworkError::VertexOutOfRange(w));
            }
            if self.is_target[v] {
                if !self.out_edges[v].is_empty() {
                    return Err(NetworkError::TargetHasEdges(v));
                }
                if self.patterns[v].is_some() {
                    return Err(NetworkError::PatternOnTarget(v));
                }
                continue;
            }
            let pattern = match &self.patterns[v] {
                Some(p) if !p.is_empty() => p,
                _ => return Err(NetworkError::MissingPattern(v)),
            };
            let outdegree = self.out_edges[v].len();
            if let Some(&state) = pattern
                .iter()
                .find(|&&s| s == 0 || s as usize > outdegree)
            {
                return Err(NetworkError::StateOutOfRange {
                    vertex: v,
                    state,
                    outdegree,
                });
            }
        }
        // Reverse search from the targets along edges that some pattern term
        // actually fires.
        let mut preds: Vec<Vec<VertexId>> = vec![Vec::new(); n];
        for v in 0..n {
            if let Some(p) = &self.patterns[v] {
                let used: BTreeSet<State> = p.iter().copied().collect();
                for s in used {
                    preds[self.out_edges[v][s as usize - 1]].push(v);
                }
            }
        }
        let mut seen = self.is_target.clone();
        let mut queue: VecDeque<VertexId> = self.targets.iter().copied().collect();
        while let Some(w) = queue.pop_front() {
            for &v in &preds[w] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        match (0..n).find(|&v| !seen[v]) {
            Some(v) => Err(NetworkError::Unreachable(v)),
            None => Ok(()),
        }
    }

    pub fn with_step_budget(mut self, budget: u64) -> Self {
        self.step_budget = budget;
        self
    }

    pub fn step_budget(&self) -> u64 {
        self.step_budget
    }

    pub fn vertex_count(&self) -> usize {
        self.out_edges.len()
    }

    pub fn source(&self) -> VertexId {
        self.source
    }

    pub fn targets(&self) -> &BTreeSet<VertexId> {
        &self.targets
    }

    pub fn is_target(&self, v: VertexId) -> bool {
        self.is_target.get(v).copied().unwrap_or(false)
    }

    pub fn out_edges(&self, v: VertexId) -> &[VertexId] {
        &self.out_edges[v]
    }

    pub fn pattern(&self, v: VertexId) -> Option<&[State]> {
        self.patterns[v].as_deref()
    }

    /// Canonical rotor type of the pattern at `v`.
    pub fn rotor_type(&self, v: VertexId) -> Option<RotorType> {
        self.pattern(v).map(|p| canonicalize(p).expect("patterns are nonempty"))
    }

    /// Terms fired so far at each vertex.
    pub fn positions(&self) -> &[u64] {
        &self.positions
    }

    /// Non-target vertices in ascending order.
    pub fn rotor_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.vertex_count()).filter(|&v| !self.is_target[v])
    }

    /// Targets some pattern actually routes into.
    pub fn live_targets(&self) -> BTreeSet<VertexId> {
        let mut live = BTreeSet::new();
        for v in self.rotor_vertices() {
            for &s in self.pattern(v).unwrap() {
                let w = self.out_edges[v][s as usize - 1];
                if self.is_target[w] {
                    live.insert(w);
                }
            }
        }
        live
    }

    /// Targets reachable from the source along edges some pattern fires.
    pub fn reachable_targets(&self) -> BTreeSet<VertexId> {
        let mut seen = vec![false; self.vertex_count()];
        seen[self.source] = true;
        let mut queue = VecDeque::from([self.source]);
        let mut found = BTreeSet::new();
        while let Some(v) = queue.pop_front() {
            if self.is_target[v] {
                found.insert(v);
                continue;
            }
            for &s in self.pattern(v).unwrap() {
                let w = self.out_edges[v][s as usize - 1];
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        found
    }

    /// Per-walk budget: `|V|` times the product of distinct pattern periods,
    /// capped by the network's step budget.
    pub fn walk_budget(&self) -> u64 {
        let periods: BTreeSet<usize> = self
            .patterns
            .iter()
            .flatten()
            .map(|p| p.len())
            .collect();
        periods
            .into_iter()
            .fold(self.vertex_count() as u64, |acc, p| acc.saturating_mul(p as u64))
            .min(self.step_budget)
    }

    /// Fires `v` once, advancing its position, and returns the next vertex.
    fn fire(&self, residues: &mut [usize], v: VertexId) -> VertexId {
        let pattern = self.patterns[v].as_ref().expect("fired a target");
        let state = pattern[residues[v]];
        residues[v] += 1;
        if residues[v] == pattern.len() {
            residues[v] = 0;
        }
        self.out_edges[v][state as usize - 1]
    }

    /// Positions reduced modulo each pattern's period.
    fn residues(&self) -> Vec<usize> {
        self.positions
            .iter()
            .zip(&self.patterns)
            .map(|(&pos, p)| p.as_ref().map_or(0, |p| (pos % p.len() as u64) as usize))
            .collect()
    }

    /// Sends one particle from the source until it reaches a target, and
    /// returns that target.
    pub fn walk_once(&mut self) -> Result<VertexId, NetworkError> {
        let budget = self.walk_budget();
        let mut residues = self.residues();
        let mut v = self.source;
        let mut fired = 0u64;
        while !self.is_target[v] {
            if fired == budget {
                return Err(NetworkError::StepBudgetExceeded(budget));
            }
            let next = self.fire(&mut residues, v);
            self.positions[v] += 1;
            fired += 1;
            v = next;
        }
        Ok(v)
    }

    /// Resets every rotor to its first term.
    pub fn reset(&mut self) {
        self.positions.iter_mut().for_each(|p| *p = 0);
    }

    /// Clones the network, applies `f` to its edge lists, and re-validates.
    pub(crate) fn map_edges(
        &self,
        f: impl Fn(VertexId) -> VertexId,
    ) -> Result<Network, NetworkError> {
        let out_edges = self
            .out_edges
            .iter()
            .map(|edges| edges.iter().map(|&w| f(w)).collect())
            .collect();
        let mut net = Network::new(
            out_edges,
            self.patterns.clone(),
            self.source,
            self.targets.iter().copied(),
        )?
        .with_step_budget(self.step_budget);
        net.positions = self.positions.clone();
        Ok(net)
    }

    /// Merges targets block by block. Every target must appear in exactly one
    /// block; edges into a block are redirected to its smallest member. The
    /// other members stay in the graph as unreachable targets so vertex ids
    /// are stable.
    pub fn merge_targets(&self, partition: &[Vec<VertexId>]) -> Result<Network, NetworkError> {
        let mut representative: Vec<Option<VertexId>> = vec![None; self.vertex_count()];
        for block in partition {
            let rep = *block
                .iter()
                .min()
                .ok_or_else(|| NetworkError::MalformedPartition("empty block".into()))?;
            for &t in block {
                if !self.is_target(t) {
                    return Err(NetworkError::MalformedPartition(format!(
                        "{t} is not a target"
                    )));
                }
                if representative[t].replace(rep).is_some() {
                    return Err(NetworkError::MalformedPartition(format!(
                        "{t} appears twice"
                    )));
                }
            }
        }
        if let Some(&t) = self.targets.iter().find(|&&t| representative[t].is_none()) {
            return Err(NetworkError::MalformedPartition(format!(
                "target {t} is not covered"
            )));
        }
        self.map_edges(|w| representative[w].unwrap_or(w))
    }

    /// Redirects every edge into a hidden target back to the source. The
    /// hitting sequence of the result is the original with the hidden
    /// targets deleted. At least one target reachable from the source must
    /// stay visible.
    pub fn hide_targets(&self, hidden: &BTreeSet<VertexId>) -> Result<Network, NetworkError> {
        if let Some(&t) = hidden.iter().find(|&&t| !self.is_target(t)) {
            return Err(NetworkError::MalformedPartition(format!(
                "{t} is not a target"
            )));
        }
        if self.reachable_targets().is_subset(hidden) {
            return Err(NetworkError::AllTargetsHidden);
        }
        let source = self.source;
        self.map_edges(|w| if hidden.contains(&w) { source } else { w })
    }
}
