//! Hitting-sequence extraction.
//!
//! Every time the particle is at the source (a fresh walk, or a return along
//! an edge) the whole configuration is described by the rotor residues, so
//! the sequence of source visits is an orbit of a deterministic map on a
//! finite set. Brent's algorithm finds its pre-period `mu` and cycle length
//! `lambda` in constant memory. Hits recorded over `mu + lambda` source
//! excursions then determine the hitting sequence completely, and the
//! shortest period dividing the per-cycle hit count that is consistent from
//! index 0 is the fundamental period.

use serde::Serialize;

use super::{Network, NetworkError, VertexId};
use crate::rotor::{canonicalize, RotorType};

/// Evidence that the emitted period is exact.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecurrenceProof {
    /// Source excursions before the configuration first enters its cycle.
    pub preperiod_excursions: u64,
    /// Source excursions in one cycle of configurations.
    pub cycle_excursions: u64,
    pub preperiod_hits: usize,
    pub cycle_hits: usize,
    /// Rotor residues at the first configuration on the cycle; the
    /// configuration returns to exactly this state after every cycle.
    pub cycle_state: Vec<usize>,
    /// Vertex firings spent across detection and recording.
    pub firings: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HittingSequence {
    /// One fundamental period of target ids.
    pub period: Vec<VertexId>,
    pub proof: RecurrenceProof,
}

impl HittingSequence {
    pub fn len(&self) -> usize {
        self.period.len()
    }

    pub fn is_empty(&self) -> bool {
        self.period.is_empty()
    }

    pub fn rotor_type(&self) -> RotorType {
        canonicalize(&self.period).expect("hitting sequences are nonempty")
    }

    /// The `i`-th hit (0-based) of the infinite sequence.
    pub fn at(&self, i: usize) -> VertexId {
        self.period[i % self.period.len()]
    }
}

struct Excursions<'a> {
    net: &'a Network,
    firings: u64,
}

impl Excursions<'_> {
    /// Fires from the source until the particle is back at the source,
    /// either along an edge or after hitting a target.
    fn run(&mut self, residues: &mut [usize]) -> Result<Option<VertexId>, NetworkError> {
        let net = self.net;
        let mut v = net.source;
        loop {
            if self.firings >= net.step_budget {
                return Err(NetworkError::StepBudgetExceeded(net.step_budget));
            }
            v = net.fire(residues, v);
            self.firings += 1;
            if net.is_target[v] {
                return Ok(Some(v));
            }
            if v == net.source {
                return Ok(None);
            }
        }
    }

    fn advance(&mut self, residues: &mut [usize], steps: u64) -> Result<(), NetworkError> {
        for _ in 0..steps {
            self.run(residues)?;
        }
        Ok(())
    }
}

impl Network {
    /// Exact hitting sequence from the current rotor positions. Does not
    /// mutate the network.
    pub fn hitting_sequence(&self) -> Result<HittingSequence, NetworkError> {
        let start = self.residues();
        let mut ex = Excursions {
            net: self,
            firings: 0,
        };

        // Brent: cycle length.
        let mut power = 1u64;
        let mut lambda = 1u64;
        let mut tortoise = start.clone();
        let mut hare = start.clone();
        ex.run(&mut hare)?;
        while tortoise != hare {
            if power == lambda {
                tortoise.clone_from(&hare);
                power *= 2;
                lambda = 0;
            }
            ex.run(&mut hare)?;
            lambda += 1;
        }

        // Pre-period.
        let mut tortoise = start.clone();
        let mut hare = start.clone();
        ex.advance(&mut hare, lambda)?;
        let mut mu = 0u64;
        while tortoise != hare {
            ex.run(&mut tortoise)?;
            ex.run(&mut hare)?;
            mu += 1;
        }
        let cycle_state = tortoise;

        // Record.
        let mut state = start;
        let mut pre = Vec::new();
        for _ in 0..mu {
            pre.extend(ex.run(&mut state)?);
        }
        let mut cycle = Vec::new();
        for _ in 0..lambda {
            cycle.extend(ex.run(&mut state)?);
        }
        debug_assert_eq!(state, cycle_state);
        if cycle.is_empty() {
            return Err(NetworkError::StepBudgetExceeded(self.step_budget));
        }

        let at = |i: usize| {
            if i < pre.len() {
                pre[i]
            } else {
                cycle[(i - pre.len()) % cycle.len()]
            }
        };
        let horizon = pre.len() + cycle.len();
        let p = (1..=cycle.len())
            .filter(|p| cycle.len() % p == 0)
            .find(|&p| (0..horizon).all(|i| at(i) == at(i + p)))
            .ok_or(NetworkError::NotPeriodicFromStart)?;

        Ok(HittingSequence {
            period: (0..p).map(at).collect(),
            proof: RecurrenceProof {
                preperiod_excursions: mu,
                cycle_excursions: lambda,
                preperiod_hits: pre.len(),
                cycle_hits: cycle.len(),
                cycle_state,
                firings: ex.firings,
            },
        })
    }

    /// The first `count` targets hit from the current positions, without
    /// mutating the network.
    pub fn first_hits(&self, count: usize) -> Result<Vec<VertexId>, NetworkError> {
        let mut residues = self.residues();
        let mut ex = Excursions {
            net: self,
            firings: 0,
        };
        let mut hits = Vec::with_capacity(count);
        while hits.len() < count {
            hits.extend(ex.run(&mut residues)?);
        }
        Ok(hits)
    }
}
