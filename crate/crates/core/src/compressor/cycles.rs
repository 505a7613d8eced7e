//! Fixed cycles of the compressor maps on balanced rotors.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};
use serde::Serialize;

use super::{apply, CompressorVariant};
use crate::rotor::{burd_check, canonicalize, BurdVerdict, RotorError, RotorType};

/// A set of rotors closed under all four maps in which every member reaches
/// every other.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FixedCycle {
    pub members: Vec<RotorType>,
    pub burd: Vec<BurdVerdict>,
}

impl FixedCycle {
    pub fn all_burd(&self) -> bool {
        self.burd.iter().all(BurdVerdict::is_burd)
    }

    pub fn all_positional_burd(&self) -> bool {
        self.burd.iter().all(BurdVerdict::is_positional)
    }
}

/// Canonical balanced rotors of exactly this period.
pub fn balanced_rotors(period: usize) -> Vec<RotorType> {
    if period == 0 || period % 2 != 0 || period > 30 {
        return Vec::new();
    }
    let half = period / 2;
    (0u32..1 << (period - 1))
        .filter(|bits| bits.count_ones() as usize == half)
        .filter_map(|bits| {
            let seq: Vec<u32> = std::iter::once(1)
                .chain((0..period - 1).rev().map(|i| 1 + (bits >> i & 1)))
                .collect();
            let r = canonicalize(&seq).ok()?;
            (r.len() == period && r.symbols() == &seq[..]).then_some(r)
        })
        .collect()
}

/// Fixed cycles whose members have period `period`, found among everything
/// reachable from the balanced rotors of that period. Since the maps never
/// lengthen balanced rotors and members of a cycle reach each other, all
/// members of a cycle share one period.
pub fn fixed_cycle_search(period: usize) -> Result<Vec<FixedCycle>, RotorError> {
    let mut graph: DiGraph<RotorType, ()> = DiGraph::new();
    let mut index: BTreeMap<RotorType, NodeIndex> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for r in balanced_rotors(period) {
        let id = graph.add_node(r.clone());
        index.insert(r, id);
        queue.push_back(id);
    }
    while let Some(id) = queue.pop_front() {
        let r = graph[id].clone();
        let mut images = BTreeSet::new();
        for v in CompressorVariant::MAPS {
            images.insert(apply(&r, v)?.rotor);
        }
        for image in images {
            let target = *index.entry(image.clone()).or_insert_with(|| {
                let t = graph.add_node(image);
                queue.push_back(t);
                t
            });
            graph.add_edge(id, target, ());
        }
    }

    let mut cycles = Vec::new();
    for component in tarjan_scc(&graph) {
        let members: BTreeSet<NodeIndex> = component.iter().copied().collect();
        let closed = component
            .iter()
            .all(|&v| graph.neighbors(v).all(|w| members.contains(&w)));
        if !closed || graph[component[0]].len() != period {
            continue;
        }
        let mut rotors: Vec<RotorType> = component.iter().map(|&v| graph[v].clone()).collect();
        rotors.sort();
        let burd = rotors.iter().map(burd_check).collect::<Result<_, _>>()?;
        cycles.push(FixedCycle {
            members: rotors,
            burd,
        });
    }
    cycles.sort_by(|a, b| a.members.cmp(&b.members));
    Ok(cycles)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn balanced_rotor_counts() {
        assert_eq!(balanced_rotors(2).len(), 1);
        // 1122, 1212 (not primitive), 1221 -> 2 primitive.
        assert_eq!(
            balanced_rotors(4).iter().map(|r| r.to_literal()).collect::<Vec<_>>(),
            vec!["1122", "1221"]
        );
    }

    #[test]
    fn twelve_is_a_fixed_point() {
        let cycles = fixed_cycle_search(2).unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].members, vec![RotorType::twelve()]);
        assert!(cycles[0].all_positional_burd());
    }

    #[test]
    fn nontrivial_two_cycle_at_period_ten() {
        let target: RotorType = "1122222111".parse().unwrap();
        let cycles = fixed_cycle_search(10).unwrap();
        let cycle = cycles.iter().find(|c| c.members.contains(&target)).unwrap();
        assert_eq!(cycle.members.len(), 2);
        assert!(cycles.iter().all(FixedCycle::all_burd));
    }
}
