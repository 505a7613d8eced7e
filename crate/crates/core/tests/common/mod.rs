#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use rotorlab::network::{Network, VertexId};
use rotorlab::rotor::{canonicalize, RotorType, State};

/// How patterns are drawn for [`random_network`].
#[derive(Debug, Clone, Copy)]
pub enum PatternKind {
    Any,
    Palindromic,
    /// Every label repeated this many times in a row.
    Blocks(usize),
}

fn pattern(rng: &mut impl Rng, outdegree: usize, kind: PatternKind) -> Vec<State> {
    let len = rng.gen_range(1..=4);
    let mut p: Vec<State> = (0..len)
        .map(|_| rng.gen_range(1..=outdegree as State))
        .collect();
    if !p.contains(&1) {
        p[0] = 1;
    }
    match kind {
        PatternKind::Any => p,
        PatternKind::Palindromic => {
            let tail: Vec<State> = if rng.gen_bool(0.5) {
                p.iter().rev().copied().collect()
            } else {
                p.iter().rev().skip(1).copied().collect()
            };
            p.extend(tail);
            p
        }
        PatternKind::Blocks(m) => p.iter().flat_map(|&s| std::iter::repeat_n(s, m)).collect(),
    }
}

/// A valid network on `rotors` non-target vertices followed by `targets`
/// targets. Edges may go anywhere, including self-loops, but state 1 of
/// vertex `v` always leads to a higher vertex so every vertex reaches a
/// target.
pub fn random_network(
    rng: &mut impl Rng,
    rotors: usize,
    targets: usize,
    kind: PatternKind,
) -> Network {
    let n = rotors + targets;
    let mut edges = vec![Vec::new(); n];
    let mut patterns = vec![None; n];
    for v in 0..rotors {
        let outdegree = rng.gen_range(1..=3);
        let mut out: Vec<VertexId> = vec![rng.gen_range(v + 1..n)];
        out.extend((1..outdegree).map(|_| rng.gen_range(0..n)));
        edges[v] = out;
        patterns[v] = Some(pattern(rng, outdegree, kind));
    }
    Network::new(edges, patterns, 0, rotors..n).expect("generated network is valid")
}

/// A homogeneous network whose only cycles pass through the source: edges
/// go to higher vertices, to targets, or back to the source.
pub fn random_dag(rng: &mut impl Rng, r: &[State], rotors: usize, targets: usize) -> Network {
    let n = rotors + targets;
    let outdegree = *r.iter().max().unwrap() as usize;
    let mut edges = vec![Vec::new(); n];
    let mut patterns = vec![None; n];
    for v in 0..rotors {
        let mut out: Vec<VertexId> = vec![rng.gen_range(v + 1..n)];
        out.extend((1..outdegree).map(|_| {
            let mut choices: Vec<VertexId> = (v + 1..n).collect();
            choices.push(0);
            *choices.choose(rng).unwrap()
        }));
        edges[v] = out;
        patterns[v] = Some(r.to_vec());
    }
    Network::new(edges, patterns, 0, rotors..n).expect("generated network is valid")
}

/// A rotor of exactly `len` raw terms over up to three states, starting
/// with 1; its canonical period may be shorter.
pub fn random_rotor(rng: &mut impl Rng, len: usize) -> RotorType {
    let raw: Vec<State> = (0..len)
        .map(|i| if i == 0 { 1 } else { rng.gen_range(1..=3) })
        .collect();
    canonicalize(&raw).expect("nonempty")
}
