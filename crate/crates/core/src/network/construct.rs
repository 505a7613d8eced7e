//! Binary-tree networks of `12` rotors, and the construction that models an
//! arbitrary rotor type from them.

use std::collections::{BTreeMap, BTreeSet};

use super::{Network, NetworkError, VertexId};
use crate::rotor::{RotorError, RotorType, State};

/// Complete binary tree of depth `depth >= 1` with a `12` rotor at every
/// internal node. Internal nodes are heap-indexed from the root `0`; state 1
/// goes to the left child. Leaf `i` (left to right) is vertex
/// `2^depth - 1 + i`.
pub fn binary_tree(depth: u32) -> Network {
    assert!((1..=24).contains(&depth), "depth out of range");
    let internal = (1usize << depth) - 1;
    let total = 2 * internal + 1;
    let mut edges = vec![Vec::new(); total];
    let mut patterns = vec![None; total];
    for v in 0..internal {
        edges[v] = vec![2 * v + 1, 2 * v + 2];
        patterns[v] = Some(vec![1, 2]);
    }
    Network::new(edges, patterns, 0, internal..total).expect("binary tree is valid")
}

/// Leaves of [`binary_tree`] in left-to-right order.
pub fn tree_leaves(depth: u32) -> impl Iterator<Item = VertexId> {
    let internal = (1usize << depth) - 1;
    internal..2 * internal + 1
}

/// A homogeneous network of `12` rotors whose hitting sequence is
/// equivalent to `target`.
///
/// Builds the depth-`n` tree with `2^n >= |target|`, hides the last
/// `2^n - |target|` leaves, reads off the order in which the remaining leaves
/// are hit, and merges the leaf hit `k`-th with every other leaf whose
/// position carries the same label in `target`.
pub fn build_model_from_12(target: &RotorType) -> Result<Network, NetworkError> {
    let m = target.len();
    let depth = (m.max(2) as u64).next_power_of_two().trailing_zeros();
    let tree = binary_tree(depth);
    let leaves: Vec<VertexId> = tree_leaves(depth).collect();
    let hidden: BTreeSet<VertexId> = leaves[m..].iter().copied().collect();
    let pruned = if hidden.is_empty() {
        tree
    } else {
        tree.hide_targets(&hidden)?
    };

    let order = pruned.hitting_sequence()?;
    let distinct: BTreeSet<VertexId> = order.period.iter().copied().collect();
    if order.len() != m || distinct.len() != m {
        return Err(RotorError::TheoremViolated(format!(
            "pruned tree of depth {depth} hit {} leaves in a period of {}",
            distinct.len(),
            order.len()
        ))
        .into());
    }

    let mut blocks: BTreeMap<State, Vec<VertexId>> = BTreeMap::new();
    for (k, &leaf) in order.period.iter().enumerate() {
        blocks.entry(target.symbols()[k]).or_default().push(leaf);
    }
    let mut partition: Vec<Vec<VertexId>> = blocks.into_values().collect();
    partition.extend(hidden.iter().map(|&t| vec![t]));
    pruned.merge_targets(&partition)
}
