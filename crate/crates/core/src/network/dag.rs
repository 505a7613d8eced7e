use serde::Serialize;

use super::{Network, NetworkError, VertexId};

/// Outcome of comparing a homogeneous network's period against `|r|^d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DagBound {
    /// Most non-target vertices on a simple directed path from the source.
    pub depth: u32,
    pub rotor_len: usize,
    pub period_len: usize,
    /// `|r|^depth`, saturating.
    pub bound: u128,
}

impl DagBound {
    pub fn holds(&self) -> bool {
        (self.period_len as u128) <= self.bound
    }
}

/// Checks the `|r|^d` period bound for a homogeneous network in which every
/// directed cycle passes through the source.
pub fn check_dag_bound(net: &Network) -> Result<DagBound, NetworkError> {
    let mut types = net.rotor_vertices().map(|v| net.rotor_type(v).unwrap());
    let r = types.next().ok_or(NetworkError::NotHomogeneous)?;
    if types.any(|t| t != r) {
        return Err(NetworkError::NotHomogeneous);
    }

    // Drop edges into the source; the rest must be acyclic.
    let n = net.vertex_count();
    let source = net.source();
    let succ = |v: VertexId| {
        net.out_edges(v)
            .iter()
            .copied()
            .filter(move |&w| w != source)
    };
    let mut indegree = vec![0usize; n];
    for v in 0..n {
        for w in succ(v) {
            indegree[w] += 1;
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut stack: Vec<VertexId> = (0..n).filter(|&v| indegree[v] == 0).collect();
    while let Some(v) = stack.pop() {
        order.push(v);
        for w in succ(v) {
            indegree[w] -= 1;
            if indegree[w] == 0 {
                stack.push(w);
            }
        }
    }
    if order.len() != n {
        return Err(NetworkError::CycleAvoidsSource);
    }

    // Longest path from the source, counting non-target vertices.
    let mut longest: Vec<Option<u32>> = vec![None; n];
    longest[source] = Some(1);
    for &v in &order {
        let Some(here) = longest[v] else { continue };
        for w in succ(v) {
            let via = here + u32::from(!net.is_target(w));
            if longest[w].is_none_or(|cur| cur < via) {
                longest[w] = Some(via);
            }
        }
    }
    let depth = longest.iter().flatten().copied().max().unwrap_or(1);

    let period_len = net.hitting_sequence()?.len();
    let bound = (0..depth).fold(1u128, |acc, _| acc.saturating_mul(r.len() as u128));
    Ok(DagBound {
        depth,
        rotor_len: r.len(),
        period_len,
        bound,
    })
}
