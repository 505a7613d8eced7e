//! The compressor as an explicit network, used to cross-check [`apply`].
//!
//! [`apply`]: super::apply

use super::{require_two_state, Compressed, CompressorVariant};
use crate::network::{Network, NetworkError};
use crate::rotor::{canonicalize, RotorType, State};

/// Vertices: 0 source, 1 and 2 the sub-rotors, then the targets. Target ids
/// are 3, 4 for the compressor maps and 3..=6 for BT.
pub fn compressor_network(r: &RotorType, v: CompressorVariant) -> Result<Network, NetworkError> {
    require_two_state(r)?;
    let pattern = Some(r.symbols().to_vec());
    let (edges, targets): (Vec<Vec<usize>>, Vec<usize>) = match v.orientation() {
        None => (
            vec![vec![1, 2], vec![3, 4], vec![5, 6], vec![], vec![], vec![], vec![]],
            vec![3, 4, 5, 6],
        ),
        Some((up2, up3)) => {
            let sub = |up: bool, target: usize| if up { vec![0, target] } else { vec![target, 0] };
            (
                vec![vec![1, 2], sub(up2, 3), sub(up3, 4), vec![], vec![]],
                vec![3, 4],
            )
        }
    };
    let mut patterns = vec![pattern.clone(), pattern.clone(), pattern];
    patterns.resize(edges.len(), None);
    Network::new(edges, patterns, 0, targets)
}

/// Applies `v` by simulating [`compressor_network`]. The raw sequence is one
/// fundamental period, labeled as in [`apply`](super::apply).
pub fn simulate(r: &RotorType, v: CompressorVariant) -> Result<Compressed, NetworkError> {
    let net = compressor_network(r, v)?;
    let offset = |t: usize| -> State {
        match v {
            CompressorVariant::BT => (t - 2) as State,
            _ => (t + 1) as State,
        }
    };
    let raw: Vec<State> = net
        .hitting_sequence()?
        .period
        .into_iter()
        .map(offset)
        .collect();
    let rotor = canonicalize(&raw)?;
    Ok(Compressed { raw, rotor })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compressor::apply;

    #[test]
    fn first_walk_of_ud_on_112_hits_target_5() {
        let mut net = compressor_network(&"112".parse().unwrap(), CompressorVariant::UD).unwrap();
        assert_eq!(net.walk_once().unwrap() + 1, 5);
    }

    #[test]
    fn ud_on_12_has_period_54() {
        let c = simulate(&RotorType::twelve(), CompressorVariant::UD).unwrap();
        assert_eq!(c.raw, vec![5, 4]);
    }

    #[test]
    fn simulation_matches_direct_transform() {
        for r in ["112", "112212", "11121222", "1121122", "12211122", "1112"] {
            let r: RotorType = r.parse().unwrap();
            for v in CompressorVariant::MAPS.into_iter().chain([CompressorVariant::BT]) {
                let direct = apply(&r, v).unwrap();
                let sim = simulate(&r, v).unwrap();
                assert_eq!(direct.raw_period(), &sim.raw[..], "{r} {v}");
                assert_eq!(direct.rotor, sim.rotor);
            }
        }
    }
}
