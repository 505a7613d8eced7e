//! JSON network files.
//!
//! ```json
//! { "edges": { "0": [1, 2] }, "patterns": { "0": "12" },
//!   "source": 0, "targets": [1, 2], "vertices": 3 }
//! ```
//!
//! Keys are emitted in sorted order so that files are byte-stable.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{Network, NetworkError, VertexId};
use crate::rotor::{format_literal, parse_literal};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NetworkFile {
    pub edges: BTreeMap<VertexId, Vec<VertexId>>,
    pub patterns: BTreeMap<VertexId, String>,
    pub source: VertexId,
    pub targets: Vec<VertexId>,
    pub vertices: usize,
}

impl NetworkFile {
    pub fn from_json(text: &str) -> Result<Self, NetworkError> {
        serde_json::from_str(text).map_err(|e| NetworkError::File(e.to_string()))
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("network files serialize");
        text.push('\n');
        text
    }

    pub fn into_network(self) -> Result<Network, NetworkError> {
        let n = self.vertices;
        let mut edges = vec![Vec::new(); n];
        let mut patterns = vec![None; n];
        for (v, dests) in self.edges {
            *edges.get_mut(v).ok_or(NetworkError::VertexOutOfRange(v))? = dests;
        }
        for (v, literal) in self.patterns {
            *patterns.get_mut(v).ok_or(NetworkError::VertexOutOfRange(v))? =
                Some(parse_literal(&literal)?);
        }
        Network::new(edges, patterns, self.source, self.targets)
    }
}

impl From<&Network> for NetworkFile {
    fn from(net: &Network) -> Self {
        let rotors: Vec<VertexId> = net.rotor_vertices().collect();
        NetworkFile {
            edges: rotors
                .iter()
                .map(|&v| (v, net.out_edges(v).to_vec()))
                .collect(),
            patterns: rotors
                .iter()
                .map(|&v| (v, format_literal(net.pattern(v).unwrap())))
                .collect(),
            source: net.source(),
            targets: net.targets().iter().copied().collect(),
            vertices: net.vertex_count(),
        }
    }
}

impl Network {
    pub fn from_json(text: &str) -> Result<Network, NetworkError> {
        NetworkFile::from_json(text)?.into_network()
    }

    pub fn to_json(&self) -> String {
        NetworkFile::from(self).to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::super::tests::five_rotor_network;
    use super::*;

    #[test]
    fn round_trip_is_byte_stable() {
        let text = five_rotor_network().to_json();
        let back = Network::from_json(&text).unwrap();
        assert_eq!(back, five_rotor_network());
        assert_eq!(back.to_json(), text);
        let keys: Vec<usize> = ["\"edges\"", "\"patterns\"", "\"source\"", "\"targets\"", "\"vertices\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn literal_patterns_parse() {
        let text = r#"{"edges":{"0":[1,2]},"patterns":{"0":"112"},"source":0,"targets":[1,2],"vertices":3}"#;
        let net = Network::from_json(text).unwrap();
        assert_eq!(net.hitting_sequence().unwrap().period, vec![1, 1, 2]);
    }

    #[test]
    fn bad_files_are_errors() {
        assert!(matches!(Network::from_json("{"), Err(NetworkError::File(_))));
        let text = r#"{"edges":{"5":[1]},"patterns":{},"source":0,"targets":[1],"vertices":2}"#;
        assert_eq!(Network::from_json(text), Err(NetworkError::VertexOutOfRange(5)));
    }
}
