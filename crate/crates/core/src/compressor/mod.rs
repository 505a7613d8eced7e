//! The compressor: a source rotor feeding two rotors, each of which either
//! bounces the particle back to the source or sends it to its own target.
//!
//! All three rotors carry the same two-state pattern `r`. At the source,
//! state 1 goes to rotor 2 and state 2 to rotor 3. The variant letters give
//! the direction of each sub-rotor's state 1: `U` (back to the source) or
//! `D` (to the target, 4 for rotor 2 and 5 for rotor 3); state 2 goes the
//! other way. `BT` is the binary tree on the same three rotors, with rotor 2
//! sending states 1/2 to targets 1/2 and rotor 3 to targets 3/4.

mod analysis;
mod cycles;
mod oracle;
mod position;

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::rotor::{canonicalize, fundamental_period, RotorError, RotorType, State};

pub use analysis::{monovariant_report, split_analysis, MonovariantReport, RunSplit};
pub use cycles::{balanced_rotors, fixed_cycle_search, FixedCycle};
pub use oracle::{compressor_network, simulate};
pub use position::{
    check_palindrome_constraints, position_oracle_ud, PalindromeCheck, PositionFunctions,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CompressorVariant {
    UU,
    UD,
    DU,
    DD,
    BT,
}

impl CompressorVariant {
    /// The four compressor maps, excluding `BT`.
    pub const MAPS: [CompressorVariant; 4] = [Self::UU, Self::UD, Self::DU, Self::DD];

    /// Direction of state 1 at rotors 2 and 3 (`true` = up), or `None` for BT.
    fn orientation(self) -> Option<(bool, bool)> {
        match self {
            Self::UU => Some((true, true)),
            Self::UD => Some((true, false)),
            Self::DU => Some((false, true)),
            Self::DD => Some((false, false)),
            Self::BT => None,
        }
    }
}

impl fmt::Display for CompressorVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Self::UU => "UU",
            Self::UD => "UD",
            Self::DU => "DU",
            Self::DD => "DD",
            Self::BT => "BT",
        };
        f.write_str(name)
    }
}

impl FromStr for CompressorVariant {
    type Err = RotorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().as_str() {
            "UU" => Ok(Self::UU),
            "UD" => Ok(Self::UD),
            "DU" => Ok(Self::DU),
            "DD" => Ok(Self::DD),
            "BT" => Ok(Self::BT),
            _ => Err(RotorError::Parse(format!("unknown compressor variant {s:?}"))),
        }
    }
}

/// Result of one compressor application.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Compressed {
    /// Targets hit over one full cycle of the network configuration, over
    /// `{4, 5}` (or `{1, 2, 3, 4}` for BT). This is a whole number of periods
    /// of the hitting sequence; for balanced inputs its length is `|r|`.
    pub raw: Vec<State>,
    pub rotor: RotorType,
}

impl Compressed {
    /// One fundamental period of the raw hitting sequence.
    pub fn raw_period(&self) -> &[State] {
        &self.raw[..fundamental_period(&self.raw)]
    }

    /// The raw sequence with 4 and 5 renamed to 1 and 2, without
    /// first-appearance relabeling.
    pub fn mapped(&self) -> Vec<State> {
        self.raw.iter().map(|&t| if t >= 4 { t - 3 } else { t }).collect()
    }
}

fn require_two_state(r: &RotorType) -> Result<(), RotorError> {
    if r.is_two_state() {
        Ok(())
    } else {
        Err(RotorError::NotTwoState(r.clone()))
    }
}

/// Source firings after which every rotor is back at its first term:
/// `L * |r|` with `L = |r| / gcd(a, b)` for `a` ones and `b` twos.
pub(crate) fn configuration_period(r: &RotorType) -> usize {
    let n = r.len();
    let ones = r.count_of(1);
    let l = n / ones.gcd(&(n - ones));
    l * n
}

/// Target hit (if any) by each of the first `particles` source firings.
pub(crate) fn particle_hits(
    r: &RotorType,
    v: CompressorVariant,
    particles: usize,
) -> Vec<Option<State>> {
    let s = r.symbols();
    let n = s.len();
    let (mut p2, mut p3) = (0usize, 0usize);
    let mut hits = Vec::with_capacity(particles);
    for k in 0..particles {
        let to_rotor2 = s[k % n] == 1;
        let pos = if to_rotor2 { &mut p2 } else { &mut p3 };
        let term = s[*pos % n];
        *pos += 1;
        let hit = match v.orientation() {
            None => Some(if to_rotor2 { term } else { term + 2 }),
            Some((up2, up3)) => {
                let up = if to_rotor2 { up2 } else { up3 };
                if (term == 1) == up {
                    None
                } else if to_rotor2 {
                    Some(4)
                } else {
                    Some(5)
                }
            }
        };
        hits.push(hit);
    }
    hits
}

/// Applies a compressor variant to a two-state rotor.
pub fn apply(r: &RotorType, v: CompressorVariant) -> Result<Compressed, RotorError> {
    require_two_state(r)?;
    let raw: Vec<State> = particle_hits(r, v, configuration_period(r))
        .into_iter()
        .flatten()
        .collect();
    let rotor = canonicalize(&raw)?;
    Ok(Compressed { raw, rotor })
}
