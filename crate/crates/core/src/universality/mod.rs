//! The randomized compressor algorithm and the universality results built
//! on it.
//!
//! Starting from a two-state rotor, apply `UD` (which balances it), then
//! apply uniformly random maps among `UU`, `UD`, `DU`, `DD` until the rotor
//! becomes `12`, restarting from the balanced rotor a bounded number of
//! times. Reaching `12` proves universality, since `12` is universal and
//! every compressor step is realized by a homogeneous network.

mod abba;
mod families;
mod table;

use std::collections::{BTreeSet, VecDeque};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::compressor::{apply, simulate, CompressorVariant};
use crate::network::NetworkError;
use crate::rotor::{RotorError, RotorType, State};

pub use abba::{
    abba_rotors, abba_survey, decode_blocks, encode_blocks, one21_verdict, parity_theorem_check,
    zero_one_transform, AbbaSurvey, ParityReading, ParityReport,
};
pub use families::{balanced_survey, check_family, Family, SurveyReport};
pub use table::{enumerate_table, table1_expected, TableRow, UndecidedRotor, TABLE1};

/// Default master seed ("rotor" in ASCII).
pub const DEFAULT_SEED: u64 = 0x72_6f_74_6f_72;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlgorithmConfig {
    /// Random applications per attempt.
    pub max_apps: usize,
    /// Attempts after the first, each restarting from the balanced rotor.
    pub max_restarts: usize,
    pub seed: u64,
}

impl Default for AlgorithmConfig {
    fn default() -> Self {
        AlgorithmConfig {
            max_apps: 200,
            max_restarts: 50,
            seed: DEFAULT_SEED,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    Universal,
    Undecided,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub variant: CompressorVariant,
    pub raw: Vec<State>,
    pub rotor: RotorType,
}

/// The steps taken by the algorithm. For a universal verdict the steps form
/// a certificate: the initial `UD` followed by the successful attempt. For
/// an undecided verdict they are the initial `UD` and the last attempt.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompressorTrajectory {
    pub start: RotorType,
    pub steps: Vec<Step>,
    pub outcome: Outcome,
    pub rng_seed: u64,
    pub attempts_used: usize,
    pub applications_used: usize,
    /// Shortest rotor reached in any attempt.
    pub best: RotorType,
}

impl CompressorTrajectory {
    pub fn post_ud(&self) -> &RotorType {
        &self.steps[0].rotor
    }

    pub fn last(&self) -> &RotorType {
        self.steps.last().map_or(&self.start, |s| &s.rotor)
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Per-rotor seed: FNV-1a of the canonical literal, mixed with the master
/// seed. Independent of scheduling, so parallel enumeration is
/// reproducible.
pub fn rotor_seed(master: u64, r: &RotorType) -> u64 {
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for byte in r.to_literal().bytes() {
        h ^= u64::from(byte);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    splitmix64(master ^ splitmix64(h))
}

fn step(r: &RotorType, variant: CompressorVariant) -> Result<Step, RotorError> {
    let c = apply(r, variant)?;
    Ok(Step {
        variant,
        raw: c.raw,
        rotor: c.rotor,
    })
}

/// Runs the compressor algorithm on a nontrivial, unboppy two-state rotor.
pub fn compressor_algorithm(
    r: &RotorType,
    config: &AlgorithmConfig,
) -> Result<CompressorTrajectory, RotorError> {
    if !r.is_two_state() {
        return Err(RotorError::NotTwoState(r.clone()));
    }
    if r.classify().boppy {
        return Err(RotorError::Precondition(format!(
            "{r} is boppy and cannot be universal"
        )));
    }
    let rng_seed = rotor_seed(config.seed, r);
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    let first = step(r, CompressorVariant::UD)?;
    let balanced = first.rotor.clone();
    let mut best = balanced.clone();
    let mut applications_used = 1;
    let mut attempts_used = 0;
    let mut path = Vec::new();
    let done = |steps: Vec<Step>, outcome, attempts_used, applications_used, best| {
        let mut all = vec![first.clone()];
        all.extend(steps);
        Ok(CompressorTrajectory {
            start: r.clone(),
            steps: all,
            outcome,
            rng_seed,
            attempts_used,
            applications_used,
            best,
        })
    };
    if balanced.is_twelve() {
        return done(path, Outcome::Universal, attempts_used, applications_used, best);
    }
    for _ in 0..=config.max_restarts {
        attempts_used += 1;
        path.clear();
        let mut current = balanced.clone();
        for _ in 0..config.max_apps {
            let variant = CompressorVariant::MAPS[rng.gen_range(0..4)];
            let s = step(&current, variant)?;
            applications_used += 1;
            current = s.rotor.clone();
            path.push(s);
            if current.len() < best.len() {
                best = current.clone();
            }
            if current.is_twelve() {
                return done(path, Outcome::Universal, attempts_used, applications_used, best);
            }
        }
    }
    done(path, Outcome::Undecided, attempts_used, applications_used, best)
}

/// Every rotor reachable from `r` by the four compressor maps, `r` included.
pub fn compressor_closure(r: &RotorType) -> Result<BTreeSet<RotorType>, RotorError> {
    let mut seen = BTreeSet::from([r.clone()]);
    let mut queue = VecDeque::from([r.clone()]);
    while let Some(x) = queue.pop_front() {
        for v in CompressorVariant::MAPS {
            let y = apply(&x, v)?.rotor;
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen)
}

/// Whether any sequence of compressor maps after the initial `UD` reaches
/// `12`. When it does not, no seed or budget can make the algorithm succeed.
pub fn twelve_reachable(r: &RotorType) -> Result<bool, RotorError> {
    let balanced = apply(r, CompressorVariant::UD)?.rotor;
    Ok(compressor_closure(&balanced)?.contains(&RotorType::twelve()))
}

/// Replays a trajectory through the network simulator. Returns whether
/// every step reproduces and, for a universal verdict, whether it ends at
/// `12`.
pub fn certify(trajectory: &CompressorTrajectory) -> Result<bool, NetworkError> {
    let mut current = trajectory.start.clone();
    for s in &trajectory.steps {
        let sim = simulate(&current, s.variant)?;
        if sim.rotor != s.rotor {
            return Ok(false);
        }
        current = sim.rotor;
    }
    Ok(match trajectory.outcome {
        Outcome::Universal => current.is_twelve(),
        Outcome::Undecided => true,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) -> RotorType {
        s.parse().unwrap()
    }

    #[test]
    fn examples() {
        let config = AlgorithmConfig::default();
        let t = compressor_algorithm(&rt("112"), &config).unwrap();
        assert_eq!(t.outcome, Outcome::Universal);
        assert!(certify(&t).unwrap());

        let t = compressor_algorithm(&rt("121221"), &config).unwrap();
        assert_eq!(t.outcome, Outcome::Universal);
        assert!(certify(&t).unwrap());
        assert_eq!(t.steps[0].variant, CompressorVariant::UD);
    }

    #[test]
    fn closure_of_a_fixed_cycle_misses_twelve() {
        assert!(!twelve_reachable(&rt("1122222111")).unwrap());
        assert!(!twelve_reachable(&rt("112221")).unwrap());
        assert!(twelve_reachable(&rt("121221")).unwrap());
        assert!(compressor_closure(&RotorType::twelve()).unwrap().len() == 1);
    }

    #[test]
    fn uu_alone_settles_121221() {
        assert!(apply(&rt("121221"), CompressorVariant::UU).unwrap().rotor.is_twelve());
    }

    #[test]
    fn refusals() {
        let config = AlgorithmConfig::default();
        assert!(matches!(
            compressor_algorithm(&rt("1221"), &config),
            Err(RotorError::Precondition(_))
        ));
        assert!(compressor_algorithm(&RotorType::trivial(), &config).is_err());
        assert!(compressor_algorithm(&rt("123"), &config).is_err());
    }

    #[test]
    fn deterministic_given_seed() {
        let config = AlgorithmConfig::default();
        let r = rt("11212212");
        let a = compressor_algorithm(&r, &config).unwrap();
        let b = compressor_algorithm(&r, &config).unwrap();
        assert_eq!(a, b);
        assert_ne!(rotor_seed(1, &r), rotor_seed(2, &r));
    }

    #[test]
    fn certificate_detects_tampering() {
        let mut t = compressor_algorithm(&rt("112"), &AlgorithmConfig::default()).unwrap();
        t.steps[0].rotor = rt("1122");
        assert!(!certify(&t).unwrap());
    }
}
