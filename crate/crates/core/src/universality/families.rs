//! Infinite families known to be universal, and exhaustive surveys.

use serde::Serialize;

use super::{certify, compressor_algorithm, twelve_reachable, AlgorithmConfig, Outcome};
use crate::compressor::balanced_rotors;
use crate::rotor::{RotorError, RotorType, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Family {
    /// `1^k 2`, `k >= 1`.
    OnesThenTwo(usize),
    /// `(11)^k 21`, `k >= 1`.
    DoubleOnes(usize),
    /// `(12)^k 21 (12)^l`.
    Sandwich(usize, usize),
}

impl Family {
    pub fn rotor(self) -> Result<RotorType, RotorError> {
        let seq: Vec<State> = match self {
            Family::OnesThenTwo(k) => std::iter::repeat_n(1, k).chain([2]).collect(),
            Family::DoubleOnes(k) => std::iter::repeat_n(1, 2 * k).chain([2, 1]).collect(),
            Family::Sandwich(k, l) => std::iter::repeat_n([1, 2], k)
                .chain([[2, 1]])
                .chain(std::iter::repeat_n([1, 2], l))
                .flatten()
                .collect(),
        };
        crate::rotor::canonicalize(&seq)
    }
}

/// Runs the compressor algorithm on one family member.
pub fn check_family(
    family: Family,
    config: &AlgorithmConfig,
) -> Result<(RotorType, Outcome), RotorError> {
    let r = family.rotor()?;
    let t = compressor_algorithm(&r, config)?;
    Ok((r, t.outcome))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SurveyReport {
    pub checked: usize,
    pub skipped_boppy: usize,
    pub undecided: Vec<RotorType>,
    /// Undecided rotors from which no sequence of maps reaches 12.
    pub unreachable: Vec<RotorType>,
    /// Universal verdicts whose certificate failed network replay.
    pub uncertified: Vec<RotorType>,
}

impl SurveyReport {
    pub fn all_universal(&self) -> bool {
        self.undecided.is_empty() && self.uncertified.is_empty()
    }

    pub(crate) fn run(
        rotors: impl IntoIterator<Item = RotorType>,
        config: &AlgorithmConfig,
    ) -> Result<Self, RotorError> {
        let mut report = SurveyReport {
            checked: 0,
            skipped_boppy: 0,
            undecided: Vec::new(),
            unreachable: Vec::new(),
            uncertified: Vec::new(),
        };
        for r in rotors {
            if r.classify().boppy {
                report.skipped_boppy += 1;
                continue;
            }
            report.checked += 1;
            let t = compressor_algorithm(&r, config)?;
            match t.outcome {
                Outcome::Undecided => {
                    if !twelve_reachable(&r)? {
                        report.unreachable.push(r.clone());
                    }
                    report.undecided.push(r);
                }
                Outcome::Universal => {
                    if !certify(&t).map_err(|e| RotorError::TheoremViolated(e.to_string()))? {
                        report.uncertified.push(r);
                    }
                }
            }
        }
        Ok(report)
    }
}

/// Every balanced unboppy rotor with period at most `max_period`.
pub fn balanced_survey(
    max_period: usize,
    config: &AlgorithmConfig,
) -> Result<SurveyReport, RotorError> {
    let rotors = (2..=max_period).step_by(2).flat_map(balanced_rotors);
    SurveyReport::run(rotors, config)
}
