//! Ab-ba rotors: balanced rotors whose length-2 blocks are all `12` or `21`.
//!
//! Encoding `12` as 0 and `21` as 1 turns `UU` and `DD` on ab-ba rotors into
//! maps on binary sequences.

use serde::Serialize;

use super::families::SurveyReport;
use super::{step, AlgorithmConfig, CompressorTrajectory, Outcome};
use crate::compressor::CompressorVariant;
use crate::rotor::{canonicalize, RotorError, RotorType, State};

/// Block encoding of a sequence over `{1, 2}`: `12 -> 0`, `21 -> 1`. `None`
/// unless every length-2 block is one of those.
pub fn encode_blocks(seq: &[State]) -> Option<Vec<u8>> {
    if seq.len() % 2 != 0 {
        return None;
    }
    seq.chunks(2)
        .map(|pair| match pair {
            [1, 2] => Some(0),
            [2, 1] => Some(1),
            _ => None,
        })
        .collect()
}

pub fn decode_blocks(blocks: &[u8]) -> Vec<State> {
    blocks
        .iter()
        .flat_map(|&b| if b == 0 { [1, 2] } else { [2, 1] })
        .collect()
}

/// `UU` and `DD` on block sequences, indices taken modulo the length.
/// With 1-based indices these are `b_i = a_(2i - a_i)` and
/// `c_i = a_(2i - 1 + a_i)`; the code uses 0-based indices.
pub fn zero_one_transform(a: &[u8], which: CompressorVariant) -> Result<Vec<u8>, RotorError> {
    let p = a.len();
    let source = |i: usize| -> usize {
        let ai = usize::from(a[i]);
        match which {
            CompressorVariant::UU => (2 * i + 1 - ai) % p,
            _ => (2 * i + ai) % p,
        }
    };
    match which {
        CompressorVariant::UU | CompressorVariant::DD => Ok((0..p).map(|i| a[source(i)]).collect()),
        other => Err(RotorError::Precondition(format!(
            "block transform is defined for UU and DD, not {other}"
        ))),
    }
}

/// Primitive canonical ab-ba rotors of length `len`.
pub fn abba_rotors(len: usize) -> Vec<RotorType> {
    if len == 0 || len % 2 != 0 || len > 62 {
        return Vec::new();
    }
    let p = len / 2;
    (0u64..1 << (p - 1))
        .filter_map(|bits| {
            let blocks: Vec<u8> = (0..p).map(|i| (bits >> (p - 1 - i) & 1) as u8).collect();
            let seq = decode_blocks(&blocks);
            let r = canonicalize(&seq).ok()?;
            (r.len() == len).then_some(r)
        })
        .collect()
}

/// 1-based position of the one block that differs from all others, when
/// there are at least three blocks.
fn odd_block(r: &RotorType) -> Option<usize> {
    let blocks = encode_blocks(r.symbols())?;
    if blocks.len() < 3 {
        return None;
    }
    let ones = blocks.iter().filter(|&&b| b == 1).count();
    let odd = match ones {
        1 => 1,
        k if k == blocks.len() - 1 => 0,
        _ => return None,
    };
    blocks.iter().position(|&b| b == odd).map(|i| i + 1)
}

/// Deterministic certificate for an ab-ba rotor with at least two `12`
/// blocks and exactly one `21` block (up to swapping the labels), following
/// the position of the odd block.
pub fn one21_verdict(r: &RotorType) -> Result<CompressorTrajectory, RotorError> {
    if encode_blocks(r.symbols()).is_none() {
        return Err(RotorError::NotAbba(r.clone()));
    }
    let Some(_) = odd_block(r) else {
        return Err(RotorError::Precondition(format!(
            "{r} does not have exactly one 21 block among at least three blocks"
        )));
    };
    let p = r.len() / 2;
    let mut current = r.clone();
    let mut steps = Vec::new();
    for _ in 0..4 * p {
        let uu = step(&current, CompressorVariant::UU)?;
        let dd = step(&current, CompressorVariant::DD)?;
        if let Some(done) = [&uu, &dd].into_iter().find(|s| s.rotor.is_twelve()) {
            steps.push(done.clone());
            return Ok(CompressorTrajectory {
                start: r.clone(),
                applications_used: steps.len(),
                best: RotorType::twelve(),
                steps,
                outcome: Outcome::Universal,
                rng_seed: 0,
                attempts_used: 1,
            });
        }
        let f = odd_block(&current).expect("tracked rotor keeps one odd block");
        let target = if p % 2 == 1 {
            f.div_ceil(2)
        } else if f == 1 {
            p / 2 + 1
        } else if f == p {
            p / 2
        } else {
            return Err(RotorError::TheoremViolated(format!(
                "neither UU nor DD of {current} is 12 (odd block at {f})"
            )));
        };
        let next = [uu, dd]
            .into_iter()
            .find(|s| odd_block(&s.rotor) == Some(target))
            .ok_or_else(|| {
                RotorError::TheoremViolated(format!(
                    "no image of {current} has its odd block at {target}"
                ))
            })?;
        current = next.rotor.clone();
        steps.push(next);
    }
    Err(RotorError::TheoremViolated(format!(
        "{r} did not reach 12 within {} steps",
        4 * p
    )))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AbbaSurvey {
    pub per_length: Vec<(usize, SurveyReport)>,
}

impl AbbaSurvey {
    pub fn all_universal(&self) -> bool {
        self.per_length.iter().all(|(_, r)| r.all_universal())
    }
}

/// Runs the compressor algorithm on every unboppy ab-ba rotor of length
/// `2 (mod 4)` up to `max_len`.
pub fn abba_survey(max_len: usize, config: &AlgorithmConfig) -> Result<AbbaSurvey, RotorError> {
    let per_length = (2..=max_len)
        .step_by(4)
        .map(|len| Ok((len, SurveyReport::run(abba_rotors(len), config)?)))
        .collect::<Result<_, RotorError>>()?;
    Ok(AbbaSurvey { per_length })
}

/// How the condition "no two 21 blocks at block positions `a`, `b` with
/// `ceil(a/2) = b`" is read.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParityReading {
    /// Modulus as a divisor of `|r|`: 1 for `|r|`, 4 for `|r|/4`.
    pub divisor: usize,
    /// Whether a block is compared with itself (`a = b`).
    pub include_self: bool,
}

impl ParityReading {
    pub const LITERAL: ParityReading = ParityReading {
        divisor: 1,
        include_self: false,
    };
    pub const QUARTER: ParityReading = ParityReading {
        divisor: 4,
        include_self: true,
    };

    /// Whether `r` meets all three conditions under this reading.
    pub fn satisfied_by(&self, r: &RotorType) -> bool {
        let len = r.len();
        if len % 4 != 0 {
            return false;
        }
        let Some(blocks) = encode_blocks(r.symbols()) else {
            return false;
        };
        let ba: Vec<usize> = (1..=blocks.len()).filter(|&k| blocks[k - 1] == 1).collect();
        let modulus = len / self.divisor;
        let collide = ba.iter().any(|&a| {
            ba.iter()
                .any(|&b| (self.include_self || a != b) && (a.div_ceil(2) % modulus == b % modulus))
        });
        let same_parity = ba.windows(2).all(|w| w[0] % 2 == w[1] % 2);
        !collide && same_parity
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParityReport {
    pub reading: ParityReading,
    pub satisfying: usize,
    /// Rotors meeting the conditions with neither `UU` nor `DD` equal to 12.
    pub counterexamples: Vec<RotorType>,
}

/// Checks the parity criterion on every ab-ba rotor of length `0 (mod 4)` up
/// to `max_len`.
pub fn parity_theorem_check(
    max_len: usize,
    reading: ParityReading,
) -> Result<ParityReport, RotorError> {
    let mut report = ParityReport {
        reading,
        satisfying: 0,
        counterexamples: Vec::new(),
    };
    for len in (4..=max_len).step_by(4) {
        for r in abba_rotors(len) {
            if !reading.satisfied_by(&r) {
                continue;
            }
            report.satisfying += 1;
            let hit = [CompressorVariant::UU, CompressorVariant::DD]
                .into_iter()
                .map(|v| step(&r, v).map(|s| s.rotor.is_twelve()))
                .collect::<Result<Vec<_>, _>>()?;
            if !hit.contains(&true) {
                report.counterexamples.push(r);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compressor::apply;
    use crate::universality::certify;

    fn rt(s: &str) -> RotorType {
        s.parse().unwrap()
    }

    #[test]
    fn block_transform_matches_compressor() {
        for len in (2..=12).step_by(2) {
            for r in abba_rotors(len) {
                let a = encode_blocks(r.symbols()).unwrap();
                for v in [CompressorVariant::UU, CompressorVariant::DD] {
                    let image = apply(&r, v).unwrap().mapped();
                    assert_eq!(
                        encode_blocks(&image).unwrap(),
                        zero_one_transform(&a, v).unwrap(),
                        "{r} {v}"
                    );
                }
            }
        }
    }

    #[test]
    fn constant_zero_is_fixed() {
        for v in [CompressorVariant::UU, CompressorVariant::DD] {
            assert_eq!(zero_one_transform(&[0; 5], v).unwrap(), vec![0; 5]);
        }
        assert!(zero_one_transform(&[0, 1], CompressorVariant::UD).is_err());
    }

    #[test]
    fn abba_rotor_counts() {
        assert_eq!(abba_rotors(2), vec![RotorType::twelve()]);
        // 1221 only; 1212 is not primitive.
        assert_eq!(abba_rotors(4), vec![rt("1221")]);
        assert_eq!(abba_rotors(6).len(), 3);
    }

    #[test]
    fn one21_examples() {
        for r in ["122112", "12211212", "1212122112", "121212122112"] {
            let t = one21_verdict(&rt(r)).unwrap();
            assert_eq!(t.outcome, Outcome::Universal, "{r}");
            assert!(certify(&t).unwrap());
        }
    }

    #[test]
    fn one21_preconditions() {
        assert!(matches!(one21_verdict(&rt("1221")), Err(RotorError::Precondition(_))));
        assert!(matches!(one21_verdict(&rt("112")), Err(RotorError::NotAbba(_))));
        assert!(matches!(
            one21_verdict(&rt("12212112")),
            Err(RotorError::Precondition(_))
        ));
    }

    #[test]
    fn survey_length_six_and_ten() {
        let survey = abba_survey(10, &AlgorithmConfig::default()).unwrap();
        assert!(survey.all_universal());
        assert_eq!(survey.per_length.iter().map(|(l, _)| *l).collect::<Vec<_>>(), vec![2, 6, 10]);
    }
}
