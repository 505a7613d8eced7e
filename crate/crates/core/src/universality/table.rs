//! Exhaustive runs of the compressor algorithm over all rotors of one
//! length.

use rayon::prelude::*;
use serde::Serialize;

use super::{compressor_algorithm, AlgorithmConfig, Outcome};
use crate::rotor::{RotorError, RotorType, State};

/// Published undecided counts for lengths 2 through 17.
pub const TABLE1: [(usize, usize); 16] = [
    (2, 0),
    (3, 0),
    (4, 0),
    (5, 0),
    (6, 2),
    (7, 0),
    (8, 5),
    (9, 9),
    (10, 22),
    (11, 0),
    (12, 36),
    (13, 0),
    (14, 12),
    (15, 52),
    (16, 136),
    (17, 0),
];

pub fn table1_expected(n: usize) -> Option<usize> {
    TABLE1.iter().find(|&&(len, _)| len == n).map(|&(_, c)| c)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UndecidedRotor {
    pub rotor: RotorType,
    pub post_ud: RotorType,
    pub best: RotorType,
}

/// Counts over the `2^(n-1)` strings of length `n` over `{1, 2}` starting
/// with 1. Every string lands in exactly one of trivial, non-primitive,
/// boppy, unboppy.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRow {
    pub length: usize,
    pub total_strings: u64,
    pub trivial_count: u64,
    pub non_primitive_count: u64,
    pub boppy_count: u64,
    pub unboppy_count: u64,
    pub undecided_count: u64,
    pub undecided_rotors: Vec<UndecidedRotor>,
    /// Undecided over all `2^(n-1)` strings.
    pub fraction_total: f64,
    /// Undecided over unboppy rotors.
    pub fraction_unboppy: f64,
}

enum Verdict {
    Trivial,
    NonPrimitive,
    Boppy,
    Universal,
    Undecided(UndecidedRotor),
}

fn string_of(bits: u64, n: usize) -> Vec<State> {
    (0..n)
        .map(|i| 1 + (bits >> (n - 1 - i) & 1) as State)
        .collect()
}

fn judge(seq: &[State], config: &AlgorithmConfig) -> Result<Verdict, RotorError> {
    if seq.iter().all(|&s| s == 1) {
        return Ok(Verdict::Trivial);
    }
    let r = crate::rotor::canonicalize(seq)?;
    if r.len() != seq.len() {
        return Ok(Verdict::NonPrimitive);
    }
    if r.classify().boppy {
        return Ok(Verdict::Boppy);
    }
    let t = compressor_algorithm(&r, config)?;
    Ok(match t.outcome {
        Outcome::Universal => Verdict::Universal,
        Outcome::Undecided => Verdict::Undecided(UndecidedRotor {
            post_ud: t.post_ud().clone(),
            best: t.best.clone(),
            rotor: r,
        }),
    })
}

/// Enumerates every two-state string of length `n` (`2 <= n <= 40`). Work is
/// spread over `workers` threads (all cores when `None`); results do not
/// depend on the worker count.
pub fn enumerate_table(
    n: usize,
    config: &AlgorithmConfig,
    workers: Option<usize>,
) -> Result<TableRow, RotorError> {
    if !(2..=40).contains(&n) {
        return Err(RotorError::Precondition(format!(
            "length {n} is outside 2..=40"
        )));
    }
    let total = 1u64 << (n - 1);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.unwrap_or(0))
        .build()
        .map_err(|e| RotorError::Precondition(e.to_string()))?;
    let verdicts: Vec<Verdict> = pool.install(|| {
        (0..total)
            .into_par_iter()
            .map(|bits| judge(&string_of(bits, n), config))
            .collect::<Result<_, _>>()
    })?;

    let mut row = TableRow {
        length: n,
        total_strings: total,
        trivial_count: 0,
        non_primitive_count: 0,
        boppy_count: 0,
        unboppy_count: 0,
        undecided_count: 0,
        undecided_rotors: Vec::new(),
        fraction_total: 0.0,
        fraction_unboppy: 0.0,
    };
    for v in verdicts {
        match v {
            Verdict::Trivial => row.trivial_count += 1,
            Verdict::NonPrimitive => row.non_primitive_count += 1,
            Verdict::Boppy => row.boppy_count += 1,
            Verdict::Universal => row.unboppy_count += 1,
            Verdict::Undecided(u) => {
                row.unboppy_count += 1;
                row.undecided_count += 1;
                row.undecided_rotors.push(u);
            }
        }
    }
    row.fraction_total = row.undecided_count as f64 / total as f64;
    if row.unboppy_count > 0 {
        row.fraction_unboppy = row.undecided_count as f64 / row.unboppy_count as f64;
    }
    Ok(row)
}
