//! Rotor types as values.
//!
//! A [`RotorType`] is the canonical representative of a periodic rotor
//! pattern up to relabeling: the fundamental period of the pattern with its
//! states renamed in order of first appearance. Two raw label sequences are
//! equivalent exactly when they canonicalize to the same `RotorType`.

mod classify;
mod equivalence;
mod reduction;
mod runs;

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

pub use classify::{
    is_n_balanced_seq, is_palindrome, max_block_length_seq, ClassLabel, Classification,
};
pub use equivalence::{is_equivalent_by_bijection, is_n_equivalent};
pub use reduction::{
    all_reductions, apply_reduction, apply_reduction_raw, find_unboppy_reduction, ReductionRule,
};
pub use runs::{
    all_brds, all_urds, ba_frequency, ba_frequency_seq, balance_coefficient, burd_check,
    maximal_brd, BurdVerdict, Run, RunDecomposition, RunKind,
};

/// A state label. Canonical rotors use `1..=state_count`.
pub type State = u32;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotorError {
    #[error("empty rotor sequence")]
    Empty,
    #[error("cannot parse rotor literal {0:?}")]
    Parse(String),
    #[error("state {0} does not occur in the rotor")]
    AbsentState(State),
    #[error("merge source and target are the same state ({0})")]
    SelfMerge(State),
    #[error("deleting state {0} leaves an empty rotor")]
    EmptyAfterDelete(State),
    #[error("rotor {0} is not a two-state rotor")]
    NotTwoState(RotorType),
    #[error("rotor {0} is not balanced")]
    NotBalanced(RotorType),
    #[error("rotor {0} is not ab-ba")]
    NotAbba(RotorType),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("theorem violated: {0}")]
    TheoremViolated(String),
}

/// A primitive periodic sequence of states with first-appearance labels.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotorType {
    symbols: Vec<State>,
}

/// Length of the smallest period `p` dividing `seq.len()` such that `seq` is
/// `p`-periodic. Uses the prefix function, so it runs in linear time.
pub fn fundamental_period<T: PartialEq>(seq: &[T]) -> usize {
    let n = seq.len();
    if n == 0 {
        return 0;
    }
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && seq[i] != seq[k] {
            k = pi[k - 1];
        }
        if seq[i] == seq[k] {
            k += 1;
        }
        pi[i] = k;
    }
    let p = n - pi[n - 1];
    if n % p == 0 {
        p
    } else {
        n
    }
}

/// Renames labels by order of first appearance, starting at 1.
pub fn relabel_first_appearance<T: Eq + std::hash::Hash + Copy>(seq: &[T]) -> Vec<State> {
    let mut names: HashMap<T, State> = HashMap::new();
    seq.iter()
        .map(|x| {
            let next = names.len() as State + 1;
            *names.entry(*x).or_insert(next)
        })
        .collect()
}

/// Canonical rotor type of an arbitrary nonempty label sequence.
pub fn canonicalize<T: Eq + std::hash::Hash + Copy>(raw: &[T]) -> Result<RotorType, RotorError> {
    if raw.is_empty() {
        return Err(RotorError::Empty);
    }
    let p = fundamental_period(raw);
    Ok(RotorType {
        symbols: relabel_first_appearance(&raw[..p]),
    })
}

impl RotorType {
    /// The single-state rotor `1`.
    pub fn trivial() -> Self {
        RotorType { symbols: vec![1] }
    }

    /// The rotor `12`, the universal target of the compressor algorithm.
    pub fn twelve() -> Self {
        RotorType {
            symbols: vec![1, 2],
        }
    }

    pub fn symbols(&self) -> &[State] {
        &self.symbols
    }

    /// Period length `|r|`.
    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn state_count(&self) -> usize {
        self.symbols.iter().copied().max().unwrap_or(0) as usize
    }

    pub fn is_trivial(&self) -> bool {
        self.state_count() <= 1
    }

    pub fn is_two_state(&self) -> bool {
        self.state_count() == 2
    }

    pub fn is_twelve(&self) -> bool {
        self.symbols == [1, 2]
    }

    /// The `k`-th term (1-based, taken modulo the period).
    pub fn term(&self, k: i64) -> State {
        let n = self.len() as i64;
        self.symbols[((k - 1).rem_euclid(n)) as usize]
    }

    /// The `(k+1)`-th block of length `m` (0-based `k`). `m` must divide the
    /// period.
    pub fn block(&self, k: usize, m: usize) -> &[State] {
        assert!(m > 0 && self.len() % m == 0, "block length must divide the period");
        let start = (k * m) % self.len();
        &self.symbols[start..start + m]
    }

    /// Distinct states in ascending order.
    pub fn states(&self) -> Vec<State> {
        (1..=self.state_count() as State).collect()
    }

    pub fn count_of(&self, state: State) -> usize {
        self.symbols.iter().filter(|&&s| s == state).count()
    }

    /// Textual literal: digits when every state is at most 9, otherwise
    /// comma-separated integers.
    pub fn to_literal(&self) -> String {
        format_literal(&self.symbols)
    }

    pub fn classify(&self) -> Classification {
        Classification::of(self)
    }
}

/// Every rotor type of period exactly `len` with exactly `states` states, in
/// lexicographic order.
pub fn rotors_of_length(len: usize, states: usize) -> Vec<RotorType> {
    fn extend(seq: &mut Vec<State>, len: usize, states: usize, out: &mut Vec<RotorType>) {
        let used = seq.iter().copied().max().unwrap_or(0) as usize;
        if states - used > len - seq.len() {
            return;
        }
        if seq.len() == len {
            if used == states && fundamental_period(seq) == len {
                out.push(RotorType {
                    symbols: seq.clone(),
                });
            }
            return;
        }
        for s in 1..=(used + 1).min(states) {
            seq.push(s as State);
            extend(seq, len, states, out);
            seq.pop();
        }
    }
    let mut out = Vec::new();
    if len > 0 && states > 0 {
        extend(&mut Vec::with_capacity(len), len, states, &mut out);
    }
    out
}

/// Formats any label sequence with the same literal rules as [`RotorType`].
pub fn format_literal(symbols: &[State]) -> String {
    if symbols.iter().all(|&s| s <= 9) {
        symbols
            .iter()
            .map(|&s| char::from_digit(s, 10).unwrap())
            .collect()
    } else {
        symbols
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Parses a rotor literal into its raw labels without canonicalizing.
pub fn parse_literal(text: &str) -> Result<Vec<State>, RotorError> {
    let text = text.trim();
    if text.is_empty() {
        return Err(RotorError::Empty);
    }
    let bad = || RotorError::Parse(text.to_string());
    if text.contains(',') {
        text.split(',')
            .map(|part| part.trim().parse::<State>().map_err(|_| bad()))
            .collect()
    } else {
        text.chars()
            .map(|c| c.to_digit(10).ok_or_else(bad))
            .collect()
    }
}

impl FromStr for RotorType {
    type Err = RotorError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        canonicalize(&parse_literal(s)?)
    }
}

impl fmt::Display for RotorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_literal())
    }
}

impl fmt::Debug for RotorType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RotorType({})", self.to_literal())
    }
}

impl Serialize for RotorType {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_literal())
    }
}

impl<'de> Deserialize<'de> for RotorType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(rotors_of_length(1, 1), vec![RotorType::trivial()]);
        assert_eq!(rotors_of_length(2, 2), vec![RotorType::twelve()]);
        // 112, 121, 122.
        assert_eq!(rotors_of_length(3, 2).len(), 3);
        // Two-state strings of length 6 starting with 1, minus 111111 and the
        // non-primitive 121212, 112112, 121121, 122122.
        assert_eq!(rotors_of_length(6, 2).len(), 32 - 1 - 4);
        assert_eq!(rotors_of_length(4, 3).len(), 6);
        assert!(rotors_of_length(2, 3).is_empty());
    }

    fn rt(s: &str) -> RotorType {
        s.parse().unwrap()
    }

    #[test]
    fn relabels_to_first_appearance() {
        assert_eq!(rt("477"), rt("122"));
        assert_eq!(rt("477").to_literal(), "122");
        assert_eq!(rt("21").to_literal(), "12");
        assert_eq!(rt("4,7,7").to_literal(), "122");
    }

    #[test]
    fn extracts_primitive_period() {
        assert_eq!(rt("121212").to_literal(), "12");
        assert_eq!(rt("1111").to_literal(), "1");
        assert_eq!(rt("112112112").to_literal(), "112");
        assert_eq!(fundamental_period(&[1, 2, 1]), 3);
    }

    #[test]
    fn empty_input_is_rejected() {
        assert_eq!(canonicalize::<u32>(&[]), Err(RotorError::Empty));
        assert_eq!("".parse::<RotorType>(), Err(RotorError::Empty));
        assert!(matches!("12x".parse::<RotorType>(), Err(RotorError::Parse(_))));
        assert!(matches!("1,,2".parse::<RotorType>(), Err(RotorError::Parse(_))));
    }

    #[test]
    fn literal_switches_to_commas_above_nine() {
        let r = canonicalize(&(1..=11).collect::<Vec<State>>()).unwrap();
        assert_eq!(r.to_literal(), "1,2,3,4,5,6,7,8,9,10,11");
        assert_eq!(r.to_literal().parse::<RotorType>().unwrap(), r);
    }

    #[test]
    fn terms_and_blocks_index_modulo_period() {
        let r = rt("12434");
        assert_eq!(r.term(1), 1);
        assert_eq!(r.term(6), 1);
        assert_eq!(r.term(0), 3);
        let r = rt("122112");
        assert_eq!(r.block(1, 2), &[2, 1]);
        assert_eq!(r.block(3, 2), &[1, 2]);
    }

    #[test]
    fn serde_uses_literal() {
        let r = rt("1221");
        let json = serde_json::to_string(&r).unwrap();
        assert_eq!(json, "\"1221\"");
        assert_eq!(serde_json::from_str::<RotorType>(&json).unwrap(), r);
    }
}
