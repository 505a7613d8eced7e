//! Balanced and uniform run decompositions, BURD detection, and the two
//! rational monovariants (balance coefficient and ba-frequency).

use std::collections::HashSet;

use num_rational::Ratio;
use serde::Serialize;

use super::{fundamental_period, is_n_balanced_seq, RotorError, RotorType, State};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RunKind {
    Balanced,
    Uniform,
}

/// A contiguous run `[start, start + len)` of one period (0-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Run {
    pub start: usize,
    pub len: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunDecomposition {
    pub kind: RunKind,
    pub runs: Vec<Run>,
    /// Half-lengths for balanced runs, lengths for uniform runs.
    pub type_sequence: Vec<usize>,
}

impl RunDecomposition {
    fn from_cuts(kind: RunKind, cuts: &[usize]) -> Self {
        let runs: Vec<Run> = cuts
            .windows(2)
            .map(|w| Run {
                start: w[0],
                len: w[1] - w[0],
            })
            .collect();
        let type_sequence = runs
            .iter()
            .map(|run| match kind {
                RunKind::Balanced => run.len / 2,
                RunKind::Uniform => run.len,
            })
            .collect();
        RunDecomposition {
            kind,
            runs,
            type_sequence,
        }
    }

    /// Runs joined with `|`, e.g. `12|21|12`.
    pub fn render(&self, r: &RotorType) -> String {
        self.runs
            .iter()
            .map(|run| super::format_literal(&r.symbols()[run.start..run.start + run.len]))
            .collect::<Vec<_>>()
            .join("|")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum BurdVerdict {
    NotBurd,
    /// Each balanced run `[2a, 2a + 2b)` has uniform counterparts
    /// `[a, a + b)` and `[a + |r|/2, a + |r|/2 + b)`.
    Positional {
        brd: RunDecomposition,
        urd: RunDecomposition,
    },
    /// Some BRD type equals some URD type as cyclic sequences, but no BRD has
    /// positional uniform counterparts.
    TypeOnly {
        brd: RunDecomposition,
        urd: RunDecomposition,
    },
}

impl BurdVerdict {
    pub fn is_positional(&self) -> bool {
        matches!(self, BurdVerdict::Positional { .. })
    }

    pub fn is_burd(&self) -> bool {
        !matches!(self, BurdVerdict::NotBurd)
    }
}

fn require_balanced(r: &RotorType) -> Result<(), RotorError> {
    if !r.is_two_state() {
        return Err(RotorError::NotTwoState(r.clone()));
    }
    if !is_n_balanced_seq(r.symbols(), r.len()) {
        return Err(RotorError::NotBalanced(r.clone()));
    }
    Ok(())
}

/// Indices `i` in `1..=n` where the +1/-1 prefix sum returns to zero.
fn zero_returns(r: &RotorType) -> Vec<usize> {
    let mut sum = 0i64;
    let mut zeros = Vec::new();
    for (i, &s) in r.symbols().iter().enumerate() {
        sum += if s == 1 { 1 } else { -1 };
        if sum == 0 {
            zeros.push(i + 1);
        }
    }
    zeros
}

/// The BRD cutting at every zero return of the prefix sum, which has the
/// most runs of any BRD.
pub fn maximal_brd(r: &RotorType) -> Result<RunDecomposition, RotorError> {
    require_balanced(r)?;
    let mut cuts = vec![0];
    cuts.extend(zero_returns(r));
    Ok(RunDecomposition::from_cuts(RunKind::Balanced, &cuts))
}

/// `b(r)`: maximal number of BRD runs divided by `|r|`.
pub fn balance_coefficient(r: &RotorType) -> Result<Ratio<u64>, RotorError> {
    let brd = maximal_brd(r)?;
    Ok(Ratio::new(brd.runs.len() as u64, r.len() as u64))
}

/// Every BRD of a balanced rotor. There are `2^(z-1)` of them where `z` is
/// the number of zero returns, so keep periods small.
pub fn all_brds(r: &RotorType) -> Result<Vec<RunDecomposition>, RotorError> {
    require_balanced(r)?;
    let zeros = zero_returns(r);
    let optional = &zeros[..zeros.len() - 1];
    Ok(subsets_as_cuts(optional, r.len())
        .map(|cuts| RunDecomposition::from_cuts(RunKind::Balanced, &cuts))
        .collect())
}

/// Every URD of a rotor: cuts are forced at each change of state and
/// optional everywhere else.
pub fn all_urds(r: &RotorType) -> Vec<RunDecomposition> {
    let s = r.symbols();
    let forced: Vec<usize> = (1..s.len()).filter(|&i| s[i] != s[i - 1]).collect();
    let optional: Vec<usize> = (1..s.len()).filter(|&i| s[i] == s[i - 1]).collect();
    subsets_as_cuts(&optional, s.len())
        .map(|mut cuts| {
            cuts.extend(&forced);
            cuts.sort_unstable();
            RunDecomposition::from_cuts(RunKind::Uniform, &cuts)
        })
        .collect()
}

/// Sorted cut lists `[0, chosen.., end]` for every subset of `optional`.
fn subsets_as_cuts(optional: &[usize], end: usize) -> impl Iterator<Item = Vec<usize>> + '_ {
    assert!(optional.len() < 63, "too many optional cuts to enumerate");
    (0u64..1 << optional.len()).map(move |mask| {
        let mut cuts = vec![0];
        cuts.extend(
            optional
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &c)| c),
        );
        cuts.push(end);
        cuts
    })
}

fn is_uniform(s: &[State]) -> bool {
    s.iter().all(|&x| x == s[0])
}

/// Primitive root of a cyclic sequence, rotated to its lexicographically
/// least form.
fn cyclic_normal_form(seq: &[usize]) -> Vec<usize> {
    let root = &seq[..fundamental_period(seq)];
    (0..root.len())
        .map(|k| root[k..].iter().chain(&root[..k]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Searches for a positional witness: a BRD whose every run `[2a, 2a + 2b)`
/// has uniform runs of length `b` at `a` and at `a + |r|/2`.
fn positional_witness(r: &RotorType) -> Option<(RunDecomposition, RunDecomposition)> {
    let s = r.symbols();
    let n = s.len();
    let half = n / 2;
    let zeros = zero_returns(r);
    let is_cut: Vec<bool> = (0..=n).map(|i| i == 0 || zeros.contains(&i)).collect();
    let run_ok = |start: usize, end: usize| {
        let (a, b) = (start / 2, (end - start) / 2);
        is_uniform(&s[a..a + b]) && is_uniform(&s[half + a..half + a + b])
    };
    // prev[j] = cut preceding j on some valid decomposition of [0, j).
    let mut prev: Vec<Option<usize>> = vec![None; n + 1];
    let mut reachable = vec![false; n + 1];
    reachable[0] = true;
    for end in 1..=n {
        if !is_cut[end] {
            continue;
        }
        // Prefer the latest start so witnesses use the finest runs.
        if let Some(start) = (0..end)
            .rev()
            .find(|&start| is_cut[start] && reachable[start] && run_ok(start, end))
        {
            reachable[end] = true;
            prev[end] = Some(start);
        }
    }
    if !reachable[n] {
        return None;
    }
    let mut cuts = vec![n];
    let mut at = n;
    while let Some(p) = prev[at] {
        cuts.push(p);
        at = p;
    }
    cuts.reverse();
    let brd = RunDecomposition::from_cuts(RunKind::Balanced, &cuts);
    let mut urd_cuts: Vec<usize> = cuts[..cuts.len() - 1].iter().map(|c| c / 2).collect();
    urd_cuts.extend(cuts[..cuts.len() - 1].iter().map(|c| half + c / 2));
    urd_cuts.push(n);
    let urd = RunDecomposition::from_cuts(RunKind::Uniform, &urd_cuts);
    Some((brd, urd))
}

/// Classifies a balanced rotor as positional BURD, type-only BURD, or
/// neither.
pub fn burd_check(r: &RotorType) -> Result<BurdVerdict, RotorError> {
    require_balanced(r)?;
    if let Some((brd, urd)) = positional_witness(r) {
        return Ok(BurdVerdict::Positional { brd, urd });
    }
    let urds = all_urds(r);
    let urd_forms: Vec<Vec<usize>> = urds
        .iter()
        .map(|u| cyclic_normal_form(&u.type_sequence))
        .collect();
    let lookup: HashSet<&Vec<usize>> = urd_forms.iter().collect();
    for brd in all_brds(r)? {
        let form = cyclic_normal_form(&brd.type_sequence);
        if lookup.contains(&form) {
            let idx = urd_forms.iter().position(|f| *f == form).unwrap();
            return Ok(BurdVerdict::TypeOnly {
                brd,
                urd: urds[idx].clone(),
            });
        }
    }
    Ok(BurdVerdict::NotBurd)
}

/// ba-frequency of a label sequence whose first-state label is `1`: twice
/// the number of `21` blocks over the length. `None` unless every length-2
/// block is `12` or `21`.
pub fn ba_frequency_seq(seq: &[State]) -> Option<Ratio<u64>> {
    if seq.is_empty() || seq.len() % 2 != 0 {
        return None;
    }
    let mut k = 0u64;
    for pair in seq.chunks(2) {
        match pair {
            [1, 2] => {}
            [2, 1] => k += 1,
            _ => return None,
        }
    }
    Some(Ratio::new(2 * k, seq.len() as u64))
}

/// `m(r)` for an ab-ba rotor.
pub fn ba_frequency(r: &RotorType) -> Result<Ratio<u64>, RotorError> {
    if !r.is_two_state() {
        return Err(RotorError::NotTwoState(r.clone()));
    }
    ba_frequency_seq(r.symbols()).ok_or_else(|| RotorError::NotAbba(r.clone()))
}
