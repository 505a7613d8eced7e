use std::fmt;

use serde::Serialize;

use super::{canonicalize, RotorError, RotorType, State};

/// A special-case relationship between rotor types: merge one state into
/// another, or delete a state outright.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ReductionRule {
    Merge { source: State, target: State },
    Delete(State),
}

impl fmt::Display for ReductionRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ReductionRule::Merge { source, target } => write!(f, "{source}->{target}"),
            ReductionRule::Delete(s) => write!(f, "x({s})"),
        }
    }
}

/// Applies a reduction (naming canonical labels of `r`) and re-canonicalizes.
/// A result with a single state is returned as-is; callers check
/// [`RotorType::is_trivial`].
pub fn apply_reduction(r: &RotorType, rule: ReductionRule) -> Result<RotorType, RotorError> {
    apply_reduction_raw(r.symbols(), rule)
}

/// Like [`apply_reduction`] but the rule names labels of an arbitrary raw
/// sequence, e.g. `4 -> 2` on the literal `12434`.
pub fn apply_reduction_raw(raw: &[State], rule: ReductionRule) -> Result<RotorType, RotorError> {
    let present = |s: State| raw.contains(&s);
    match rule {
        ReductionRule::Merge { source, target } => {
            for s in [source, target] {
                if !present(s) {
                    return Err(RotorError::AbsentState(s));
                }
            }
            if source == target {
                return Err(RotorError::SelfMerge(source));
            }
            let merged: Vec<State> = raw
                .iter()
                .map(|&s| if s == source { target } else { s })
                .collect();
            canonicalize(&merged)
        }
        ReductionRule::Delete(state) => {
            if !present(state) {
                return Err(RotorError::AbsentState(state));
            }
            let kept: Vec<State> = raw.iter().copied().filter(|&s| s != state).collect();
            canonicalize(&kept).map_err(|_| RotorError::EmptyAfterDelete(state))
        }
    }
}

/// Every reduction rule in the fixed search order: merges by ascending
/// `(source, target)`, then deletions by ascending state.
pub fn all_reductions(r: &RotorType) -> Vec<(ReductionRule, RotorType)> {
    let states = r.states();
    let merges = states.iter().flat_map(|&source| {
        states
            .iter()
            .filter(move |&&target| target != source)
            .map(move |&target| ReductionRule::Merge { source, target })
    });
    let deletes = states.iter().map(|&s| ReductionRule::Delete(s));
    merges
        .chain(deletes)
        .filter_map(|rule| apply_reduction(r, rule).ok().map(|red| (rule, red)))
        .collect()
}

/// First reduction (in [`all_reductions`] order) whose result is unboppy.
///
/// Requires an unboppy rotor with at least three states; for such rotors an
/// unboppy reduction always exists, so `TheoremViolated` should never be
/// returned.
pub fn find_unboppy_reduction(
    r: &RotorType,
) -> Result<(ReductionRule, RotorType), RotorError> {
    if r.state_count() < 3 {
        return Err(RotorError::Precondition(format!(
            "{r} has {} states, need at least 3",
            r.state_count()
        )));
    }
    if r.classify().boppy {
        return Err(RotorError::Precondition(format!("{r} is boppy")));
    }
    all_reductions(r)
        .into_iter()
        .find(|(_, red)| !red.classify().boppy)
        .ok_or_else(|| RotorError::TheoremViolated(format!("{r} has no unboppy reduction")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) -> RotorType {
        s.parse().unwrap()
    }

    #[test]
    fn merge_and_delete_examples() {
        let raw = [1, 2, 4, 3, 4];
        let merged = apply_reduction_raw(&raw, ReductionRule::Merge { source: 4, target: 2 });
        assert_eq!(merged.unwrap(), rt("12232"));
        assert_eq!(apply_reduction_raw(&raw, ReductionRule::Delete(4)).unwrap(), rt("123"));
        // Canonically 12434 is 12343, where the same state is labeled 3.
        let r = rt("12434");
        assert_eq!(r.to_literal(), "12343");
        let merged = apply_reduction(&r, ReductionRule::Merge { source: 3, target: 2 });
        assert_eq!(merged.unwrap(), rt("12232"));
        assert_eq!(apply_reduction(&r, ReductionRule::Delete(3)).unwrap(), rt("123"));
    }

    #[test]
    fn merging_two_states_gives_trivial_rotor() {
        let red = apply_reduction(&rt("12"), ReductionRule::Merge { source: 2, target: 1 }).unwrap();
        assert!(red.is_trivial());
        assert_eq!(red, RotorType::trivial());
    }

    #[test]
    fn absent_states_are_rejected() {
        let r = rt("12");
        assert_eq!(
            apply_reduction(&r, ReductionRule::Delete(3)),
            Err(RotorError::AbsentState(3))
        );
        assert_eq!(
            apply_reduction(&r, ReductionRule::Merge { source: 1, target: 1 }),
            Err(RotorError::SelfMerge(1))
        );
        assert_eq!(
            apply_reduction(&RotorType::trivial(), ReductionRule::Delete(1)),
            Err(RotorError::EmptyAfterDelete(1))
        );
    }

    #[test]
    fn search_order_is_merges_then_deletes() {
        let rules: Vec<_> = all_reductions(&rt("123")).into_iter().map(|(r, _)| r).collect();
        assert_eq!(rules.len(), 9);
        assert_eq!(rules[0], ReductionRule::Merge { source: 1, target: 2 });
        assert_eq!(rules[5], ReductionRule::Merge { source: 3, target: 2 });
        assert_eq!(rules[6], ReductionRule::Delete(1));
    }

    #[test]
    fn two_state_rotor_fails_precondition() {
        assert!(matches!(
            find_unboppy_reduction(&rt("1212")),
            Err(RotorError::Precondition(_))
        ));
        assert!(matches!(
            find_unboppy_reduction(&rt("1122")),
            Err(RotorError::Precondition(_))
        ));
    }

    #[test]
    fn rotor_123_reduces_to_an_unboppy_rotor() {
        // Oracle: classify each of the nine rules by hand.
        // Merges give 112/121/122-type rotors; 121 (1->3 or 3->1) is a palindrome.
        // Deletions give 12 / 12 / 12, all unboppy.
        let r = rt("123");
        for (rule, red) in all_reductions(&r) {
            let expected_boppy = matches!(
                rule,
                ReductionRule::Merge { source: 1, target: 3 } | ReductionRule::Merge { source: 3, target: 1 }
            );
            assert_eq!(red.classify().boppy, expected_boppy, "{rule} -> {red}");
        }
        let (rule, red) = find_unboppy_reduction(&r).unwrap();
        assert_eq!(rule, ReductionRule::Merge { source: 1, target: 2 });
        assert_eq!(red, rt("112"));
    }
}
