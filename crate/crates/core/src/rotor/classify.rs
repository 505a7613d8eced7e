use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use super::RotorType;

/// Membership of a rotor in the palindromic / block-repetitive / balance
/// classes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub palindromic: bool,
    /// Largest `m` with every length-`m` block uniform; 1 when the rotor is
    /// not block-repetitive.
    pub max_block_length: usize,
    pub boppy: bool,
    pub balanced: bool,
    /// Every `n` for which the rotor is `n`-balanced.
    pub n_balance_degrees: BTreeSet<usize>,
    pub abba: bool,
    pub trivial: bool,
    pub state_count: usize,
}

/// The class `C(p, b)`: palindromic iff `p = 1`, maximal block length `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ClassLabel {
    pub p: u8,
    pub b: usize,
}

impl fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({}, {})", self.p, self.b)
    }
}

/// Reads the same forwards and backwards.
pub fn is_palindrome<T: PartialEq>(seq: &[T]) -> bool {
    seq.iter().eq(seq.iter().rev())
}

/// Largest `m` dividing `seq.len()` such that every block of length `m` is
/// constant. Returns 1 if no `m >= 2` works.
pub fn max_block_length_seq<T: PartialEq>(seq: &[T]) -> usize {
    let n = seq.len();
    (2..=n)
        .rev()
        .filter(|m| n % m == 0)
        .find(|&m| seq.chunks(m).all(|block| block.iter().all(|x| *x == block[0])))
        .unwrap_or(1)
}

/// Whether a two-valued sequence is `n`-balanced: `n` divides the length
/// and every length-`n` block holds both values equally often.
pub fn is_n_balanced_seq<T: PartialEq + Copy>(seq: &[T], n: usize) -> bool {
    if n == 0 || seq.is_empty() || seq.len() % n != 0 || n % 2 != 0 {
        return false;
    }
    let a = seq[0];
    let Some(&b) = seq.iter().find(|&&x| x != a) else {
        return false;
    };
    if seq.iter().any(|&x| x != a && x != b) {
        return false;
    }
    seq.chunks(n)
        .all(|block| block.iter().filter(|&&x| x == a).count() * 2 == n)
}

impl Classification {
    pub fn of(r: &RotorType) -> Self {
        let s = r.symbols();
        let palindromic = is_palindrome(s);
        let max_block_length = max_block_length_seq(s);
        let n_balance_degrees: BTreeSet<usize> = if r.is_two_state() {
            (1..=s.len())
                .filter(|&n| is_n_balanced_seq(s, n))
                .collect()
        } else {
            BTreeSet::new()
        };
        Classification {
            palindromic,
            max_block_length,
            boppy: palindromic || max_block_length >= 2,
            balanced: n_balance_degrees.contains(&s.len()),
            abba: n_balance_degrees.contains(&2),
            n_balance_degrees,
            trivial: r.is_trivial(),
            state_count: r.state_count(),
        }
    }

    pub fn block_repetitive(&self) -> bool {
        self.max_block_length >= 2
    }

    pub fn label(&self) -> ClassLabel {
        ClassLabel {
            p: self.palindromic as u8,
            b: self.max_block_length,
        }
    }

    pub fn is_n_balanced(&self, n: usize) -> bool {
        self.n_balance_degrees.contains(&n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn class(s: &str) -> Classification {
        s.parse::<RotorType>().unwrap().classify()
    }

    #[test]
    fn palindrome_1221_is_boppy() {
        let c = class("1221");
        assert!(c.palindromic);
        assert!(c.boppy);
        // Its length-2 blocks are 12 and 21, so it is not block-repetitive.
        assert_eq!(c.max_block_length, 1);
        assert_eq!(c.label(), ClassLabel { p: 1, b: 1 });
    }

    #[test]
    fn twelve_is_unboppy_balanced_abba() {
        let c = class("12");
        assert!(!c.palindromic);
        assert!(!c.boppy);
        assert!(c.balanced);
        assert!(c.abba);
        assert_eq!(c.label().to_string(), "C(0, 1)");
    }

    #[test]
    fn four_balanced_but_not_abba() {
        let c = class("12211122");
        assert!(!c.boppy);
        assert!(c.is_n_balanced(4));
        assert!(c.is_n_balanced(8));
        assert!(!c.abba);
        assert_eq!(c.n_balance_degrees.iter().copied().collect::<Vec<_>>(), vec![4, 8]);
    }

    #[test]
    fn block_repetitive_reports_maximal_length() {
        assert_eq!(class("111222").max_block_length, 3);
        assert_eq!(class("112222").max_block_length, 2);
        assert_eq!(class("1122").label(), ClassLabel { p: 0, b: 2 });
        assert_eq!(class("112233332211").max_block_length, 2);
        assert!(class("112233332211").palindromic);
    }

    #[test]
    fn three_state_rotors_have_no_balance_degrees() {
        let c = class("123");
        assert!(c.n_balance_degrees.is_empty());
        assert!(!c.balanced);
        assert!(!c.boppy);
    }

    #[test]
    fn trivial_rotor_is_palindromic() {
        let c = class("1");
        assert!(c.trivial);
        assert!(c.boppy);
    }
}
