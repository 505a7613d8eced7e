//! Closed-form positions of targets in `UD(r)` for balanced `r`.

use serde::Serialize;

use super::{apply, CompressorVariant};
use crate::rotor::{is_n_balanced_seq, is_palindrome, RotorError, RotorType};

/// Position functions of a balanced rotor of period `2n`, read as an
/// infinite sequence with 1-based positions.
#[derive(Debug, Clone)]
pub struct PositionFunctions {
    n: u64,
    ones: Vec<u64>,
    twos: Vec<u64>,
    /// `ones_through[p]`: number of 1s among the first `p` terms.
    ones_through: Vec<u64>,
}

impl PositionFunctions {
    pub fn new(r: &RotorType) -> Result<Self, RotorError> {
        let s = r.symbols();
        if !r.is_two_state() {
            return Err(RotorError::NotTwoState(r.clone()));
        }
        if !is_n_balanced_seq(s, s.len()) {
            return Err(RotorError::NotBalanced(r.clone()));
        }
        let mut ones = Vec::new();
        let mut twos = Vec::new();
        let mut ones_through = vec![0];
        for (i, &x) in s.iter().enumerate() {
            if x == 1 {
                ones.push(i as u64 + 1);
            } else {
                twos.push(i as u64 + 1);
            }
            ones_through.push(ones.len() as u64);
        }
        Ok(PositionFunctions {
            n: s.len() as u64 / 2,
            ones,
            twos,
            ones_through,
        })
    }

    /// Half the period.
    pub fn n(&self) -> u64 {
        self.n
    }

    fn nth(&self, table: &[u64], m: u64) -> u64 {
        assert!(m >= 1);
        (m - 1) / self.n * 2 * self.n + table[((m - 1) % self.n) as usize]
    }

    /// Position of the `m`-th 1.
    pub fn f(&self, m: u64) -> u64 {
        self.nth(&self.ones, m)
    }

    /// Position of the `m`-th 2.
    pub fn g(&self, m: u64) -> u64 {
        self.nth(&self.twos, m)
    }

    /// Number of 1s through position `p`.
    #[allow(non_snake_case)]
    pub fn F(&self, p: u64) -> u64 {
        let period = 2 * self.n;
        p / period * self.n + self.ones_through[(p % period) as usize]
    }

    /// Number of 2s through position `p`.
    #[allow(non_snake_case)]
    pub fn G(&self, p: u64) -> u64 {
        p - self.F(p)
    }

    /// Position of the `m`-th 4 in `UD(r)`.
    pub fn ud_four(&self, m: u64) -> u64 {
        self.F(self.G(self.f(self.g(m)))) + m
    }

    /// Position of the `m`-th 5 in `UD(r)`.
    pub fn ud_five(&self, m: u64) -> u64 {
        self.G(self.F(self.g(self.f(m)))) + m
    }
}

/// Position (1-based) of the `m`-th 4 in the infinite sequence `UD(r)`.
pub fn position_oracle_ud(r: &RotorType, m: u64) -> Result<u64, RotorError> {
    Ok(PositionFunctions::new(r)?.ud_four(m))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PalindromeCheck {
    pub ud_palindromic: bool,
    /// `F(G(f(g(m)))) + F(G(f(g(n-m+1)))) = n` for all `m` in `1..=n`.
    pub fours_symmetric: bool,
    /// `G(F(g(f(m)))) + G(F(g(f(n-m+1)))) = n` for all `m` in `1..=n`.
    pub fives_symmetric: bool,
    pub same_ends: bool,
}

impl PalindromeCheck {
    /// Palindromic `UD(r)` forces both symmetries and equal end terms.
    pub fn consistent(&self) -> bool {
        !self.ud_palindromic || (self.fours_symmetric && self.fives_symmetric && self.same_ends)
    }
}

pub fn check_palindrome_constraints(r: &RotorType) -> Result<PalindromeCheck, RotorError> {
    let pf = PositionFunctions::new(r)?;
    let n = pf.n();
    let ud = apply(r, CompressorVariant::UD)?;
    let s = r.symbols();
    Ok(PalindromeCheck {
        ud_palindromic: is_palindrome(&ud.raw),
        fours_symmetric: (1..=n).all(|m| {
            pf.ud_four(m) - m + pf.ud_four(n - m + 1) - (n - m + 1) == n
        }),
        fives_symmetric: (1..=n).all(|m| {
            pf.ud_five(m) - m + pf.ud_five(n - m + 1) - (n - m + 1) == n
        }),
        same_ends: s.first() == s.last(),
    })
}
