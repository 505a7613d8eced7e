//! How UU and DD redistribute balanced runs, and the monovariants that
//! follow from it.

use num_rational::Ratio;
use serde::Serialize;

use super::{apply, particle_hits, CompressorVariant};
use crate::rotor::{
    ba_frequency, ba_frequency_seq, balance_coefficient, is_n_balanced_seq, maximal_brd,
    RotorError, RotorType, State,
};

/// The hits in `UU(r)` and `DD(r)` produced by the particles of one balanced
/// run of `r`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RunSplit {
    /// 0-based particle index of the run's first term, over two periods.
    pub start: usize,
    pub len: usize,
    /// Whether `r` is constant on `[start/2, start/2 + len/2)`.
    pub half_run_uniform: bool,
    /// 0-based offset of the run's hits in one period of raw `UU(r)`.
    pub uu_offset: usize,
    pub uu: Vec<State>,
    pub dd_offset: usize,
    pub dd: Vec<State>,
}

impl RunSplit {
    pub fn is_split(&self) -> bool {
        !self.uu.is_empty() && !self.dd.is_empty()
    }

    /// The two pieces are balanced, their lengths add up to the run, and
    /// one piece is empty exactly when the half-position run is uniform.
    pub fn consistent(&self) -> bool {
        let balanced = |s: &[State]| s.is_empty() || is_n_balanced_seq(s, s.len());
        balanced(&self.uu)
            && balanced(&self.dd)
            && self.uu.len() + self.dd.len() == self.len
            && self.half_run_uniform != self.is_split()
    }
}

/// Splits every run of the maximal BRD, in both of the two periods of `r`
/// that make up one period of `UU(r)` and of `DD(r)`.
pub fn split_analysis(r: &RotorType) -> Result<Vec<RunSplit>, RotorError> {
    let brd = maximal_brd(r)?;
    let n = r.len();
    let uu = particle_hits(r, CompressorVariant::UU, 2 * n);
    let dd = particle_hits(r, CompressorVariant::DD, 2 * n);
    let collect = |hits: &[Option<State>], lo: usize, hi: usize| -> (usize, Vec<State>) {
        let offset = hits[..lo].iter().flatten().count();
        (offset, hits[lo..hi].iter().flatten().copied().collect())
    };
    let mut splits = Vec::new();
    for period in 0..2 {
        for run in &brd.runs {
            let start = period * n + run.start;
            let end = start + run.len;
            let a = start / 2;
            let first = r.term(a as i64 + 1);
            let half_run_uniform =
                (a + 1..=a + run.len / 2).all(|k| r.term(k as i64) == first);
            let (uu_offset, uu_run) = collect(&uu, start, end);
            let (dd_offset, dd_run) = collect(&dd, start, end);
            splits.push(RunSplit {
                start,
                len: run.len,
                half_run_uniform,
                uu_offset,
                uu: uu_run,
                dd_offset,
                dd: dd_run,
            });
        }
    }
    Ok(splits)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonovariantReport {
    pub b_r: Ratio<u64>,
    pub b_uu: Ratio<u64>,
    pub b_dd: Ratio<u64>,
    /// `(m(r), m(UU(r)), m(DD(r)))` when `r` is ab-ba.
    pub ba_frequencies: Option<(Ratio<u64>, Ratio<u64>, Ratio<u64>)>,
}

impl MonovariantReport {
    /// `b(UU(r)) + b(DD(r)) >= 2 b(r)`.
    pub fn balance_inequality(&self) -> bool {
        self.b_uu + self.b_dd >= self.b_r * 2
    }

    /// One of `b(UU(r))`, `b(DD(r))` exceeds `b(r)`.
    pub fn strict_increase(&self) -> bool {
        self.b_uu > self.b_r || self.b_dd > self.b_r
    }

    /// `m(UU(r)) + m(DD(r)) = 2 m(r)`; `None` when `r` is not ab-ba.
    pub fn ba_identity(&self) -> Option<bool> {
        self.ba_frequencies.map(|(m, uu, dd)| uu + dd == m * 2)
    }
}

/// Balance coefficients around `UU` and `DD`, plus ba-frequencies for ab-ba
/// inputs. The ba-frequencies of the images are read off the raw hitting
/// sequences with 4, 5 renamed to 1, 2: first-appearance relabeling could
/// swap the states and turn `m` into `1 - m`.
pub fn monovariant_report(r: &RotorType) -> Result<MonovariantReport, RotorError> {
    let b_r = balance_coefficient(r)?;
    let uu = apply(r, CompressorVariant::UU)?;
    let dd = apply(r, CompressorVariant::DD)?;
    let ba_frequencies = match ba_frequency(r) {
        Ok(m) => {
            let image = |c: &super::Compressed| {
                ba_frequency_seq(&c.mapped()).ok_or_else(|| {
                    RotorError::TheoremViolated(format!(
                        "image of ab-ba rotor {r} is not ab-ba"
                    ))
                })
            };
            Some((m, image(&uu)?, image(&dd)?))
        }
        Err(RotorError::NotAbba(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(MonovariantReport {
        b_r,
        b_uu: balance_coefficient(&uu.rotor)?,
        b_dd: balance_coefficient(&dd.rotor)?,
        ba_frequencies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotor::format_literal;

    fn rt(s: &str) -> RotorType {
        s.parse().unwrap()
    }

    #[test]
    fn runs_of_12211122() {
        // Maximal BRD 12|21|1122, over two periods.
        let splits = split_analysis(&rt("12211122")).unwrap();
        assert_eq!(splits.len(), 6);
        assert!(splits.iter().all(RunSplit::consistent));
        // The first 1122 is split: 45 at positions 3 and 4 of UU, 45 in DD.
        let first = &splits[2];
        assert_eq!(first.start, 4);
        assert!(first.is_split());
        assert_eq!((first.uu_offset, format_literal(&first.uu)), (2, "45".into()));
        assert_eq!(format_literal(&first.dd), "45");
        // The second 1122 has the uniform 22 at half its position and lands
        // entirely in UU, as the closing 4455.
        let last = splits.last().unwrap();
        assert_eq!(last.start, 12);
        assert!(last.half_run_uniform);
        assert_eq!(format_literal(&last.uu), "4455");
        assert_eq!(last.uu_offset, 4);
        assert!(last.dd.is_empty());
    }

    #[test]
    fn monovariants_on_examples() {
        let report = monovariant_report(&rt("12211122")).unwrap();
        assert!(report.balance_inequality());
        assert_eq!(report.ba_identity(), None);

        let report = monovariant_report(&rt("122112")).unwrap();
        assert_eq!(report.ba_identity(), Some(true));
        assert!(report.balance_inequality());
    }

    #[test]
    fn burd_rotor_has_no_strict_increase() {
        let report = monovariant_report(&rt("1122222111")).unwrap();
        assert!(!report.strict_increase());
        assert_eq!(report.b_uu + report.b_dd, report.b_r * 2);
    }
}
