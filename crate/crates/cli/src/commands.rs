use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use num_rational::Ratio;
use rotorlab::compressor::{apply, fixed_cycle_search, CompressorVariant};
use rotorlab::network::{build_model_from_12, Network, NetworkError, NetworkFile};
use rotorlab::rotor::{
    all_reductions, all_urds, ba_frequency, balance_coefficient, burd_check,
    find_unboppy_reduction, format_literal, maximal_brd, BurdVerdict, Classification,
    RunDecomposition,
};
use rotorlab::universality::{
    certify, compressor_algorithm, enumerate_table, table1_expected, AlgorithmConfig, Outcome,
    TableRow,
};
use rotorlab::{RotorError, RotorType, State};
use serde::Serialize;
use thiserror::Error;

use crate::args::{Expectation, Format, GlobalOpts};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input: unreadable files, rotors outside a command's domain.
    #[error("{0}")]
    Input(String),
    /// A computation contradicted what it is supposed to guarantee.
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Check(_) => 1,
        }
    }
}

impl From<RotorError> for CliError {
    fn from(e: RotorError) -> Self {
        match e {
            RotorError::TheoremViolated(_) => CliError::Check(e.to_string()),
            _ => CliError::Input(e.to_string()),
        }
    }
}

impl From<NetworkError> for CliError {
    fn from(e: NetworkError) -> Self {
        match e {
            NetworkError::Rotor(inner) => inner.into(),
            NetworkError::StepBudgetExceeded(_) | NetworkError::NotPeriodicFromStart => {
                CliError::Check(e.to_string())
            }
            _ => CliError::Input(e.to_string()),
        }
    }
}

/// Rendered output plus whether every asserted expectation held.
pub struct Report {
    pub output: String,
    pub passed: bool,
}

fn render<T: Serialize>(
    format: Format,
    value: &T,
    text: impl FnOnce() -> String,
) -> Result<String, CliError> {
    match format {
        Format::Text => Ok(text()),
        Format::Json => {
            let mut out = serde_json::to_string_pretty(value).expect("reports serialize");
            out.push('\n');
            Ok(out)
        }
        Format::Csv => Err(CliError::Input(
            "--format csv is only supported by enumerate".into(),
        )),
    }
}

fn ratio(r: Ratio<u64>) -> String {
    if *r.denom() == 1 {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

#[derive(Serialize)]
struct ClassifyReport<'a> {
    rotor: &'a RotorType,
    label: String,
    classification: Classification,
}

fn boppy_reason(c: &Classification) -> String {
    let mut reasons = Vec::new();
    if c.palindromic {
        reasons.push("palindromic".to_string());
    }
    if c.block_repetitive() {
        reasons.push(format!("block-repetitive b={}", c.max_block_length));
    }
    if reasons.is_empty() {
        "no".into()
    } else {
        reasons.join(", ")
    }
}

pub fn classify(r: &RotorType, format: Format) -> Result<Report, CliError> {
    let c = r.classify();
    let report = ClassifyReport {
        rotor: r,
        label: c.label().to_string(),
        classification: c.clone(),
    };
    let output = render(format, &report, || {
        let mut s = String::new();
        writeln!(s, "rotor: {r}").unwrap();
        writeln!(s, "states: {}", c.state_count).unwrap();
        writeln!(s, "period: {}", r.len()).unwrap();
        writeln!(s, "class: {}", report.label).unwrap();
        writeln!(s, "boppy: {}", boppy_reason(&c)).unwrap();
        if r.is_two_state() {
            let degrees: Vec<String> = c.n_balance_degrees.iter().map(|n| n.to_string()).collect();
            writeln!(s, "balanced: {}", yes_no(c.balanced)).unwrap();
            let degrees = if degrees.is_empty() {
                "none".into()
            } else {
                degrees.join(", ")
            };
            writeln!(s, "n-balanced for n: {degrees}").unwrap();
            writeln!(s, "ab-ba: {}", yes_no(c.abba)).unwrap();
        }
        s
    })?;
    Ok(Report {
        output,
        passed: true,
    })
}

#[derive(Serialize)]
struct StepRecord {
    k: usize,
    variant: CompressorVariant,
    /// Targets hit over one configuration cycle: 4/5 for the maps, 1..=4
    /// for BT.
    raw: Vec<State>,
    canon: RotorType,
}

impl StepRecord {
    /// The maps' targets 4 and 5 read as states 1 and 2.
    fn raw_text(&self) -> String {
        let mapped: Vec<State> = match self.variant {
            CompressorVariant::BT => self.raw.clone(),
            _ => self.raw.iter().map(|&t| t - 3).collect(),
        };
        format_literal(&mapped)
    }

    fn line(&self) -> String {
        format!(
            "STEP {} VARIANT={} RAW={} CANON={}",
            self.k,
            self.variant,
            self.raw_text(),
            self.canon
        )
    }
}

#[derive(Serialize)]
struct TrajectoryReport {
    start: RotorType,
    steps: Vec<StepRecord>,
    outcome: Option<Outcome>,
    rng_seed: Option<u64>,
    attempts_used: Option<usize>,
    applications_used: Option<usize>,
    best: Option<RotorType>,
    certified: Option<bool>,
}

pub fn compress(
    r: &RotorType,
    variants: &[CompressorVariant],
    config: &AlgorithmConfig,
    format: Format,
) -> Result<Report, CliError> {
    let report = if variants.is_empty() {
        let t = compressor_algorithm(r, config)?;
        let certified = certify(&t)?;
        if !certified {
            return Err(CliError::Check(format!(
                "trajectory of {r} does not replay in the network simulator"
            )));
        }
        TrajectoryReport {
            start: t.start.clone(),
            steps: t
                .steps
                .iter()
                .enumerate()
                .map(|(i, s)| StepRecord {
                    k: i + 1,
                    variant: s.variant,
                    raw: s.raw.clone(),
                    canon: s.rotor.clone(),
                })
                .collect(),
            outcome: Some(t.outcome),
            rng_seed: Some(t.rng_seed),
            attempts_used: Some(t.attempts_used),
            applications_used: Some(t.applications_used),
            best: Some(t.best),
            certified: Some(certified),
        }
    } else {
        let mut current = r.clone();
        let mut steps = Vec::new();
        for (i, &v) in variants.iter().enumerate() {
            let c = apply(&current, v)?;
            current = c.rotor.clone();
            steps.push(StepRecord {
                k: i + 1,
                variant: v,
                raw: c.raw,
                canon: c.rotor,
            });
        }
        TrajectoryReport {
            start: r.clone(),
            steps,
            outcome: None,
            rng_seed: None,
            attempts_used: None,
            applications_used: None,
            best: None,
            certified: None,
        }
    };
    let output = render(format, &report, || {
        let mut s = String::new();
        for step in &report.steps {
            writeln!(s, "{}", step.line()).unwrap();
        }
        if let Some(outcome) = report.outcome {
            let outcome = match outcome {
                Outcome::Universal => "universal",
                Outcome::Undecided => "undecided",
            };
            writeln!(
                s,
                "OUTCOME {outcome} attempts={} applications={} seed={} best={} certified={}",
                report.attempts_used.unwrap(),
                report.applications_used.unwrap(),
                report.rng_seed.unwrap(),
                report.best.as_ref().unwrap(),
                yes_no(report.certified.unwrap()),
            )
            .unwrap();
        }
        s
    })?;
    Ok(Report {
        output,
        passed: true,
    })
}

#[derive(Serialize)]
struct ExpectationCheck {
    length: usize,
    undecided: u64,
    published: usize,
    passed: bool,
}

impl ExpectationCheck {
    fn line(&self) -> String {
        let verdict = match (self.passed, self.undecided == self.published as u64) {
            (true, true) => "match",
            (true, false) => "below published count",
            (false, _) => "FAIL above published count",
        };
        format!(
            "expect table1 length={} undecided={} published={}: {verdict}",
            self.length, self.undecided, self.published
        )
    }
}

#[derive(Serialize)]
struct EnumerateReport {
    rows: Vec<TableRow>,
    expectations: Vec<ExpectationCheck>,
}

const CSV_HEADER: &str =
    "length,total,trivial,boppy,unboppy,undecided,fraction_total,fraction_unboppy";

fn csv_row(row: &TableRow) -> String {
    format!(
        "{},{},{},{},{},{},{:.6},{:.6}",
        row.length,
        row.total_strings,
        row.trivial_count,
        row.boppy_count,
        row.unboppy_count,
        row.undecided_count,
        row.fraction_total,
        row.fraction_unboppy
    )
}

fn text_row(row: &TableRow) -> String {
    let mut s = format!(
        "length={} total={} trivial={} non_primitive={} boppy={} unboppy={} undecided={} \
         fraction_total={:.6} fraction_unboppy={:.6}\n",
        row.length,
        row.total_strings,
        row.trivial_count,
        row.non_primitive_count,
        row.boppy_count,
        row.unboppy_count,
        row.undecided_count,
        row.fraction_total,
        row.fraction_unboppy
    );
    for u in &row.undecided_rotors {
        writeln!(
            s,
            "  undecided {} post_ud={} best={}",
            u.rotor, u.post_ud, u.best
        )
        .unwrap();
    }
    s
}

pub fn enumerate(
    lengths: &[usize],
    expect: Option<Expectation>,
    opts: &GlobalOpts,
) -> Result<Report, CliError> {
    if expect == Some(Expectation::Table1) {
        if let Some(&n) = lengths.iter().find(|&&n| table1_expected(n).is_none()) {
            return Err(CliError::Input(format!(
                "no published count for length {n}"
            )));
        }
    }
    let config = opts.algorithm();
    let rows = lengths
        .iter()
        .map(|&n| enumerate_table(n, &config, opts.workers))
        .collect::<Result<Vec<_>, _>>()?;
    let expectations: Vec<ExpectationCheck> = match expect {
        None => Vec::new(),
        Some(Expectation::Table1) => rows
            .iter()
            .map(|row| {
                let published = table1_expected(row.length).unwrap();
                ExpectationCheck {
                    length: row.length,
                    undecided: row.undecided_count,
                    published,
                    passed: row.undecided_count <= published as u64,
                }
            })
            .collect(),
    };
    let passed = expectations.iter().all(|e| e.passed);
    let report = EnumerateReport { rows, expectations };
    let output = match opts.format {
        Format::Csv => {
            let mut s = format!("{CSV_HEADER}\n");
            for row in &report.rows {
                writeln!(s, "{}", csv_row(row)).unwrap();
            }
            s
        }
        format => render(format, &report, || {
            let mut s: String = report.rows.iter().map(text_row).collect();
            for e in &report.expectations {
                writeln!(s, "{}", e.line()).unwrap();
            }
            s
        })?,
    };
    Ok(Report { output, passed })
}

#[derive(Serialize)]
struct SimulateReport {
    period: Vec<usize>,
    rotor_type: RotorType,
    proof: rotorlab::network::RecurrenceProof,
    first_hits: Option<Vec<usize>>,
}

fn join<T: ToString>(items: &[T]) -> String {
    items.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn read_network(path: &Path) -> Result<Network, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    Ok(Network::from_json(&text)?)
}

pub fn simulate(path: &Path, steps: Option<usize>, format: Format) -> Result<Report, CliError> {
    let net = read_network(path)?;
    let hs = net.hitting_sequence()?;
    let report = SimulateReport {
        rotor_type: hs.rotor_type(),
        first_hits: steps.map(|k| net.first_hits(k)).transpose()?,
        period: hs.period,
        proof: hs.proof,
    };
    let output = render(format, &report, || {
        let mut s = String::new();
        writeln!(s, "period: {}", report.period.len()).unwrap();
        writeln!(s, "hits: {}", join(&report.period)).unwrap();
        writeln!(s, "type: {}", report.rotor_type).unwrap();
        let p = &report.proof;
        writeln!(
            s,
            "recurrence: preperiod_excursions={} cycle_excursions={} cycle_hits={} firings={}",
            p.preperiod_excursions, p.cycle_excursions, p.cycle_hits, p.firings
        )
        .unwrap();
        if let Some(hits) = &report.first_hits {
            writeln!(s, "first {}: {}", hits.len(), join(hits)).unwrap();
        }
        s
    })?;
    Ok(Report {
        output,
        passed: true,
    })
}

#[derive(Serialize)]
struct Decomposition {
    runs: String,
    types: Vec<usize>,
}

impl Decomposition {
    fn of(d: &RunDecomposition, r: &RotorType) -> Self {
        Decomposition {
            runs: d.render(r),
            types: d.type_sequence.clone(),
        }
    }
}

#[derive(Serialize)]
struct BurdReport {
    verdict: &'static str,
    brd: Option<Decomposition>,
    urd: Option<Decomposition>,
}

#[derive(Serialize)]
struct DecomposeReport {
    rotor: RotorType,
    maximal_brd: Decomposition,
    urds: Vec<Decomposition>,
    burd: BurdReport,
    balance_coefficient: String,
    ba_frequency: Option<String>,
}

/// Uniform decompositions listed in text output.
const URDS_SHOWN: usize = 8;

pub fn decompose(r: &RotorType, format: Format) -> Result<Report, CliError> {
    let brd = maximal_brd(r)?;
    let burd = match burd_check(r)? {
        BurdVerdict::NotBurd => BurdReport {
            verdict: "no",
            brd: None,
            urd: None,
        },
        BurdVerdict::Positional { brd, urd } => BurdReport {
            verdict: "positional",
            brd: Some(Decomposition::of(&brd, r)),
            urd: Some(Decomposition::of(&urd, r)),
        },
        BurdVerdict::TypeOnly { brd, urd } => BurdReport {
            verdict: "type-only",
            brd: Some(Decomposition::of(&brd, r)),
            urd: Some(Decomposition::of(&urd, r)),
        },
    };
    let ba = match ba_frequency(r) {
        Ok(m) => Some(ratio(m)),
        Err(RotorError::NotAbba(_)) => None,
        Err(e) => return Err(e.into()),
    };
    let report = DecomposeReport {
        rotor: r.clone(),
        maximal_brd: Decomposition::of(&brd, r),
        urds: all_urds(r)
            .iter()
            .map(|d| Decomposition::of(d, r))
            .collect(),
        burd,
        balance_coefficient: ratio(balance_coefficient(r)?),
        ba_frequency: ba,
    };
    let output = render(format, &report, || {
        let mut s = String::new();
        let line = |d: &Decomposition| format!("{} types {}", d.runs, join(&d.types));
        writeln!(s, "rotor: {r}").unwrap();
        writeln!(s, "maximal BRD: {}", line(&report.maximal_brd)).unwrap();
        writeln!(s, "URDs: {}", report.urds.len()).unwrap();
        for d in report.urds.iter().take(URDS_SHOWN) {
            writeln!(s, "  {}", line(d)).unwrap();
        }
        if report.urds.len() > URDS_SHOWN {
            writeln!(s, "  ... (--format json lists all)").unwrap();
        }
        writeln!(s, "BURD: {}", report.burd.verdict).unwrap();
        if let (Some(b), Some(u)) = (&report.burd.brd, &report.burd.urd) {
            writeln!(s, "  BRD {}", line(b)).unwrap();
            writeln!(s, "  URD {}", line(u)).unwrap();
        }
        writeln!(s, "b(r): {}", report.balance_coefficient).unwrap();
        let m = report.ba_frequency.as_deref().unwrap_or("n/a (not ab-ba)");
        writeln!(s, "m(r): {m}").unwrap();
        s
    })?;
    Ok(Report {
        output,
        passed: true,
    })
}

#[derive(Serialize)]
struct ReductionRecord {
    rule: String,
    result: RotorType,
    boppy: bool,
}

#[derive(Serialize)]
struct ReduceReport {
    rotor: RotorType,
    reductions: Vec<ReductionRecord>,
    witness: Option<ReductionRecord>,
    witness_note: Option<String>,
}

pub fn reduce(r: &RotorType, format: Format) -> Result<Report, CliError> {
    let reductions = all_reductions(r)
        .into_iter()
        .map(|(rule, result)| ReductionRecord {
            rule: rule.to_string(),
            boppy: result.classify().boppy,
            result,
        })
        .collect();
    let (witness, witness_note) = match find_unboppy_reduction(r) {
        Ok((rule, result)) => (
            Some(ReductionRecord {
                rule: rule.to_string(),
                boppy: false,
                result,
            }),
            None,
        ),
        Err(RotorError::Precondition(why)) => (None, Some(why)),
        Err(e) => return Err(e.into()),
    };
    let report = ReduceReport {
        rotor: r.clone(),
        reductions,
        witness,
        witness_note,
    };
    let output = render(format, &report, || {
        let mut s = String::new();
        writeln!(s, "rotor: {r}").unwrap();
        for red in &report.reductions {
            let kind = if red.boppy { "boppy" } else { "unboppy" };
            writeln!(s, "{} {} {kind}", red.rule, red.result).unwrap();
        }
        match (&report.witness, &report.witness_note) {
            (Some(w), _) => writeln!(s, "witness: {} {}", w.rule, w.result).unwrap(),
            (None, Some(note)) => writeln!(s, "witness: none ({note})").unwrap(),
            (None, None) => unreachable!(),
        }
        s
    })?;
    Ok(Report {
        output,
        passed: true,
    })
}

#[derive(Serialize)]
struct ModelReport {
    rotor: RotorType,
    hitting_type: RotorType,
    verified: bool,
    network: NetworkFile,
}

pub fn model(r: &RotorType, out: Option<&Path>, format: Format) -> Result<Report, CliError> {
    let net = build_model_from_12(r)?;
    let hitting_type = net.hitting_sequence()?.rotor_type();
    let homogeneous = net
        .rotor_vertices()
        .all(|v| net.rotor_type(v).is_some_and(|t| t.is_twelve()));
    let report = ModelReport {
        rotor: r.clone(),
        verified: homogeneous && hitting_type == *r,
        hitting_type,
        network: NetworkFile::from(&net),
    };
    if let Some(path) = out {
        fs::write(path, net.to_json())
            .map_err(|e| CliError::Input(format!("cannot write {}: {e}", path.display())))?;
    }
    let output = render(format, &report, || {
        let mut s = String::new();
        writeln!(s, "rotor: {r}").unwrap();
        writeln!(
            s,
            "network: vertices={} rotors={} targets={}",
            net.vertex_count(),
            net.rotor_vertices().count(),
            net.targets().len()
        )
        .unwrap();
        writeln!(s, "hitting type: {}", report.hitting_type).unwrap();
        writeln!(s, "verified: {}", yes_no(report.verified)).unwrap();
        match out {
            Some(path) => writeln!(s, "wrote {}", path.display()).unwrap(),
            None => s.push_str(&net.to_json()),
        }
        s
    })?;
    Ok(Report {
        output,
        passed: report.verified,
    })
}

#[derive(Serialize)]
struct CycleRecord {
    period: usize,
    members: Vec<RotorType>,
    burd: Vec<&'static str>,
}

#[derive(Serialize)]
struct CyclesReport {
    cycles: Vec<CycleRecord>,
    all_burd: bool,
}

fn burd_name(v: &BurdVerdict) -> &'static str {
    match v {
        BurdVerdict::NotBurd => "not-burd",
        BurdVerdict::Positional { .. } => "positional",
        BurdVerdict::TypeOnly { .. } => "type-only",
    }
}

pub fn fixed_cycles(max_period: usize, format: Format) -> Result<Report, CliError> {
    let mut cycles = Vec::new();
    let mut all_burd = true;
    for period in (2..=max_period).step_by(2) {
        for c in fixed_cycle_search(period)? {
            all_burd &= c.all_burd();
            cycles.push(CycleRecord {
                period,
                burd: c.burd.iter().map(burd_name).collect(),
                members: c.members,
            });
        }
    }
    let report = CyclesReport { cycles, all_burd };
    let output = render(format, &report, || {
        let mut s = String::new();
        for c in &report.cycles {
            let members: Vec<String> = c
                .members
                .iter()
                .zip(&c.burd)
                .map(|(m, b)| format!("{m} [{b}]"))
                .collect();
            writeln!(s, "period {}: {}", c.period, members.join(", ")).unwrap();
        }
        writeln!(
            s,
            "{} fixed cycles, all BURD: {}",
            report.cycles.len(),
            yes_no(report.all_burd)
        )
        .unwrap();
        s
    })?;
    Ok(Report {
        output,
        passed: all_burd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rt(s: &str) -> RotorType {
        s.parse().unwrap()
    }

    #[test]
    fn step_lines_read_map_targets_as_states() {
        let step = StepRecord {
            k: 3,
            variant: CompressorVariant::UD,
            raw: vec![5, 4],
            canon: rt("12"),
        };
        assert_eq!(step.line(), "STEP 3 VARIANT=UD RAW=21 CANON=12");
        let bt = StepRecord {
            k: 1,
            variant: CompressorVariant::BT,
            raw: vec![3, 3, 4, 1],
            canon: rt("1123"),
        };
        assert_eq!(bt.raw_text(), "3341");
    }

    #[test]
    fn boppy_reasons() {
        assert_eq!(boppy_reason(&rt("1221").classify()), "palindromic");
        assert_eq!(boppy_reason(&rt("1122").classify()), "block-repetitive b=2");
        assert_eq!(
            boppy_reason(&rt("112211").classify()),
            "palindromic, block-repetitive b=2"
        );
        assert_eq!(boppy_reason(&rt("112").classify()), "no");
    }

    #[test]
    fn ratios_print_reduced() {
        assert_eq!(ratio(Ratio::new(2, 10)), "1/5");
        assert_eq!(ratio(Ratio::new(4, 4)), "1");
    }

    #[test]
    fn error_exit_codes() {
        assert_eq!(CliError::from(RotorError::Empty).exit_code(), 2);
        let violated = RotorError::TheoremViolated("x".into());
        assert_eq!(CliError::from(violated).exit_code(), 1);
        assert_eq!(
            CliError::from(NetworkError::StepBudgetExceeded(5)).exit_code(),
            1
        );
        assert_eq!(CliError::from(NetworkError::NoTargets).exit_code(), 2);
    }

    #[test]
    fn csv_is_only_for_enumerate() {
        assert!(matches!(
            classify(&rt("12"), Format::Csv),
            Err(CliError::Input(_))
        ));
    }
}
