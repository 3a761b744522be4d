//! Unary scans and the perfect-square cross-check.

use std::fmt;

use rayon::prelude::*;

use crate::constructions::{build_squares_system, SquaresVariant};
use crate::engine::{search, validate_trace, MembershipResult, PcwkSystem, SearchLimits, Verdict};
use crate::error::ModelError;
use crate::model::{Symbol, Word};

/// True iff `m = n²` for some integer `n > 1`.
pub fn is_square_gt1(m: u64) -> bool {
    let r = isqrt(m) as u128;
    r > 1 && r * r == m as u128
}

fn isqrt(m: u64) -> u64 {
    let mut r = (m as f64).sqrt() as u128;
    let m = m as u128;
    while r * r > m {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= m {
        r += 1;
    }
    r as u64
}

/// `Some(n)` iff `w` is exactly `n` alternating blocks of length `n` over
/// `{b, c}`, starting with `b`.
pub fn witness_form_check(w: &[Symbol]) -> Option<usize> {
    let n = isqrt(w.len() as u64) as usize;
    if n == 0 || n * n != w.len() {
        return None;
    }
    let (b, c) = (Symbol::new('b').ok()?, Symbol::new('c').ok()?);
    w.iter().enumerate().all(|(j, &s)| s == if (j / n).is_multiple_of(2) { b } else { c }).then_some(n)
}

/// Per-word search budget for unary scans: `base + per_symbol * m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ScanBudget {
    pub base: usize,
    pub per_symbol: usize,
}

impl ScanBudget {
    pub fn fixed(limits: SearchLimits) -> Self {
        ScanBudget { base: limits.max_configs, per_symbol: 0 }
    }

    pub fn limits_for(&self, m: usize) -> SearchLimits {
        SearchLimits { max_configs: self.base.saturating_add(self.per_symbol.saturating_mul(m)) }
    }
}

impl Default for ScanBudget {
    /// The squares system explores about 350·m configurations on `a^m`.
    fn default() -> Self {
        ScanBudget { base: 100_000, per_symbol: 5_000 }
    }
}

#[derive(Debug, Clone)]
pub struct ScanRecord {
    pub length: usize,
    pub result: MembershipResult,
}

#[derive(Debug, Clone)]
pub struct ScanReport {
    pub symbol: Symbol,
    pub max_length: usize,
    pub variant: Option<SquaresVariant>,
    /// One record per length `0..=max_length`, in order.
    pub records: Vec<ScanRecord>,
}

impl ScanReport {
    pub fn accepted_lengths(&self) -> Vec<usize> {
        self.records.iter().filter(|r| r.result.accepted()).map(|r| r.length).collect()
    }

    pub fn limited_lengths(&self) -> Vec<usize> {
        self.records.iter().filter(|r| r.result.verdict == Verdict::Limit).map(|r| r.length).collect()
    }
}

/// Runs [`search`] on `symbol^m` for `m = 0..=max_length`, in parallel.
pub fn scan_unary(
    sys: &PcwkSystem,
    symbol: Symbol,
    max_length: usize,
    budget: ScanBudget,
) -> Result<ScanReport, ModelError> {
    if !sys.alphabet().contains(symbol) {
        return Err(ModelError::UnknownSymbol(symbol));
    }
    let records = (0..=max_length)
        .into_par_iter()
        .map(|m| {
            let result = search(sys, &Word::repeat(symbol, m), budget.limits_for(m))?;
            Ok(ScanRecord { length: m, result })
        })
        .collect::<Result<Vec<_>, ModelError>>()?;
    Ok(ScanReport { symbol, max_length, variant: None, records })
}

/// [`scan_unary`] over `a^m` on the built-in squares system.
pub fn scan_squares(variant: SquaresVariant, max_length: usize, budget: ScanBudget) -> ScanReport {
    let sys = build_squares_system(variant);
    let a = Symbol::new('a').expect("static symbol");
    let mut report = scan_unary(&sys, a, max_length, budget).expect("a is in the squares alphabet");
    report.variant = Some(variant);
    report
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Discrepancy {
    /// A perfect square that was rejected.
    MissingAccept(usize),
    /// A non-square (or 0, 1) that was accepted.
    UnexpectedAccept(usize),
    /// Search gave up before deciding.
    Limit(usize),
    /// Accepted with a witness of the wrong shape.
    BadWitness { length: usize, witness: Word },
    /// Accepted with a trace that does not replay.
    BadTrace { length: usize, reason: String },
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Discrepancy::MissingAccept(m) => write!(f, "m={m}: square rejected"),
            Discrepancy::UnexpectedAccept(m) => write!(f, "m={m}: non-square accepted"),
            Discrepancy::Limit(m) => write!(f, "m={m}: search limit reached"),
            Discrepancy::BadWitness { length, witness } => {
                write!(f, "m={length}: witness {witness} has the wrong form")
            }
            Discrepancy::BadTrace { length, reason } => write!(f, "m={length}: trace invalid: {reason}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CrossCheck {
    pub report: ScanReport,
    pub discrepancies: Vec<Discrepancy>,
}

impl CrossCheck {
    pub fn is_ok(&self) -> bool {
        self.discrepancies.is_empty()
    }
}

/// Compares a unary scan against `{ m : m = n², n > 1 }` and checks every
/// accepting witness and trace.
pub fn cross_check(
    sys: &PcwkSystem,
    symbol: Symbol,
    max_length: usize,
    budget: ScanBudget,
) -> Result<CrossCheck, ModelError> {
    let report = scan_unary(sys, symbol, max_length, budget)?;
    let mut discrepancies = Vec::new();
    for rec in &report.records {
        let m = rec.length;
        let expected = is_square_gt1(m as u64);
        match rec.result.verdict {
            Verdict::Limit => discrepancies.push(Discrepancy::Limit(m)),
            Verdict::Reject if expected => discrepancies.push(Discrepancy::MissingAccept(m)),
            Verdict::Reject => {}
            Verdict::Accept => {
                if !expected {
                    discrepancies.push(Discrepancy::UnexpectedAccept(m));
                }
                let witness = rec.result.witness_lower.clone().unwrap_or_default();
                if witness_form_check(&witness).map(|n| n * n) != Some(m) {
                    discrepancies.push(Discrepancy::BadWitness { length: m, witness });
                }
                let upper = Word::repeat(symbol, m);
                let checked = match &rec.result.trace {
                    Some(t) => validate_trace(sys, &upper, t).map_err(|e| e.to_string()),
                    None => Err("missing trace".to_string()),
                };
                if let Err(reason) = checked {
                    discrepancies.push(Discrepancy::BadTrace { length: m, reason });
                }
            }
        }
    }
    Ok(CrossCheck { report, discrepancies })
}
