//! Exhaustive search over chain encodings and verification of the
//! extremal families.
//!
//! For fixed polygon size `k` and count `h`, the raw encoding space is the
//! `(k - 3)^(h - 2)` interior weight vectors; isomorphism classes are its
//! orbits under reversal and top-bottom complement. This module counts the
//! classes (both by direct filtering and by the closed-form orbit count,
//! which cross-checks the canonicalization), evaluates each class's
//! Kirchhoff and hop-distance indices, finds extrema, and checks the two
//! extremal claims desk-scale:
//!
//! * the all-zero (maximally wound) chain is the unique Kirchhoff
//!   minimizer, and
//! * the balanced chain — constant-middle for even `k`, alternating for
//!   odd `k` — is the unique maximizer.
//!
//! Near-ties can be re-decided exactly over rationals.

use alloc::vec::Vec;
use core::ops::RangeInclusive;

use num_rational::BigRational;

use crate::chain::{ChainError, ChainSpec, LabeledChainGraph};
use crate::exact::chain_kirchhoff_exact;
use crate::resistance::{kirchhoff_index, wiener_index, ResistanceError};

/// Errors from enumeration and search.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ExtremalError {
    #[error("search space has {raw} raw encodings, above the cap {cap}")]
    TooMany { raw: u128, cap: u64 },
    #[error("raw encoding count overflows")]
    CountOverflow,
    #[error("report assembly needs all {expected} canonical rows, got {got}")]
    IncompleteRows { expected: u64, got: u64 },
    #[error(transparent)]
    Chain(#[from] ChainError),
    #[error(transparent)]
    Resistance(#[from] ResistanceError),
}

/// Whether enumeration yields every raw encoding or one representative per
/// isomorphism class.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationMode {
    Raw,
    Canonical,
}

/// Number of raw interior weight vectors: `(k - 3)^(h - 2)` (one for
/// `h <= 2`, where the vector is empty).
pub fn raw_count(k: u32, h: u32) -> Result<u128, ExtremalError> {
    // Validate (k, h) by constructing the all-zero spec.
    ChainSpec::helicene(k, h)?;
    let q = (k - 3) as u128;
    let len = h.saturating_sub(2);
    q.checked_pow(len).ok_or(ExtremalError::CountOverflow)
}

/// Number of isomorphism classes, in closed form: the orbit count of the
/// raw space under the four symmetries (identity, reversal, complement,
/// and both), averaging their fixed-point counts.
pub fn canonical_count(k: u32, h: u32) -> Result<u128, ExtremalError> {
    ChainSpec::helicene(k, h)?;
    let q = (k - 3) as u128;
    let len = h.saturating_sub(2);
    let pow = |e: u32| -> Result<u128, ExtremalError> {
        q.checked_pow(e).ok_or(ExtremalError::CountOverflow)
    };
    let fix_id = pow(len)?;
    let fix_rev = pow(len.div_ceil(2))?;
    let has_middle_value = k % 2 == 0; // a self-complementary entry needs k even
    let fix_comp = if len == 0 || has_middle_value { 1 } else { 0 };
    let fix_revcomp = if len % 2 == 0 || has_middle_value {
        pow(len / 2)?
    } else {
        0
    };
    let total = fix_id
        .checked_add(fix_rev)
        .and_then(|s| s.checked_add(fix_comp))
        .and_then(|s| s.checked_add(fix_revcomp))
        .ok_or(ExtremalError::CountOverflow)?;
    debug_assert_eq!(total % 4, 0);
    Ok(total / 4)
}

/// All encodings for `(k, h)`, raw or canonical-only. Refuses to iterate
/// spaces larger than `cap` raw encodings.
pub fn enumerate_chains(
    k: u32,
    h: u32,
    mode: EnumerationMode,
    cap: u64,
) -> Result<Vec<ChainSpec>, ExtremalError> {
    let raw = raw_count(k, h)?;
    if raw > cap as u128 {
        return Err(ExtremalError::TooMany { raw, cap });
    }
    let len = h.saturating_sub(2) as usize;
    let q = k - 3;
    let mut out = Vec::new();
    let mut w = alloc::vec![0u32; len];
    loop {
        let spec = ChainSpec::new(k, h, w.clone())?;
        match mode {
            EnumerationMode::Raw => out.push(spec),
            EnumerationMode::Canonical => {
                if spec.is_canonical() {
                    out.push(spec);
                }
            }
        }
        // Odometer increment, least-significant entry last.
        let mut pos = len;
        loop {
            if pos == 0 {
                return Ok(out);
            }
            pos -= 1;
            w[pos] += 1;
            if w[pos] < q {
                break;
            }
            w[pos] = 0;
        }
    }
}

/// One evaluated encoding.
#[derive(Debug, Clone, PartialEq)]
pub struct ChainRow {
    pub spec: ChainSpec,
    pub kf: f64,
    pub wiener: u64,
}

/// Kirchhoff and hop-distance indices of one chain.
pub fn evaluate_chain(spec: &ChainSpec) -> Result<ChainRow, ExtremalError> {
    let net = LabeledChainGraph::build(spec).unit_network();
    Ok(ChainRow {
        spec: spec.clone(),
        kf: kirchhoff_index(&net)?,
        wiener: wiener_index(&net)?,
    })
}

/// Search knobs.
#[derive(Debug, Clone)]
pub struct SearchOptions {
    /// Two values within this distance count as tied.
    pub tolerance: f64,
    /// Re-decide tied extrema over exact rationals.
    pub exact_ties: bool,
    /// Refusal threshold on the raw encoding count.
    pub cap: u64,
    /// Keep the full evaluated table in the report.
    pub with_table: bool,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            tolerance: 1e-9,
            exact_ties: false,
            cap: 10_000_000,
            with_table: false,
        }
    }
}

/// Outcome of an exhaustive search over one `(k, h)` cell.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchReport {
    pub k: u32,
    pub h: u32,
    pub total_raw: u128,
    pub total_canonical: u64,
    pub min_spec: ChainSpec,
    pub min_kf: f64,
    /// Every class within tolerance of the minimum (always contains
    /// `min_spec`).
    pub ties_min: Vec<ChainSpec>,
    pub max_spec: ChainSpec,
    pub max_kf: f64,
    pub ties_max: Vec<ChainSpec>,
    /// All rows, sorted by spec, when requested.
    pub table: Option<Vec<ChainRow>>,
}

/// Evaluates every canonical class of `(k, h)` and assembles the report.
pub fn find_extremal(
    k: u32,
    h: u32,
    options: &SearchOptions,
) -> Result<SearchReport, ExtremalError> {
    let specs = enumerate_chains(k, h, EnumerationMode::Canonical, options.cap)?;
    let rows = specs
        .iter()
        .map(evaluate_chain)
        .collect::<Result<Vec<_>, _>>()?;
    assemble_report(k, h, rows, options)
}

/// Turns a complete set of evaluated canonical rows into a report. The
/// row set must cover every class exactly once (callers that shard the
/// evaluation across workers merge their rows first); anything else is
/// rejected rather than silently mis-reported.
pub fn assemble_report(
    k: u32,
    h: u32,
    mut rows: Vec<ChainRow>,
    options: &SearchOptions,
) -> Result<SearchReport, ExtremalError> {
    let expected = canonical_count(k, h)?;
    if rows.len() as u128 != expected {
        return Err(ExtremalError::IncompleteRows {
            expected: expected.min(u64::MAX as u128) as u64,
            got: rows.len() as u64,
        });
    }
    rows.sort_by(|a, b| a.spec.cmp(&b.spec));
    let min_kf = rows.iter().map(|r| r.kf).fold(f64::INFINITY, f64::min);
    let max_kf = rows.iter().map(|r| r.kf).fold(f64::NEG_INFINITY, f64::max);
    let near = |target: f64, value: f64| (value - target).abs() <= options.tolerance;
    let mut ties_min: Vec<&ChainRow> = rows.iter().filter(|r| near(min_kf, r.kf)).collect();
    let mut ties_max: Vec<&ChainRow> = rows.iter().filter(|r| near(max_kf, r.kf)).collect();
    if options.exact_ties {
        if ties_min.len() > 1 {
            ties_min = retie_exact(ties_min, true)?;
        }
        if ties_max.len() > 1 {
            ties_max = retie_exact(ties_max, false)?;
        }
    }
    // Rows are spec-sorted, so the first tie is the lexicographically
    // least representative.
    let min_row = ties_min[0];
    let max_row = ties_max[0];
    Ok(SearchReport {
        k,
        h,
        total_raw: raw_count(k, h)?,
        total_canonical: rows.len() as u64,
        min_spec: min_row.spec.clone(),
        min_kf: min_row.kf,
        ties_min: ties_min.iter().map(|r| r.spec.clone()).collect(),
        max_spec: max_row.spec.clone(),
        max_kf: max_row.kf,
        ties_max: ties_max.iter().map(|r| r.spec.clone()).collect(),
        table: options.with_table.then_some(rows),
    })
}

/// Narrows a tolerance-tied set to the exact extremum (or exact tie set).
fn retie_exact(
    candidates: Vec<&ChainRow>,
    take_min: bool,
) -> Result<Vec<&ChainRow>, ExtremalError> {
    let exact: Vec<(BigRational, &ChainRow)> = candidates
        .into_iter()
        .map(|row| Ok((chain_kirchhoff_exact(&row.spec)?, row)))
        .collect::<Result<_, ExtremalError>>()?;
    let best = if take_min {
        exact.iter().map(|(v, _)| v).min()
    } else {
        exact.iter().map(|(v, _)| v).max()
    }
    .expect("nonempty candidates")
    .clone();
    Ok(exact
        .into_iter()
        .filter(|(v, _)| *v == best)
        .map(|(_, r)| r)
        .collect())
}

/// Exhaustive check of one `(k, h)` cell against the extremal claims.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremCell {
    pub k: u32,
    pub h: u32,
    pub classes: u64,
    pub expected_min: ChainSpec,
    pub observed_min: ChainSpec,
    pub min_kf: f64,
    /// Distance from the minimum to the nearest other class (None with a
    /// single class).
    pub min_gap: Option<f64>,
    pub min_ok: bool,
    pub expected_max: ChainSpec,
    pub observed_max: ChainSpec,
    pub max_kf: f64,
    pub max_gap: Option<f64>,
    pub max_ok: bool,
    pub pass: bool,
}

/// Grid of cells and the overall verdict.
#[derive(Debug, Clone, PartialEq)]
pub struct TheoremReport {
    pub cells: Vec<TheoremCell>,
    pub all_pass: bool,
}

/// Checks one `(k, h)` cell: the observed extremal classes must be the
/// predicted families, each separated from every other class by more than
/// `tolerance`.
pub fn verify_cell(k: u32, h: u32, tolerance: f64) -> Result<TheoremCell, ExtremalError> {
    let options = SearchOptions {
        tolerance,
        with_table: true,
        ..SearchOptions::default()
    };
    let report = find_extremal(k, h, &options)?;
    let expected_min = ChainSpec::helicene(k, h)?;
    let expected_max = if k % 2 == 0 {
        ChainSpec::linear(k, h)?
    } else {
        ChainSpec::zigzag(k, h)?
    };
    let table = report.table.as_ref().expect("requested table");
    let gap_from = |extremum: &ChainSpec, value: f64| -> Option<f64> {
        table
            .iter()
            .filter(|r| r.spec != *extremum)
            .map(|r| (r.kf - value).abs())
            .min_by(f64::total_cmp)
    };
    let min_gap = gap_from(&report.min_spec, report.min_kf);
    let max_gap = gap_from(&report.max_spec, report.max_kf);
    let separated = |gap: Option<f64>| gap.is_none_or(|g| g > tolerance);
    let min_ok = report.min_spec == expected_min && separated(min_gap);
    let max_ok = report.max_spec == expected_max && separated(max_gap);
    Ok(TheoremCell {
        k,
        h,
        classes: report.total_canonical,
        expected_min,
        observed_min: report.min_spec,
        min_kf: report.min_kf,
        min_gap,
        min_ok,
        expected_max,
        observed_max: report.max_spec,
        max_kf: report.max_kf,
        max_gap,
        max_ok,
        pass: min_ok && max_ok,
    })
}

/// Runs [`verify_cell`] over a `(k, h)` grid.
pub fn verify_theorems(
    ks: RangeInclusive<u32>,
    hs: RangeInclusive<u32>,
    tolerance: f64,
) -> Result<TheoremReport, ExtremalError> {
    let mut cells = Vec::new();
    for k in ks {
        for h in hs.clone() {
            cells.push(verify_cell(k, h, tolerance)?);
        }
    }
    let all_pass = cells.iter().all(|c| c.pass);
    Ok(TheoremReport { cells, all_pass })
}
