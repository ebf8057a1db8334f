//! Runs over all sorted degree triples up to a bound, and the discrepancy
//! catalogues built from them.
//!
//! Work is spread over triples (or triple/seed pairs) with rayon when the
//! `parallel` feature is on; results always come back in input order.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gin::{
    compare_closed_form, construct_gin_greedy, generator_count_formula,
    generator_count_formula_with, CorrectionTable,
};
use crate::hilbert::piecewise::{piecewise_hilbert, piecewise_target_count, PiecewiseValue};
use crate::hilbert::{CaseTag, DegreeTriple};
use crate::oracle::{oracle_compare_with, OracleConfig, OracleVerdict};
use crate::verify::{verify_ideal, weak_lefschetz_check, Check, Status};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `items.iter().map(f)`, in parallel if requested and compiled in.
pub fn par_map<T, R, F>(items: &[T], exec: Execution, f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(f).collect()
        }
        _ => items.iter().map(f).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralRow {
    pub degrees: DegreeTriple,
    pub case: CaseTag,
    pub mu: usize,
    pub all_pass: bool,
    pub checks: Vec<Check>,
}

fn check(name: &str, ok: bool, detail: impl FnOnce() -> String) -> Check {
    Check {
        name: name.to_string(),
        status: ok.into(),
        detail: (!ok).then(detail),
    }
}

/// The verify checks on the greedy ideal, plus Hilbert symmetry, total
/// dimension, weak Lefschetz and agreement with the normalized closed form.
pub fn structural_row(degrees: &DegreeTriple) -> Result<StructuralRow> {
    let g = construct_gin_greedy(degrees)?;
    let mut checks = verify_ideal(&g.ideal, Some(degrees)).checks;
    let h = g.ideal.quotient_hilbert(degrees.terminal_degree());
    checks.push(check("hilbert-symmetric", h.is_symmetric(), || {
        format!("{:?}", h.values())
    }));
    let product = degrees.d1() as u64 * degrees.d2() as u64 * degrees.d3() as u64;
    checks.push(check("total-dimension", h.total() == product, || {
        format!("total {} != {product}", h.total())
    }));
    checks.push(weak_lefschetz_check(&g.ideal));
    let cmp = compare_closed_form(degrees, &CorrectionTable::builtin())?;
    checks.push(check("closed-form", cmp.normalized_match, || {
        format!("missing {:?}, extra {:?}", cmp.missing, cmp.extra)
    }));
    Ok(StructuralRow {
        degrees: *degrees,
        case: degrees.case(),
        mu: g.mu(),
        all_pass: checks.iter().all(|c| c.status == Status::Pass),
        checks,
    })
}

pub fn sweep_structural(max: u32, exec: Execution) -> Result<Vec<StructuralRow>> {
    par_map(&DegreeTriple::all_up_to(max), exec, structural_row)
        .into_iter()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountRow {
    pub degrees: DegreeTriple,
    pub case: CaseTag,
    pub greedy: usize,
    pub printed_formula: String,
    pub normalized_formula: String,
    pub printed_match: bool,
    pub normalized_match: bool,
}

pub fn count_row(degrees: &DegreeTriple, table: &CorrectionTable) -> Result<CountRow> {
    let mu = construct_gin_greedy(degrees)?.mu();
    let printed = generator_count_formula(degrees);
    let normalized = generator_count_formula_with(degrees, table);
    let target = num_rational::Ratio::from_integer(mu as i64);
    Ok(CountRow {
        degrees: *degrees,
        case: degrees.case(),
        greedy: mu,
        printed_formula: printed.to_string(),
        normalized_formula: normalized.to_string(),
        printed_match: printed == target,
        normalized_match: normalized == target,
    })
}

pub fn count_table(max: u32, exec: Execution) -> Result<Vec<CountRow>> {
    let table = CorrectionTable::builtin();
    par_map(&DegreeTriple::all_up_to(max), exec, |d| {
        count_row(d, &table)
    })
    .into_iter()
    .collect()
}

/// A printed generator-count formula that disagrees with greedy, with the
/// oracle run that settles it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountDiscrepancy {
    pub degrees: DegreeTriple,
    pub case: CaseTag,
    pub printed_formula: String,
    pub greedy: usize,
    pub oracle_seed: u64,
    pub oracle_p: u32,
    pub oracle_mu: usize,
    pub oracle_matches_greedy: bool,
}

impl CountDiscrepancy {
    pub fn adjudicated(&self) -> bool {
        self.oracle_matches_greedy && self.oracle_mu == self.greedy
    }
}

pub fn count_discrepancies(
    max: u32,
    seed: u64,
    config: &OracleConfig,
    exec: Execution,
) -> Result<Vec<CountDiscrepancy>> {
    let rows = count_table(max, exec)?;
    let bad: Vec<CountRow> = rows.into_iter().filter(|r| !r.printed_match).collect();
    par_map(&bad, exec, |r| {
        let v = oracle_compare_with(&r.degrees, seed, config)?;
        Ok(CountDiscrepancy {
            degrees: r.degrees,
            case: r.case,
            printed_formula: r.printed_formula.clone(),
            greedy: r.greedy,
            oracle_seed: seed,
            oracle_p: config.p,
            oracle_mu: v.computed_generators.len(),
            oracle_matches_greedy: v.matches,
        })
    })
    .into_iter()
    .collect()
}

/// Every `(degrees, k)` where a printed piecewise formula is off.
pub fn piecewise_discrepancies(
    max: u32,
    eval: fn(&DegreeTriple, u32) -> PiecewiseValue,
    exec: Execution,
) -> Vec<PiecewiseValue> {
    par_map(&DegreeTriple::all_up_to(max), exec, |d| {
        (0..=d.terminal_degree())
            .map(|k| eval(d, k))
            .filter(PiecewiseValue::discrepancy)
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect()
}

pub fn hilbert_discrepancies(max: u32, exec: Execution) -> Vec<PiecewiseValue> {
    piecewise_discrepancies(max, piecewise_hilbert, exec)
}

pub fn target_count_discrepancies(max: u32, exec: Execution) -> Vec<PiecewiseValue> {
    piecewise_discrepancies(max, piecewise_target_count, exec)
}

/// Oracle runs for every triple and seed, in input order.
pub fn oracle_batch(
    triples: &[DegreeTriple],
    seeds: &[u64],
    config: &OracleConfig,
    exec: Execution,
) -> Vec<Result<OracleVerdict>> {
    let jobs: Vec<(DegreeTriple, u64)> = triples
        .iter()
        .flat_map(|d| seeds.iter().map(move |s| (*d, *s)))
        .collect();
    par_map(&jobs, exec, |(d, s)| oracle_compare_with(d, *s, config))
}

pub const HILBERT_CATALOGUE: &str = "hilbert_formula_discrepancies.json";
pub const TARGET_COUNT_CATALOGUE: &str = "target_count_formula_discrepancies.json";
pub const GENERATOR_COUNT_CATALOGUE: &str = "generator_count_discrepancies.json";

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text)?;
    Ok(())
}

/// Writes the three discrepancy catalogues into `dir`.
pub fn emit_catalogues(dir: &Path, max: u32, config: &OracleConfig, exec: Execution) -> Result<()> {
    std::fs::create_dir_all(dir)?;
    write_json(
        &dir.join(HILBERT_CATALOGUE),
        &hilbert_discrepancies(max, exec),
    )?;
    write_json(
        &dir.join(TARGET_COUNT_CATALOGUE),
        &target_count_discrepancies(max, exec),
    )?;
    write_json(
        &dir.join(GENERATOR_COUNT_CATALOGUE),
        &count_discrepancies(max, 1, config, exec)?,
    )?;
    Ok(())
}
