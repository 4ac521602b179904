use std::time::Instant;

use serde::{Deserialize, Serialize};
use warpcheck::catalog::{catalog_entries, inject_fault, select_entries, verify_all, ClaimSettings, EntryFilter, Verdict, VerificationRow};

use crate::args::{Format, GlobalArgs, VerifyArgs};
use crate::output::{csv, json, table};
use crate::{InputError, Outcome};

/// Numerical settings echoed in the JSON output so a run can be repeated.
#[derive(Serialize, Deserialize, Debug, Clone, Copy, PartialEq)]
pub struct RunSettings {
    pub order: usize,
    pub grid: usize,
    pub abs_tol: f64,
    pub rel_tol: f64,
}

impl From<RunSettings> for ClaimSettings {
    fn from(s: RunSettings) -> Self {
        ClaimSettings { order: s.order, grid: s.grid, abs_tol: s.abs_tol, rel_tol: s.rel_tol }
    }
}

#[derive(Serialize, Deserialize, Debug)]
pub struct VerifyOutput {
    pub settings: RunSettings,
    pub entries: usize,
    pub passed: usize,
    pub failed: usize,
    pub rows: Vec<VerificationRow>,
}

pub fn run(global: &GlobalArgs, args: &VerifyArgs) -> Result<Outcome, InputError> {
    let defaults = ClaimSettings::default();
    let settings = RunSettings {
        order: global.order as usize,
        grid: args.grid as usize,
        abs_tol: global.tol.unwrap_or(defaults.abs_tol),
        rel_tol: defaults.rel_tol,
    };
    let filter = EntryFilter { only: args.only.clone(), n: args.n, k: args.k, m: args.m };
    let mut entries = select_entries(catalog_entries()?, &filter);
    if entries.is_empty() {
        return Err(InputError("no catalog entry matches the filter".into()));
    }
    if let Some(target) = &args.inject_fault {
        let name = (!target.is_empty()).then_some(target.as_str());
        if !inject_fault(&mut entries, name) {
            return Err(InputError(format!("no exact claim to corrupt in {target:?}")));
        }
    }
    let clock = Instant::now();
    let rows = verify_all(&entries, &settings.into());
    let elapsed = clock.elapsed();
    let failed = rows.iter().filter(|r| r.verdict == Verdict::Fail).count();
    let out = VerifyOutput { settings, entries: entries.len(), passed: rows.len() - failed, failed, rows };

    let header = ["entry", "claim", "expected", "computed", "verdict", "provenance", "anchor"];
    let cells = || -> Vec<Vec<String>> {
        out.rows
            .iter()
            .map(|r| {
                vec![
                    r.entry.clone(),
                    r.claim.clone(),
                    r.expected.clone(),
                    r.computed.clone(),
                    r.verdict.to_string(),
                    r.provenance.to_string(),
                    r.anchor.clone(),
                ]
            })
            .collect()
    };
    match global.format {
        Format::Json => say!("{}", json(&out)),
        Format::Csv => say!("{}", csv(&header, &cells())),
        Format::Text => {
            say!("{}", table(&header, &cells()));
            say!();
            say!(
                "{} claims over {} entries: {} PASS, {} FAIL ({:.1} s)",
                out.rows.len(),
                out.entries,
                out.passed,
                out.failed,
                elapsed.as_secs_f64()
            );
        }
    }
    Ok(if failed == 0 { Outcome::Pass } else { Outcome::Fail })
}
