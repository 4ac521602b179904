use serde::Serialize;
use warpcheck::gronwall::{admissible_eps, c3, check_inequality, conclude_nonpositive, CheckedData, Conclusion, GronwallData, DEFAULT_TOL};

use crate::args::{FileArg, Format, GlobalArgs};
use crate::output::{csv, json, num, table};
use crate::{InputError, Outcome};

#[derive(Serialize)]
struct Output {
    c3: f64,
    admissible_eps: f64,
    eps: f64,
    check: CheckedData,
    conclusion: Conclusion,
}

pub fn run(global: &GlobalArgs, args: &FileArg) -> Result<Outcome, InputError> {
    let data = GronwallData::from_json(&super::read(&args.file)?)?;
    let tol = global.tol.unwrap_or(DEFAULT_TOL);
    let check = check_inequality(&data, tol);
    let conclusion = conclude_nonpositive(&data, Some(&check), tol)?;
    let out = Output { c3: c3(&data)?, admissible_eps: admissible_eps(&data)?, eps: data.eps(), check, conclusion };

    let rows: Vec<Vec<String>> = out
        .check
        .residuals
        .iter()
        .enumerate()
        .map(|(j, r)| vec![j.to_string(), num(data.grid[j]), num(data.h[j]), num(*r), (*r <= tol).to_string()])
        .collect();
    let header = ["index", "t", "H", "residual", "ok"];
    match global.format {
        Format::Json => say!("{}", json(&out)),
        Format::Csv => say!("{}", csv(&header, &rows)),
        Format::Text => {
            say!("{}", table(&header, &rows));
            say!();
            say!("C3 = {:e}, admissible eps < {:e}, eps = {}", out.c3, out.admissible_eps, out.eps);
            say!("max residual {:e} (tol {tol:e})", out.check.max_residual());
            match &out.conclusion {
                Conclusion::Pass { max_h } => say!("PASS: H <= 0 on the window (max H = {max_h:e})"),
                Conclusion::Fail { witness } => {
                    say!("FAIL: H = {:e} > 0 at t = {} (index {})", witness.value, witness.t, witness.index)
                }
                Conclusion::NotApplicable { reason } => say!("FAIL: no conclusion, {reason}"),
            }
        }
    }
    Ok(if out.conclusion.passed() { Outcome::Pass } else { Outcome::Fail })
}
