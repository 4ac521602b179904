use serde::Serialize;
use warpcheck::varcheck::{chain_evaluate, second_variation_value, ChainReport, Scenario};

use crate::args::{FileArg, Format, GlobalArgs};
use crate::output::{csv, json, num, table};
use crate::{InputError, Outcome};

#[derive(Serialize)]
struct Output {
    second_variation: f64,
    stable: bool,
    #[serde(flatten)]
    chain: ChainReport,
}

pub fn run(global: &GlobalArgs, args: &FileArg) -> Result<Outcome, InputError> {
    let scenario = Scenario::from_json(&super::read(&args.file)?)?;
    let chain = chain_evaluate(&scenario)?;
    let second_variation = second_variation_value(&scenario);
    let out = Output { second_variation, stable: second_variation >= 0.0, chain };
    let rows: Vec<Vec<String>> = out
        .chain
        .steps
        .iter()
        .map(|s| vec![s.kind.label().to_string(), num(s.value), num(s.slack), num(s.normalized), s.ok.to_string()])
        .collect();
    let header = ["step", "value", "slack", "normalized", "ok"];
    match global.format {
        Format::Json => say!("{}", json(&out)),
        Format::Csv => say!("{}", csv(&header, &rows)),
        Format::Text => {
            say!("{}", out.chain.note);
            say!("leaf dimension {}, {} samples, area {}", out.chain.leaf_dim, scenario.samples.len(), scenario.area());
            say!();
            say!("{}", table(&header, &rows));
            say!();
            say!("second variation:   {:e} ({})", out.second_variation, if out.stable { "stable" } else { "unstable" });
            say!("quotient Q(f):      {:e}", out.chain.quotient);
            say!("gap Q(f) - S0 A^(2/m): {:e}", out.chain.quotient_gap);
            say!("|B|^2 term {:e}, gradient term {:e}, S^M - S0 excess {:e}", out.chain.second_form_term, out.chain.gradient_term, out.chain.scalar_excess);
            say!("{}", if out.chain.monotone() { "PASS: chain is nondecreasing" } else { "FAIL: chain decreases" });
        }
    }
    Ok(if out.chain.monotone() { Outcome::Pass } else { Outcome::Fail })
}
