use serde_json::{Map, Value};

use lexinfo::optima::{
    verify_alpha_general, verify_appendix_a, verify_appendix_b, verify_inequality_chain,
    verify_strategy_theorem, Violation,
};

use crate::output::{measure, render, LogBase, RunManifest};
use crate::{CliError, Suite, EXIT_VERIFY_FAIL};

pub fn run(
    vs: usize,
    vr: usize,
    suite: Suite,
    max_alpha: usize,
    log_base: LogBase,
    base_label: &str,
) -> Result<i32, CliError> {
    let mut extras = Map::new();
    let violations: Vec<Violation> = match suite {
        Suite::Strategy => verify_strategy_theorem(vs, vr)?,
        Suite::AlphaGeneral => verify_alpha_general(vs, vr, max_alpha)?,
        Suite::InequalityChain => verify_inequality_chain(vs, vr)?,
        Suite::AppendixA => {
            let report = verify_appendix_a(vs, vr)?;
            extras.insert("maximizer_count".into(), report.extrema_count.into());
            extras.insert(
                "extremum_value".into(),
                measure(report.extremum_value, log_base),
            );
            extras.insert(
                "characterization_match".into(),
                report.characterization_match.into(),
            );
            report.violations
        }
        Suite::AppendixB => {
            let report = verify_appendix_b(vs, vr)?;
            extras.insert("minimizer_count".into(), report.extrema_count.into());
            extras.insert(
                "extremum_value".into(),
                measure(report.extremum_value, log_base),
            );
            extras.insert(
                "characterization_match".into(),
                report.characterization_match.into(),
            );
            report.violations
        }
    };

    let mut manifest = RunManifest::new("verify")
        .flag("vs", vs as u64)
        .flag("vr", vr as u64)
        .flag("suite", suite.label())
        .flag("log_base", base_label);
    if suite == Suite::AlphaGeneral {
        manifest = manifest.flag("max_alpha", max_alpha as u64);
    }

    let pass = violations.is_empty();
    let mut body = Map::new();
    body.insert("suite".into(), suite.label().into());
    body.insert("vs_max".into(), vs.into());
    body.insert("vr_max".into(), vr.into());
    body.insert("pass".into(), pass.into());
    body.insert("violation_count".into(), violations.len().into());
    body.insert(
        "violations".into(),
        Value::Array(
            violations
                .iter()
                .map(|v| serde_json::to_value(v).expect("violation serializes"))
                .collect(),
        ),
    );
    body.extend(extras);
    print!("{}", render(&manifest, body));
    Ok(if pass { 0 } else { EXIT_VERIFY_FAIL })
}
